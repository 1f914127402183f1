import json
import logging
import os
import sqlite3
import sys
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Dict, Iterator, List, Optional

from config import config

logger = logging.getLogger(__name__)


def get_app_data_dir() -> Path:
    """Get platform-appropriate user data directory."""
    if os.name == 'nt':  # Windows
        data_dir = Path(os.environ.get('LOCALAPPDATA', os.path.expanduser('~'))) / 'OpnAudit'
    elif sys.platform == 'darwin':  # macOS
        data_dir = Path.home() / 'Library' / 'Application Support' / 'OpnAudit'
    else:  # Linux
        data_dir = Path.home() / '.local' / 'share' / 'OpnAudit'

    data_dir.mkdir(parents=True, exist_ok=True)
    return data_dir


def get_db_path() -> Path:
    """Get path to the SQLite run history."""
    if config.results_db is not None:
        return Path(config.results_db)
    return get_app_data_dir() / 'results.db'


class ResultsDatabase:
    """Run history: one row per recorded CLI run with its structured record stream."""

    def __init__(self, db_path: Optional[Path] = None):
        self.db_path = Path(db_path) if db_path else get_db_path()
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self.init_database()

    @contextmanager
    def get_connection(self) -> Iterator[sqlite3.Connection]:
        """Database connection with row factory; commits on success and is always closed."""
        conn = sqlite3.connect(self.db_path)
        conn.row_factory = sqlite3.Row
        try:
            with conn:
                yield conn
        finally:
            conn.close()

    def init_database(self):
        with self.get_connection() as conn:
            conn.execute('''
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    command TEXT NOT NULL,
                    arguments TEXT NOT NULL,
                    status TEXT NOT NULL,
                    record_count INTEGER DEFAULT 0,
                    elapsed_seconds REAL DEFAULT 0,
                    payload TEXT NOT NULL,
                    created_at TEXT NOT NULL
                )
            ''')
            conn.execute('CREATE INDEX IF NOT EXISTS idx_runs_command ON runs (command)')
            conn.commit()

    def add_run(self, command: str, arguments: Dict, status: str, records: List[Dict],
                elapsed_seconds: float = 0.0) -> int:
        """Store a run. Returns the run id, or -1 on failure."""
        try:
            with self.get_connection() as conn:
                cursor = conn.execute('''
                    INSERT INTO runs
                    (command, arguments, status, record_count, elapsed_seconds, payload, created_at)
                    VALUES (?, ?, ?, ?, ?, ?, ?)
                ''', (
                    command, json.dumps(arguments, sort_keys=True), status, len(records),
                    elapsed_seconds, json.dumps(records, sort_keys=True),
                    datetime.now().isoformat()
                ))
                conn.commit()
                return cursor.lastrowid
        except sqlite3.Error as e:
            logger.error("❌ Error recording run: %s", e)
            return -1

    def _row_to_run(self, row: sqlite3.Row) -> Dict:
        result = dict(row)
        result['arguments'] = json.loads(result['arguments'])
        result['payload'] = json.loads(result['payload'])
        return result

    def get_run(self, run_id: int) -> Optional[Dict]:
        try:
            with self.get_connection() as conn:
                row = conn.execute('SELECT * FROM runs WHERE id = ?', (run_id,)).fetchone()
                return self._row_to_run(row) if row else None
        except sqlite3.Error as e:
            logger.error("❌ Error getting run %s: %s", run_id, e)
            return None

    def get_runs(self, command: Optional[str] = None) -> List[Dict]:
        """Stored runs, newest first, optionally for one command."""
        try:
            with self.get_connection() as conn:
                if command:
                    cursor = conn.execute(
                        'SELECT * FROM runs WHERE command = ? ORDER BY id DESC', (command,)
                    )
                else:
                    cursor = conn.execute('SELECT * FROM runs ORDER BY id DESC')
                return [self._row_to_run(row) for row in cursor.fetchall()]
        except sqlite3.Error as e:
            logger.error("❌ Error listing runs: %s", e)
            return []

    def delete_run(self, run_id: int) -> bool:
        try:
            with self.get_connection() as conn:
                cursor = conn.execute('DELETE FROM runs WHERE id = ?', (run_id,))
                conn.commit()
                return cursor.rowcount > 0
        except sqlite3.Error as e:
            logger.error("❌ Error deleting run %s: %s", run_id, e)
            return False

    def get_run_stats(self) -> Dict:
        try:
            with self.get_connection() as conn:
                total = conn.execute('SELECT COUNT(*) FROM runs').fetchone()[0]
                failed = conn.execute(
                    "SELECT COUNT(*) FROM runs WHERE status != 'ok'"
                ).fetchone()[0]
                total_seconds = conn.execute('SELECT SUM(elapsed_seconds) FROM runs').fetchone()[0]
                return {
                    'total_runs': total,
                    'failed_runs': failed,
                    'total_seconds': total_seconds or 0.0,
                }
        except sqlite3.Error as e:
            logger.error("❌ Error getting run stats: %s", e)
            return {'total_runs': 0, 'failed_runs': 0, 'total_seconds': 0.0}


# Global database instance
_db_instance = None


def get_db() -> ResultsDatabase:
    """Get the global database instance."""
    global _db_instance
    if _db_instance is None:
        _db_instance = ResultsDatabase()
    return _db_instance
