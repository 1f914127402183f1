import pytest

import database.results_db as results_db
from arith.sigma import sigma_by_divisors
from config import config


@pytest.fixture
def isolated_db(monkeypatch, tmp_path):
    """Point the run history at a throwaway SQLite file."""
    monkeypatch.setattr(config, "results_db", tmp_path / "results.db")
    monkeypatch.setattr(results_db, "_db_instance", None)
    yield results_db.get_db()


@pytest.fixture(scope="session")
def divisor_oracle():
    return sigma_by_divisors


def smallest_factor_by_trial(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def trial_pairs(n: int):
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)
