"""
Abundancy-collision searches over [1, limit].

Every n (or m², for the squares search) is keyed by its reduced abundancy
(numerator, denominator). Shards partition the range, each returns its
key -> members map, and the merged map is canonically sorted, so results do
not depend on the shard count.
"""

import logging
import time
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, gcd
from typing import Dict, List, Optional, Tuple

from arith.errors import DomainError
from arith.shards import run_sharded, split_range
from arith.sigma import BigRational
from config import config
from friendly.memory import log_memory_usage
from friendly.spf import SpfTable, build_spf

logger = logging.getLogger(__name__)

Key = Tuple[int, int]


class SearchKind(str, Enum):
    SQUARES = "squares"
    ALL = "all"


@dataclass(frozen=True)
class CollisionClass:
    key: BigRational
    members: Tuple[int, ...]


@dataclass(frozen=True)
class CollisionReport:
    kind: SearchKind
    limit: int
    classes: Tuple[CollisionClass, ...]
    elapsed_seconds: float
    shards: int

    def pair_count(self) -> int:
        return sum(comb(len(c.members), 2) for c in self.classes)


def _abundancy_key(table: SpfTable, n: int, scale: int) -> Key:
    """Reduced σ(n^scale)/n^scale as a (numerator, denominator) pair."""
    numerator = 1
    for p, a in table.pairs(n):
        numerator *= (p ** (scale * a + 1) - 1) // (p - 1)
    denominator = n**scale
    g = gcd(numerator, denominator)
    return numerator // g, denominator // g


def abundancy_of_square(m: int, t: SpfTable) -> BigRational:
    """σ(m²)/m² from m's factorization with doubled exponents."""
    if not 1 <= m <= t.limit:
        raise DomainError(f"m = {m} is outside the table range 1..{t.limit}")
    numerator, denominator = _abundancy_key(t, m, 2)
    return Fraction(numerator, denominator)


_worker_table: Optional[SpfTable] = None


def _install_table(table: Optional[SpfTable]) -> None:
    global _worker_table
    _worker_table = table


def _group_range(task) -> Dict[Key, List[int]]:
    lo, hi, scale = task
    groups: Dict[Key, List[int]] = defaultdict(list)
    for n in range(lo, hi + 1):
        groups[_abundancy_key(_worker_table, n, scale)].append(n)
    return groups


def _find_collisions(kind: SearchKind, limit: int, shards: Optional[int]) -> CollisionReport:
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")
    shards = shards or config.shards
    scale = 2 if kind is SearchKind.SQUARES else 1

    started = time.perf_counter()
    table = build_spf(limit)
    logger.info("🔍 %s collision search up to %d on %d shard(s)", kind.value, limit, shards)

    tasks = [(lo, hi, scale) for lo, hi in split_range(1, limit, shards)]
    try:
        partials = run_sharded(_group_range, tasks, shards, initializer=_install_table, initargs=(table,))
    finally:
        # the inline path installs the table in this process
        _install_table(None)

    merged: Dict[Key, List[int]] = defaultdict(list)
    for partial in partials:
        for key, members in partial.items():
            merged[key].extend(members)

    classes = sorted(
        (
            CollisionClass(Fraction(*key), tuple(sorted(members)))
            for key, members in merged.items()
            if len(members) >= 2
        ),
        key=lambda c: c.members[0],
    )
    elapsed = time.perf_counter() - started
    log_memory_usage(f"{kind.value} search up to {limit}")
    logger.info("✅ %d collision class(es) in %.2fs", len(classes), elapsed)
    return CollisionReport(kind, limit, tuple(classes), elapsed, shards)


def find_square_collisions(limit: int, shards: Optional[int] = None) -> CollisionReport:
    """Classes of m ≤ limit sharing σ(m²)/m²."""
    return _find_collisions(SearchKind.SQUARES, limit, shards)


def find_friendly_pairs(limit: int, shards: Optional[int] = None) -> CollisionReport:
    """Classes of n ≤ limit sharing σ(n)/n."""
    return _find_collisions(SearchKind.ALL, limit, shards)
