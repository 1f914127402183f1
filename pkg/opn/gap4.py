"""
Exhaustive search for Euler-factor triples with m² − p^k = 4.

Only (p, k, m) = (5, 1, 3) exists, giving N = 45, which is deficient.
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt
from typing import List, Optional, Sequence

from arith.primes import primes_up_to
from arith.shards import run_sharded, split_items
from arith.sigma import NClass, classify
from config import config
from friendly.memory import check_sieve_budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapCaseWitness:
    p: int
    k: int
    x: Optional[int]
    m: int
    n: int
    classification: NClass


def _log_base(p: int, value: int) -> Optional[int]:
    """x with p^x == value, or None when value is not a power of p."""
    if value < 1:
        return None
    x = 0
    while value % p == 0:
        value //= p
        x += 1
    return x if value == 1 else None


def _scan_primes(task) -> List[GapCaseWitness]:
    primes, pk_limit, m_limit = task
    found = []
    for p in primes:
        k, pk = 1, p
        while pk <= pk_limit:
            m = isqrt(pk + 4)
            if m * m == pk + 4 and m <= m_limit and m % 2 == 1 and gcd(p, m) == 1:
                n = pk * m * m
                found.append(GapCaseWitness(p, k, _log_base(p, m - 2), m, n, classify(n)))
            k += 4
            pk *= p**4
    return found


def search_gap4(pk_limit: int, m_limit: int, shards: Optional[int] = None) -> List[GapCaseWitness]:
    """Every (p, k, m) with p ≡ k ≡ 1 (mod 4), p^k ≤ pk_limit, m ≤ m_limit and m² − p^k = 4."""
    shards = shards or config.shards
    check_sieve_budget(pk_limit, 1)
    candidates: Sequence[int] = [p for p in primes_up_to(pk_limit).tolist() if p % 4 == 1]
    logger.info("🔍 Gap-4 search over %d primes p ≡ 1 (mod 4)", len(candidates))

    tasks = [(chunk, pk_limit, m_limit) for chunk in split_items(candidates, shards)]
    results = run_sharded(_scan_primes, tasks, shards)
    witnesses = [w for chunk in results for w in chunk]
    return sorted(witnesses, key=lambda w: (w.p, w.k, w.m))
