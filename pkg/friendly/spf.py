from dataclasses import dataclass
from math import isqrt
from typing import List, Tuple

import numpy as np

from arith.errors import DomainError
from arith.factor import Factorization
from friendly.memory import check_sieve_budget


@dataclass(frozen=True)
class SpfTable:
    """
    Smallest-prime-factor table for 2..limit. Read-only after construction,
    so it can be shared between readers and pickled to worker processes.
    """

    limit: int
    spf: np.ndarray

    def smallest_prime_factor(self, n: int) -> int:
        self._require_in_range(n)
        if n < 2:
            raise DomainError(f"{n} has no prime factor")
        return int(self.spf[n])

    def pairs(self, n: int) -> List[Tuple[int, int]]:
        """(prime, exponent) pairs of n by repeated spf division."""
        spf = self.spf
        pairs = []
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
        return pairs

    def factorize(self, n: int) -> Factorization:
        self._require_in_range(n)
        return Factorization(tuple(self.pairs(n)))

    def _require_in_range(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise DomainError(f"{n} is outside the table range 1..{self.limit}")


def build_spf(limit: int) -> SpfTable:
    """Sieve smallest prime factors up to limit (design ceiling ~10^9 entries)."""
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")

    dtype = np.int32 if limit < 2**31 else np.int64
    check_sieve_budget(limit, np.dtype(dtype).itemsize)

    spf = np.zeros(limit + 1, dtype=dtype)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            multiples = spf[p * p :: p]
            multiples[multiples == 0] = p

    # whatever is still unmarked is prime (plus the 0 and 1 slots)
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked
    spf.flags.writeable = False
    return SpfTable(limit, spf)
