"""
Prime generation and primality testing.

Small primes for batch work come from a numpy sieve of Eratosthenes;
single-number primality goes through sympy.
"""

from math import isqrt

import numpy as np
from sympy import isprime


def primes_up_to(limit: int) -> np.ndarray:
    """Return every prime p <= limit as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)

    is_prime_mask = np.ones(limit + 1, dtype=bool)
    is_prime_mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime_mask[p]:
            is_prime_mask[p * p :: p] = False
    return np.flatnonzero(is_prime_mask).astype(np.int64)


def is_prime(n: int) -> bool:
    """Primality of n (BPSW, no known counterexample)."""
    return bool(isprime(n))
