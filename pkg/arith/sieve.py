import logging

import numpy as np
from tqdm import tqdm

from arith.errors import DomainError
from config import config

logger = logging.getLogger(__name__)


def sigma_sieve(limit: int, odd_only: bool = False) -> np.ndarray:
    """
    Divisor sums σ(0..limit) as an int64 array (σ(0) = 0).

    With odd_only only odd divisors are accumulated, so entries at odd
    indices are exact and entries at even indices are zeroed.
    """
    if limit < 1:
        raise DomainError(f"sieve limit must be >= 1, got {limit}")

    logger.info("🔍 Building σ sieve up to %d (odd_only=%s)", limit, odd_only)
    sigma = np.arange(limit + 1, dtype=np.int64)

    if odd_only:
        # proper odd divisors d of odd n sit at n = 3d, 5d, 7d, ...
        for d in tqdm(range(1, limit // 3 + 1, 2), desc="σ sieve", disable=not config.progress):
            sigma[3 * d :: 2 * d] += d
        sigma[::2] = 0
    else:
        for d in tqdm(range(1, limit // 2 + 1), desc="σ sieve", disable=not config.progress):
            sigma[2 * d :: d] += d
    return sigma
