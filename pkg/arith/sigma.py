"""
Divisor sums, abundancy indices and the deficient/perfect/abundant split.

All values are exact: integers for σ, fractions.Fraction (always reduced) for
ratios. BigRational is an alias kept for readability at call sites.
"""

from enum import Enum
from fractions import Fraction

from arith.errors import DomainError, require_positive
from arith.factor import Factorization, factorize
from arith.primes import is_prime

BigRational = Fraction


class NClass(Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


def _geometric_sum(p: int, k: int) -> int:
    return (p ** (k + 1) - 1) // (p - 1)


def sigma_prime_power(p: int, k: int) -> int:
    """Return 1 + p + ... + p^k."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    require_positive(k, "k")
    return _geometric_sum(p, k)


def sigma_of(f: Factorization) -> int:
    """σ evaluated multiplicatively over an existing factorization."""
    total = 1
    for p, a in f:
        total *= _geometric_sum(p, a)
    return total


def sigma(n: int) -> int:
    """Sum of all positive divisors of n."""
    return sigma_of(factorize(n))


def abundancy_of(f: Factorization) -> BigRational:
    return Fraction(sigma_of(f), f.value)


def abundancy(n: int) -> BigRational:
    """σ(n)/n in lowest terms."""
    return abundancy_of(factorize(n))


def classify_sigma(n: int, sigma_n: int) -> NClass:
    if sigma_n == 2 * n:
        return NClass.PERFECT
    if sigma_n < 2 * n:
        return NClass.DEFICIENT
    return NClass.ABUNDANT


def classify(n: int) -> NClass:
    return classify_sigma(n, sigma(n))


def omega(n: int) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    return factorize(n).omega()


def is_superperfect(n: int) -> bool:
    """True when σ(σ(n)) = 2n."""
    require_positive(n)
    return sigma(sigma(n)) == 2 * n


def sigma_by_divisors(n: int) -> int:
    """σ(n) by enumerating divisor pairs up to √n; an oracle independent of factorization."""
    require_positive(n)
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
        d += 1
    return total
