from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from arith.errors import DomainError, require_positive
from arith.factor import Factorization, factorize
from arith.sigma import BigRational, sigma, sigma_of


@dataclass(frozen=True)
class PrimePowerAbundancy:
    """Decision on whether x = σ(p^k)/p^k for some prime power p^k."""

    value: BigRational
    is_abundancy: bool
    denominator_factorization: Factorization
    reason: str
    p: Optional[int] = None
    k: Optional[int] = None


def is_prime_power_abundancy(x: BigRational) -> PrimePowerAbundancy:
    """
    Exact decision. σ(p^k) and p^k are coprime, so σ(p^k)/p^k is already
    reduced and its denominator must be the prime power itself.
    """
    x = Fraction(x)
    if x <= 1:
        raise DomainError(f"x = {x} is not greater than 1; no prime-power abundancy is")

    den_f = factorize(x.denominator)
    if not den_f.is_prime_power():
        return PrimePowerAbundancy(
            x, False, den_f, f"denominator {x.denominator} = {den_f} is not a prime power"
        )

    (p, k), = den_f.pairs
    sigma_pk = sigma_of(den_f)
    if x.numerator != sigma_pk:
        return PrimePowerAbundancy(
            x,
            False,
            den_f,
            f"denominator {x.denominator} = {den_f} but σ({den_f}) = {sigma_pk} ≠ {x.numerator}",
        )
    return PrimePowerAbundancy(x, True, den_f, f"{x} = σ({den_f})/{den_f}", p, k)


class SolitaryVerdict(str, Enum):
    CERTIFIED = "certified solitary"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolitaryCertificate:
    n: int
    sigma_n: int
    gcd: int
    verdict: SolitaryVerdict


def solitary_certificate(n: int) -> SolitaryCertificate:
    """gcd(n, σ(n)) = 1 is sufficient for n to be solitary."""
    require_positive(n)
    sigma_n = sigma(n)
    g = gcd(n, sigma_n)
    verdict = SolitaryVerdict.CERTIFIED if g == 1 else SolitaryVerdict.UNKNOWN
    return SolitaryCertificate(n, sigma_n, g, verdict)
