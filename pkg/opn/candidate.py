"""
The Euler-factor model N = p^k·m² of a hypothetical odd perfect number.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from arith.errors import DomainError
from arith.factor import Factorization, factorize
from arith.primes import is_prime
from arith.sigma import BigRational, sigma_of

# Lower bound N > 10^300 assumed for odd perfect numbers; informational only.
OPN_LOWER_BOUND_EXPONENT = 300


class CandidateError(DomainError):
    """A (p, k, m) triple that does not have the Euler-factor form."""


@dataclass(frozen=True)
class OpnCandidate:
    p: int
    k: int
    m: int
    euler_factorization: Factorization = field(init=False, repr=False, compare=False)
    m_factorization: Factorization = field(init=False, repr=False, compare=False)
    square_factorization: Factorization = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, k, m = self.p, self.k, self.m
        if not is_prime(p):
            raise CandidateError(f"p = {p} is not prime")
        if p % 4 != 1:
            raise CandidateError(f"p = {p} is not congruent to 1 mod 4")
        if k < 1 or k % 4 != 1:
            raise CandidateError(f"k = {k} is not a positive integer congruent to 1 mod 4")
        if m < 1:
            raise CandidateError(f"m = {m} is not a positive integer")
        if m % 2 == 0:
            raise CandidateError(f"m = {m} is not odd")
        if gcd(p, m) != 1:
            raise CandidateError(f"gcd(p, m) = gcd({p}, {m}) != 1")

        m_factorization = factorize(m)
        object.__setattr__(self, "euler_factorization", Factorization(((p, k),)))
        object.__setattr__(self, "m_factorization", m_factorization)
        object.__setattr__(self, "square_factorization", m_factorization.power(2))

    @property
    def euler_factor(self) -> int:
        return self.p**self.k

    @property
    def square(self) -> int:
        return self.m * self.m

    @property
    def n(self) -> int:
        return self.euler_factor * self.square

    def factorization(self) -> Factorization:
        """Canonical factorization of N = p^k·m²."""
        pairs = sorted(self.square_factorization.pairs + self.euler_factorization.pairs)
        return Factorization(tuple(pairs))

    def __str__(self) -> str:
        return f"N = {self.p}^{self.k}·{self.m}² = {self.n}"


@dataclass(frozen=True)
class OpnRatios:
    rho1: BigRational
    rho2: BigRational
    rho3: BigRational
    mu1: BigRational
    mu2: BigRational
    mu3: BigRational

    def abundancy(self) -> BigRational:
        """σ(N)/N, which equals rho1·mu1 and rho2·mu2."""
        return self.rho1 * self.mu1


def compute_ratios(c: OpnCandidate) -> OpnRatios:
    if not isinstance(c, OpnCandidate):
        raise DomainError(f"expected an OpnCandidate, got {type(c).__name__}")

    sigma_pk = sigma_of(c.euler_factorization)
    sigma_m2 = sigma_of(c.square_factorization)
    sigma_m = sigma_of(c.m_factorization)
    pk, m2 = c.euler_factor, c.square

    return OpnRatios(
        rho1=Fraction(sigma_pk, pk),
        rho2=Fraction(sigma_pk, m2),
        rho3=Fraction(sigma_pk, c.m),
        mu1=Fraction(sigma_m2, m2),
        mu2=Fraction(sigma_m2, pk),
        mu3=Fraction(sigma_m, pk),
    )
