from dataclasses import dataclass
from math import prod
from typing import Iterator, Tuple

from sympy import factorint

from arith.errors import DomainError, require_positive
from arith.primes import is_prime


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: (prime, exponent) pairs, primes strictly increasing."""

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = 1
        for p, a in self.pairs:
            if p <= previous:
                raise DomainError(f"primes must be strictly increasing, got {p} after {previous}")
            if a < 1:
                raise DomainError(f"exponent of {p} must be >= 1, got {a}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            previous = p

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "·".join(f"{p}^{a}" if a > 1 else str(p) for p, a in self.pairs)

    @property
    def value(self) -> int:
        return prod(p**a for p, a in self.pairs)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.pairs)

    def is_prime_power(self) -> bool:
        return len(self.pairs) == 1

    def power(self, e: int) -> "Factorization":
        """Factorization of value**e."""
        require_positive(e, "e")
        return Factorization(tuple((p, a * e) for p, a in self.pairs))

    def components(self) -> Tuple[int, ...]:
        """The prime-power components p_i^a_i in increasing prime order."""
        return tuple(p**a for p, a in self.pairs)


def factorize(n: int) -> Factorization:
    """Canonical factorization of n via sympy.factorint."""
    require_positive(n)
    pairs = sorted((int(p), int(a)) for p, a in factorint(n).items())
    return Factorization(tuple(pairs))
