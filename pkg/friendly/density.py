from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from arith.sigma import BigRational
from friendly.search import find_friendly_pairs

# Lower bound for the density of friendly integers.
FRIENDLY_DENSITY_BOUND = Fraction(8, 147)


@dataclass(frozen=True)
class DensityReport:
    x: int
    pair_count: int
    ratio: BigRational
    reference: BigRational = FRIENDLY_DENSITY_BOUND

    @property
    def ratio_approx(self) -> float:
        """Presentation only; never used in a verdict."""
        return float(self.ratio)


def density_estimate(limit: int, shards: Optional[int] = None) -> DensityReport:
    """Number of pairs a < b ≤ limit with σ(a)/a = σ(b)/b, relative to limit."""
    report = find_friendly_pairs(limit, shards)
    pairs = report.pair_count()
    return DensityReport(x=limit, pair_count=pairs, ratio=Fraction(pairs, limit))
