"""
The hyperbolic arc XY = 2 and the region 1 < X < 5/4, 8/5 < Y < 2,
57/20 < X + Y < 3 where an odd perfect number's (σ(p^k)/p^k, σ(m²)/m²)
would have to lie. The decimal bounds 1.25, 1.6 and 2.85 are the exact
fractions 5/4, 8/5 and 57/20.
"""

from dataclasses import dataclass
from fractions import Fraction

from arith.errors import DomainError
from arith.sigma import BigRational

X_UPPER = Fraction(5, 4)
Y_LOWER = Fraction(8, 5)
SUM_LOWER = Fraction(57, 20)
ARC_PRODUCT = Fraction(2)


@dataclass(frozen=True)
class RegionPoint:
    x: BigRational
    y: BigRational

    @property
    def on_arc(self) -> bool:
        return self.x * self.y == ARC_PRODUCT


@dataclass(frozen=True)
class RegionVerdict:
    x_lower: bool
    x_upper: bool
    y_lower: bool
    y_upper: bool
    sum_lower: bool
    sum_upper: bool
    on_arc: bool

    @property
    def in_region(self) -> bool:
        return all(
            (self.x_lower, self.x_upper, self.y_lower, self.y_upper, self.sum_lower, self.sum_upper)
        )

    @property
    def full_pass(self) -> bool:
        return self.in_region and self.on_arc

    def flags(self):
        return {
            "1 < X": self.x_lower,
            "X < 5/4": self.x_upper,
            "8/5 < Y": self.y_lower,
            "Y < 2": self.y_upper,
            "57/20 < X + Y": self.sum_lower,
            "X + Y < 3": self.sum_upper,
            "X·Y = 2": self.on_arc,
        }


def in_region(pt: RegionPoint) -> RegionVerdict:
    if pt.x <= 0 or pt.y <= 0:
        raise DomainError(f"coordinates must be positive, got ({pt.x}, {pt.y})")
    total = pt.x + pt.y
    return RegionVerdict(
        x_lower=1 < pt.x,
        x_upper=pt.x < X_UPPER,
        y_lower=Y_LOWER < pt.y,
        y_upper=pt.y < 2,
        sum_lower=SUM_LOWER < total,
        sum_upper=total < 3,
        on_arc=pt.on_arc,
    )
