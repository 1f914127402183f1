import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

Value = Union[int, Fraction]


class StatementId(str, Enum):
    PERF = "PERF"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    L3A = "L3A"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T3H = "T3H"
    C1 = "C1"


def _divides(a: Value, b: Value) -> bool:
    return b % a == 0


COMPARATORS: Dict[str, Callable[[Value, Value], bool]] = {
    "<": operator.lt,
    "<=": operator.le,
    "==": operator.eq,
    "!=": operator.ne,
    "|": _divides,
}

NEGATIONS = {"<": ">=", "<=": ">", "==": "!=", "!=": "==", "|": "∤"}


@dataclass(frozen=True)
class Check:
    """
    One atomic inequality with its exact operands.

    `applies` is False when the check sits behind a premise that does not
    hold for this input; such a check passes vacuously.
    """

    description: str
    left: Value
    comparator: str
    right: Value
    passed: bool
    applies: bool = True
    premise: str = ""

    def reproduce(self) -> bool:
        return (not self.applies) or COMPARATORS[self.comparator](self.left, self.right)

    @property
    def shown_comparator(self) -> str:
        """Comparator as it actually holds between the operands."""
        if self.applies and not self.passed:
            return NEGATIONS[self.comparator]
        return self.comparator


def check(
    description: str,
    left: Value,
    comparator: str,
    right: Value,
    applies: bool = True,
    premise: str = "",
) -> Check:
    if comparator not in COMPARATORS:
        raise ValueError(f"unknown comparator {comparator!r}")
    passed = (not applies) or COMPARATORS[comparator](left, right)
    return Check(description, left, comparator, right, passed, applies, premise)


@dataclass(frozen=True)
class ConstraintReport:
    statement: StatementId
    checks: Tuple[Check, ...]
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)
