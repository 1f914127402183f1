from fractions import Fraction

from arith.errors import DomainError
from arith.factor import Factorization
from arith.sigma import sigma, sigma_of
from opn.candidate import OpnCandidate
from opn.report import ConstraintReport, StatementId, check


def check_theorem1(c: OpnCandidate) -> ConstraintReport:
    """p^k < (2/3)m², checked as 3·p^k < 2·m²."""
    return ConstraintReport(
        StatementId.T1,
        (check("3·p^k < 2·m²", 3 * c.euler_factor, "<", 2 * c.square),),
    )


def check_theorem2(c: OpnCandidate) -> ConstraintReport:
    gap = c.square - c.euler_factor
    return ConstraintReport(
        StatementId.T2,
        (
            check("0 < m² − p^k", 0, "<", gap),
            check("m² − p^k > p^k/2", c.euler_factor, "<", 2 * gap),
            check("4 | m² − p^k", 4, "|", gap),
            check("8 ≤ m² − p^k", 8, "<=", gap),
        ),
        notes=(f"m² − p^k = {gap}",),
    )


def _require_odd_factorization(f: Factorization) -> int:
    n = f.value
    if n < 3:
        raise DomainError(f"N must be at least 3, got {n}")
    if n % 2 == 0:
        raise DomainError(f"N = {n} is even; the bound concerns odd perfect numbers")
    return n


def check_theorem3(f: Factorization) -> ConstraintReport:
    """σ(p_i^a_i) ≤ (2/3)·N/p_i^a_i for every component, as 3·σ(q)·q ≤ 2N."""
    n = _require_odd_factorization(f)
    checks = []
    for p, a in f:
        q = p**a
        left = 3 * sigma_of(Factorization(((p, a),))) * q
        checks.append(check(f"3·σ({p}^{a})·{p}^{a} ≤ 2N", left, "<=", 2 * n))
    notes = tuple(f"margin {p}^{a}: {c.right - c.left}" for (p, a), c in zip(f, checks))
    return ConstraintReport(StatementId.T3, tuple(checks), notes=notes)


def check_theorem3_cofactors(f: Factorization) -> ConstraintReport:
    """
    For each component q = p_i^a_i with cofactor M = N/q: q | σ(M),
    h = σ(M)/q ≥ 3, and q is not superperfect (the h = 2 case).
    """
    n = _require_odd_factorization(f)
    checks = []
    for p, a in f:
        q = p**a
        sigma_cofactor = sigma_of(Factorization(tuple(pair for pair in f if pair[0] != p)))
        h = Fraction(sigma_cofactor, q)
        checks.append(check(f"{p}^{a} | σ(N/{p}^{a})", q, "|", sigma_cofactor))
        checks.append(check(f"3 ≤ h = σ(N/{p}^{a})/{p}^{a}", Fraction(3), "<=", h))
        checks.append(check(f"σ(σ({p}^{a})) ≠ 2·{p}^{a}", sigma(sigma(q)), "!=", 2 * q))
    return ConstraintReport(StatementId.T3H, tuple(checks), notes=(f"N = {n}",))


def _corollary_sides(n: int, r: int):
    if r == 1:
        return "3·N ≤ 1", 3 * n, 1
    return f"3^{r} ≤ 2^{r - 1}·N^{r - 2}", 3**r, 2 ** (r - 1) * n ** (r - 2)


def _require_corollary_args(n: int, r: int) -> None:
    if n < 3:
        raise DomainError(f"N must be at least 3, got {n}")
    if r < 1:
        raise DomainError(f"r must be a positive integer, got {r}")


def check_corollary1(n: int, r: int) -> ConstraintReport:
    """N^(2−r) ≤ (1/3)(2/3)^(r−1), cross-multiplied into integers."""
    _require_corollary_args(n, r)
    description, left, right = _corollary_sides(n, r)
    return ConstraintReport(
        StatementId.C1,
        (check(description, left, "<=", right),),
        notes=(f"N = {n}", f"r = {r}"),
    )


def min_omega_consistent(n: int) -> int:
    """Smallest r for which the corollary bound holds for N."""
    _require_corollary_args(n, 1)
    r = 1
    while True:
        _, left, right = _corollary_sides(n, r)
        if left <= right:
            return r
        r += 1

