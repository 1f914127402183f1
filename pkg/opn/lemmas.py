"""
Checkers for the ratio inequalities an odd perfect number p^k·m² must satisfy.

Non-strict bounds: rho2 <= 2/3, 3 <= mu2 and
11/3 <= rho2 + mu2. Every other bound is strict.
"""

from fractions import Fraction

from arith.sigma import abundancy_of
from opn.candidate import OpnCandidate, OpnRatios, compute_ratios
from opn.report import ConstraintReport, StatementId, check


def check_lemma1(r: OpnRatios) -> ConstraintReport:
    return ConstraintReport(
        StatementId.L1,
        (
            check("0 < ρ2", Fraction(0), "<", r.rho2),
            check("ρ2 ≤ 2/3", r.rho2, "<=", Fraction(2, 3)),
            check("1 < ρ1", Fraction(1), "<", r.rho1),
            check("ρ1 < 5/4", r.rho1, "<", Fraction(5, 4)),
            check("8/5 < μ1", Fraction(8, 5), "<", r.mu1),
            check("μ1 < 2", r.mu1, "<", Fraction(2)),
            check("3 ≤ μ2", Fraction(3), "<=", r.mu2),
        ),
    )


def check_lemma2(r: OpnRatios) -> ConstraintReport:
    low_sum = r.rho1 + r.mu1
    high_sum = r.rho2 + r.mu2
    return ConstraintReport(
        StatementId.L2,
        (
            check("57/20 < ρ1 + μ1", Fraction(57, 20), "<", low_sum),
            check("ρ1 + μ1 < 3", low_sum, "<", Fraction(3)),
            check("11/3 ≤ ρ2 + μ2", Fraction(11, 3), "<=", high_sum),
        ),
    )


def check_lemma3(c: OpnCandidate) -> ConstraintReport:
    """
    ρ3 = σ(p^k)/m never equals μ3 = σ(m)/p^k, and the ordering of ρ3 against
    1 and μ3 pins p^k relative to m. Each branch is a material implication.
    """
    r = compute_ratios(c)
    pk, m = c.euler_factor, c.m
    below_one = r.rho3 < 1
    rho_smaller = r.rho3 > 1 and r.rho3 < r.mu3
    mu_smaller = r.rho3 > 1 and r.mu3 < r.rho3

    return ConstraintReport(
        StatementId.L3,
        (
            check("ρ3 ≠ μ3", r.rho3, "!=", r.mu3),
            check("p^k < m", pk, "<", m, applies=below_one, premise="ρ3 < 1"),
            check("(4/5)m < p^k", 4 * m, "<", 5 * pk, applies=rho_smaller, premise="1 < ρ3 < μ3"),
            check("p^k < √2·m", pk * pk, "<", 2 * m * m, applies=rho_smaller, premise="1 < ρ3 < μ3"),
            check("m < p^k", m, "<", pk, applies=mu_smaller, premise="1 < ρ3, μ3 < ρ3"),
        ),
        notes=(f"ρ3 = {r.rho3}", f"μ3 = {r.mu3}"),
    )


def check_abundancy_comparison(c: OpnCandidate) -> ConstraintReport:
    """The Euler factor is less abundant than m: σ(p^k)/p^k < σ(m)/m."""
    r = compute_ratios(c)
    return ConstraintReport(
        StatementId.L3A,
        (check("σ(p^k)/p^k < σ(m)/m", r.rho1, "<", abundancy_of(c.m_factorization)),),
    )
