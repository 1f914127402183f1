import random
from fractions import Fraction
from math import gcd

import pytest

from arith.errors import DomainError
from arith.factor import factorize
from arith.primes import primes_up_to
from arith.sigma import NClass, abundancy, classify, sigma_prime_power
from cli.render import check_line
from opn.audit import check_perfection, decompose_euler, full_audit, odd_perfect_scan
from opn.candidate import CandidateError, OpnCandidate, OpnRatios, compute_ratios
from opn.lemmas import check_abundancy_comparison, check_lemma1, check_lemma2, check_lemma3
from opn.report import ConstraintReport, StatementId, check
from opn.theorems import (
    check_corollary1,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem3_cofactors,
    min_omega_consistent,
)

EULER_PRIMES = [p for p in primes_up_to(10_000).tolist() if p % 4 == 1]


def _by_description(report):
    return {c.description: c for c in report.checks}


@pytest.mark.parametrize(
    "p, k, m",
    [(5, 1, 5), (7, 1, 3), (5, 2, 3), (5, 3, 3), (5, 1, 4), (9, 1, 1), (5, 1, 0), (5, 0, 3)],
)
def test_candidate_rejects_invalid_triples(p, k, m):
    with pytest.raises(CandidateError):
        OpnCandidate(p, k, m)


def test_candidate_error_is_a_domain_error():
    with pytest.raises(DomainError):
        OpnCandidate(5, 1, 5)


def test_candidate_properties():
    c = OpnCandidate(5, 1, 3)
    assert c.euler_factor == 5
    assert c.square == 9
    assert c.n == 45
    assert c.factorization().pairs == ((3, 2), (5, 1))
    assert str(c) == "N = 5^1·3² = 45"


def test_ratios_for_smallest_candidate():
    r = compute_ratios(OpnCandidate(5, 1, 3))
    assert r.rho1 == Fraction(6, 5)
    assert r.mu1 == Fraction(13, 9)
    assert r.rho2 == Fraction(2, 3)
    assert r.mu2 == Fraction(13, 5)
    assert r.rho3 == Fraction(2)
    assert r.mu3 == Fraction(4, 5)
    assert r.abundancy() == abundancy(45)


def test_ratios_with_unit_m():
    assert compute_ratios(OpnCandidate(5, 1, 1)).mu1 == 1


def test_compute_ratios_rejects_raw_triples():
    with pytest.raises(DomainError):
        compute_ratios((5, 1, 3))


def _random_candidates(count, seed=7):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        p = rng.choice(EULER_PRIMES)
        k = rng.choice((1, 5))
        m = rng.randrange(1, 10_001, 2)
        if gcd(p, m) == 1:
            found.append(OpnCandidate(p, k, m))
    return found


def test_ratio_identities_on_random_candidates():
    for c in _random_candidates(1000):
        r = compute_ratios(c)
        assert r.rho1 * r.mu1 == r.rho2 * r.mu2 == abundancy(c.n)
        assert r.rho1 / r.rho2 == Fraction(c.square, c.euler_factor) == r.mu2 / r.mu1


def test_euler_factor_abundancy_bounds_hold_unconditionally():
    for p in EULER_PRIMES:
        for k in (1, 5, 9):
            rho1 = Fraction(sigma_prime_power(p, k), p**k)
            assert 1 < rho1 < Fraction(5, 4)
            assert rho1 < Fraction(p, p - 1)


def test_lemma1_on_smallest_candidate():
    report = check_lemma1(compute_ratios(OpnCandidate(5, 1, 3)))
    checks = _by_description(report)
    assert checks["1 < ρ1"].passed
    assert checks["ρ1 < 5/4"].passed
    # ρ2 = 2/3 sits exactly on the non-strict bound
    assert checks["ρ2 ≤ 2/3"].passed
    assert not checks["8/5 < μ1"].passed
    assert not report.passed


def test_lemma1_flags_large_rho2():
    report = check_lemma1(compute_ratios(OpnCandidate(5, 1, 1)))
    assert "ρ2 ≤ 2/3" in [c.description for c in report.failures()]


def test_lemma2_on_smallest_candidate():
    checks = _by_description(check_lemma2(compute_ratios(OpnCandidate(5, 1, 3))))
    assert checks["57/20 < ρ1 + μ1"].left == Fraction(57, 20)
    assert checks["57/20 < ρ1 + μ1"].right == Fraction(119, 45)
    assert not checks["57/20 < ρ1 + μ1"].passed
    assert checks["ρ1 + μ1 < 3"].passed
    assert not checks["11/3 ≤ ρ2 + μ2"].passed


def test_lemma2_accepts_ratios_inside_the_band():
    r = OpnRatios(
        rho1=Fraction(6, 5),
        rho2=Fraction(1, 2),
        rho3=Fraction(2),
        mu1=Fraction(5, 3),
        mu2=Fraction(4),
        mu3=Fraction(1, 2),
    )
    assert check_lemma2(r).passed


def test_lemma3_when_mu3_is_smaller():
    report = check_lemma3(OpnCandidate(5, 1, 3))
    checks = _by_description(report)
    assert checks["ρ3 ≠ μ3"].passed
    assert checks["m < p^k"].applies and checks["m < p^k"].passed
    assert not checks["p^k < m"].applies
    assert not checks["(4/5)m < p^k"].applies
    assert report.passed


def test_lemma3_when_rho3_below_one():
    checks = _by_description(check_lemma3(OpnCandidate(13, 1, 105)))
    assert checks["p^k < m"].applies
    assert checks["p^k < m"].passed


def test_abundancy_comparison():
    # σ(5)/5 = 6/5 < σ(3)/3 = 4/3
    report = check_abundancy_comparison(OpnCandidate(5, 1, 3))
    assert report.statement is StatementId.L3A
    assert report.passed
    # σ(5)/5 = 6/5 > σ(1)/1 = 1
    assert not check_abundancy_comparison(OpnCandidate(5, 1, 1)).passed


@pytest.mark.parametrize("p, k, m, passed", [(5, 1, 3, True), (5, 1, 1, False), (13, 1, 105, True)])
def test_theorem1(p, k, m, passed):
    assert check_theorem1(OpnCandidate(p, k, m)).passed is passed


def test_theorem1_operands_are_exact():
    (c,) = check_theorem1(OpnCandidate(5, 1, 3)).checks
    assert (c.left, c.comparator, c.right) == (15, "<", 18)


def test_theorem2_on_smallest_candidate():
    report = check_theorem2(OpnCandidate(5, 1, 3))
    checks = _by_description(report)
    assert checks["0 < m² − p^k"].passed
    assert checks["m² − p^k > p^k/2"].passed
    assert checks["4 | m² − p^k"].passed
    assert not checks["8 ≤ m² − p^k"].passed
    assert report.notes == ("m² − p^k = 4",)


def test_theorem2_passes_for_wide_gap():
    # 81 − 13 = 68
    assert check_theorem2(OpnCandidate(13, 1, 9)).passed


def test_theorem3_on_45():
    report = check_theorem3(factorize(45))
    lefts = [c.left for c in report.checks]
    assert lefts == [351, 90]
    assert [c.passed for c in report.checks] == [False, True]
    assert all(c.right == 90 for c in report.checks)


def test_theorem3_on_945():
    report = check_theorem3(factorize(945))
    assert [c.left for c in report.checks] == [3240, 90, 168]
    assert [c.passed for c in report.checks] == [False, True, True]


def test_theorem3_on_three():
    (c,) = check_theorem3(factorize(3)).checks
    assert (c.left, c.right, c.passed) == (36, 6, False)


@pytest.mark.parametrize("n", [1, 6, 28])
def test_theorem3_rejects_even_or_tiny(n):
    with pytest.raises(DomainError):
        check_theorem3(factorize(n))


def test_theorem3_cofactor_checks_on_45():
    report = check_theorem3_cofactors(factorize(45))
    checks = _by_description(report)
    assert not checks["3^2 | σ(N/3^2)"].passed
    assert checks["3^2 | σ(N/3^2)"].right == 6
    assert checks["3 ≤ h = σ(N/3^2)/3^2"].right == Fraction(2, 3)
    assert checks["σ(σ(3^2)) ≠ 2·3^2"].passed
    assert not checks["5^1 | σ(N/5^1)"].passed
    assert not report.passed


@pytest.mark.parametrize("n", [45, 5, 1_000_001])
def test_corollary1_fails_for_two_components(n):
    (c,) = check_corollary1(n, 2).checks
    assert (c.left, c.right, c.passed) == (9, 2, False)
    assert c.shown_comparator == ">"


def test_corollary1_single_component():
    (c,) = check_corollary1(5, 1).checks
    assert (c.left, c.right, c.passed) == (15, 1, False)


def test_corollary1_three_components():
    (c,) = check_corollary1(45, 3).checks
    assert (c.left, c.right, c.passed) == (27, 180, True)


@pytest.mark.parametrize("n, r", [(2, 3), (1, 3), (45, 0)])
def test_corollary1_rejects_bad_arguments(n, r):
    with pytest.raises(DomainError):
        check_corollary1(n, r)


@pytest.mark.parametrize("n, expected", [(3, 5), (5, 4), (7, 3), (45, 3)])
def test_min_omega(n, expected):
    assert min_omega_consistent(n) == expected


def test_min_omega_is_three_from_seven_onwards():
    assert all(min_omega_consistent(n) == 3 for n in range(7, 10_001))


@pytest.mark.slow
def test_min_omega_sweep_to_a_million():
    assert all(min_omega_consistent(n) >= 3 for n in range(7, 1_000_001))


def test_every_check_reproduces_from_its_operands():
    candidates = _random_candidates(50, seed=11) + [OpnCandidate(5, 1, 3), OpnCandidate(13, 1, 105)]
    for c in candidates:
        for report in full_audit(c):
            for atom in report.checks:
                assert atom.reproduce() == atom.passed


def test_full_audit_on_smallest_candidate():
    reports = {r.statement: r for r in full_audit(OpnCandidate(5, 1, 3))}
    assert list(reports) == [
        StatementId.PERF,
        StatementId.L1,
        StatementId.L2,
        StatementId.L3,
        StatementId.L3A,
        StatementId.T1,
        StatementId.T2,
        StatementId.T3,
        StatementId.T3H,
        StatementId.C1,
    ]
    failing = {s for s, r in reports.items() if not r.passed}
    assert failing == {
        StatementId.PERF,
        StatementId.L1,
        StatementId.L2,
        StatementId.T2,
        StatementId.T3,
        StatementId.T3H,
        StatementId.C1,
    }


def test_perfection_check_matches_classification():
    for n in range(1, 20_001, 2):
        for c in decompose_euler(n):
            assert check_perfection(c).passed is (classify(c.n) is NClass.PERFECT)
            assert not all(r.passed for r in full_audit(c))


@pytest.mark.parametrize(
    "n, expected",
    [(45, [(5, 1, 3)]), (5, [(5, 1, 1)]), (117, [(13, 1, 3)]), (10, []), (25, []), (15, []), (1, [])],
)
def test_decompose_euler(n, expected):
    assert [(c.p, c.k, c.m) for c in decompose_euler(n)] == expected


def test_check_factory_rejects_unknown_comparator():
    with pytest.raises(ValueError):
        check("bad", 1, ">>", 2)


def test_vacuous_check_passes():
    atom = check("p^k < m", 10, "<", 3, applies=False, premise="ρ3 < 1")
    assert atom.passed
    assert atom.shown_comparator == "<"


def test_odd_perfect_scan_small():
    report = odd_perfect_scan(10_000)
    assert report.perfect == ()
    assert report.first_abundant == 945
    assert report.odd_count == 5000
    assert report.deficient + report.abundant == report.odd_count
    expected_abundant = sum(1 for n in range(1, 10_001, 2) if classify(n) is NClass.ABUNDANT)
    assert report.abundant == expected_abundant


def test_odd_perfect_scan_rejects_empty_range():
    with pytest.raises(DomainError):
        odd_perfect_scan(0)


@pytest.mark.slow
def test_odd_perfect_scan_to_ten_million():
    assert odd_perfect_scan(10_000_000).perfect == ()


def test_equal_rho3_and_mu3_is_a_hard_violation():
    atom = check("ρ3 ≠ μ3", Fraction(2, 3), "!=", Fraction(2, 3))
    assert not atom.passed
    assert atom.reproduce() is False
    assert atom.shown_comparator == "=="

    report = ConstraintReport(StatementId.L3, (atom,))
    assert not report.passed
    assert report.failures() == (atom,)

    line = check_line(report.statement.value, atom)
    assert "2/3 == 2/3" in line
    assert line.endswith("FAIL")
