import random
from fractions import Fraction
from math import gcd

import pytest

from arith.errors import DomainError
from arith.factor import Factorization, factorize
from arith.primes import is_prime, primes_up_to
from arith.sieve import sigma_sieve
from arith.sigma import (
    NClass,
    abundancy,
    classify,
    is_superperfect,
    omega,
    sigma,
    sigma_by_divisors,
    sigma_prime_power,
)
from tests.conftest import trial_pairs

M31 = 2**31 - 1
M61 = 2**61 - 1
M89 = 2**89 - 1


@pytest.mark.parametrize(
    "n, pairs",
    [
        (1, ()),
        (45, ((3, 2), (5, 1))),
        (77, ((7, 1), (11, 1))),
        (945, ((3, 3), (5, 1), (7, 1))),
        (2**10, ((2, 10),)),
    ],
)
def test_factorize_examples(n, pairs):
    f = factorize(n)
    assert f.pairs == pairs
    assert f.value == n


def test_factorize_matches_trial_division():
    for n in range(1, 5001):
        assert factorize(n).pairs == trial_pairs(n)


def test_factorize_large_semiprime():
    assert factorize(M31 * M61).pairs == ((M31, 1), (M61, 1))


def test_factorize_large_prime_square():
    assert factorize(M31**2).pairs == ((M31, 2),)


@pytest.mark.parametrize("bad", [0, -5])
def test_factorize_rejects_nonpositive(bad):
    with pytest.raises(DomainError):
        factorize(bad)


def test_factorization_invariants_enforced():
    with pytest.raises(DomainError):
        Factorization(((5, 1), (3, 2)))
    with pytest.raises(DomainError):
        Factorization(((4, 1),))
    with pytest.raises(DomainError):
        Factorization(((3, 0),))


def test_factorization_text_and_omega():
    f = factorize(45)
    assert str(f) == "3^2·5"
    assert f.omega() == 2
    assert f.power(2).value == 45**2
    assert str(factorize(1)) == "1"


def test_primes_up_to():
    assert primes_up_to(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1).tolist() == []
    assert len(primes_up_to(1000)) == 168


@pytest.mark.parametrize("n", [2, 3, 5, 97, 7919, 1_000_003, M31, M61, M89])
def test_is_prime_accepts_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [0, 1, 4, 561, 1105, 3_215_031_751, M31 * M61, M61**2])
def test_is_prime_rejects_composites(n):
    assert not is_prime(n)


@pytest.mark.parametrize("p, k, expected", [(5, 1, 6), (3, 2, 13), (7, 1, 8), (11, 1, 12)])
def test_sigma_prime_power(p, k, expected):
    assert sigma_prime_power(p, k) == expected


def test_sigma_prime_power_product_for_witness():
    assert sigma_prime_power(7, 1) * sigma_prime_power(11, 1) == 96


def test_sigma_prime_power_rejects_composite_base():
    with pytest.raises(DomainError):
        sigma_prime_power(9, 1)
    with pytest.raises(DomainError):
        sigma_prime_power(5, 0)


@pytest.mark.parametrize("n, expected", [(1, 1), (45, 78), (6, 12), (28, 56), (945, 1920)])
def test_sigma_examples(n, expected):
    assert sigma(n) == expected


def test_sigma_rejects_zero():
    with pytest.raises(DomainError):
        sigma(0)


def test_sigma_matches_divisor_enumeration():
    for n in range(1, 10_001):
        assert sigma(n) == sigma_by_divisors(n)


def test_sigma_is_multiplicative_on_random_coprime_pairs():
    rng = random.Random(2024)
    tested = 0
    while tested < 10_000:
        a, b = rng.randint(1, 10_000), rng.randint(1, 10_000)
        if gcd(a, b) != 1:
            continue
        tested += 1
        assert sigma(a * b) == sigma(a) * sigma(b)


def test_prime_power_geometric_identity_and_coprimality():
    for p in primes_up_to(200).tolist():
        for k in range(1, 8):
            s = sigma_prime_power(p, k)
            assert (p - 1) * s == p ** (k + 1) - 1
            assert gcd(p**k, s) == 1


@pytest.mark.parametrize(
    "n, expected",
    [(45, Fraction(26, 15)), (1, Fraction(1)), (6, Fraction(2)), (77, Fraction(96, 77))],
)
def test_abundancy_examples(n, expected):
    assert abundancy(n) == expected


def test_abundancy_denominator_divides_n():
    for n in range(1, 10_001):
        assert n % abundancy(n).denominator == 0


@pytest.mark.parametrize(
    "n, expected",
    [(45, NClass.DEFICIENT), (6, NClass.PERFECT), (12, NClass.ABUNDANT), (1, NClass.DEFICIENT)],
)
def test_classify(n, expected):
    assert classify(n) is expected


def test_classify_agrees_with_sign_of_sigma_minus_2n():
    for n in range(1, 3001):
        diff = sigma_by_divisors(n) - 2 * n
        expected = NClass.PERFECT if diff == 0 else (NClass.DEFICIENT if diff < 0 else NClass.ABUNDANT)
        assert classify(n) is expected


def test_omega():
    assert omega(1) == 0
    assert omega(945) == 3
    assert omega(2**20) == 1


@pytest.mark.parametrize("n, expected", [(2, True), (4, True), (16, True), (3, False), (9, False)])
def test_is_superperfect(n, expected):
    assert is_superperfect(n) is expected


def test_sigma_sieve_matches_sigma():
    table = sigma_sieve(3000)
    assert [int(v) for v in table[1:]] == [sigma(n) for n in range(1, 3001)]


def test_sigma_sieve_odd_only():
    table = sigma_sieve(3001, odd_only=True)
    for n in range(1, 3002, 2):
        assert int(table[n]) == sigma(n)
    assert not table[2::2].any()


def test_sigma_sieve_rejects_empty_range():
    with pytest.raises(DomainError):
        sigma_sieve(0)


def test_factorize_returns_plain_ints():
    f = factorize(M31 * 1_000_003)
    assert f.pairs == ((1_000_003, 1), (M31, 1))
    assert all(type(p) is int and type(a) is int for p, a in f)


def test_is_prime_returns_bool():
    assert is_prime(M61) is True
    assert is_prime(561) is False
