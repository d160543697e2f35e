import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from seqlab import numeric_core as nc


def test_digits_round_trip_examples():
    assert nc.digits_of(9075) == [9, 0, 7, 5]
    assert nc.digits_of(0) == [0]
    assert nc.digits_of(5, 2) == [1, 0, 1]
    assert nc.value_of([1, 0, 1], 2) == 5
    assert nc.concat(12, 305) == 12305
    assert nc.reverse_int(1200) == 21


@given(st.integers(0, 10**30), st.integers(2, 36))
def test_digits_value_inverse(n, base):
    assert nc.value_of(nc.digits_of(n, base), base) == n
    assert nc.digit_count(n, base) == len(nc.digits_of(n, base))


def test_primality_agrees_with_trial_division():
    assert [n for n in range(200) if nc.is_prime(n)] == [n for n in range(200) if oracles.is_prime(n)]


@pytest.mark.parametrize("n", [561, 1105, 1729, 2465, 3215031751, 3825123056546413051])
def test_strong_pseudoprimes_rejected(n):
    assert not nc.is_prime(n)


def test_large_known_primes():
    assert nc.is_prime(2**61 - 1)
    assert nc.is_prime(2**89 - 1)
    assert not nc.is_prime((2**61 - 1) * (2**31 - 1))


def test_prime_table_nth_and_counts():
    assert nc.nth_prime(1) == 2
    assert nc.nth_prime(1000) == 7919
    assert nc.PRIMES.count_up_to(100) == 25
    assert nc.primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@settings(max_examples=200)
@given(st.integers(2, 10**12))
def test_factorize_reconstructs(n):
    fs = nc.factorize(n)
    assert math.prod(p**e for p, e in fs) == n
    assert all(oracles.is_prime(p) for p, _ in fs if p < 10**6)
    assert [p for p, _ in fs] == sorted({p for p, _ in fs})


def test_factorize_rejects_below_two():
    with pytest.raises(ValueError):
        nc.factorize(1)


def test_factorize_semiprime_of_large_primes():
    p, q = 1000000007, 998244353
    assert nc.factorize(p * q) == [(q, 1), (p, 1)]


@given(st.integers(1, 5000))
def test_divisors_and_totient(n):
    assert nc.divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
    assert nc.totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@given(st.integers(0, 10**40), st.integers(2, 7))
def test_integer_root_floor(n, m):
    r = nc.integer_root(n, m)
    assert r**m <= n < (r + 1) ** m


def test_perfect_power_examples():
    assert nc.is_perfect_power(64) == (8, 2)
    assert nc.is_perfect_power(2**35) == (128, 5)
    assert nc.is_perfect_power(12) is None


@given(st.integers(2, 10**6))
def test_perfect_power_matches_oracle(n):
    assert (nc.is_perfect_power(n) is not None) == oracles.perfect_root(n)


@given(st.integers(2, 10**6))
def test_p_adic_valuation(n):
    for p in (2, 3, 5):
        v = nc.p_adic_valuation(n, p)
        assert n % p**v == 0 and n % p ** (v + 1) != 0


def test_block_palindromes():
    assert nc.gsp_check(1235656312)
    assert nc.gsp_check(23523)
    assert nc.gsp_check(1212)
    assert not nc.gsp_check(1234)


def test_proper_divisor_product_against_oracle():
    assert [nc.proper_divisor_product(n) for n in range(1, 200)] == [
        oracles.proper_divisor_product(n) for n in range(1, 200)]
    assert nc.proper_divisor_product(12) == 144


def test_digit_permutations():
    assert nc.digit_permutations(112) == {112, 121, 211}
    assert nc.distinct_digit_arrangements(100) >= {100}


def test_counter_and_digit_position():
    assert nc.counter(1, 1231) == 2
    assert nc.digit_position(90705, 0) == 3
    assert nc.digit_position(123, 9) == -1
