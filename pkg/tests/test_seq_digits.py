import math

import pytest
from hypothesis import given, strategies as st

import oracles
from seqlab import numeric_core as nc
from seqlab import seq_digits as sd


PRINTED = {
    "consecutive": [1, 12, 123, 1234, 12345, 123456, 1234567, 12345678, 123456789, 12345678910,
                    1234567891011, 123456789101112, 12345678910111213],
    "circular": [1, 12, 21, 123, 231, 312, 1234, 2341, 3412, 4123, 12345, 23451, 34512, 45123, 51234,
                 123456, 234561, 345612, 456123, 561234, 612345, 1234567, 2345671, 3456712],
    "symmetric": [1, 11, 121, 1221, 12321, 123321, 1234321, 12344321, 123454321, 1234554321,
                  12345654321, 123456654321, 1234567654321, 12345677654321, 123456787654321,
                  1234567887654321, 12345678987654321, 123456789987654321, 12345678910987654321,
                  1234567891010987654321, 123456789101110987654321, 12345678910111110987654321],
    "mirror": [1, 212, 32123, 4321234, 543212345, 65432123456, 7654321234567, 876543212345678,
               98765432123456789, 109876543212345678910, 1110987654321234567891011],
    "permutation": [12, 1342, 135642, 13578642, 13579108642, 135791112108642, 1357911131412108642,
                    13579111315161412108642, 135791113151718161412108642,
                    1357911131517192018161412108642],
    "code_puzzle": ["151405", "202315", "2008180505", "06152118", "06092205", "190924", "1905220514",
                    "0509070820", "14091405", "200514", "051205220514"],
}


@pytest.mark.parametrize("family", sorted(PRINTED))
def test_printed_prefixes(family):
    want = PRINTED[family]
    assert sd.family_terms(family, len(want)) == want


def test_deconstructive_reads_repeating_digit_stream():
    stream = "123456789" * 10
    got = sd.family_terms("deconstructive", 12)
    pos = 0
    for n, t in enumerate(got, 1):
        assert str(t) == stream[pos:pos + n]
        pos += n


def test_digit_removal_families_mark_empty_terms():
    assert sd.family_terms("no_prime_digit", 8) == ["1", "", "", "4", "", "6", "", "8"]
    assert sd.render("") == "-"
    assert sd.family_terms("no_prime_digit", 8, skip_empty=True)[:3] == ["1", "4", "6"]


def test_pierced_chain_terms_divisible_by_101():
    for n, t in enumerate(sd.family_terms("pierced_chain", 20), 1):
        assert t % 101 == 0
        assert str(t) == "101" + "0101" * (n - 1)


def test_simple_numbers_are_p_p2_p3_pq():
    got = [n for n in range(2, 2000) if nc.classify_by_proper_divisor_product(n)[0]]
    assert got == [n for n in range(2, 2000) if oracles.proper_divisor_product(n) <= n]
    for n in got:
        exps = sorted(e for _, e in nc.factorize(n))
        assert exps in ([1], [2], [3], [1, 1])
    assert 59 in got and 45 not in got and 78 not in got


def test_divisor_products_including_split_entry():
    got = [math.prod(nc.divisors(n)) for n in range(1, 37)]
    assert got[:12] == [1, 2, 3, 8, 5, 36, 7, 64, 27, 100, 11, 1728]
    # the printed list breaks this entry across a line as "100776 96"
    assert got[35] == 10077696


@given(st.integers(1, 200))
def test_subsequence_closed_forms_match_streams(i):
    for kind in sd.SUBSEQ_KINDS:
        assert sd.subsequence_closed_form(kind, i) == sd.subsequence_stream(kind, i)[-1]


def test_lucky_numbers():
    assert sd.lucky_numbers(100) == [1, 3, 7, 9, 13, 15, 21, 25, 31, 33, 37, 43, 49, 51, 63, 67, 69, 73, 75,
                                     79, 87, 93, 99]


def test_prime_digital_terms():
    terms = sd.prime_digital_terms(100)
    assert terms[:13] == [2, 3, 5, 7, 23, 37, 53, 73, 223, 227, 233, 257, 277]
    assert terms[-1] == 33223
    assert all(oracles.is_prime(t) and set(str(t)) <= set("2357") for t in terms)
    assert terms == sorted(terms)


def test_concatenated_evens():
    assert sd.concatenated_terms(sd.BaseSeqSpec("evens"), 5) == [2, 24, 246, 2468, 246810]


def test_english_names_and_letter_code():
    assert sd.english_name(21) == "TWENTYONE"
    assert sd.english_name(1234) == "ONETHOUSANDTWOHUNDREDTHIRTYFOUR"
    assert sd.letter_code("one") == "151405"
    with pytest.raises(ValueError):
        sd.english_name(0)


def test_almost_prime_kinds():
    # first kind: no term divides a later one; second kind: pairwise coprime
    first = sd.almost_primes("first", 10, 8)
    assert first == [10, 11, 12, 13, 14, 15, 16, 17]
    second = sd.almost_primes("second", 10, 6)
    assert second == [10, 11, 13, 17, 19, 21]
    assert all(math.gcd(a, b) == 1 for i, a in enumerate(second) for b in second[i + 1:])
    with pytest.raises(ValueError):
        sd.almost_primes("third", 10, 3)
