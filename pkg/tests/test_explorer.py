import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from seqlab import explorer as ex
from seqlab.arith_functions import S


# -- tables ---------------------------------------------------------------------------------------


def test_goldbach_and_vinogradov_lists():
    assert [ex.goldbach_t(n) for n in range(1, 15)] == [6, 10, 14, 18, 26, 30, 38, 42, 42, 54, 62, 74, 74, 90]
    assert [ex.vinogradov_v(n) for n in range(1, 15)] == [9, 15, 21, 29, 39, 47, 57, 65, 71, 93, 99, 115, 129, 137]
    assert ex.goldbach_table(14).cells[(3, 47)] == 50


def test_goldbach_t_is_longest_run_of_pair_sums():
    for n in range(1, 10):
        ps = ex.odd_primes(n)
        sums = {a + b for a in ps for b in ps}
        t = ex.goldbach_t(n)
        assert all(e in sums for e in range(6, t + 1, 2))
        assert t + 2 not in sums


def test_vinogradov_a_prefix_and_parity():
    assert [ex.vinogradov_a(m) for m in range(1, 21, 2)] == [0, 0, 0, 0, 1, 2, 4, 4, 6, 7]
    with pytest.raises(ValueError):
        ex.vinogradov_a(4)


# -- recurrence sets --------------------------------------------------------------------------------


@pytest.mark.parametrize("seeds,power,polarity,limit", [
    ((1, 2), 2, "positive", 20000), ((1, 2), 2, "negative", 300),
    ((1, 2), 3, "positive", 10**6), ((2, 3), 2, "positive", 5000), ((1, 3), 3, "negative", 200),
])
def test_pair_relations_match_rescanning_oracle(seeds, power, polarity, limit):
    spec = ex.RecurrenceSetSpec(seeds, {2: "squares2", 3: "cubes2"}[power], polarity)
    assert ex.recurrence_set(spec, limit) == oracles.recurrence_pairs(list(seeds), power, polarity == "positive", limit)


def subset_power_sums(terms, power):
    """Sums over every non-empty subset of term positions."""
    out = set()
    for r in range(1, len(terms) + 1):
        for c in itertools.combinations(terms, r):
            out.add(sum(x**power for x in c))
    return out


def test_any_size_relation_against_subset_enumeration():
    got = ex.recurrence_set(ex.RecurrenceSetSpec((1,), "squares", "positive"), 46)
    assert got == [1, 1, 2, 4, 5, 6, 16, 17, 18, 20, 21, 22, 25, 26, 27, 29, 30, 31, 36, 37, 38, 40, 41, 42,
                   43, 45, 46]
    # every later term is the least subset sum above its predecessor
    for i in range(6, 12):
        vals = subset_power_sums(got[:i], 2)
        assert got[i] == min(v for v in vals if v > got[i - 1])


def test_printed_recurrence_prefixes():
    def run(seeds, rel, pol, limit):
        return ex.recurrence_set(ex.RecurrenceSetSpec(seeds, rel, pol), limit)
    assert run((1, 2), "squares2", "positive", 458354) == [1, 2, 5, 26, 29, 677, 680, 701, 842, 845, 866,
                                                            1517, 458330, 458333, 458354]
    assert run((1, 2), "squares2", "negative", 21) == [1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18, 19, 21]
    assert run((1, 2), "cubes2", "positive", 389017729) == [1, 2, 9, 730, 737, 389017001, 389017008, 389017729]


def test_custom_relation():
    spec = ex.RecurrenceSetSpec((1, 2), "custom", "positive", arity=2, custom=lambda a, b: a + b)
    assert ex.recurrence_set(spec, 10) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]


def test_recurrence_spec_validation():
    with pytest.raises(ValueError):
        ex.RecurrenceSetSpec(())
    with pytest.raises(ValueError):
        ex.RecurrenceSetSpec((1,), "nope")
    with pytest.raises(ValueError):
        ex.RecurrenceSetSpec((1,), polarity="sideways")


# -- avoiders and builders --------------------------------------------------------------------------


def test_non_ap_matches_oracle_and_ternary_form():
    got = ex.progression_avoider("arithmetic", [1, 2], 60)
    assert got == oracles.avoid_ap(60)
    # greedy 3-AP-free sets from {1, 2} are 1 + (numbers written with digits 0, 1 in base 3)
    assert got == [1 + int(bin(i)[2:], 3) for i in range(60)]
    assert got[16] == 82


def test_non_gp_has_no_geometric_triple():
    got = ex.progression_avoider("geometric", [1, 2], 60)
    s = set(got)
    for a, b in itertools.combinations(sorted(s), 2):
        assert not (b * b % a == 0 and b * b // a in s and b * b // a != b)
    assert 45 not in s and 50 not in s


def test_multiplicative_builders():
    assert ex.multiplicative_builder("multiplicative", [2, 3], 9) == [2, 3, 6, 12, 18, 24, 36, 48, 54]
    assert ex.multiplicative_builder("non_multiplicative", [2, 3], 5) == [2, 3, 4, 5, 7]
    with pytest.raises(ValueError):
        ex.multiplicative_builder("other", [2, 3], 5)


def test_relationship_search_hits_hold():
    for law in ("add", "sub", "mul"):
        for k in ex.relationship_search("S", 2, 2, law, 0, 200):
            a, b, c, d = (S(k + i) for i in range(1, 5))
            assert {"add": a + b == c + d, "sub": a - b == c - d, "mul": a * b == c * d}[law]
    assert ex.relationship_search("S", 2, 2, "add", 0, 100) == [5, 6, 27]


def test_partial_perfect_additive_recurrence():
    a = ex.partial_perfect_additive(200)
    assert a[:26] == [1, 1, 0, 2, -1, 1, 1, 3, -2, 0, 0, 2, 0, 2, 2, 4, -3, -1, -1, 1, -1, 1, 1, 3, -1, 1]
    seq = [None] + a  # 1-based
    for p in range(1, 99):
        assert seq[2 * p + 1] == seq[p + 1] - 1
        assert seq[2 * p + 2] == seq[p + 1] + 1


# -- loops ------------------------------------------------------------------------------------------


def test_reverse_subtract_cycles():
    assert sorted(ex.periodic_loop("reverse_subtract", 52, 2).cycle) == [9, 27, 45, 63, 81]
    assert sorted(ex.periodic_loop("reverse_subtract", 100, 3).cycle) == [99, 297, 495, 693, 891]
    assert sorted(ex.periodic_loop("reverse_subtract", 1012, 4).cycle) == [2178, 6534]
    r = ex.periodic_loop("reverse_subtract", 1019, 4)
    assert (r.tail, r.period, r.closed_after) == (12, 5, 17)


def test_1019_has_longest_four_digit_tail():
    tails = {n: ex.periodic_loop("reverse_subtract", n, 4).tail for n in range(1000, 10000)}
    assert max(tails.values()) == tails[1019] == 12


def test_subtraction_and_multiplication_loops():
    assert ex.periodic_loop("subtraction", 52, 1).period == 18
    r = ex.periodic_loop("subtraction", 109, 7)
    assert (r.tail, r.period, r.closed_after) == (86, 200, 286)
    assert ex.periodic_loop("multiplication", 68, 7).cycle == [68, 26, 42, 84]
    assert ex.periodic_loop("mixed", 75).period == 18


@settings(max_examples=60)
@given(st.sampled_from(["reverse_subtract", "subtraction", "multiplication"]), st.integers(1, 9),
       st.integers(0, 999))
def test_loops_agree_with_orbit_oracle(kind, c, start):
    param = 3 if kind == "reverse_subtract" else c
    r = ex.periodic_loop(kind, start, param)
    w = 3 if kind == "reverse_subtract" else len(str(start))
    rev = lambda x: int(str(x).zfill(w)[::-1])  # noqa: E731
    f = {
        "reverse_subtract": lambda x: abs(x - rev(x)),
        "subtraction": lambda x: abs(rev(x) - c),
        "multiplication": lambda x: int("".join(str(c * int(d) % 10) for d in str(x).zfill(w))),
    }[kind]
    assert (r.tail, r.period) == oracles.orbit(f, start)
    # the cycle is closed under f
    assert all(f(x) == r.cycle[(i + 1) % r.period] for i, x in enumerate(r.cycle))


def test_generic_loop():
    r = ex.periodic_loop("generic", 1, fn=lambda x: (x * 3) % 11)
    assert r.period == 5 and r.tail == 0
    with pytest.raises(ValueError):
        ex.periodic_loop("generic", 1)


# -- carpet ------------------------------------------------------------------------------------------


def test_carpet_closed_form_equals_recursion():
    for n in range(1, 9):
        for k in range(n + 1):
            assert ex.carpet_C(n, k) == ex.carpet_recursive(n, k)
    assert ex.carpet_C(3, 2) == 108 and ex.carpet_C(8, 2) == 928 and ex.carpet_C(3, 3) == 540


@given(st.integers(1, 30), st.integers(1, 30))
def test_carpet_product_formula(n, k):
    if k > n:
        return
    assert ex.carpet_C(n, k) == 4 * n * math.prod(4 * n - 4 * i + 1 for i in range(1, k))


def test_carpet_rhombus_is_symmetric():
    rows = ex.carpet(3)
    assert rows[len(rows) // 2] == [1, 12, 108, 540, 108, 12, 1]
    assert rows == rows[::-1]
    assert all(r == r[::-1] for r in rows)


# -- magic ------------------------------------------------------------------------------------------


def test_magic_triangle_exhaustive():
    lo, hi, count = ex.magic_index(3)
    assert (lo, hi) == (9, 12)
    assert count == 4  # sums 9, 10, 11 and 12 all occur, one class each up to symmetry
    with pytest.raises(ValueError):
        ex.magic_index(4)


def test_durer_square():
    assert ex.magic_square_check(ex.DURER)
    assert not ex.magic_square_check(((1, 2), (3, 4)))


# -- searches ---------------------------------------------------------------------------------------


def test_bad_number_witnesses():
    found, missing = ex.bad_number_scan(20, 10**4, 10**4)
    for a, (x, y) in found.items():
        assert abs(x**3 - y**2) == a
    assert found[12] == (13, 47) and found[8] == (1, 3)
    assert found[7] == (2, 1) and found[13] == (17, 70)
    assert missing == [5, 6, 10, 14, 16]


def test_prime_conjecture_representations():
    count, reps = ex.prime_conjecture_count(5, 200)
    assert count == len(reps) > 0
    for p, q, r in reps:
        assert p + q - r == 5
        assert all(oracles.is_prime(v) for v in (p, q, r))
        assert p <= q and r not in (p, q)


def test_partition_counts_against_recursion():
    assert ex.partition_count(9, 2) == 4 and ex.partition_count(9, 3) == 2
    for m in (2, 3):
        for n in range(1, 120):
            assert ex.partition_count(n, m) == oracles.partitions_into_powers(n, m)


def test_triplets_and_duplets_against_brute_force():
    assert ex.triplet_search(10**5) == [11, 121, 4902, 26245, 32112, 64010]
    brute = [n for n in range(4, 3000) if oracles.kempner(n) == oracles.kempner(n - 1) + oracles.kempner(n - 2)]
    assert ex.triplet_search(2999) == brute
    assert ex.duplet_search(10**4)[:2] == [224, 2057]
    for n in ex.duplet_search(3000):
        a, b = sorted((S(n), S(n + 1)))
        assert not any(oracles.is_prime(v) for v in range(a, b + 1))


def test_expression_primes():
    assert ex.expression_prime_search("xy", 10) == [((2, 3), 17), ((2, 9), 593)]
    for (x, y), v in ex.expression_prime_search("xy", 16):
        assert v == x**y + y**x and oracles.is_prime(v)


def test_simultaneous_primality():
    assert ex.simultaneous_prime_check([ex.PrimeInstance((5,))]) == (True, True)
    assert ex.simultaneous_prime_check([ex.PrimeInstance((3, 5))]) == (True, True)
    assert ex.simultaneous_prime_check([ex.PrimeInstance((8,))]) == (False, False)
    with pytest.raises(ValueError):
        ex.simultaneous_prime_check([ex.PrimeInstance((4, 6))])


@given(st.integers(2, 60), st.integers(2, 60))
def test_wilson_witness_tracks_primality(p, q):
    if math.gcd(p, q) != 1:
        return
    ok, direct = ex.simultaneous_prime_check([ex.PrimeInstance((p, q))])
    assert ok == direct


def test_partial_products():
    prod, last = ex.infinite_product_partial("divisor_product", 3)
    assert prod == Fraction(1, 6) and last == Fraction(1, 3)
    assert ex.infinite_product_partial("power2", 10)[0] == Fraction(1, 2**55)


def test_add_on_ranks():
    from seqlab.seq_digits import BaseSeqSpec
    rep = ex.gadd_on(BaseSeqSpec("odds"), 3, 100)
    assert rep.value == 135
    assert rep.prime_ranks[:5] == [2, 10, 16, 34, 49]


def test_product_sequences():
    assert ex.product_sequence("prime", 4) == (211, True)
    assert ex.product_sequence("factorial", 4) == (289, False)
