"""Reference-value checks behind `seqlab verify`.

S values are read through the memo cache when a covering cache file exists,
so cached and uncached runs must agree.

Each check pairs a printed reference value with the value computed here.
A mismatch whose computed value equals the entry in the known-misprint
table (data/known_misprints.json) is classified as a known misprint; any
other mismatch is new and fails the run.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Optional

from . import arith_functions as af
from . import explorer as ex
from . import memo
from . import numeric_core as nc
from . import radix_systems as rs
from . import seq_digits as sd
from . import sieves as sv

MODULES = ("numeric-core", "seq-digits", "sieves", "arith-functions", "radix-systems", "explorer")


@dataclass(frozen=True)
class Check:
    id: str
    module: str
    locus: str
    expected: object
    compute: Callable[[], object]


def load_known_misprints() -> dict[str, dict]:
    text = resources.files("seqlab").joinpath("data/known_misprints.json").read_text()
    return {row["check"]: row for row in json.loads(text)}


def _norm(v):
    """JSON-shaped form so tuples and lists compare and serialise alike."""
    return json.loads(json.dumps(v))


# -- reference values ---------------------------------------------------------------------------

S_65 = [1, 2, 3, 4, 5, 3, 7, 4, 6, 5, 11, 4, 13, 7, 5, 6, 17, 6, 19, 5, 7, 11, 23, 4, 10, 13, 9, 7, 29,
        5, 31, 8, 11, 17, 7, 6, 37, 19, 13, 5, 41, 7, 43, 11, 5, 23, 47, 6, 14, 10, 17, 13, 53, 9, 11,
        7, 19, 29, 59, 5, 61, 31, 7, 8, 13]
Z_TABLE = {1: 1, 2: 3, 3: 2, 4: 3, 5: 4, 6: 3, 7: 6}
SK_TABLE = {2: 2, 3: 4, 7: 6, 11: 6, 17: 5, 19: 7, 23: 7, 31: 12, 37: 22, 41: 16, 61: 55, 71: 54,
            73: 42, 89: 24}
SW_TABLE = {3: 2, 11: 4, 17: 5, 23: 12, 29: 19, 37: 24, 41: 32, 43: 19, 53: 20, 67: 20, 73: 7,
            79: 57, 97: 6}
SNTP_TABLE = {1: 2, 2: 2, 3: 2, 4: 5, 5: 3, 6: 3, 7: 3, 8: 5, 9: "?", 10: 5, 11: 11, 59: 13}
ERDOS_35 = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 20, 21, 22, 23, 26, 28, 29, 30, 31, 33, 34, 35]

PRIME_BASE = "0,1,10,100,101,1000,1001,10000,10001,10010,10100,100000,100001,1000000,1000001,1000010,1000100,10000000,10000001,100000000,100000001,100000010,100000100,1000000000,1000000001,1000000010,1000000100,1000000101"
SQUARE_BASE = "0,1,2,3,10,11,12,13,20,100,101,102,103,110,111,112,1000,1001,1002,1003,1010,1011,1012,1013,1020,10000,10001,10002,10003,10010,10011,10012,10013,10020,10100,10101,100000,100001,100002,100003,100010,100011,100012,100013,100020,100100,100101,100102,100103,100110,100111,100112,101000,101001,101002,101003,101010,101011,101012,101013,101020,101100,101101,101102"
FACTORIAL_BASE = "0,1,10,11,20,21,100,101,110,111,120,121,200,201,210,211,220,221,300,301,310,311,320,321,1000,1001,1010,1011,1020,1021,1100,1101,1110,1111,1120,1121,1200"
TRIANGULAR_BASE = "1,2,10,11,12,100,101,102,110,1000,1001,1002,1010,1011,10000,10001,10002,10010,10011,10012,100000,100001,100002,100010,100011,100012,100100,1000000,1000001,1000002,1000010,1000011,1000012,1000100"
DOUBLE_FACTORIAL_BASE = "1,10,100,101,110,200,201,1000,1001,1010,1100,1101,1110,1200,10000,10001,10010,10100,10101,10110,10200,10201,11000,11001,11010,11100,11101,11110,11200,11201,12000"

ROMANIAN_ROWS = {
    3: [[73, 97, 1, 73], [219, 32, 2, 438], [657, 10, 1, 657], [1971, 3, 0, 0], [5913, 1, 1, 5913]],
    4: [[73, 97, 1, 73], [292, 24, 0, 0], [1168, 6, 2, 2336], [4672, 1, 1, 4672]],
    5: [[73, 97, 2, 146], [365, 19, 4, 1460], [1825, 3, 3, 5475]],
    10: [[73, 97, 7, 511], [730, 9, 9, 6570]],
}
DIVISION_ROWS = {
    (1357, 2, 7): ([[1, 1, 1, 1357, 128], [0, 2, 0, 678, 64], [4, 4, 1, 339, 32], [8, 8, 1, 169, 16],
                    [0, 16, 0, 84, 8], [0, 32, 0, 42, 4], [64, 64, 1, 21, 2]], 10, 77),
    (19495, 3, 8): ([[1, 1, 1, 19495, 6561], [0, 3, 0, 6498, 2187], [0, 9, 0, 2166, 729],
                     [54, 27, 2, 722, 243], [0, 81, 0, 240, 81], [486, 243, 2, 80, 27],
                     [1458, 729, 2, 26, 9], [4374, 2187, 2, 8, 3]], 2, 6373),
}

SIEVE_PREFIXES = {
    "cube_free": [2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 25, 26, 28, 29,
                  30, 31, 33, 34, 35, 36, 37, 38, 39, 41, 42, 43, 44, 45, 46, 47, 49, 50, 51, 52, 53, 55,
                  57, 58, 59, 60, 61, 62, 63, 65, 66, 67, 68, 69, 70, 71, 73],
    "irrational_root": [2, 3, 5, 6, 7, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28, 29,
                        30, 31, 33, 34, 35, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 50, 51, 52, 53,
                        54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 65, 66, 67, 68, 69, 70, 71, 72, 73],
    "odd_sieve": [7, 13, 19, 23, 25, 31, 33, 37, 43, 47, 49, 53, 55, 61, 63, 67, 73, 75, 79, 83, 85, 91,
                  93, 97],
    "binary": [1, 3, 5, 9, 11, 13, 17, 21, 25, 27, 29, 33, 35, 37, 43, 49, 51, 53, 57, 59, 65, 67, 69, 73,
               75, 77, 81, 85, 89, 91, 97, 101, 107, 109, 113, 115, 117, 121, 123, 129, 131, 133, 137,
               139, 145, 149],
    "trinary": [1, 2, 4, 5, 7, 8, 10, 11, 14, 16, 17, 19, 20, 22, 23, 25, 28, 29, 31, 32, 34, 35, 37, 38,
                41, 43, 46, 47, 49, 50, 52, 55, 56, 58, 59, 61, 62, 64, 65, 68, 70, 71, 73, 74, 76, 77,
                79, 82, 83, 85, 86, 88, 91, 92, 95, 97, 98, 100, 101, 103, 104, 106, 109, 110, 112, 113,
                115, 116, 118, 119, 122, 124, 125, 127, 128, 130, 131, 133, 137, 139, 142, 143, 145,
                146, 149],
    "k_ary_consecutive": [1, 2, 4, 7, 9, 14, 20, 25, 31, 34, 44],
    "consecutive": [1, 3, 5, 9, 11, 17, 21, 29, 33, 41, 47, 57, 59, 77, 81, 101, 107, 117, 131, 149, 153,
                    173, 191, 209, 213, 239, 257, 273, 281, 321, 329, 359, 371, 401, 417, 441, 435, 491],
}

T_LIST = [6, 10, 14, 18, 26, 30, 38, 42, 42, 54, 62, 74, 74, 90]
V_LIST = [9, 15, 21, 29, 39, 47, 57, 65, 71, 93, 99, 115, 129, 137]
A_PREFIX = [0, 0, 0, 0, 1, 2, 4, 4, 6, 7]
CARPET_ROWS = [[1, 4], [1, 8, 40], [1, 12, 108, 504], [1, 16, 208, 1872, 9360],
               [1, 20, 340, 4420, 39780, 198900], [1, 24, 504, 8568, 111384, 1002456, 5012280],
               [1, 28, 700, 14700, 249900, 3248700, 29238300, 146191500],
               [1, 32, 928, 23200, 487200, 8282400, 107671200, 969040800, 4845204000]]
SS2 = [1, 2, 5, 26, 29, 677, 680, 701, 842, 845, 866, 1517, 458330, 458333, 458354]
SS1 = [1, 1, 2, 4, 5, 6, 16, 17, 18, 20, 21, 22, 25, 26, 27, 29, 30, 31, 36, 37, 38, 40, 41, 42, 43, 45, 46]
NSS2 = [1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18, 19, 21]
CS2 = [1, 2, 9, 730, 737, 389017001, 389017008, 389017729]
NON_AP = [1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40, 41, 64]
NON_GP = [1, 2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17, 19, 21, 22, 23, 24, 26, 27, 29, 30, 31, 33, 34,
          35, 37, 38, 39, 40, 41, 42, 43, 45, 46, 47, 48, 50, 51, 53]
TRIPLETS = [11, 121, 4902, 26245, 32112, 64010]
DUPLETS = [224, 2057]
SIMPLE_NUMBERS = [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 25, 26, 27, 29, 31, 33, 34,
                  35, 37, 38, 39, 41, 43, 45, 46, 47, 49, 51, 53, 55, 57, 58, 61, 62, 65, 67, 69, 71, 73, 74,
                  77, 78, 79, 82, 83, 85, 86, 87, 89, 91, 93, 94, 95, 97, 101, 103]
PROPER_DIVISOR_PRODUCTS = [
    1, 1, 1, 2, 1, 6, 1, 8, 3, 10, 1, 14, 1, 14, 15, 64, 1, 324, 1, 400, 21, 22, 1, 13824, 5, 26,
    27, 784, 1, 27000, 1, 1024, 33, 34, 35, 279936, 1, 38, 39, 64000, 1
]
SQUARE_CEIL = [
    1, 2, 3, 2, 5, 6, 7, 4, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 12, 5, 26, 9,
    14, 29, 30, 31, 8, 33
]
CUBE_CEIL = [
    1, 2, 3, 2, 5, 6, 7, 8, 3, 10, 11, 6, 13, 14, 15, 4, 17, 6, 19, 10, 21, 22, 23, 6, 5, 26, 3, 14,
    29, 30, 31, 4, 33
]
# order-k ceil listings (k = 2..6), printed without their index column
CEIL_LISTS = {
    2: [
        2, 4, 3, 6, 4, 6, 10, 12, 5, 9, 14, 8, 6, 20, 22, 15, 12, 7, 10, 26, 18, 28, 30, 21, 8, 34,
        12, 15, 38, 20, 9, 42, 44, 30, 46, 24, 14, 33, 10, 52, 18, 28, 58, 39, 60, 11, 62, 25, 42,
        16, 66, 45, 68, 70, 12, 21, 74, 30, 76, 51, 78, 40, 18, 82, 84, 13, 57, 86
    ],
    3: [
        2, 2, 3, 6, 4, 6, 10, 6, 5, 3, 14, 4, 6, 10, 22, 15, 12, 7, 10, 26, 6, 14, 30, 21, 4, 34, 6,
        15, 38, 20, 9, 42, 22, 30, 46, 12, 14, 33, 10, 26, 6, 28, 58, 39, 30, 11, 62, 5, 42, 8, 66,
        15, 34, 70, 12, 21, 74, 30, 38, 51, 78, 20, 18, 82, 42, 13, 57, 86
    ],
    4: [
        2, 2, 3, 6, 2, 6, 10, 6, 5, 3, 14, 4, 6, 10, 22, 15, 6, 7, 10, 26, 6, 14, 30, 21, 4, 34, 6,
        15, 38, 10, 3, 42, 22, 30, 46, 12, 14, 33, 10, 26, 6, 14, 58, 39, 30, 11, 62, 5, 42, 4, 66,
        15, 34, 70, 6, 21, 74, 30, 38, 51, 78, 20, 6, 82, 42, 13, 57, 86
    ],
    5: [
        2, 2, 3, 6, 2, 6, 10, 6, 5, 3, 14, 2, 6, 10, 22, 15, 6, 7, 10, 26, 6, 14, 30, 21, 4, 34, 6,
        15, 38, 10, 3, 42, 22, 30, 46, 6, 14, 33, 10, 26, 6, 14, 58, 39, 30, 11, 62, 5, 42, 4, 66,
        15, 34, 70, 6, 21, 74, 30, 38, 51, 78, 10, 6, 82, 42, 13, 57, 86
    ],
    6: [
        2, 2, 3, 6, 2, 6, 10, 6, 5, 3, 14, 2, 6, 10, 22, 15, 6, 7, 10, 26, 6, 14, 30, 21, 2, 34, 6,
        15, 38, 10, 3, 42, 22, 30, 46, 6, 14, 33, 10, 26, 6, 14, 58, 39, 30, 11, 62, 5, 42, 4, 66,
        15, 34, 70, 6, 21, 74, 30, 38, 51, 78, 10, 6, 82, 42, 13, 57, 86
    ],
}
DECONSTRUCTIVE = ["1", "23", "456", "789 1", "23456", "789 123", "456789 1", "23456789", "123456789",
                  "123456789 1"]


def _sieve_prefix(name: str, printed: list[int]) -> Callable[[], list[int]]:
    def run():
        limit = max(printed) + 400
        got = sv.run_sieve(sv.SieveKind(name), limit).survivors
        if name in sv.VALUE:
            # value sieves: everything up to the last printed value
            return [x for x in got if x <= max(printed)]
        return got[: len(printed)]
    return run


def _encodings(base_name: str, lo: int, count: int) -> Callable[[], list[str]]:
    def run():
        b = rs.get_base(base_name)
        return [str(rs.encode(n, b)) for n in range(lo, lo + count)]
    return run


def _non_square_free(count: int) -> list[int]:
    out, n = [], 3
    while len(out) < count:
        n += 1
        if any(e > 1 for _, e in nc.factorize(n)):
            out.append(n)
    return out


def _recurrence(seeds, relation, polarity, limit):
    return lambda: ex.recurrence_set(ex.RecurrenceSetSpec(seeds, relation, polarity), limit)


def _loop(kind, start, param=None):
    return ex.periodic_loop(kind, start, param)


def all_checks() -> list[Check]:
    c: list[Check] = []
    add = c.append

    # numeric-core
    add(Check("numeric-core.gsp.1235656312", "numeric-core", "palindrome example a", True,
              lambda: nc.gsp_check(1235656312)))
    add(Check("numeric-core.gsp.23523", "numeric-core", "palindrome example b", True,
              lambda: nc.gsp_check(23523)))

    add(Check("numeric-core.simple_numbers", "numeric-core", "simple numbers up to 103", SIMPLE_NUMBERS,
              lambda: [n for n in range(2, 104) if nc.classify_by_proper_divisor_product(n)[0]]))
    add(Check("numeric-core.proper_divisor_products", "numeric-core", "proper divisor products n=1..41",
              PROPER_DIVISOR_PRODUCTS,
              lambda: [nc.proper_divisor_product(n) for n in range(1, len(PROPER_DIVISOR_PRODUCTS) + 1)]))

    # arith-functions
    add(Check("arith-functions.S.first65", "arith-functions", "S list", S_65,
              lambda: [int(v) for v in memo.lookup("S", 1, 65)]))
    for n, v in Z_TABLE.items():
        add(Check(f"arith-functions.Z.{n}", "arith-functions", f"Z table n={n}", v, lambda n=n: af.Z(n)))
    for p, v in SK_TABLE.items():
        add(Check(f"arith-functions.SK.{p:02d}", "arith-functions", f"SK table p={p}", v,
                  lambda p=p: af.SK(p)))
    for p, v in SW_TABLE.items():
        add(Check(f"arith-functions.SW.{p:02d}", "arith-functions", f"SW table p={p}", v,
                  lambda p=p: af.SW(p)))
    for n, v in SNTP_TABLE.items():
        add(Check(f"arith-functions.SNTP.{n:02d}", "arith-functions", f"SNTP table n={n}", v,
                  lambda n=n: af.SNTP(n) or "?"))
    add(Check("arith-functions.ceil.square", "arith-functions", "square ceil listing n=1..33", SQUARE_CEIL,
              lambda: [af.ceil_k(n, 2) for n in range(1, 34)]))
    add(Check("arith-functions.ceil.cube", "arith-functions", "cube ceil listing n=1..33", CUBE_CEIL,
              lambda: [af.ceil_k(n, 3) for n in range(1, 34)]))
    for k, printed in CEIL_LISTS.items():
        add(Check(f"arith-functions.ceil.order{k}", "arith-functions", f"order-{k} ceil listing, n=1..",
                  printed, lambda k=k, m=len(printed): [af.ceil_k(n, k) for n in range(1, m + 1)]))
        add(Check(f"arith-functions.ceil.order{k}.nonsquarefree", "arith-functions",
                  f"order-{k} ceil listing over non-square-free n", printed,
                  lambda k=k, m=len(printed): [af.ceil_k(n, k) for n in _non_square_free(m)]))
    add(Check("arith-functions.erdos.35", "arith-functions", "P(n) = S(n) list", ERDOS_35,
              lambda: [n for n in range(2, 36) if af.lpf_equals_kempner(n)]))

    # radix-systems
    for name, text, lo in (("prime", PRIME_BASE, 0), ("square", SQUARE_BASE, 0),
                           ("factorial", FACTORIAL_BASE, 0), ("triangular", TRIANGULAR_BASE, 1),
                           ("double_factorial", DOUBLE_FACTORIAL_BASE, 1)):
        printed = text.split(",")
        add(Check(f"radix-systems.base.{name}", "radix-systems", f"{name} base listing", printed,
                  _encodings(name, lo, len(printed))))
    fb = rs.factorial_base()
    add(Check("radix-systems.factorial.add", "radix-systems", "210 + 221", "1101",
              lambda: str(rs.factorial_add(rs.parse_numeral("210", fb), rs.parse_numeral("221", fb)))))
    add(Check("radix-systems.factorial.sub", "radix-systems", "1001 - 320", "11",
              lambda: str(rs.factorial_sub(rs.parse_numeral("1001", fb), rs.parse_numeral("320", fb)))))
    for k, rows in ROMANIAN_ROWS.items():
        def rom(k=k):
            prod, table = rs.romanian_multiply(73, 97, k)
            return {"product": prod, "rows": [list(r) for r in table.rows]}
        add(Check(f"radix-systems.romanian.k{k:02d}", "radix-systems", f"73 x 97 with k={k}",
                  {"product": 7081, "rows": rows}, rom))
    for (a, k, n), (rows, q, r) in DIVISION_ROWS.items():
        def div(a=a, k=k, n=n):
            q_, r_, table = rs.divide_by_power(a, k, n)
            return {"quotient": q_, "rest": r_, "rows": [list(x) for x in table.rows]}
        add(Check(f"radix-systems.divpow.{a}", "radix-systems", f"{a} / {k}^{n}",
                  {"quotient": q, "rest": r, "rows": rows}, div))
    for cid, locus, exp, fn in (
        ("stepped.product.7_3", "!7!_3", 280, lambda: rs.stepped_product(7, 3)),
        ("stepped.product.7_2_9", "generalized value", -99225, lambda: rs.stepped_product(7, 2, 9)),
        ("stepped.sum.7_3", "S(7,3)", 5, lambda: rs.stepped_sum(7, 3)),
        ("stepped.abs.7_3", "S|7,3|", 19, lambda: rs.stepped_sum(7, 3, True)),
        ("stepped.sum.9_4", "S(9,4)", 5, lambda: rs.stepped_sum(9, 4)),
        ("stepped.abs.9_4", "S|9,4|", 25, lambda: rs.stepped_sum(9, 4, True)),
        ("stepped.sum.11_5", "S(11,5)", 5, lambda: rs.stepped_sum(11, 5)),
        ("stepped.abs.11_5", "S|11,5|", 31, lambda: rs.stepped_sum(11, 5, True)),
        ("stepped.ext.7_9_2", "S(7,9,2)", -2, lambda: rs.stepped_sum_extended(7, 9, 2)),
        ("stepped.extabs.7_3_2", "S|7,3,2|", 20, lambda: rs.stepped_sum_extended(7, 3, 2, True)),
    ):
        add(Check(f"radix-systems.{cid}", "radix-systems", locus, exp, fn))

    # sieves
    for name, printed in SIEVE_PREFIXES.items():
        add(Check(f"sieves.{name}", "sieves", f"{name} listing", printed, _sieve_prefix(name, printed)))

    # seq-digits
    add(Check("seq-digits.symmetric.4", "seq-digits", "symmetric listing", [1, 11, 121, 1221],
              lambda: sd.family_terms("symmetric", 4)))
    add(Check("seq-digits.deconstructive.10", "seq-digits", "deconstructive listing as typeset", DECONSTRUCTIVE,
              lambda: [str(t) for t in sd.family_terms("deconstructive", 10)]))
    add(Check("seq-digits.pierced_chain.1", "seq-digits", "pierced chain listing", [101],
              lambda: sd.family_terms("pierced_chain", 1)))
    add(Check("seq-digits.prime_digital.100", "seq-digits", "100th prime-digital term", 33223,
              lambda: sd.prime_digital_terms(100)[-1]))

    # explorer
    add(Check("explorer.goldbach.t", "explorer", "t(1..14)", T_LIST,
              lambda: [ex.goldbach_t(n) for n in range(1, 15)]))
    add(Check("explorer.goldbach.cell_3_47", "explorer", "pair table row 3, column 47", 50,
              lambda: ex.goldbach_table(14).cells[(3, 47)]))
    add(Check("explorer.vinogradov.v", "explorer", "v(1..14)", V_LIST,
              lambda: [ex.vinogradov_v(n) for n in range(1, 15)]))
    add(Check("explorer.vinogradov.a_prefix", "explorer", "a(1), a(3), ..., a(19)", A_PREFIX,
              lambda: [ex.vinogradov_a(m) for m in range(1, 21, 2)]))
    add(Check("explorer.carpet.C_3_2", "explorer", "C(3,2)", 108, lambda: ex.carpet_C(3, 2)))
    add(Check("explorer.carpet.C_8_2", "explorer", "C(8,2)", 928, lambda: ex.carpet_C(8, 2)))
    add(Check("explorer.carpet.rows", "explorer", "carpet table rows n=1..8", CARPET_ROWS,
              lambda: [[ex.carpet_C(n, k) for k in range(n + 1)] for n in range(1, 9)]))
    add(Check("explorer.loop.two_digit", "explorer", "2-digit reverse-subtract cycle", [9, 27, 45, 63, 81],
              lambda: sorted(_loop("reverse_subtract", 52, 2).cycle)))
    add(Check("explorer.loop.three_digit", "explorer", "3-digit reverse-subtract cycle",
              [99, 297, 495, 693, 891], lambda: sorted(_loop("reverse_subtract", 100, 3).cycle)))
    add(Check("explorer.loop.four_digit_pair", "explorer", "4-digit loop 2178, 6534", [2178, 6534],
              lambda: sorted(_loop("reverse_subtract", 1012, 4).cycle)))
    add(Check("explorer.loop.tail_1019", "explorer", "longest 4-digit run before the loop", 18,
              lambda: _loop("reverse_subtract", 1019, 4).tail))
    add(Check("explorer.loop.sub_c1_52", "explorer", "subtraction c=1 from 52 period", 18,
              lambda: _loop("subtraction", 52, 1).period))
    add(Check("explorer.loop.sub_c7_109", "explorer", "subtraction c=7 from 109 (period, closed after)",
              [200, 286], lambda: [_loop("subtraction", 109, 7).period, _loop("subtraction", 109, 7).closed_after]))
    add(Check("explorer.loop.mul_c7_68", "explorer", "multiplication c=7 from 68", [68, 26, 42, 84],
              lambda: _loop("multiplication", 68, 7).cycle))
    add(Check("explorer.triplets", "explorer", "triplet listing prefix", TRIPLETS,
              lambda: ex.triplet_search(10**5)[: len(TRIPLETS)]))
    add(Check("explorer.duplets", "explorer", "duplet listing prefix", DUPLETS,
              lambda: ex.duplet_search(10**4)[: len(DUPLETS)]))
    add(Check("explorer.recurrence.SS2", "explorer", "SS2 listing", SS2,
              _recurrence((1, 2), "squares2", "positive", 458354)))
    add(Check("explorer.recurrence.SS1", "explorer", "SS1 listing", SS1,
              _recurrence((1,), "squares", "positive", 46)))
    add(Check("explorer.recurrence.NSS2", "explorer", "NSS2 listing", NSS2,
              _recurrence((1, 2), "squares2", "negative", 21)))
    add(Check("explorer.recurrence.CS2", "explorer", "CS2 listing", CS2,
              _recurrence((1, 2), "cubes2", "positive", 389017729)))
    add(Check("explorer.partition.ns9", "explorer", "ns(9)", 4, lambda: ex.partition_count(9, 2)))
    add(Check("explorer.partition.nc9", "explorer", "nc(9)", 2, lambda: ex.partition_count(9, 3)))
    add(Check("explorer.non_ap", "explorer", "non-arithmetic progression listing", NON_AP,
              lambda: ex.progression_avoider("arithmetic", [1, 2], len(NON_AP))))
    add(Check("explorer.non_gp", "explorer", "non-geometric progression listing", NON_GP,
              lambda: ex.progression_avoider("geometric", [1, 2], len(NON_GP))))
    add(Check("explorer.magic.triangle", "explorer", "triangular index", [9, 12, 2],
              lambda: list(ex.magic_index(3))))
    add(Check("explorer.magic.durer", "explorer", "Durer square", True,
              lambda: ex.magic_square_check(ex.DURER)))
    add(Check("explorer.addon.odd_prime_ranks", "explorer", "odd add-on prime ranks among 100 terms",
              [2, 15, 27, 63, 93], lambda: ex.gadd_on(sd.BaseSeqSpec("odds"), 1, 100).prime_ranks))
    return c


def classify(check: Check, computed, known: dict[str, dict]) -> str:
    if computed == _norm(check.expected):
        return "match"
    entry = known.get(check.id)
    if entry is not None and _norm(entry["derived"]) == computed:
        return "mismatch-known-misprint"
    return "mismatch-new"


def run_checks(scope: Optional[str] = None) -> list[dict]:
    """Run every check in scope (a module id, or all); records come back sorted by check id."""
    known = load_known_misprints()
    records = []
    for chk in all_checks():
        if scope is not None and chk.module != scope:
            continue
        computed = _norm(chk.compute())
        rec = {"check": chk.id, "module": chk.module, "locus": chk.locus,
               "expected": _norm(chk.expected), "computed": computed,
               "status": classify(chk, computed, known)}
        if rec["status"] == "mismatch-known-misprint":
            rec["note"] = known[chk.id]["note"]
        records.append(rec)
    return sorted(records, key=lambda r: r["check"])
