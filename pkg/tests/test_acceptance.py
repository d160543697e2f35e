"""Acceptance suite: one PASS/FAIL line per numbered criterion.

Under pytest the lines are collected and echoed in the terminal summary; running
the file directly prints them as they finish:

    python tests/test_acceptance.py

Printed-value comparisons reuse the verification records so that a value flagged
as a known misprint is treated identically here and in ``seqlab verify``.
Criterion 16 is a report and never fails.
"""
from __future__ import annotations

import math
import random
import sys
import time
from functools import lru_cache

import pytest

from seqlab import arith_functions as af
from seqlab import explorer as ex
from seqlab import numeric_core as nc
from seqlab import radix_systems as rs
from seqlab import seq_digits as sd
from seqlab import sieves as sv
from seqlab import verification as vf

RESULTS: dict[int, str] = {}


@lru_cache(maxsize=None)
def _records() -> dict[str, dict]:
    return {r["check"]: r for r in vf.run_checks()}


def _rec(check: str) -> dict:
    return _records()[check]


def _diff(expected, computed) -> str:
    if isinstance(expected, list) and isinstance(computed, list):
        pos = [i for i, (a, b) in enumerate(zip(expected, computed)) if a != b]
        if pos:
            shown = ", ".join(f"#{i + 1} printed {expected[i]} computed {computed[i]}" for i in pos[:4])
            more = f" (+{len(pos) - 4} more)" if len(pos) > 4 else ""
            return shown + more
        return f"lengths {len(expected)} vs {len(computed)}"
    return f"printed {expected}, computed {computed}"


def _all_match(checks: list[str]) -> tuple[bool, list[str]]:
    off = [c for c in checks if _rec(c)["status"] != "match"]
    notes = [f"{c.split('.', 1)[1]}: {_diff(_rec(c)['expected'], _rec(c)['computed'])}" for c in off]
    return not off, notes


def c01():
    t0 = time.perf_counter()
    got = [af.S(n) for n in range(1, 66)]
    dt = time.perf_counter() - t0
    ok = got == vf.S_65 and dt < 1
    return ok, f"runtime {dt:.3f}s; " + ("all 65 equal" if got == vf.S_65 else _diff(vf.S_65, got))


def c02():
    ok, notes = _all_match([f"arith-functions.Z.{n}" for n in (1, 2, 3, 5, 6, 7)])
    oracle = next(m for m in range(1, 100) if m * (m + 1) // 2 % 4 == 0)
    z4 = _rec("arith-functions.Z.4")
    flagged = z4["status"] == "mismatch-known-misprint"
    ok = ok and z4["computed"] == oracle == 7 and flagged
    return ok, f"six table values equal: {not notes}; Z(4) = {z4['computed']}, oracle {oracle}, flagged {flagged}"


def c03():
    names = ("prime", "square", "factorial", "triangular")
    ok, notes = _all_match([f"radix-systems.base.{b}" for b in names])
    broken = []
    for b in names:
        base = rs.get_base(b)
        if any(rs.decode(rs.encode(n, base)) != n for n in range(10**5 + 1)):
            broken.append(b)
    notes.append(f"round-trip failures to 1e5: {broken or 'none'}")
    return ok and not broken, "; ".join(notes)


def c04():
    ok, notes = _all_match(["radix-systems.factorial.add", "radix-systems.factorial.sub"])
    fb = rs.factorial_base()
    rng = random.Random(4)
    bad = 0
    for _ in range(10**4):
        a, b = sorted((rng.randrange(10**12), rng.randrange(10**12)))
        x, y = rs.encode(a, fb), rs.encode(b, fb)
        bad += rs.decode(rs.factorial_add(x, y)) != a + b
        bad += rs.decode(rs.factorial_sub(y, x)) != b - a
    notes.append(f"random disagreements {bad}")
    return ok and bad == 0, "; ".join(notes) if len(notes) > 1 else f"printed examples equal; {notes[0]}"


def c05():
    products = {k: rs.romanian_multiply(73, 97, k)[0] for k in (3, 4, 5, 10)}
    ok, notes = _all_match([f"radix-systems.romanian.k{k:02d}" for k in (3, 4, 5, 10)])
    ok = ok and set(products.values()) == {7081}
    return ok, f"products {sorted(set(products.values()))}; " + ("; ".join(notes) or "four worktables equal")


def c06():
    ok, notes = _all_match(["radix-systems.divpow.1357", "radix-systems.divpow.19495"])
    pair = (rs.divide_by_power(1357, 2, 7)[:2], rs.divide_by_power(19495, 3, 8)[:2])
    rng = random.Random(6)
    bad = 0
    for _ in range(10**4):
        a, k, n = rng.randrange(10**15), rng.randrange(2, 17), rng.randrange(1, 20)
        bad += rs.divide_by_power(a, k, n)[:2] != divmod(a, k**n)
    ok = ok and pair == ((10, 77), (2, 6373)) and bad == 0
    return ok, f"{pair[0]}, {pair[1]}; " + ("; ".join(notes) or "tables equal") + f"; random disagreements {bad}"


def c07():
    checks = sorted(c for c in _records() if c.startswith("radix-systems.stepped."))
    ok, notes = _all_match(checks)
    return ok, f"{len(checks)} values; " + ("; ".join(notes) or "all equal")


def c08():
    ok, notes = _all_match([f"sieves.{n}" for n in ("cube_free", "odd_sieve", "binary", "trinary",
                                                     "k_ary_consecutive")])
    r = _rec("sieves.consecutive")
    printed_off = [r["expected"][i] for i, (a, b) in enumerate(zip(r["expected"], r["computed"])) if a != b]
    # only the printed 435 is tolerated
    if printed_off != [435] or r["status"] != "mismatch-known-misprint":
        ok = False
        notes.append(f"consecutive: {_diff(r['expected'], r['computed'])}")
    pred_bad = []
    for name in ("cube_free", "square_free", "irrational_root", "odd_sieve"):
        kind = sv.SieveKind(name)
        want = [n for n in range(1, 10**4 + 1) if sv.survivor_predicate(kind, n)]
        if sv.run_sieve(kind, 10**4).survivors != want:
            pred_bad.append(name)
    notes.append(f"predicate disagreements to 1e4: {pred_bad or 'none'}")
    return ok and not pred_bad, "; ".join(notes)


def c09():
    ok, notes = _all_match(["explorer.goldbach.t", "explorer.vinogradov.v", "explorer.vinogradov.a_prefix"])
    return ok, "; ".join(notes) or "t, v and the a prefix equal"


def c10():
    rec = all(ex.carpet_C(n, k) == ex.carpet_recursive(n, k) for n in range(1, 9) for k in range(n + 1))
    ok, notes = _all_match(["explorer.carpet.C_3_2", "explorer.carpet.C_8_2"])
    r = _rec("explorer.carpet.rows")
    flagged = r["status"] == "mismatch-known-misprint" and "504" in _diff(r["expected"], r["computed"])
    return rec and ok and flagged, (f"closed form = recursion for n <= 8: {rec}; "
                                    + ("; ".join(notes) or "C(3,2), C(8,2) equal") + f"; 504 flagged {flagged}")


def c11():
    t0 = time.perf_counter()
    got = {
        "two_digit": set(ex.periodic_loop("reverse_subtract", 52, 2).cycle) == {9, 81, 63, 27, 45},
        "three_digit": set(ex.periodic_loop("reverse_subtract", 100, 3).cycle) == {99, 891, 693, 297, 495},
        "four_digit_pair": any(set(ex.periodic_loop("reverse_subtract", n, 4).cycle) == {2178, 6534}
                               for n in range(1000, 10000)),
        "sub_c1_52": ex.periodic_loop("subtraction", 52, 1).period == 18,
        "sub_c7_109": (lambda r: (r.period, r.closed_after) == (200, 286))(ex.periodic_loop("subtraction", 109, 7)),
        "mul_c7_68": ex.periodic_loop("multiplication", 68, 7).period == 4,
    }
    r1019 = ex.periodic_loop("reverse_subtract", 1019, 4)
    got["tail_1019"] = r1019.tail == 18
    dt = time.perf_counter() - t0
    failed = [k for k, v in got.items() if not v]
    detail = f"runtime {dt:.1f}s; failed: {failed or 'none'}"
    if "tail_1019" in failed:
        detail += f" (1019: tail {r1019.tail}, period {r1019.period}, repeat after {r1019.closed_after})"
    return not failed and dt < 30, detail


def c12():
    checks = sorted(c for c in _records() if c.startswith("arith-functions.")
                    and c.split(".")[1] in ("SK", "SW", "SNTP") and c != "arith-functions.SNTP.09")
    ok, notes = _all_match(checks)
    nine = af.SNTP(9, 10**4)
    ok = ok and nine is None and len(checks) == 14 + 13 + 11
    return ok, f"{len(checks)} values; SNTP(9) within 1e4: {nine or 'unknown'}; " + ("; ".join(notes) or "all equal")


def c13():
    t0 = time.perf_counter()
    trip = ex.triplet_search(10**5)[:6]
    dup = ex.duplet_search(10**4)[:2]
    erd = [n for n in range(2, 36) if af.lpf_equals_kempner(n)]
    pd = sd.prime_digital_terms(100)[-1]
    dt = time.perf_counter() - t0
    parts = {"triplets": trip == vf.TRIPLETS, "duplets": dup == vf.DUPLETS, "members": erd == vf.ERDOS_35,
             "100th": pd == 33223}
    failed = [k for k, v in parts.items() if not v]
    return not failed and dt < 300, f"runtime {dt:.1f}s; triplets {trip}; duplets {dup}; failed: {failed or 'none'}"


def c14():
    ok, notes = _all_match(["explorer.recurrence.SS2", "explorer.recurrence.SS1", "explorer.recurrence.NSS2",
                            "explorer.recurrence.CS2", "explorer.partition.ns9", "explorer.partition.nc9",
                            "explorer.non_ap", "explorer.non_gp"])
    return ok, "; ".join(notes) or "all prefixes and counts equal"


def c15():
    parts = {
        "coprime": all(af.coprime_criterion(a, b) for a in range(1, 61) for b in range(1, 61)
                       if math.gcd(a, b) == 1),
        "divisibility": all(af.divisibility_check(a, m) for a in range(1, 31) for m in range(1, 31)),
        "euler": all(af.generalized_euler(a, m)[2] for a in range(2, 21) for m in range(2, 51)),
        "S_multiplicative": af.s_multiplicative_check(af.S, 10**4) == [],
        "gsp": nc.gsp_check(1235656312) and nc.gsp_check(23523),
        "durer": ex.magic_square_check(ex.DURER),
    }
    sgi = ex.magic_index(3)
    parts["SGI3"] = sgi == (9, 12, 2)
    failed = [k for k, v in parts.items() if not v]
    return not failed, f"SGI(3) = {sgi}; failed: {failed or 'none'}"


def c16():
    perm = sd.family_terms("permutation", 200)
    evens = sd.concatenated_terms(sd.BaseSeqSpec("evens"), 200)
    ranks = ex.gadd_on(sd.BaseSeqSpec("odds"), 1, rank_scan=60).prime_ranks
    no_rep = [m for m in range(1, 100, 2) if ex.prime_conjecture_count(m, 200)[0] == 0]
    return None, (f"perfect powers among permutation terms: {sd.perfect_power_hits(perm) or 'none'}, "
                  f"among concatenated evens: {sd.perfect_power_hits(evens) or 'none'}; "
                  f"odd add-on prime ranks <= 60: {ranks}, contain 2, 15, 27: {set(ranks) >= {2, 15, 27}}; "
                  f"odd m <= 99 without p+q-r (primes <= 200): {no_rep or 'none'}")


CRITERIA = [c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12, c13, c14, c15, c16]


def line(num: int, ok, detail: str) -> str:
    tag = "REPORT" if ok is None else ("PASS" if ok else "FAIL")
    return f"criterion {num:2d}: {tag}  {detail}"


@pytest.mark.parametrize("num", range(1, 17), ids=[f"criterion_{n:02d}" for n in range(1, 17)])
def test_criterion(num):
    ok, detail = CRITERIA[num - 1]()
    RESULTS[num] = line(num, ok, detail)
    if ok is not None:
        assert ok, detail


if __name__ == "__main__":
    failures = 0
    for num, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += ok is False
        print(line(num, ok, detail), flush=True)
    sys.exit(1 if failures else 0)
