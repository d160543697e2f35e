"""Brute-force reference implementations used only by the tests.

Each one follows the plain definition with no shared code from the package,
so agreement with the library is evidence rather than tautology.
"""
from __future__ import annotations

import math
from itertools import combinations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def kempner(n: int) -> int:
    """Least m with n | m!, by walking factorials."""
    m, f = 1, 1
    while f % n:
        m += 1
        f *= m
    return m


def pseudo_kempner(n: int) -> int:
    """Least m with n | m(m+1)/2."""
    m = 1
    while (m * (m + 1) // 2) % n:
        m += 1
    return m


def ceil_root(n: int, k: int) -> int:
    m = 1
    while m**k % n:
        m += 1
    return m


def proper_divisor_product(n: int) -> int:
    return math.prod(d for d in range(1, n) if n % d == 0)


def cube_free(n: int) -> bool:
    return all(n % (d**3) for d in range(2, round(n ** (1 / 3)) + 2))


def square_free(n: int) -> bool:
    return all(n % (d * d) for d in range(2, math.isqrt(n) + 1))


def perfect_root(n: int) -> bool:
    """True when n is a perfect power (some exact k-th root, k >= 2)."""
    for k in range(2, n.bit_length() + 1):
        r = round(n ** (1 / k))
        if any((r + e) ** k == n for e in (-1, 0, 1) if r + e >= 2):
            return True
    return False


def greedy_digits(a: int, scale: list[int]) -> list[int]:
    """Greedy expansion by repeated subtraction, most significant first."""
    if a == 0:
        return [0]
    top = max(i for i, g in enumerate(scale) if g <= a)
    out = []
    for g in reversed(scale[: top + 1]):
        d = 0
        while a >= g:
            a -= g
            d += 1
        out.append(d)
    return out


def delete_every(seq: list[int], step: int) -> list[int]:
    return [x for i, x in enumerate(seq, 1) if i % step]


def power_sieve(limit: int, n: int) -> list[int]:
    """Delete every n-th, then every n^2-th, ... from the current list."""
    seq = list(range(1, limit + 1))
    step = n
    while step <= len(seq):
        seq = delete_every(seq, step)
        step *= n
    return seq


def consecutive_sieve(limit: int) -> list[int]:
    """Pass k deletes every (k+1)-th number after a frozen prefix of k-1 numbers."""
    seq = list(range(1, limit + 1))
    frozen, step = 0, 2
    while step <= len(seq) - frozen:
        seq = seq[:frozen] + delete_every(seq[frozen:], step)
        frozen += 1
        step += 1
    return seq


def sums_of_pairs(terms: list[int], power: int) -> set[int]:
    return {a**power + b**power for a, b in combinations(terms, 2)}


def recurrence_pairs(seeds: list[int], power: int, positive: bool, limit: int) -> list[int]:
    """Greedy set built from two-term power sums, by rescanning every pair each step."""
    terms = list(seeds)
    while True:
        vals = sums_of_pairs(terms, power)
        last = terms[-1]
        if positive:
            above = [v for v in vals if v > last]
            if not above:
                return terms
            nxt = min(above)
        else:
            nxt = last + 1
            while nxt in vals:
                nxt += 1
        if nxt > limit:
            return terms
        terms.append(nxt)


def avoid_ap(count: int) -> list[int]:
    """Greedy 1, 2, ... with no three terms in arithmetic progression."""
    terms = [1, 2]
    c = 3
    while len(terms) < count:
        s = set(terms)
        if not any(2 * b - c in s for b in terms if 2 * b - c >= 1 and b < c):
            terms.append(c)
        c += 1
    return terms


def partitions_into_powers(n: int, m: int, max_base: int | None = None) -> int:
    """Partitions of n into m-th powers of positive integers, by direct recursion."""
    if max_base is None:
        max_base = round(n ** (1 / m)) + 1
    if n == 0:
        return 1
    total = 0
    for b in range(min(max_base, round(n ** (1 / m)) + 1), 0, -1):
        if b**m <= n:
            total += partitions_into_powers(n - b**m, m, b)
    return total


def orbit(f, x: int) -> tuple[int, int]:
    """(tail, period) of x under f by storing every visited value."""
    seen: list[int] = []
    while x not in seen:
        seen.append(x)
        x = f(x)
    tail = seen.index(x)
    return tail, len(seen) - tail
