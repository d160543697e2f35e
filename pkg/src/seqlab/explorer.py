"""Tables, recurrence-defined sets, bounded searches, iterated-map loops and conjecture counters.

Every search here takes explicit bounds and reports what it saw inside them;
nothing is asserted beyond the bound.

Counting convention for `vinogradov_a`: a representation of odd m is a
first summand i (any odd prime) together with an unordered pair j <= k of
odd primes, i + j + k = m. So 3 + 3 + 5 counts twice (planes 3 and 5) and
3 + 5 + 5 counts twice as well. Ordered triples or plain multisets give
different prefixes (m = 13 yields 6 ordered, 2 unordered; this convention
gives 4).
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import arith_functions as af
from .numeric_core import PRIMES, digit_sum, is_prime, primes_up_to
from .seq_digits import BaseSeqSpec, concatenated_terms

# -- Goldbach / Vinogradov tables -----------------------------------------------------


@dataclass
class TableReport:
    rows: list[int]
    cols: list[int]
    cells: dict[tuple, int]
    scalar: int


def odd_primes(n: int) -> list[int]:
    """First n odd primes."""
    return [PRIMES.nth(i) for i in range(2, n + 2)]


def _longest_run(values: set[int], start: int, step: int = 2) -> int:
    x = start
    while x in values:
        x += step
    return x - step


def goldbach_table(n: int) -> TableReport:
    ps = odd_primes(n)
    cells = {(p, q): p + q for i, p in enumerate(ps) for q in ps[i:]}
    return TableReport(ps, ps, cells, _longest_run(set(cells.values()), 6))


def goldbach_t(n: int) -> int:
    """Largest even t with every even 6..t a sum of two of the first n odd primes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return goldbach_table(n).scalar


def vinogradov_table(n: int) -> TableReport:
    """Planes indexed by the first summand; each plane is a pairwise table."""
    ps = odd_primes(n)
    cells = {(i, j, k): i + j + k for i in ps for a, j in enumerate(ps) for k in ps[a:]}
    return TableReport(ps, ps, cells, _longest_run(set(cells.values()), 9))


def vinogradov_v(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return vinogradov_table(n).scalar


def vinogradov_a(m: int) -> int:
    if m < 1 or m % 2 == 0:
        raise ValueError("m must be a positive odd number")
    ps = [p for p in primes_up_to(m) if p > 2]
    pset = set(ps)
    count = 0
    for i in ps:
        rest = m - i
        for j in ps:
            if 2 * j > rest:
                break
            if rest - j in pset:
                count += 1
    return count


# -- product sequences ---------------------------------------------------------------------


PRODUCT_KINDS: dict[str, Callable[[int], int]] = {
    "prime": lambda k: PRIMES.nth(k),
    "square": lambda k: k * k,
    "cubic": lambda k: k**3,
    "factorial": math.factorial,
}


def product_sequence(kind: str, n: int, u: Optional[Callable[[int], int]] = None) -> tuple[int, bool]:
    """1 + u(1)u(2)...u(n), with its primality."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "custom":
        if u is None:
            raise ValueError("custom kind needs u")
        f = u
    elif kind in PRODUCT_KINDS:
        f = PRODUCT_KINDS[kind]
    else:
        raise ValueError(f"unknown product kind {kind!r}")
    value = 1 + math.prod(f(k) for k in range(1, n + 1))
    return value, is_prime(value)


# -- recurrence-defined sets ------------------------------------------------------------------


RELATIONS = {
    # name -> (power, arity); arity None means any number >= 1 of distinct terms
    "squares2": (2, 2),
    "squares": (2, None),
    "cubes2": (3, 2),
    "cubes": (3, None),
}


@dataclass(frozen=True)
class RecurrenceSetSpec:
    seeds: tuple[int, ...]
    relation: str = "squares2"
    polarity: str = "positive"
    arity: int = 2
    custom: Optional[Callable[..., int]] = None

    def __post_init__(self):
        if not self.seeds:
            raise ValueError("need at least one seed")
        if self.polarity not in ("positive", "negative"):
            raise ValueError("polarity is positive or negative")
        if self.relation == "custom":
            if self.custom is None or self.arity < 1:
                raise ValueError("custom relation needs a callable and arity >= 1")
        elif self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")


class _Combos:
    """Relation values over combinations of distinct term positions, up to limit.

    Fixed arity keeps a set plus a min-heap; "any number of terms" keeps a
    bitset of subset sums, so its limit should stay at desk scale.
    """

    def __init__(self, spec: RecurrenceSetSpec, limit: int):
        self.limit = limit
        self.terms: list[int] = []
        if spec.relation == "custom":
            self.power, self.arity, self.fn = None, spec.arity, spec.custom
        else:
            self.power, self.arity = RELATIONS[spec.relation]
            self.fn = lambda *xs: sum(x**self.power for x in xs)
        if self.arity is None:
            self.bits = np.zeros(limit + 1, dtype=bool)
        else:
            self.values: set[int] = set()
            self.heap: list[int] = []

    def add(self, t: int) -> None:
        if self.arity is None:
            v = t**self.power
            if v <= self.limit:
                shifted = np.zeros_like(self.bits)
                shifted[v:] = self.bits[: self.limit + 1 - v]
                shifted[v] = True
                self.bits |= shifted
        else:
            for rest in itertools.combinations(self.terms, self.arity - 1):
                r = self.fn(*rest, t)
                if 0 <= r <= self.limit and r not in self.values:
                    self.values.add(r)
                    heapq.heappush(self.heap, r)
        self.terms.append(t)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits[x]) if self.arity is None else x in self.values

    def least_member_from(self, x: int) -> Optional[int]:
        if x > self.limit:
            return None
        if self.arity is None:
            idx = np.flatnonzero(self.bits[x:])
            return int(idx[0]) + x if idx.size else None
        while self.heap and self.heap[0] < x:
            heapq.heappop(self.heap)
        return self.heap[0] if self.heap else None


def recurrence_set(spec: RecurrenceSetSpec, limit: int) -> list[int]:
    """Terms <= limit, increasingly ordered.

    Positive polarity takes the smallest relation value above the last term;
    a term may repeat only right after a single seed (so 1, 1, 2, ... arises
    from the seed 1 when any number of distinct terms may combine). Negative
    polarity takes the smallest number above the last term that is not a
    relation value of earlier terms.
    """
    if limit < max(spec.seeds):
        raise ValueError("limit must be >= every seed")
    combos = _Combos(spec, limit)
    terms = sorted(spec.seeds)
    for t in terms:
        combos.add(t)
    while True:
        last = terms[-1]
        if spec.polarity == "positive":
            nxt = combos.least_member_from(last if len(terms) == 1 else last + 1)
            if nxt is None:
                break
        else:
            nxt = last + 1
            while nxt <= limit and nxt in combos:
                nxt += 1
            if nxt > limit:
                break
        terms.append(nxt)
        combos.add(nxt)
    return terms


# -- greedy avoiders and builders ------------------------------------------------------------------


def _closes_ap(members: set[int], c: int, t: int) -> bool:
    for b in members:
        d = c - b
        if d <= 0:
            continue
        if all(c - j * d in members for j in range(2, t)):
            return True
    return False


def _closes_gp(members: set[int], c: int, t: int) -> bool:
    for b in members:
        if b >= c or b == 0:
            continue
        ratio = Fraction(b, c)  # walking downwards from c
        x = Fraction(c)
        ok = True
        for _ in range(t - 1):
            x *= ratio
            if x.denominator != 1 or int(x) not in members:
                ok = False
                break
        if ok:
            return True
    return False


def progression_avoider(kind: str, seeds: Sequence[int], count: int, t: int = 3) -> list[int]:
    """Greedy increasing list with no t-term arithmetic (or geometric) progression."""
    if t < 3:
        raise ValueError("t must be >= 3")
    if kind not in ("arithmetic", "geometric"):
        raise ValueError("kind is arithmetic or geometric")
    closes = _closes_ap if kind == "arithmetic" else _closes_gp
    out = list(seeds)[:count]
    members = set(out)
    c = out[-1] if out else 0
    while len(out) < count:
        c += 1
        if not closes(members, c, t):
            out.append(c)
            members.add(c)
    return out


def multiplicative_builder(kind: str, seeds: Sequence[int], count: int, k: int = 2) -> list[int]:
    """Multiplicative: next is the least product of two earlier distinct terms above the last.
    Non-multiplicative(k): next is the least number above the last that is not such a product of k terms."""
    out = list(seeds)
    if kind == "multiplicative":
        if len(out) < 2:
            raise ValueError("need two seeds")
        products = {a * b for a, b in itertools.combinations(out, 2)}
        while len(out) < count:
            nxt = min(p for p in products if p > out[-1])
            products |= {a * nxt for a in out}
            out.append(nxt)
    elif kind == "non_multiplicative":
        if len(out) < k:
            raise ValueError(f"need at least {k} seeds")
        products = {math.prod(c) for c in itertools.combinations(out, k)}
        while len(out) < count:
            nxt = out[-1] + 1
            while nxt in products:
                nxt += 1
            products |= {math.prod(c) * nxt for c in itertools.combinations(out, k - 1)}
            out.append(nxt)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return out[:count]


# -- relationships -----------------------------------------------------------------------


FUNCTIONS: dict[str, Callable[[int], int]] = {"S": af.S, "Z": af.Z, "SP": af.SP}
_LAWS = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b, "mul": lambda a, b: a * b}


def relationship_search(f: str | Callable[[int], int], p: int, q: int, law: str,
                        lo: int, hi: int) -> list[int]:
    """Offsets k in [lo, hi] with f(k+1)..f(k+p) folded by law equal to f(k+p+1)..f(k+p+q)."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    fn = FUNCTIONS[f] if isinstance(f, str) else f
    op = _LAWS[law]
    hits = []
    for k in range(lo, hi + 1):
        vals = [fn(k + i) for i in range(1, p + q + 1)]
        left = vals[0]
        for v in vals[1:p]:
            left = op(left, v)
        right = vals[p]
        for v in vals[p + 1:]:
            right = op(right, v)
        if left == right:
            hits.append(k)
    return hits


def partial_perfect_additive(count: int) -> list[int]:
    """a1 = a2 = 1, a(2p+1) = a(p+1) - 1, a(2p+2) = a(p+1) + 1."""
    if count < 2:
        raise ValueError("count must be >= 2")
    a = [0, 1, 1]  # 1-based
    while len(a) <= count:
        n = len(a)
        p = (n - 1) // 2 if n % 2 else (n - 2) // 2
        a.append(a[p + 1] - 1 if n % 2 else a[p + 1] + 1)
    return a[1:count + 1]


# -- iterated maps ------------------------------------------------------------------------------


@dataclass
class LoopReport:
    start: int
    tail: int
    cycle: list[int]
    period: int
    invariant_hit: bool

    @property
    def closed_after(self) -> int:
        """Iterations until the first repeated value appears."""
        return self.tail + self.period


def _reverse_padded(n: int, width: int) -> int:
    return int(str(n).zfill(width)[::-1])


def _width_of(kind: str, param: Optional[int], start: int) -> int:
    return param if kind == "reverse_subtract" else len(str(start))


def loop_map(kind: str, param: Optional[int], width: int) -> Callable[[int], int]:
    if kind == "reverse_subtract":
        return lambda n: abs(n - _reverse_padded(n, width))
    if kind == "subtraction":
        return lambda n: abs(_reverse_padded(n, width) - param)
    if kind == "multiplication":
        def mul(n: int) -> int:
            return int("".join(str(int(d) * param % 10) for d in str(n).zfill(width)))
        return mul
    if kind == "mixed":
        def mixed(n: int) -> int:
            a, b = divmod(n, 10)
            s = a + b
            while s >= 10:
                s = digit_sum(s)
            return 10 * s + abs(a - b)
        return mixed
    raise ValueError(f"unknown loop kind {kind!r}")


def periodic_loop(kind: str, start: int, param: Optional[int] = None,
                  fn: Optional[Callable[[int], int]] = None, max_steps: int = 10**7) -> LoopReport:
    """Tail/cycle decomposition of start, f(start), f(f(start)), ...

    Kinds: reverse_subtract (param = width), subtraction (param = c), multiplication
    (param = c), mixed (two-digit), generic (fn supplied). Reverses are taken on the
    zero-padded width, so with width 2 the number 9 reverses to 90.
    """
    if kind == "generic":
        if fn is None:
            raise ValueError("generic loops need fn")
        f = fn
    else:
        if kind in ("reverse_subtract", "subtraction", "multiplication") and param is None:
            raise ValueError(f"{kind} needs a parameter")
        width = _width_of(kind, param, start)
        if kind == "reverse_subtract" and not 0 <= start < 10**width:
            raise ValueError("start exceeds the width")
        if kind == "mixed" and not 0 <= start < 100:
            raise ValueError("mixed composition works on two-digit numbers")
        f = loop_map(kind, param, width)
    seen: dict[int, int] = {}
    seq: list[int] = []
    x = start
    while x not in seen:
        if len(seq) >= max_steps:
            raise RuntimeError("no repetition within max_steps")
        seen[x] = len(seq)
        seq.append(x)
        x = f(x)
    tail = seen[x]
    cycle = seq[tail:]
    return LoopReport(start, tail, cycle, len(cycle), len(cycle) == 1)


# -- numerical carpet ------------------------------------------------------------------------------


def carpet_C(n: int, k: int) -> int:
    """Closed form 4n * prod_{i=1}^{k-1} (4n - 4i + 1), with C(n, 0) = 1."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        return 1
    return 4 * n * math.prod(4 * n - 4 * i + 1 for i in range(1, k))


def carpet_recursive(n: int, k: int) -> int:
    """Level k value as the total of every border outside it (border j has 4(n-j) cells)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    vals = [1]
    for j in range(1, k + 1):
        vals.append(sum(4 * (n - i) * vals[i] for i in range(j)))
    return vals[k]


def carpet(n: int) -> list[list[int]]:
    """The rhombus of radius n, row by row; a cell at distance d from the centre holds C(n, n-d)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    levels = [carpet_C(n, k) for k in range(n + 1)]
    rows = []
    for y in range(-n, n + 1):
        w = n - abs(y)
        rows.append([levels[n - (abs(x) + abs(y))] for x in range(-w, w + 1)])
    return rows


# -- magic placements ------------------------------------------------------------------------------


def magic_index(n: int = 3) -> tuple[int, int, int]:
    """(min side sum, max side sum, arrangement count up to symmetry) for 1..6 on a triangle.

    Vertices and side midpoints each take one number; every side must have the
    same sum. Larger polygons are refused because the search explodes.
    """
    if n != 3:
        raise ValueError("only the triangle (n = 3) is searched")
    canon: set[tuple[int, ...]] = set()
    sums: set[int] = set()
    # layout: v0 m01 v1 m12 v2 m20 around the boundary
    for perm in itertools.permutations(range(1, 7)):
        v0, m01, v1, m12, v2, m20 = perm
        s = v0 + m01 + v1
        if v1 + m12 + v2 == s and v2 + m20 + v0 == s:
            sums.add(s)
            canon.add(_canonical_ring(perm))
    return min(sums), max(sums), len(canon)


def _canonical_ring(ring: tuple[int, ...]) -> tuple[int, ...]:
    # dihedral images that keep vertices on even slots: rotations by 2 and reflections
    cands = []
    r = list(ring)
    for shift in range(0, 6, 2):
        rot = r[shift:] + r[:shift]
        cands.append(tuple(rot))
        refl = [rot[0]] + rot[:0:-1]
        cands.append(tuple(refl))
    return min(cands)


def magic_square_check(grid: Sequence[Sequence[int]],
                       law: Callable[[Iterable[int]], int] = sum) -> bool:
    n = len(grid)
    if n < 2 or any(len(row) != n for row in grid):
        raise ValueError("grid must be square, n >= 2")
    lines = [list(row) for row in grid]
    lines += [[grid[i][j] for i in range(n)] for j in range(n)]
    lines.append([grid[i][i] for i in range(n)])
    lines.append([grid[i][n - 1 - i] for i in range(n)])
    return len({law(line) for line in lines}) == 1


DURER = ((16, 3, 2, 13), (5, 10, 11, 8), (9, 6, 7, 12), (4, 15, 14, 1))


# -- cube/square differences and prime combinations -----------------------------------------------


def bad_number_scan(a_limit: int, x_limit: int, y_limit: int) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """Witnesses a = |x^3 - y^2| for a <= a_limit, x <= x_limit, y <= y_limit (first x wins).

    The second value lists the a in [1, a_limit] with no witness inside the bound.
    """
    if min(a_limit, x_limit, y_limit) < 1:
        raise ValueError("bounds must be >= 1")
    found: dict[int, tuple[int, int]] = {}
    for x in range(1, x_limit + 1):
        c = x**3
        lo = math.isqrt(max(0, c - a_limit))
        hi = min(y_limit, math.isqrt(c + a_limit) + 1)
        for y in range(max(1, lo), hi + 1):
            a = abs(c - y * y)
            if 1 <= a <= a_limit and a not in found:
                found[a] = (x, y)
    missing = [a for a in range(1, a_limit + 1) if a not in found]
    return found, missing


def prime_conjecture_count(m: int, prime_bound: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Representations m = p + q - r with primes p <= q, r <= prime_bound, dropping r in {p, q}."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    ps = primes_up_to(prime_bound)
    pset = set(ps)
    reps = []
    for i, p in enumerate(ps):
        for q in ps[i:]:
            r = p + q - m
            if r in pset and r != p and r != q:
                reps.append((p, q, r))
    return len(reps), reps


def partition_count(n: int, m: int = 2) -> int:
    """Number of multisets of positive m-th powers summing to n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ways = [1] + [0] * n
    k = 1
    while k**m <= n:
        part = k**m
        for s in range(part, n + 1):
            ways[s] += ways[s - part]
        k += 1
    return ways[n]


# -- S-value searches --------------------------------------------------------------------------


def triplet_search(limit: int, start: int = 4) -> list[int]:
    """n in [start, limit] with S(n) = S(n-1) + S(n-2).

    The default start keeps S(1) out of the sums: its value is a convention
    (0 or 1), and with S(1) = 1 the otherwise trivial n = 3 would qualify.
    """
    if limit < 3 or start < 3:
        raise ValueError("limit and start must be >= 3")
    s = af.S_table(limit)
    hits = (s[3:] == s[2:-1] + s[1:-2]).nonzero()[0] + 3
    return [int(n) for n in hits if n >= start]


def duplet_search(limit: int) -> list[int]:
    """n <= limit with no prime in the closed interval between S(n) and S(n+1)."""
    if limit < 3:
        raise ValueError("limit must be >= 3")
    s = af.S_table(limit + 1)
    top = int(s.max())
    pflags = [False] * (top + 2)
    for p in primes_up_to(top + 1):
        pflags[p] = True
    prefix = list(itertools.accumulate(pflags, initial=0))  # primes below index
    hits = []
    for n in range(1, limit + 1):
        a, b = sorted((int(s[n]), int(s[n + 1])))
        if prefix[b + 1] - prefix[a] == 0:
            hits.append(n)
    return hits


def expression_prime_search(form: str, bound: int, n: int = 2) -> list[tuple[tuple[int, ...], int]]:
    """Prime values of x^y + y^x (gcd 1, x < y) or the n-cycle x1^x2 + ... + xn^x1 over 2..bound."""
    hits = []
    if form == "xy":
        for x in range(2, bound + 1):
            for y in range(x + 1, bound + 1):
                if math.gcd(x, y) != 1:
                    continue
                v = x**y + y**x
                if is_prime(v):
                    hits.append(((x, y), v))
    elif form == "cycle":
        if n < 2:
            raise ValueError("n must be >= 2")
        for xs in itertools.product(range(2, bound + 1), repeat=n):
            if math.gcd(*xs) != 1:
                continue
            v = sum(xs[i] ** xs[(i + 1) % n] for i in range(n))
            if is_prime(v):
                hits.append((xs, v))
    else:
        raise ValueError("form is 'xy' or 'cycle'")
    return hits


# -- simultaneous primality -------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeInstance:
    """Members claimed prime together, with a witness c that r divides exactly when they are.

    Without an explicit (c, r) the Wilson witness is built: r is the product of the
    members and c = sum over members p of (r/p) * ((p-1)! + 1).
    """
    members: tuple[int, ...]
    c: Optional[int] = None
    r: Optional[int] = None
    a: int = 1

    def witness(self) -> tuple[int, int]:
        if self.c is not None and self.r is not None:
            return self.c, self.r
        r = math.prod(self.members)
        c = sum((r // p) * (math.factorial(p - 1) + 1) for p in self.members)
        return c, r


def simultaneous_prime_check(instances: Sequence[PrimeInstance]) -> tuple[bool, bool]:
    """(sum of a*c / prod(members) is an integer, every member is prime by direct test)."""
    if not instances:
        raise ValueError("need at least one instance")
    members = [p for inst in instances for p in inst.members]
    if any(p < 2 for p in members):
        raise ValueError("members must be >= 2")
    for x, y in itertools.combinations(members, 2):
        if math.gcd(x, y) != 1:
            raise ValueError("members must be pairwise coprime")
    total = Fraction(0)
    for inst in instances:
        c, _ = inst.witness()
        total += Fraction(inst.a * c, math.prod(inst.members))
    return total.denominator == 1, all(is_prime(p) for p in members)


# -- partial products -----------------------------------------------------------------------------


SERIES: dict[str, Callable[[int], int]] = {
    "one": lambda n: 1,
    "power2": lambda n: 2**n,
    "divisor_product": af.divisor_product,
    "S": af.S,
    "Z": af.Z,
    "factorial": math.factorial,
}


def infinite_product_partial(series: str | Callable[[int], int], N: int) -> tuple[Fraction, Fraction]:
    """(prod_{n<=N} 1/a(n), |1/a(N)|) in exact rationals; no limit is claimed."""
    a = SERIES[series] if isinstance(series, str) else series
    prod = Fraction(1)
    last = Fraction(1)
    for n in range(1, N + 1):
        v = a(n)
        if v == 0:
            raise ZeroDivisionError(f"a({n}) = 0")
        last = Fraction(1, v)
        prod *= last
    return prod, abs(last)


# -- add-on sequences ------------------------------------------------------------------------------


@dataclass
class AddOnReport:
    value: int
    prime_ranks: list[int] = field(default_factory=list)
    searched: int = 0


def gadd_on(g: BaseSeqSpec, n: int, rank_scan: Optional[int] = None) -> AddOnReport:
    """Term n of the add-on sequence of g, plus the prime ranks among the first rank_scan terms."""
    if n < 1:
        raise ValueError("n must be >= 1")
    scan = n if rank_scan is None else rank_scan
    terms = concatenated_terms(g, max(n, scan))
    ranks = [i for i, v in enumerate(terms[:scan], 1) if is_prime(v)]
    return AddOnReport(terms[n - 1], ranks, scan)
