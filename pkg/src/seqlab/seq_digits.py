"""Digit-construction families, concatenations and digit-based subsequence filters."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .numeric_core import (
    PRIMES,
    distinct_digit_arrangements,
    integer_root,
    is_perfect_power,
    is_prime,
    value_of,
)

# digit strings are returned as str when leading zeros or emptiness matter
DigitString = str
EMPTY = ""  # distinguished empty term; renders as "-"

# -- families ------------------------------------------------------------------------

FAMILIES = (
    "consecutive", "circular", "symmetric", "mirror", "deconstructive", "permutation",
    "reverse", "anti_symmetric", "concatenated_natural", "unary", "no_prime_digit",
    "no_square_digit", "pierced_chain", "code_puzzle", "threes_ones_simple",
    "threes_ones_nested", "generic_concat",
)

_ONES = ["", "ONE", "TWO", "THREE", "FOUR", "FIVE", "SIX", "SEVEN", "EIGHT", "NINE", "TEN",
         "ELEVEN", "TWELVE", "THIRTEEN", "FOURTEEN", "FIFTEEN", "SIXTEEN", "SEVENTEEN",
         "EIGHTEEN", "NINETEEN"]
_TENS = ["", "", "TWENTY", "THIRTY", "FORTY", "FIFTY", "SIXTY", "SEVENTY", "EIGHTY", "NINETY"]


def english_name(n: int) -> str:
    """Spelling of 1 <= n < 10**6 in capitals without spaces or hyphens."""
    if not 1 <= n < 10**6:
        raise ValueError("supported range is 1..999999")

    def below_1000(m: int) -> str:
        out = ""
        if m >= 100:
            out += _ONES[m // 100] + "HUNDRED"
            m %= 100
        if m >= 20:
            out += _TENS[m // 10] + _ONES[m % 10]
        else:
            out += _ONES[m]
        return out

    hi, lo = divmod(n, 1000)
    return (below_1000(hi) + "THOUSAND" if hi else "") + below_1000(lo)


def letter_code(word: str) -> DigitString:
    # A=01 .. Z=26, two digits per letter
    return "".join(f"{ord(c) - 64:02d}" for c in word.upper() if c.isalpha())


def _join(parts: Iterable[int]) -> int:
    return int("".join(map(str, parts)))


def _symmetric(n: int) -> int:
    m = (n + 1) // 2
    up = [str(i) for i in range(1, m + 1)]
    down = up[::-1] if n % 2 == 0 else up[-2::-1]
    return int("".join(up + down))


def _circular(n: int) -> int:
    # block m holds the m rotations of 1..m
    m = 1
    while n > m:
        n -= m
        m += 1
    toks = [str(i) for i in range(1, m + 1)]
    r = n - 1
    return int("".join(toks[r:] + toks[:r]))


def _deconstructive(n: int) -> int:
    start = (n * (n - 1) // 2) % 9
    stream = "123456789"
    return int("".join(stream[(start + j) % 9] for j in range(n)))


def remove_digits(n: int, banned: str) -> DigitString:
    return "".join(c for c in str(n) if c not in banned)


def term(family: str, n: int, funcs: Sequence[Callable[[int], Optional[int]]] = ()) -> int | DigitString:
    """n-th term (n >= 1) of a digit-construction family."""
    if n < 1:
        raise ValueError("index starts at 1")
    if family == "consecutive":
        return _join(range(1, n + 1))
    if family == "circular":
        return _circular(n)
    if family == "symmetric":
        return _symmetric(n)
    if family == "mirror":
        return _join(list(range(n, 0, -1)) + list(range(2, n + 1)))
    if family == "deconstructive":
        return _deconstructive(n)
    if family == "permutation":
        return _join(list(range(1, 2 * n, 2)) + list(range(2 * n, 0, -2)))
    if family == "reverse":
        return _join(range(n, 0, -1))
    if family == "anti_symmetric":
        return int(str(_join(range(1, n + 1))) * 2)
    if family == "concatenated_natural":
        return int(str(n) * n)
    if family == "unary":
        return int("1" * PRIMES.nth(n))
    if family == "no_prime_digit":
        return remove_digits(n, "2357")
    if family == "no_square_digit":
        return remove_digits(n, "0149")
    if family == "pierced_chain":
        return int("10" * (2 * n - 1) + "1")
    if family == "code_puzzle":
        return letter_code(english_name(n))
    if family == "threes_ones_simple":
        return int("3" * n + "1")
    if family == "threes_ones_nested":
        return int("".join("3" * k + "1" for k in range(1, n + 1)))
    if family == "generic_concat":
        if not funcs:
            raise ValueError("generic_concat needs at least one function")
        parts = [f(n) for f in funcs]
        return "".join("" if p is None else str(p) for p in parts)
    raise ValueError(f"unknown family {family!r}")


def family_terms(family: str, count: int, skip_empty: bool = False, **kw) -> list:
    """First `count` terms; with skip_empty, empty digit strings are dropped as in printed listings."""
    out, n = [], 1
    while len(out) < count:
        t = term(family, n, **kw)
        n += 1
        if skip_empty and t == EMPTY:
            continue
        out.append(t)
    return out


def render(t) -> str:
    return "-" if t == EMPTY else str(t)


# -- concatenated sources ----------------------------------------------------------


def fibonacci_iter(a: int = 1, b: int = 1) -> Iterator[int]:
    while True:
        yield a
        a, b = b, a + b


def lucas_iter() -> Iterator[int]:
    return fibonacci_iter(2, 1)


SOURCES: dict[str, Callable[[], Iterator[int]]] = {
    "naturals": lambda: itertools.count(1),
    "odds": lambda: itertools.count(1, 2),
    "evens": lambda: itertools.count(2, 2),
    "primes": lambda: iter(PRIMES.iter()),
    "squares": lambda: (k * k for k in itertools.count(1)),
    "cubes": lambda: (k**3 for k in itertools.count(1)),
    "fibonacci": fibonacci_iter,
}


@dataclass(frozen=True)
class BaseSeqSpec:
    source: str = "naturals"
    direction: str = "forward"
    custom: tuple[int, ...] = ()

    def stream(self) -> Iterator[int]:
        if self.source == "custom":
            return iter(self.custom)
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        return SOURCES[self.source]()


def concatenated_term(s: BaseSeqSpec, n: int) -> int:
    if n < 1:
        raise ValueError("index starts at 1")
    head = list(itertools.islice(s.stream(), n))
    if len(head) < n:
        raise IndexError("custom list exhausted")
    if s.direction == "backward":
        head.reverse()
    elif s.direction != "forward":
        raise ValueError("direction must be forward or backward")
    return _join(head)


def concatenated_terms(s: BaseSeqSpec, count: int) -> list[int]:
    # incremental so long prefixes stay linear in the digit count
    out, acc = [], ""
    for v in itertools.islice(s.stream(), count):
        acc = acc + str(v) if s.direction == "forward" else str(v) + acc
        out.append(int(acc))
    return out


def constructive_terms(atoms: Sequence[str], count: int) -> list[int]:
    """Increasing closure of the atoms under juxtaposition."""
    atoms = [str(a) for a in atoms]
    if len(set(atoms)) != len(atoms) or any(not a for a in atoms):
        raise ValueError("atoms must be distinct non-empty strings")
    if any(a.startswith("0") for a in atoms):
        raise ValueError("atoms may not start with 0")
    found: set[int] = set()
    layer = set(atoms)
    # with single-digit atoms the k-digit members all appear by layer k
    max_len = 1
    while True:
        found |= {int(x) for x in layer}
        if len(found) >= count:
            srt = sorted(found)
            # everything below the count-th value must be complete: it is once
            # the shortest string in the next layer is longer than that value
            cutoff = srt[count - 1]
            if min(len(x) for x in layer) > len(str(cutoff)):
                return srt[:count]
        layer = {a + b for a in layer for b in atoms}
        max_len += 1
        if max_len > 64:
            raise RuntimeError("closure did not stabilise")


# -- pseudo-properties ----------------------------------------------------------------


@dataclass(frozen=True)
class PseudoProperty:
    kind: str
    param: int = 0

    def holds(self, n: int) -> bool:
        k = self.kind
        if k == "prime":
            return is_prime(n)
        if k == "square":
            return n >= 0 and integer_root(n, 2) ** 2 == n
        if k == "cube":
            return n >= 0 and integer_root(n, 3) ** 3 == n
        if k == "m_power":
            return n >= 0 and integer_root(n, self.param) ** self.param == n
        if k == "factorial":
            return n in _factorials_upto(n)
        if k == "odd":
            return n % 2 == 1
        if k == "even":
            return n % 2 == 0
        if k == "triangular":
            r = integer_root(8 * n + 1, 2)
            return r * r == 8 * n + 1
        if k == "multiple_of":
            return n % self.param == 0
        if k == "divisor_of":
            return n != 0 and self.param % n == 0
        raise ValueError(f"unknown property {k!r}")


def _factorials_upto(n: int) -> set[int]:
    out, f, k = {1}, 1, 1
    while f <= n:
        k += 1
        f *= k
        out.add(f)
    return out


def pseudo_classify(p: PseudoProperty, n: int) -> tuple[bool, bool, bool]:
    """(first, second, third) kind flags for n."""
    arrangements = distinct_digit_arrangements(n)
    own = p.holds(n)
    first = own or any(p.holds(a) for a in arrangements)
    second = (not own) and first
    s = str(n)
    # a nontrivial permutation is any rearrangement other than the identity by position;
    # with a repeated digit, swapping the equal digits reaches n itself
    repeated = len(set(s)) < len(s)
    third = any(p.holds(a) for a in arrangements if a != n or (repeated and len(s) > 1))
    return first, second, third


def almost_primes(kind: str, a1: int, count: int) -> list[int]:
    if a1 < 2:
        raise ValueError("a1 must be >= 2")
    seq = [a1]
    cand = a1 + 1
    while len(seq) < count:
        if kind == "first":
            ok = all(cand % t for t in seq)
        elif kind == "second":
            ok = all(math.gcd(cand, t) == 1 for t in seq)
        else:
            raise ValueError("kind must be first or second")
        if ok:
            seq.append(cand)
        cand += 1
    return seq[:count]


def digit_count_sequence(source: str, d: int, n: int) -> int:
    if n < 1:
        raise ValueError("index starts at 1")
    if source == "primes":
        v = PRIMES.nth(n)
    elif source == "factorials":
        v = math.factorial(n - 1)  # the listing starts at 0!
    elif source == "n^n":
        v = n**n
    else:
        raise ValueError(f"unknown source {source!r}")
    return str(v).count(str(d))


def digit_only_subsequence(pred: Callable[[int], bool], digits: Iterable[int], count: int,
                           max_len: int = 18) -> list[int]:
    """Increasing members of pred written with exactly the given digit set (all used)."""
    ds = sorted(set(digits))
    if not ds:
        raise ValueError("digit set must be non-empty")
    want = set(ds)
    out = []
    for length in range(1, max_len + 1):
        for tup in itertools.product(ds, repeat=length):
            if tup[0] == 0 or set(tup) != want:
                continue
            v = value_of(list(tup))
            if pred(v):
                out.append(v)
                if len(out) == count:
                    return out
    return out


def prime_digital_terms(count: int) -> list[int]:
    """Primes all of whose digits are prime digits, in increasing order."""
    out: list[int] = []
    length = 1
    while len(out) < count:
        for tup in itertools.product("2357", repeat=length):
            v = int("".join(tup))
            if is_prime(v):
                out.append(v)
                if len(out) == count:
                    break
        length += 1
    return out


# -- digital filters --------------------------------------------------------------------

_DIGIT_FORMS = {"square": set("0149"), "cube": set("018"), "prime": set("2357")}


def full_digital_filter(p: PseudoProperty, n: int) -> bool:
    if p.kind not in _DIGIT_FORMS:
        raise ValueError(f"{p.kind} has no digit-level form")
    return p.holds(n) and set(str(n)) <= _DIGIT_FORMS[p.kind]


def _member_set_pred(kind: str) -> Callable[[int], bool]:
    if kind in ("square", "cube", "prime"):
        prop = PseudoProperty(kind)
        return prop.holds
    if kind in ("lucas", "fibonacci"):
        # both streams are increasing after their first two terms (Lucas starts 2, 1)
        it = lucas_iter() if kind == "lucas" else fibonacci_iter()
        head = [next(it), next(it)]
        cache: set[int] = set(head) | ({0} if kind == "fibonacci" else set())
        top = [max(head)]

        def pred(v: int) -> bool:
            while top[0] <= v:
                top[0] = next(it)
                cache.add(top[0])
            return v in cache

        return pred
    raise ValueError(f"unknown membership predicate {kind!r}")


def partial_digital_filter(kind: str, n: int) -> Optional[list[str]]:
    """One split of n's digits into >= 2 groups, each a member; None if impossible."""
    if n < 10:
        raise ValueError("need at least two digits")
    pred = _member_set_pred(kind)
    s = str(n)

    def ok(g: str) -> bool:
        return (g == "0" or g[0] != "0") and pred(int(g))

    def search(i: int, acc: list[str]) -> Optional[list[str]]:
        if i == len(s):
            return acc if len(acc) >= 2 else None
        for j in range(i + 1, len(s) + 1):
            g = s[i:j]
            if len(acc) == 0 and j == len(s):
                break  # the whole number is not a group
            if ok(g):
                r = search(j, acc + [g])
                if r:
                    return r
        return None

    return search(0, [])


def lucky_numbers(limit: int) -> list[int]:
    """Lucky numbers up to limit by the positional sieve."""
    lst = list(range(1, limit + 1, 2))
    i = 1
    while i < len(lst) and lst[i] <= len(lst):
        step = lst[i]
        del lst[step - 1::step]
        i += 1
    return lst


F_FUNCTIONS: dict[str, Callable[[int], Optional[int]]] = {
    "double": lambda g: 2 * g,
    "square": lambda g: g * g,
}


def _lucky_index(g: int) -> Optional[int]:
    if g < 1:
        return None
    lim = 64
    while True:
        lk = lucky_numbers(lim)
        if len(lk) >= g:
            return lk[g - 1]
        lim *= 2


F_FUNCTIONS["lucky_index"] = _lucky_index


def f_digital_filter(f: str | Callable[[int], Optional[int]], n: int) -> Optional[tuple[int, int]]:
    """Split n into g1|g2 with g2 = f(g1)."""
    if n < 10:
        raise ValueError("need at least two digits")
    fn = F_FUNCTIONS[f] if isinstance(f, str) else f
    s = str(n)
    for i in range(1, len(s)):
        a, b = s[:i], s[i:]
        if b[0] == "0" and b != "0":
            continue
        if fn(int(a)) == int(b):
            return int(a), int(b)
    return None


# -- sub-sequence streams and their closed forms ------------------------------------------------

SUBSEQ_KINDS = ("crescendo", "decrescendo", "cresc_pyramidal", "decresc_pyramidal",
                "cresc_symmetric", "decresc_symmetric", "permutation_sub")


def _block(kind: str, n: int) -> list[int]:
    up = list(range(1, n + 1))
    if kind == "crescendo":
        return up
    if kind == "decrescendo":
        return up[::-1]
    if kind == "cresc_pyramidal":
        return up + up[-2::-1]
    if kind == "decresc_pyramidal":
        return up[::-1] + up[1:]
    if kind == "cresc_symmetric":
        return up + up[::-1]
    if kind == "decresc_symmetric":
        return up[::-1] + up
    if kind == "permutation_sub":
        return list(range(1, 2 * n, 2)) + list(range(2 * n, 0, -2))
    raise ValueError(f"unknown kind {kind!r}")


def subsequence_stream(kind: str, count: int) -> list[int]:
    out, n = [], 1
    while len(out) < count:
        out.extend(_block(kind, n))
        n += 1
    return out[:count]


def subsequence_closed_form(kind: str, i: int) -> int:
    """Value at position i from the block-end formulas (no stream construction)."""
    if i < 1:
        raise ValueError("index starts at 1")
    if kind in ("crescendo", "decrescendo"):
        # block n ends at n(n+1)/2
        n = (integer_root(8 * i, 2) - 1) // 2
        while n * (n + 1) // 2 < i:
            n += 1
        back = n * (n + 1) // 2 - i
        return n - back if kind == "crescendo" else 1 + back
    if kind in ("cresc_pyramidal", "decresc_pyramidal"):
        n = integer_root(i - 1, 2) + 1 if i > 1 else 1
        back = n * n - i
        if back <= n - 1:
            return 1 + back if kind == "cresc_pyramidal" else n - back
        j = back - n
        return n - j - 1 if kind == "cresc_pyramidal" else 2 + j
    # blocks of 2n terms end at n(n+1)
    n = 1
    while n * (n + 1) < i:
        n += 1
    back = n * (n + 1) - i
    if kind == "cresc_symmetric":
        return 1 + back if back <= n - 1 else n - (back - n)
    if kind == "decresc_symmetric":
        return n - back if back <= n - 1 else 1 + (back - n)
    if kind == "permutation_sub":
        return 2 + 2 * back if back <= n - 1 else 2 * n - 1 - 2 * (back - n)
    raise ValueError(f"unknown kind {kind!r}")


# -- uniform sequences ------------------------------------------------------------------------------


@dataclass
class UniformResult:
    terms: list[int]
    empty: bool
    certificate: str = ""


def uniform_sequence(n: int, digits: Iterable[int], base: int = 10, count: int = 5,
                     max_len: int = 200) -> UniformResult:
    """Increasing multiples of n whose digit set is exactly `digits`.

    States are (residue mod n, mask of used digits); emptiness is decided by
    reachability of (0, full mask) in that finite graph.
    """
    ds = sorted(set(digits))
    if n == 0:
        raise ValueError("n must be non-zero")
    n = abs(n)
    if not ds or any(not 0 <= d < base for d in ds):
        raise ValueError("digits must be non-empty and below the base")
    full = (1 << len(ds)) - 1
    starts = {(d % n, 1 << k) for k, d in enumerate(ds) if d != 0}
    seen = set(starts)
    frontier = list(starts)
    while frontier:
        nxt = []
        for r, m in frontier:
            for k, d in enumerate(ds):
                st = ((r * base + d) % n, m | (1 << k))
                if st not in seen:
                    seen.add(st)
                    nxt.append(st)
        frontier = nxt
    if (0, full) not in seen:
        return UniformResult([], True, f"(0, all digits) unreachable among {len(seen)} states")

    # good[L] holds states that finish in exactly L more digits
    good: list[set[tuple[int, int]]] = [{(0, full)}]

    def extend_good(L: int) -> None:
        while len(good) <= L:
            prev = good[-1]
            cur = set()
            for r in range(n):
                for m in range(full + 1):
                    for k, d in enumerate(ds):
                        if ((r * base + d) % n, m | (1 << k)) in prev:
                            cur.add((r, m))
                            break
            good.append(cur)

    out: list[int] = []

    def dfs(r: int, m: int, left: int, acc: int) -> None:
        if len(out) >= count:
            return
        if left == 0:
            out.append(acc)
            return
        for k, d in enumerate(ds):
            st = ((r * base + d) % n, m | (1 << k))
            if st in good[left - 1]:
                dfs(st[0], st[1], left - 1, acc * base + d)
                if len(out) >= count:
                    return

    for length in range(1, max_len + 1):
        extend_good(length)
        for k, d in enumerate(ds):
            if d == 0:
                continue
            st = (d % n, 1 << k)
            if st in good[length - 1]:
                dfs(st[0], st[1], length - 1, d)
        if len(out) >= count:
            break
    return UniformResult(out[:count], False)


# -- operation sequences -------------------------------------------------------------------------------

OPS = ("add", "sub", "mul", "div", "pow", "root")
_MAX_BITS = 4096


def _apply(op: str, x: Fraction, y: int) -> Optional[Fraction]:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "pow":
        if x.numerator.bit_length() * y > _MAX_BITS or x.denominator.bit_length() * y > _MAX_BITS:
            return None
        return x**y
    if op == "root":
        # y-th root of x, kept only when exact
        if x < 0 and y % 2 == 0:
            return None
        sign = -1 if x < 0 else 1
        a, b = abs(x.numerator), x.denominator
        ra, rb = integer_root(a, y), integer_root(b, y)
        if ra**y == a and rb**y == b:
            return sign * Fraction(ra, rb)
        return None
    raise ValueError(f"unknown operation {op!r}")


@dataclass
class OperationSequence:
    terms: list[int]
    truncated: bool = False
    report: str = ""


def operation_sequence(ops: Iterable[str], count: int, mode: str = "minimal",
                       seed: Optional[int] = None, max_states: int = 2_000_000) -> OperationSequence:
    """Terms of 1 O1 2 O2 ... (n+1) evaluated left to right, each strictly above the last.

    All operator choices are explored as a set of reachable exact values, so
    the cost tracks the number of distinct intermediate values.
    """
    ops = list(ops)
    if count < 1:
        raise ValueError("count must be >= 1")
    if any(o not in OPS for o in ops):
        raise ValueError(f"operations must come from {OPS}")
    if mode not in ("minimal", "random"):
        raise ValueError("mode must be minimal or random")
    if mode == "random" and seed is None:
        raise ValueError("random mode needs a seed")
    rng = random.Random(seed)
    terms = [1]
    values = {Fraction(1)}
    k = 2
    while len(terms) < count:
        nxt = set()
        for v in values:
            for op in ops:
                r = _apply(op, v, k)
                if r is not None:
                    nxt.add(r)
        if len(nxt) > max_states:
            return OperationSequence(terms, True, f"state space exceeded {max_states} at operand {k}")
        values = nxt
        admissible = sorted(int(v) for v in values if v.denominator == 1 and v > terms[-1])
        if not admissible:
            return OperationSequence(terms, True, f"no admissible value above {terms[-1]} with operand {k}")
        terms.append(admissible[0] if mode == "minimal" else rng.choice(admissible))
        k += 1
    return OperationSequence(terms)


# -- conjecture helpers -----------------------------------------------------------------------------------


def perfect_power_hits(values: Iterable[int]) -> list[int]:
    """Indices (1-based) of values that are perfect powers."""
    return [i for i, v in enumerate(values, 1) if v > 1 and is_perfect_power(v) is not None]
