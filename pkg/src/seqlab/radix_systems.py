"""Generalized numeral bases, factorial-base arithmetic and column worktables.

A generalized base is a strictly increasing scale 1 = g0 < g1 < ...; a
number is written greedily by repeatedly subtracting the largest scale value
that fits, and the digit at position i counts how often g_i was taken.
"""
from __future__ import annotations

import bisect
import itertools
import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Optional

from .numeric_core import PRIMES


class GeneralizedBase:
    """Scale generated on demand by `gen(i)` for i = 0, 1, 2, ..."""

    def __init__(self, name: str, gen: Callable[[int], int], first_numeral: int = 0):
        self.name = name
        self._gen = gen
        self._scale: list[int] = []
        self._lock = threading.Lock()
        # smallest number the printed listings start from (triangular starts at 1)
        self.first_numeral = first_numeral
        if gen(0) != 1:
            raise ValueError("scale must start at 1")

    def scale_up_to(self, a: int) -> list[int]:
        """Prefix of the scale covering every value <= a, plus one more entry."""
        return list(self._grow_past(a))

    def _grow_past(self, a: int) -> list[int]:
        # hands back the live list; callers must not mutate it
        with self._lock:
            if not self._scale:
                self._scale.append(self._gen(0))
            while self._scale[-1] <= a:
                nxt = self._gen(len(self._scale))
                if nxt <= self._scale[-1]:
                    raise ValueError(f"scale not strictly increasing at {len(self._scale)}")
                self._scale.append(nxt)
            return self._scale

    def g(self, i: int) -> int:
        with self._lock:
            while len(self._scale) <= i:
                self._scale.append(self._gen(len(self._scale)))
            return self._scale[i]

    def digit_bound(self, i: int) -> int:
        """Largest digit allowed at position i: floor((g_{i+1} - 1) / g_i)."""
        return (self.g(i + 1) - 1) // self.g(i)

    def __repr__(self) -> str:
        return f"GeneralizedBase({self.name!r})"


def _prime_scale(i: int) -> int:
    return 1 if i == 0 else PRIMES.nth(i)


def _double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2))


def prime_base() -> GeneralizedBase:
    return GeneralizedBase("prime", _prime_scale)


def m_power_base(m: int) -> GeneralizedBase:
    # zero is not a usable summand, so position 0 holds 1 = 1**m
    return GeneralizedBase(f"power{m}", lambda i: (i + 1) ** m)


def square_base() -> GeneralizedBase:
    b = m_power_base(2)
    b.name = "square"
    return b


def factorial_base() -> GeneralizedBase:
    return GeneralizedBase("factorial", lambda i: math.factorial(i + 1))


def double_factorial_base() -> GeneralizedBase:
    return GeneralizedBase("double_factorial", lambda i: _double_factorial(i + 1), first_numeral=1)


def triangular_base() -> GeneralizedBase:
    return GeneralizedBase("triangular", lambda i: (i + 1) * (i + 2) // 2, first_numeral=1)


def geometric_base(p: int) -> GeneralizedBase:
    if p < 2:
        raise ValueError("p must be >= 2")
    return GeneralizedBase(f"geometric{p}", lambda i: p**i)


def custom_base(values: list[int]) -> GeneralizedBase:
    vals = list(values)

    def gen(i: int) -> int:
        if i >= len(vals):
            raise IndexError("custom scale exhausted")
        return vals[i]

    return GeneralizedBase("custom", gen)


BUILTIN_BASES: dict[str, Callable[[], GeneralizedBase]] = {
    "prime": prime_base,
    "square": square_base,
    "cube": lambda: m_power_base(3),
    "factorial": factorial_base,
    "double_factorial": double_factorial_base,
    "triangular": triangular_base,
    "decimal": lambda: geometric_base(10),
    "binary": lambda: geometric_base(2),
}


def get_base(name: str) -> GeneralizedBase:
    if name in BUILTIN_BASES:
        return BUILTIN_BASES[name]()
    if name.startswith("power") and name[5:].isdigit():
        return m_power_base(int(name[5:]))
    if name.startswith("geometric") and name[9:].isdigit():
        return geometric_base(int(name[9:]))
    raise ValueError(f"unknown base {name!r}")


@dataclass(frozen=True)
class RadixNumeral:
    base: GeneralizedBase
    digits: tuple[int, ...]  # least significant first

    def __str__(self) -> str:
        ds = self.digits[::-1]
        if all(d < 10 for d in ds):
            return "".join(map(str, ds))
        return ":".join(map(str, ds))

    def as_int_string(self) -> int:
        """The numeral read as a decimal digit string (only for digits < 10)."""
        return int(str(self))


def encode(a: int, base: GeneralizedBase) -> RadixNumeral:
    """Greedy expansion of a >= 0."""
    if a < 0:
        raise ValueError("a must be non-negative")
    if a == 0:
        return RadixNumeral(base, (0,))
    scale = base._grow_past(a)
    top = bisect.bisect_right(scale, a) - 1
    digits = [0] * (top + 1)
    rest, i = a, top
    while rest:
        # jump straight to the next position that takes something
        i = bisect.bisect_right(scale, rest, 0, i + 1) - 1
        digits[i], rest = divmod(rest, scale[i])
    return RadixNumeral(base, tuple(digits))


def decode(x: RadixNumeral) -> int:
    """Sum of digit * scale value; refuses digits beyond their positional bound."""
    total = 0
    for i in itertools.compress(range(len(x.digits)), x.digits):  # nonzero positions only
        d = x.digits[i]
        if d < 0 or d > x.base.digit_bound(i):
            raise ValueError(f"digit {d} at position {i} exceeds bound {x.base.digit_bound(i)}")
        total += d * x.base.g(i)
    return total


def parse_numeral(text: str, base: GeneralizedBase) -> RadixNumeral:
    parts = text.split(":") if ":" in text else list(text)
    digits = tuple(int(p) for p in reversed(parts))
    # strip leading zeros of the printed form (high positions)
    while len(digits) > 1 and digits[-1] == 0:
        digits = digits[:-1]
    return RadixNumeral(base, digits)


def superior_part_summands(a: int, base: GeneralizedBase) -> list[int]:
    """Chain of largest scale values: a = g(a) + g(a - g(a)) + ..."""
    if a < 1:
        raise ValueError("a must be >= 1")
    scale = base.scale_up_to(a)
    out = []
    while a:
        g = max(v for v in scale if v <= a)
        out.append(g)
        a -= g
    return out


# -- factorial-base arithmetic ------------------------------------------------------
# position i (0-based, least significant) counts (i+1)! and works in base i+2


def factorial_add(x: RadixNumeral, y: RadixNumeral) -> RadixNumeral:
    n = max(len(x.digits), len(y.digits))
    xs = list(x.digits) + [0] * (n - len(x.digits))
    ys = list(y.digits) + [0] * (n - len(y.digits))
    out, carry = [], 0
    for i in range(n):
        s = xs[i] + ys[i] + carry
        carry, d = divmod(s, i + 2)
        out.append(d)
    i = n
    while carry:
        carry, d = divmod(carry, i + 2)
        out.append(d)
        i += 1
    return RadixNumeral(x.base, tuple(_trim(out)))


def factorial_sub(x: RadixNumeral, y: RadixNumeral) -> RadixNumeral:
    """x - y, borrowing from the next position up (which then lends i+2 units)."""
    n = max(len(x.digits), len(y.digits))
    xs = list(x.digits) + [0] * (n - len(x.digits))
    ys = list(y.digits) + [0] * (n - len(y.digits))
    for i in range(n):
        if xs[i] < ys[i]:
            j = i + 1
            while j < n and xs[j] == 0:
                j += 1
            if j == n:
                raise ValueError("negative result")
            # 1001 -> 0401 -> 0331: each borrow turns one unit into base-many below
            while j > i:
                xs[j] -= 1
                xs[j - 1] += j + 1
                j -= 1
        xs[i] -= ys[i]
    return RadixNumeral(x.base, tuple(_trim(xs)))


def _trim(ds: list[int]) -> list[int]:
    while len(ds) > 1 and ds[-1] == 0:
        ds.pop()
    return ds


# -- worktables --------------------------------------------------------------------


@dataclass
class WorkTable:
    columns: tuple[str, ...]
    rows: list[tuple[int, ...]] = field(default_factory=list)
    total: int = 0
    footer: dict = field(default_factory=dict)

    def render(self) -> str:
        cells = [list(self.columns)] + [[str(v) for v in r] for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = [" | ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
        lines.append(f"total {self.total}")
        for k, v in self.footer.items():
            lines.append(f"{k} {v}")
        return "\n".join(lines)


def romanian_multiply(a: int, b: int, k: int = 2) -> tuple[int, WorkTable]:
    """Multiply by scaling a up and b down by k, summing rest-weighted rows."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if a < 0 or b < 0:
        raise ValueError("operands must be non-negative")
    table = WorkTable(("A", "B", "r", "P"))
    A, B = a, b
    while True:
        r = B % k
        table.rows.append((A, B, r, A * r))
        if B < k:
            break
        A, B = A * k, B // k
    table.total = sum(row[3] for row in table.rows)
    return table.total, table


def divide_by_power(a: int, k: int, n: int) -> tuple[int, int, WorkTable]:
    """a // k**n and a % k**n from n successive divisions by k.

    Rows are (R, P, r, A, Q): rest r of A mod k, weight P = k**(i-1),
    R = r * P, and Q the running power of k. The last row holds the quotient.
    """
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    if a < 0:
        raise ValueError("a must be non-negative")
    table = WorkTable(("R", "P", "r", "A", "Q"))
    A, Q, P = a, k**n, 1
    for _ in range(n):
        r = A % k
        table.rows.append((r * P, P, r, A, Q))
        A, Q, P = A // k, Q // k, P * k
    rest = sum(row[0] for row in table.rows)
    table.total = rest
    table.footer = {"quotient": A}
    return A, rest, table


# -- stepped products and sums --------------------------------------------------------


def _fold_terms(n: int, k: int, bound: Optional[int]) -> list[int]:
    if not n > k >= 1:
        raise ValueError("need n > k >= 1")
    limit = n if bound is None else bound
    out, i = [], 0
    while True:
        t = n - k * i
        if abs(t) > limit and t < 0:
            break
        if 0 < abs(t) <= limit:
            out.append(t)
        i += 1
    return out


def stepped_product(n: int, k: int, bound: Optional[int] = None) -> int:
    """Product of n - k*i over i >= 0 with 0 < |n - k*i| <= bound (default n)."""
    return math.prod(_fold_terms(n, k, bound))


def stepped_sum(n: int, k: int, absolute: bool = False) -> int:
    """Signed (or absolute) sum over the same index set as stepped_product."""
    terms = _fold_terms(n, k, None)
    return sum(abs(t) for t in terms) if absolute else sum(terms)


def stepped_sum_extended(n: int, m: int, k: int, absolute: bool = False) -> int:
    """Sum of n - k*i for i = 0 .. floor((n+m)/k)."""
    if not n > k >= 1 or m < 0:
        raise ValueError("need n > k >= 1 and m >= 0")
    terms = [n - k * i for i in range((n + m) // k + 1)]
    return sum(abs(t) for t in terms) if absolute else sum(terms)
