"""Arithmetic functions: the factorial-divisibility family and its relatives.

The central function is the Kempner function S(n), the least m with n | m!.
It is computed from the factorization as the max over prime powers of the
least m whose factorial holds p**k, using Legendre's formula. Around it sit
the triangular analogue Z, quotients, double-factorial variants, power
complements and residues, f-parts, divisibility indexes of left factorials
and factorial sums, the near-primordial index, and assorted checks of
classical congruences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .numeric_core import (
    PRIMES,
    divisors,
    factorize,
    integer_root,
    is_prime,
    largest_prime_factor,
    p_adic_valuation,
    primes_up_to,
    totient,
)

# -- the factorial-divisibility core ------------------------------------------


def legendre(m: int, p: int) -> int:
    """Exponent of prime p in m!."""
    total = 0
    while m:
        m //= p
        total += m
    return total


@lru_cache(maxsize=1 << 16)
def S_p(p: int, k: int) -> int:
    """Least m with p**k | m!."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    # answer is a multiple of p in [p, p*k]; bisect on the multiplier
    lo, hi = 1, k
    while lo < hi:
        mid = (lo + hi) // 2
        if legendre(mid * p, p) >= k:
            hi = mid
        else:
            lo = mid + 1
    return lo * p


@lru_cache(maxsize=1 << 16)
def S(n: int) -> int:
    """Kempner function: least m with n | m!, with S(1) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return max(S_p(p, e) for p, e in factorize(n))


def S_first_kind(n: int, a: int, exponent_rule: str = "product") -> int:
    """Least k with k! divisible by every u**(r*a) over the prime powers u**r of n.

    exponent_rule="power" uses u**(r**a) instead of u**(r*a).
    """
    if n < 1 or a < 1:
        raise ValueError("n and a must be >= 1")
    if n == 1:
        return 1
    if exponent_rule == "product":
        return max(S_p(p, r * a) for p, r in factorize(n))
    if exponent_rule == "power":
        return max(S_p(p, r**a) for p, r in factorize(n))
    raise ValueError(f"unknown exponent rule {exponent_rule!r}")


def S_second_kind(k: int, n: int) -> int:
    return S_first_kind(n, k)


def S_third_kind(a_seq: Callable[[int], int], b_seq: Callable[[int], int], n: int,
                 probe: int = 12) -> int:
    """S_first_kind(a_seq(n), b_seq(n)), refusing the two degenerate index pairs."""
    idx = range(1, probe + 1)
    if all(a_seq(i) == 1 and b_seq(i) == i for i in idx):
        raise ValueError("a_n = 1 with b_n = n is excluded")
    if all(a_seq(i) == i and b_seq(i) == 1 for i in idx):
        raise ValueError("a_n = n with b_n = 1 is excluded")
    return S_first_kind(a_seq(n), b_seq(n))


def S_table(limit: int) -> np.ndarray:
    """S(0..limit) as an int64 array (index 0 holds 0), built prime power by prime power."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out = np.zeros(limit + 1, dtype=np.int64)
    out[1:] = 1
    for p in primes_up_to(limit):
        q, e = p, 1
        while q <= limit:
            # S_p grows with e and p**e multiples nest, so later writes dominate
            v = p if e == 1 else S_p(p, e)
            view = out[q::q]
            np.maximum(view, v, out=view)
            q *= p
            e += 1
    return out


@lru_cache(maxsize=1 << 16)
def Z(n: int) -> int:
    """Least m with n | m(m+1)/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # m <= 2n-1 always works; scan is fine at desk scale
    for m in range(1, 2 * n):
        if m * (m + 1) // 2 % n == 0:
            return m
    raise AssertionError("unreachable")


def quotient(n: int) -> int:
    """Least k with n*k a factorial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.factorial(S(n)) // n


def double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2)) if m > 0 else 1


def double_factorial_df(n: int) -> int:
    """Least m with n | m!!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m, even, odd = 1, 2, 1
    # walk both parity chains together: odd = m!! for odd m, even for even m
    while True:
        if m % 2:
            if odd % n == 0:
                return m
        elif even % n == 0:
            return m
        m += 1
        if m % 2:
            odd *= m
        elif m > 2:
            even *= m


def double_factorial_complement(n: int) -> int:
    """Least k with n*k a double factorial (m!! grows with m, so use the least m)."""
    return double_factorial(double_factorial_df(n)) // n


def power_complement(n: int, m: int = 2) -> int:
    """Least k making n*k a perfect m-th power."""
    if n < 1 or m < 2:
        raise ValueError("need n >= 1, m >= 2")
    if n == 1:
        return 1
    return math.prod(p ** ((-e) % m) for p, e in factorize(n))


def prime_additive_complement(n: int) -> int:
    """Least k >= 0 with n + k prime."""
    k = 0
    while not is_prime(n + k):
        k += 1
    return k


def m_power_residue(n: int, m: int = 2) -> int:
    if n < 1 or m < 2:
        raise ValueError("need n >= 1, m >= 2")
    if n == 1:
        return 1
    return math.prod(p ** min(m - 1, e) for p, e in factorize(n))


def exponent(n: int, p: int = 2) -> int:
    """p-adic valuation of n."""
    if p < 2:
        raise ValueError("p must be >= 2")
    return p_adic_valuation(n, p)


# -- f-parts --------------------------------------------------------------------


@dataclass(frozen=True)
class FPartSpec:
    """Strictly increasing f plus a direction.

    `f` maps an index k >= start to a value; built-ins are primes, squares,
    cubes and factorials.
    """

    f: Callable[[int], int]
    start: int = 0
    direction: str = "inferior"

    def values_around(self, x) -> tuple[int, int]:
        # (largest value <= x, smallest value >= x); galloping then bisection
        k = self.start
        if self.f(k) > x:
            return (None, self.f(k))  # type: ignore[return-value]
        step = 1
        while self.f(k + step) <= x:
            k += step
            step *= 2
        lo, hi = k, k + step  # f(lo) <= x < f(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.f(mid) <= x:
                lo = mid
            else:
                hi = mid
        below = self.f(lo)
        above = below if below == x else self.f(hi)
        return below, above


def _prime_at(k: int) -> int:
    return PRIMES.nth(k)


F_PRIMES = lambda d="inferior": FPartSpec(_prime_at, 1, d)  # noqa: E731
F_SQUARES = lambda d="inferior": FPartSpec(lambda k: k * k, 0, d)  # noqa: E731
F_CUBES = lambda d="inferior": FPartSpec(lambda k: k**3, 0, d)  # noqa: E731
F_FACTORIALS = lambda d="inferior": FPartSpec(math.factorial, 1, d)  # noqa: E731

F_PART_KINDS = {"primes": F_PRIMES, "squares": F_SQUARES, "cubes": F_CUBES,
                "factorials": F_FACTORIALS}


def f_part(spec: FPartSpec, x) -> int:
    """Largest f-value <= x (inferior) or smallest f-value >= x (superior)."""
    below, above = spec.values_around(x)
    if spec.direction == "inferior":
        if below is None:
            raise ValueError(f"{x} is below the smallest value of f")
        return below
    if spec.direction == "superior":
        return above
    raise ValueError(f"unknown direction {spec.direction!r}")


def fractional_f_part(spec: FPartSpec, x):
    """x minus the inferior part, or the superior part minus x."""
    v = f_part(spec, x)
    return x - v if spec.direction == "inferior" else v - x


def law_complement(in_range: Callable[[int], bool], law: Callable[[int, int], int],
                   x: int, bound: int = 10**6, k_start: int = 0) -> int:
    """Least k with law(x, k) in the range of g (membership supplied by `in_range`)."""
    for k in range(k_start, bound + 1):
        if in_range(law(x, k)):
            return k
    raise ValueError(f"no complement for {x} with k <= {bound}")


# -- power-divisibility indexes -------------------------------------------------


def radical(n: int) -> int:
    return 1 if n == 1 else math.prod(p for p, _ in factorize(n))


def SP(n: int) -> int:
    """Least m with n | m**m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    r = radical(n)
    m = r  # any answer is a multiple of the radical
    fs = factorize(n)
    while True:
        if all(m * p_adic_valuation(m, p) >= e for p, e in fs):
            return m
        m += r


def ceil_k(n: int, k: int) -> int:
    """Least m with n | m**k."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1, k >= 1")
    if n == 1:
        return 1
    return math.prod(p ** -(-e // k) for p, e in factorize(n))


# -- factorial sums, near-primordial --------------------------------------------


def SK(p: int) -> Optional[int]:
    """Least m with p | 0! + 1! + ... + (m-1)!, or None if no m exists.

    Terms i! vanish mod p for i >= p, so the residues are periodic after
    m = p and checking m <= p settles the question.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s, f = 0, 1
    for m in range(1, p + 1):
        s = (s + f) % p  # s = sum_{i<m} i!
        f = f * m % p
        if s == 0:
            return m
    return None


def SW(p: int) -> Optional[int]:
    """Least m with p | 1! + 2! + ... + m!, or None if no m exists (same periodicity)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s, f = 0, 1
    for m in range(1, p + 1):
        f = f * m % p
        s = (s + f) % p
        if s == 0:
            return m
    return None


def SNTP(n: int, search_bound: int = 10**4) -> Optional[int]:
    """Least prime q <= search_bound with n | q#-1, q# or q#+1 (q# = primorial)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    P = 1
    for q in PRIMES.up_to(search_bound):
        P = P * q % n
        if P in (0, 1, n - 1) or n == 1:
            return q
    return None


def residual_L(x: int, m: int) -> int:
    """Product of x + c over the reduced residue system c mod m."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return math.prod(x + c for c in range(1, m) if math.gcd(c, m) == 1)


# -- congruence theorems --------------------------------------------------------


def coprime_criterion(a: int, b: int) -> bool:
    """a^(phi(b)+1) + b^(phi(a)+1) == a + b (mod ab) for coprime a, b."""
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise ValueError("need coprime positive a, b")
    mod = a * b
    return (pow(a, totient(b) + 1, mod) + pow(b, totient(a) + 1, mod)) % mod == (a + b) % mod


def generalized_euler(a: int, m: int) -> tuple[int, int, bool]:
    """(m_s, s, verified) for the Euler generalization a^(phi(m_s)+s) == a^s (mod m).

    Split m repeatedly: d0 = gcd(a, m), m0 = m/d0, then d_{i} = gcd(d_{i-1}, m_{i-1})
    and m_i = m_{i-1}/d_i until the gcd is 1. s counts the nontrivial splits.
    """
    if m == 0:
        raise ValueError("m must be non-zero")
    m_abs = abs(m)
    d = math.gcd(a, m_abs)
    cur = m_abs
    s = 0
    while d != 1:
        cur //= d
        s += 1
        d = math.gcd(d, cur)
    m_s = cur
    lhs = pow(a, totient(m_s) + s, m_abs) if m_abs > 1 else 0
    rhs = pow(a, s, m_abs) if m_abs > 1 else 0
    return m_s, s, lhs == rhs


def divisibility_check(a: int, m: int) -> bool:
    """m | (a^m - a)(m-1)!."""
    if m <= 0:
        raise ValueError("m must be > 0")
    return (pow(a, m) - a) * math.factorial(m - 1) % m == 0


def inequality_check(n: int, k: int) -> bool:
    """n! > k^(n-k+1) * prod_{i<k} floor((n-i)/k)!  (floored quotients)."""
    if n < 1 or k < 1:
        raise ValueError("n, k must be >= 1")
    rhs = k ** (n - k + 1) if n - k + 1 >= 0 else Fraction(1, k ** (k - n - 1))
    for i in range(k):
        rhs *= math.factorial(max((n - i) // k, 0))
    return math.factorial(n) > rhs


# -- iteration -------------------------------------------------------------------


def _d(n):
    return len(divisors(n))


def _sigma(n):
    return sum(divisors(n))


def _gd(n):
    return 1 if n == 1 else n // factorize(n)[0][0]


def _pi(n):
    return PRIMES.count_up_to(n)


def _omega(n):
    return 0 if n == 1 else len(factorize(n))


def _P(n):
    return 1 if n == 1 else largest_prime_factor(n)


SELF_MAPS: dict[str, Callable[[int], int]] = {
    "d": _d, "sigma": _sigma, "gd": _gd, "pi": _pi, "P": _P, "omega": _omega,
}


@dataclass(frozen=True)
class IterationSpec:
    g: Callable[[int], int] | str
    kind: str  # SI1, SI2, SI3, increasing, decreasing

    def func(self) -> Callable[[int], int]:
        return SELF_MAPS[self.g] if isinstance(self.g, str) else self.g


def iterate(spec: IterationSpec, x: int, b: Optional[int] = None, max_steps: int = 10**6) -> int:
    """Number of applications of g until the kind's stopping condition holds.

    SI1 / decreasing: until the value is a fixed point of g.
    SI2 / increasing: until the value is >= b.
    SI3: until the value is <= b.
    """
    g = spec.func()
    kind = spec.kind
    if kind in ("SI2", "increasing", "SI3") and b is None:
        raise ValueError(f"{kind} needs a bound b")
    cur, k = x, 0
    while k <= max_steps:
        if kind in ("SI1", "decreasing"):
            nxt = g(cur)
            if nxt > cur:
                raise ValueError(f"g({cur}) = {nxt} exceeds its argument")
            if nxt == cur:
                return k
        elif kind in ("SI2", "increasing"):
            if k and cur >= b:
                return k
            nxt = g(cur)
            if nxt <= cur:
                raise ValueError(f"g({cur}) = {nxt} does not exceed its argument")
        elif kind == "SI3":
            if k and cur <= b:
                return k
            nxt = g(cur)
            if nxt >= cur:
                raise ValueError(f"g({cur}) = {nxt} is not below its argument")
        else:
            raise ValueError(f"unknown iteration kind {kind!r}")
        cur = nxt
        k += 1
    raise RuntimeError("iteration did not settle")


# -- indicator functions ----------------------------------------------------------


def anti_prime(*ns: int) -> int:
    """0 if every argument is prime, else 1."""
    return 0 if all(is_prime(n) for n in ns) else 1


def anti_coprime(values: Sequence[int], k: Optional[int] = None, pairwise: bool = False) -> int:
    """0 if the values are coprime (gcd of all is 1, or pairwise when asked), else 1."""
    if k is not None and len(values) != k:
        raise ValueError("expected exactly k values")
    if pairwise:
        ok = all(math.gcd(a, b) == 1 for a, b in combinations(values, 2))
    else:
        ok = math.gcd(*values) == 1
    return 0 if ok else 1


# -- functions built on S ----------------------------------------------------------


def s_ratio_functions(which: str, x: int):
    if which == "S1":
        if x < 2:
            raise ValueError("S1 needs x >= 2")
        return Fraction(1, S(x))
    if which == "S2":
        return Fraction(S(x), x)
    if which == "S3":
        if x < 2:
            raise ValueError("S3 needs x >= 2")
        return Fraction(x, S(x))
    if which == "Fs":
        return sum(S_p(p, x) for p in PRIMES.up_to(x))
    if which == "Theta":
        return sum(S_p(p, x) for p in PRIMES.up_to(x) if x % p == 0)
    if which == "ThetaBar":
        return sum(S_p(p, x) for p in PRIMES.up_to(x) if x % p)
    raise ValueError(f"unknown function {which!r}")


def analogue_a(n: int) -> int:
    """Least m with n <= m!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m, f = 1, 1
    while f < n:
        m += 1
        f *= m
    return m


def lpf_equals_kempner(n: int) -> bool:
    """Largest prime factor of n equals S(n)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return largest_prime_factor(n) == S(n)


def metallic_mean(n: int, form: int = 1, convergents: int = 8) -> tuple[float, list[Fraction]]:
    """Positive root of x^2 - n x - 1 (form 1) or x^2 - x - n (form 2), plus convergents.

    Convergents come from the continued fraction of the root: [n; n, n, ...]
    for form 1, and from the exact periodic expansion of the quadratic surd
    for form 2 (a finite expansion when the root is an integer).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if form == 1:
        root = (n + math.sqrt(n * n + 4)) / 2
        terms = [n] * convergents
    elif form == 2:
        root = (1 + math.sqrt(1 + 4 * n)) / 2
        terms = _surd_cf(1, 1 + 4 * n, 2, convergents)
    else:
        raise ValueError("form must be 1 or 2")
    return root, _convergents(terms)


def _surd_cf(p: int, d: int, q: int, count: int) -> list[int]:
    """Continued fraction terms of (p + sqrt(d)) / q."""
    r = math.isqrt(d)
    if r * r == d:
        return [*_rational_cf(Fraction(p + r, q))][:count]
    # normalise so that q | d - p^2
    if (d - p * p) % q:
        p, d, q = p * abs(q), d * q * q, q * abs(q)
    out = []
    for _ in range(count):
        a = (p + r) // q if q > 0 else (p + r + 1) // q
        out.append(a)
        p = a * q - p
        q = (d - p * p) // q
    return out


def _rational_cf(x: Fraction):
    while True:
        a = x.numerator // x.denominator
        yield a
        x -= a
        if x == 0:
            return
        x = 1 / x


def _convergents(terms: list[int]) -> list[Fraction]:
    h0, h1, k0, k1 = 1, terms[0], 0, 1
    out = [Fraction(h1, k1)]
    for a in terms[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        out.append(Fraction(h1, k1))
    return out


# -- prime counts in progressions ---------------------------------------------------


def prime_count_in_progression(kind: str, limit: int, a: int = 1, b: int = 0) -> tuple[int, list[int]]:
    """Count (and list) prime terms with index 1..limit.

    kind: "a*p_n+b", "a^n+b", "n^n+1", "n^n-1".
    """
    if kind == "a*p_n+b":
        if math.gcd(a, b) != 1 and not (a == 1 and b == 0):
            raise ValueError("need gcd(a, b) = 1")
        terms = [a * PRIMES.nth(i) + b for i in range(1, limit + 1)]
    elif kind == "a^n+b":
        if a in (-1, 0, 1) or math.gcd(a, b) != 1:
            raise ValueError("need a not in {-1,0,1} and gcd(a, b) = 1")
        terms = [a**i + b for i in range(1, limit + 1)]
    elif kind == "n^n+1":
        terms = [i**i + 1 for i in range(1, limit + 1)]
    elif kind == "n^n-1":
        terms = [i**i - 1 for i in range(1, limit + 1)]
    else:
        raise ValueError(f"unknown progression {kind!r}")
    hits = [t for t in terms if is_prime(t)]
    return len(hits), hits


# -- AP-free subsets --------------------------------------------------------------------

CARDINALITY_MAX_N = 40


def cardinality_S(n: int, m: int = 3) -> int:
    """Largest subset of {1..n} containing no m-term arithmetic progression."""
    if n < 1 or m < 3:
        raise ValueError("need n >= 1 and m >= 3")
    if n > CARDINALITY_MAX_N:
        raise ValueError(f"exhaustive search is limited to n <= {CARDINALITY_MAX_N}")
    best = 0
    chosen: list[int] = []
    members = set()

    def closes_ap(x: int) -> bool:
        # x as the last term of an m-AP with difference d among chosen
        for d in range(1, (x - 1) // (m - 1) + 1):
            if all(x - j * d in members for j in range(1, m)):
                return True
        return False

    def dfs(x: int) -> None:
        nonlocal best
        if len(chosen) + (n - x + 1) <= best:
            return
        if x > n:
            best = max(best, len(chosen))
            return
        if not closes_ap(x):
            chosen.append(x)
            members.add(x)
            dfs(x + 1)
            members.discard(x)
            chosen.pop()
        dfs(x + 1)

    dfs(1)
    return best


def s_multiplicative_check(values: dict[int, int] | Callable[[int], int], N: int) -> list[tuple[int, int]]:
    """Coprime pairs (a, b), a <= b, ab <= N, where f(ab) != max(f(a), f(b))."""
    f = values.__getitem__ if isinstance(values, dict) else values
    bad = []
    for a in range(1, math.isqrt(N) + 1):
        for b in range(a, N // a + 1):
            if math.gcd(a, b) == 1 and f(a * b) != max(f(a), f(b)):
                bad.append((a, b))
    return bad


def divisor_product(n: int) -> int:
    return math.prod(divisors(n))


def integer_root_sequence(n: int, m: int = 2) -> int:
    return integer_root(n, m)


def iter_values(fn: Callable[[int], int], indices: Iterable[int]) -> list[int]:
    return [fn(i) for i in indices]
