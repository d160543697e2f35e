"""Integer plumbing shared by every other module.

Digits, primality, factorization, integer roots, digit permutations and a
handful of digit-pattern predicates. Everything here is a pure function of
its arguments; the only state is a small prime table that grows on demand.
"""
from __future__ import annotations

import bisect
import itertools
import math
import random
import threading
from typing import Iterator, Optional

import numpy as np

# -- digits -----------------------------------------------------------------


def digits_of(n: int, base: int = 10) -> list[int]:
    """Digits of n in `base`, most significant first. digits_of(0) == [0]."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [0]
    if base == 10:
        return [int(c) for c in str(n)]
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    out.reverse()
    return out


def value_of(digits: list[int], base: int = 10) -> int:
    if base < 2:
        raise ValueError("base must be >= 2")
    v = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        v = v * base + d
    return v


def digit_count(n: int, base: int = 10) -> int:
    # 0 has one digit, which is what concat relies on
    if n == 0:
        return 1
    if base == 10:
        return len(str(abs(n)))
    return len(digits_of(abs(n), base))


def concat(a: int, b: int) -> int:
    """Decimal juxtaposition: concat(12, 3) == 123, concat(5, 0) == 50."""
    return a * 10 ** digit_count(b) + b


def concat_all(values) -> int:
    return int("".join(str(v) for v in values)) if values else 0


def reverse_int(n: int) -> int:
    return int(str(n)[::-1])


def digit_sum(n: int) -> int:
    return sum(digits_of(n))


def digit_product(n: int) -> int:
    return math.prod(digits_of(n))


# -- primality ----------------------------------------------------------------

# Bases that make Miller-Rabin exact for n < 3.3e24, which covers 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
DEFAULT_MR_ROUNDS = 40


def _mr_witness(a: int, d: int, s: int, n: int) -> bool:
    """True if `a` proves n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Primality test.

    Deterministic below 2**64 (fixed witness set). Above that, `rounds`
    random bases are tried; a composite survives with probability at most
    4**-rounds. The random bases come from a generator seeded with n, so the
    answer for a given n never changes between runs.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return not any(_mr_witness(a, d, s, n) for a in _MR_BASES)
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if _mr_witness(a, d, s, n):
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = max(2, n + 1)
    while not is_prime(c):
        c += 1
    return c


def prime_sieve(limit: int) -> np.ndarray:
    """Boolean array `flags` with flags[k] true iff k is prime, 0 <= k <= limit."""
    flags = np.ones(max(limit + 1, 2), dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags[: limit + 1]


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    return np.flatnonzero(prime_sieve(limit)).tolist()


class PrimeTable:
    """Sorted primes, extended by doubling. Readers never see a half-built list."""

    def __init__(self, initial_bound: int = 1 << 12):
        self._lock = threading.Lock()
        self._bound = initial_bound
        self._primes = primes_up_to(initial_bound)

    def _grow_to(self, bound: int) -> None:
        with self._lock:
            if bound <= self._bound:
                return
            new_bound = max(bound, 2 * self._bound)
            self._primes = primes_up_to(new_bound)
            self._bound = new_bound

    def nth(self, n: int) -> int:
        """n-th prime, 1-indexed (nth(1) == 2)."""
        if n < 1:
            raise ValueError("index must be >= 1")
        while len(self._primes) < n:
            self._grow_to(2 * self._bound)
        return self._primes[n - 1]

    def up_to(self, x: int) -> list[int]:
        if x > self._bound:
            self._grow_to(x)
        primes = self._primes
        return primes[: bisect.bisect_right(primes, x)]

    def count_up_to(self, x: int) -> int:
        return len(self.up_to(x))

    def iter(self) -> Iterator[int]:
        i = 1
        while True:
            yield self.nth(i)
            i += 1


PRIMES = PrimeTable()


def nth_prime(n: int) -> int:
    return PRIMES.nth(n)


def iter_primes() -> Iterator[int]:
    return PRIMES.iter()


# -- factorization ------------------------------------------------------------


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        y = x = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> list[tuple[int, int]]:
    """Canonical factorization as [(prime, exponent), ...] with increasing primes."""
    if n < 2:
        raise ValueError("factorize needs n >= 2")
    acc: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            acc[p] = acc.get(p, 0) + 1
            n //= p
    f = 17
    # cheap trial division first; Pollard rho only for the stubborn cofactor
    while n > 1 and f * f <= n and f < 10_000:
        while n % f == 0:
            acc[f] = acc.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        _factor_into(n, acc)
    return sorted(acc.items())


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def largest_prime_factor(n: int) -> int:
    return factorize(n)[-1][0]


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


# -- roots and powers ---------------------------------------------------------


def integer_root(n: int, m: int) -> int:
    """Largest r with r**m <= n."""
    if m < 2:
        raise ValueError("root order must be >= 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return n
    if m == 2:
        return math.isqrt(n)
    if n.bit_length() < 1000 and n.bit_length() // m < 48:
        # the float guess is within a step or two while the root fits a double's mantissa
        r = int(round(n ** (1.0 / m)))
    else:
        # integer Newton from above; the start 2**ceil(bits/m) exceeds the root
        r = 1 << -(-n.bit_length() // m)
        while True:
            nxt = ((m - 1) * r + n // r ** (m - 1)) // m
            if nxt >= r:
                break
            r = nxt
    while r**m > n:
        r -= 1
    while (r + 1) ** m <= n:
        r += 1
    return r


def is_perfect_power(n: int) -> Optional[tuple[int, int]]:
    """(base, exponent) with the smallest exponent >= 2, or None."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n in (0, 1):
        return (n, 2)
    # the smallest exponent is always prime: r**(ab) is also (r**b)**a
    for e in primes_up_to(n.bit_length()):
        r = integer_root(n, e)
        if r**e == n:
            return (r, e)
    return None


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_cube(n: int) -> bool:
    return n >= 0 and integer_root(n, 3) ** 3 == n


# -- digit permutations and patterns ------------------------------------------


def digit_permutations(n: int, nontrivial_only: bool = False) -> set[int]:
    """Values of every rearrangement of n's digits.

    Leading zeros are allowed in the rearrangement and vanish in the value,
    so 100 yields 1 (from "001"). With nontrivial_only the identity
    arrangement is excluded by position, which means a repeated-digit number
    such as 11 still reaches itself through swapping its equal digits.
    """
    s = str(n)
    if len(s) == 1:
        return set() if nontrivial_only else {n}
    out = set()
    ident = tuple(range(len(s)))
    for perm in itertools.permutations(range(len(s))):
        if nontrivial_only and perm == ident:
            continue
        out.add(int("".join(s[i] for i in perm)))
    return out


def distinct_digit_arrangements(n: int) -> set[int]:
    """Values of distinct digit multiset arrangements (fast path for long numbers)."""
    s = sorted(str(n))
    out = set()
    for perm in set(itertools.permutations(s)):
        out.add(int("".join(perm)))
    return out


def is_palindrome(n: int) -> bool:
    s = str(n)
    return s == s[::-1]


def gsp_check(n: int) -> bool:
    """Block-palindrome test.

    True when the decimal digits split into blocks B1..Bk Bk..B1 or
    B1..B(k-1) Bk B(k-1)..B1 with k >= 2 in the odd form; no block may
    start with a 0.
    """
    if n < 10:
        raise ValueError("need at least two digits")
    return _block_mirror(str(n), top=True)


def _block_mirror(s: str, top: bool) -> bool:
    # peel matching outer blocks; whatever is left in the middle is one block
    if not top and s and s[0] != "0":
        return True  # s is a valid single centre block
    if s == "":
        return not top
    for L in range(1, len(s) // 2 + 1):
        head, tail = s[:L], s[-L:]
        if head == tail and head[0] != "0":
            if _block_mirror(s[L:-L], top=False):
                return True
    return False


def generalized_period(n: int) -> tuple[frozenset[int], int, int]:
    """(distinct digits, number of complete groups, number of distinct digits).

    Groups are cut greedily from the left: a group closes as soon as it has
    seen every distinct digit; an incomplete remainder joins the last group.
    """
    ds = digits_of(n)
    alphabet = frozenset(ds)
    groups, seen = 0, set()
    for d in ds:
        seen.add(d)
        if seen == alphabet:
            groups += 1
            seen = set()
    return alphabet, groups, len(alphabet)


def digit_position(n: int, k: int) -> int:
    """Highest decimal position (units = 0) holding digit k, or -1."""
    if not 0 <= k <= 9:
        raise ValueError("k must be a decimal digit")
    ds = digits_of(n)
    for i, d in enumerate(ds):
        if d == k:
            return len(ds) - 1 - i
    return -1


def counter(a: int, b: int) -> int:
    """How many times digit a occurs in b."""
    return str(b).count(str(a))


def proper_divisor_product(n: int) -> int:
    return math.prod(divisors(n)[:-1]) if n > 1 else 1


def classify_by_proper_divisor_product(n: int) -> tuple[bool, bool]:
    """(simple, impotent): product of proper divisors <= n, resp. < n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    prod = proper_divisor_product(n)
    return prod <= n, prod < n


def wrong_number_check(n: int) -> bool:
    """True if n reappears in the sequence seeded by its own digits.

    Each new term is the product of the previous k terms (k = digit count).
    We stop once a term exceeds n or the window is all zeros.
    """
    if n < 10:
        raise ValueError("need at least two digits")
    window = digits_of(n)
    k = len(window)
    while True:
        nxt = math.prod(window[-k:])
        if nxt == n:
            return True
        if nxt > n or (nxt == 0 and all(v == 0 for v in window[-k:])):
            return False
        if nxt == 0 and 0 in window[-k:]:
            # zero in window: all later products are zero
            return False
        window.append(nxt)
        # products never shrink once every window entry is >= 1, except for
        # the all-ones window which is stuck at 1
        if all(v == 1 for v in window[-k:]):
            return False
