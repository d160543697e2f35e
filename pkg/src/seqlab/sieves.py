"""Deletion sieves over the naturals, positional and value-based, behind one runner."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .numeric_core import factorize, is_perfect_power, is_prime, prime_sieve

POSITIONAL = {"binary", "trinary", "n_ary", "k_ary_consecutive", "consecutive", "general", "more_general"}
VALUE = {"cube_free", "m_power_free", "square_free", "irrational_root", "odd_sieve"}


@dataclass(frozen=True)
class SieveKind:
    name: str
    n: int = 0  # m for m_power_free, n for n_ary
    u: tuple[int, ...] = ()
    v: tuple[int, ...] = ()
    seed: Optional[int] = None
    choices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in POSITIONAL | VALUE | {"random"}:
            raise ValueError(f"unknown sieve {self.name!r}")
        if self.name in ("m_power_free", "n_ary") and self.n < 2:
            raise ValueError(f"{self.name} needs n >= 2")
        if self.name in ("general", "more_general"):
            if not self.u or self.u[0] <= 1 or any(b <= a for a, b in zip(self.u, self.u[1:])):
                raise ValueError("u must be a strictly increasing list with u_1 > 1")
        if self.name == "more_general":
            if len(self.v) != len(self.u) or any(not 1 <= vi < ui for vi, ui in zip(self.v, self.u)):
                raise ValueError("v must satisfy 1 <= v_i < u_i, one per u_i")
        if self.name == "random" and self.seed is None and not self.choices:
            raise ValueError("random sieve needs a seed or an explicit choice list")


def parse_kind(text: str, **params) -> SieveKind:
    """Build a kind from its text name plus keyword parameters (CLI helper)."""
    if text.startswith("m_power_free") or text == "n_ary":
        return SieveKind(text, n=params.get("n", 0))
    if text == "square_free":
        return SieveKind("square_free")
    return SieveKind(text, **{k: v for k, v in params.items() if v not in (None, ())})


@dataclass
class SieveRun:
    kind: SieveKind
    limit: int
    survivors: list[int]
    deletion_log: list[int] = field(default_factory=list)
    chosen: list[int] = field(default_factory=list)


# -- positional machinery --------------------------------------------------------


def _delete_every(lst: list[int], step: int, start: int = 0) -> tuple[list[int], int]:
    """Drop every step-th element of lst[start:], counting from lst[start]."""
    if step < 1:
        raise ValueError("step must be >= 1")
    head, tail = lst[:start], lst[start:]
    kept = [x for j, x in enumerate(tail) if (j + 1) % step]
    return head + kept, len(tail) - len(kept)


def _power_passes(lst: list[int], n: int) -> tuple[list[int], list[int]]:
    log, step = [], n
    while step <= len(lst):
        lst, d = _delete_every(lst, step)
        log.append(d)
        step *= n
    return lst, log


def _frozen_prefix_passes(lst: list[int], steps, offsets) -> tuple[list[int], list[int]]:
    """Step k: after a frozen prefix of length i, delete every u_k-th; then i += v_k."""
    log, i = [], 0
    for u, v in zip(steps, offsets):
        if i + u > len(lst):
            break
        lst, d = _delete_every(lst, u, i)
        log.append(d)
        i += v
    return lst, log


def _k_ary_passes(lst: list[int]) -> tuple[list[int], list[int]]:
    # pass k keeps k numbers then skips one, over the whole current list
    log, k = [], 2
    while k + 1 <= len(lst):
        lst, d = _delete_every(lst, k + 1)
        log.append(d)
        k += 1
    return lst, log


def _count_from(start: int):
    k = start
    while True:
        yield k
        k += 1


def _ones():
    while True:
        yield 1


def _random_sieve(kind: SieveKind, limit: int) -> SieveRun:
    alive = np.ones(limit + 1, dtype=bool)
    alive[0] = False
    chosen: list[int] = []
    log: list[int] = []
    rng = random.Random(kind.seed) if kind.seed is not None else None
    explicit = iter(kind.choices) if kind.choices else None
    last = 0
    while True:
        if explicit is not None:
            u = next(explicit, None)
            if u is None or u > limit:
                break
            if u <= last or not alive[u]:
                raise ValueError(f"choice {u} is not a remaining number above {last}")
        else:
            cands = [m for m in range(max(last + 1, 2), limit + 1) if alive[m]][:8]
            if not cands:
                break
            u = rng.choice(cands)
        before = int(alive.sum())
        # the first choice clears its whole divisor class; later ones only sweep above themselves
        lo = 1 if not chosen else u + 1
        for p, _ in factorize(u):
            first = max(p, ((lo + p - 1) // p) * p)
            alive[first::p] = False
        alive[u] = True
        log.append(before - int(alive.sum()))
        chosen.append(u)
        last = u
    return SieveRun(kind, limit, [int(x) for x in np.flatnonzero(alive)], log, chosen)


# -- value sieves -------------------------------------------------------------------


def _value_sieve(kind: SieveKind, limit: int) -> list[int]:
    alive = np.zeros(limit + 1, dtype=bool)
    name = kind.name
    if name in ("cube_free", "m_power_free", "square_free"):
        m = {"cube_free": 3, "square_free": 2}.get(name, kind.n)
        alive[2:] = True
        for p in np.flatnonzero(prime_sieve(int(limit ** (1 / m)) + 2)):
            q = int(p) ** m
            if q > limit:
                break
            alive[q::q] = False
    elif name == "irrational_root":
        alive[2:] = True
        base = 2
        while base * base <= limit:
            q = base * base
            while q <= limit:
                alive[q] = False
                q *= base
            base += 1
    elif name == "odd_sieve":
        alive[1::2] = True
        primes = np.flatnonzero(prime_sieve(limit + 2))
        shifted = primes[primes >= 3] - 2
        alive[shifted[shifted <= limit]] = False
    return [int(x) for x in np.flatnonzero(alive)]


def run_sieve(kind: SieveKind, limit: int) -> SieveRun:
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if kind.name in VALUE:
        return SieveRun(kind, limit, _value_sieve(kind, limit))
    if kind.name == "random":
        return _random_sieve(kind, limit)
    lst = list(range(1, limit + 1))
    name = kind.name
    if name in ("binary", "trinary", "n_ary"):
        n = {"binary": 2, "trinary": 3}.get(name, kind.n)
        lst, log = _power_passes(lst, n)
    elif name == "k_ary_consecutive":
        lst, log = _k_ary_passes(lst)
    elif name == "consecutive":
        lst, log = _frozen_prefix_passes(lst, _count_from(2), _ones())
    elif name == "general":
        lst, log = _frozen_prefix_passes(lst, kind.u, _ones())
    else:
        lst, log = _frozen_prefix_passes(lst, kind.u, kind.v)
    return SieveRun(kind, limit, lst, log)


def survivor_predicate(kind: SieveKind, n: int) -> bool:
    """Direct membership test for the value sieves."""
    name = kind.name
    if name not in VALUE:
        raise ValueError(f"{name} has no closed survivor predicate")
    if name == "odd_sieve":
        return n % 2 == 1 and not is_prime(n + 2)
    if n < 2:
        return False
    if name == "irrational_root":
        return is_perfect_power(n) is None
    m = {"cube_free": 3, "square_free": 2}.get(name, kind.n)
    return all(e < m for _, e in factorize(n))


def sieve_prime_stats(run: SieveRun) -> dict:
    """Prime and composite counts among survivors (the infinitude conjectures are only observed)."""
    primes = sum(1 for x in run.survivors if is_prime(x))
    return {"survivors": len(run.survivors), "primes": primes, "non_primes": len(run.survivors) - primes}
