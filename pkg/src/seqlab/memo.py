"""On-disk memo cache for S, Z and S_p tables.

A cache file is one ASCII header line, `SEQLAB-CACHE <version> <function> <lo> <hi> int64le`,
followed by hi - lo + 1 little-endian int64 records. Files that fail validation are ignored
and the values recomputed.
"""
from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from . import arith_functions as af

CACHE_ENV = "SEQLAB_CACHE_DIR"
MAGIC = "SEQLAB-CACHE"
CACHE_VERSION = 1


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "seqlab")


def cache_path(fn: str, lo: int, hi: int) -> Path:
    return cache_dir() / f"{fn.replace(':', '_')}_{lo}_{hi}.bin"


def cached_values(fn: str, lo: int, hi: int) -> np.ndarray:
    """Values of a cacheable function over [lo, hi], computed directly."""
    if fn == "S":
        return af.S_table(hi)[lo:]
    if fn == "Z":
        return np.array([af.Z(n) for n in range(lo, hi + 1)], dtype=np.int64)
    if fn.startswith("S_p:"):
        p = int(fn[4:])
        return np.array([af.S_p(p, k) for k in range(lo, hi + 1)], dtype=np.int64)
    raise ValueError(f"{fn} is not cacheable (S, Z, S_p:<prime>)")


def cache_write(fn: str, lo: int, hi: int, values: np.ndarray) -> Path:
    path = cache_path(fn, lo, hi)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"{MAGIC} {CACHE_VERSION} {fn} {lo} {hi} int64le\n".encode()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(np.asarray(values, dtype="<i8").tobytes())
    return path


def cache_read(path: Path) -> Optional[tuple[dict, np.ndarray]]:
    """Header and records, or None when the file is missing or fails validation."""
    try:
        with open(path, "rb") as fh:
            line = fh.readline().decode("ascii")
            body = fh.read()
        magic, version, fn, lo, hi, layout = line.split()
        lo, hi = int(lo), int(hi)
    except (OSError, ValueError, UnicodeDecodeError):
        return None
    if magic != MAGIC or int(version) != CACHE_VERSION or layout != "int64le":
        return None
    if len(body) != 8 * (hi - lo + 1):
        return None
    return {"function": fn, "lo": lo, "hi": hi}, np.frombuffer(body, dtype="<i8")


def lookup(fn: str, lo: int, hi: int) -> np.ndarray:
    """Serve [lo, hi] from any cache file that covers it; recompute otherwise."""
    d = cache_dir()
    if d.is_dir():
        for path in sorted(d.glob(f"{fn.replace(':', '_')}_*.bin")):
            got = cache_read(path)
            if got is None:
                print(f"warning: ignoring unreadable cache file {path.name}", file=sys.stderr)
                continue
            head, vals = got
            if head["function"] == fn and head["lo"] <= lo and hi <= head["hi"]:
                return vals[lo - head["lo"]: hi - head["lo"] + 1]
    return cached_values(fn, lo, hi)
