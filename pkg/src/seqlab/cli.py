"""Command-line entry point: seq, sieve, fn, base, arith, explore, verify, cache.

Exit codes: 0 success, 1 usage error, 2 verification found an unexplained
mismatch, 3 a --timeout cut the run short (partial output was written).
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import signal
import sys
import time
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from . import arith_functions as af
from . import explorer as ex
from . import radix_systems as rs
from . import seq_digits as sd
from . import sieves as sv
from .memo import CACHE_VERSION, MAGIC, cache_dir, cache_path, cache_read, cache_write, cached_values, lookup
from .verification import MODULES, run_checks

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_TIMEOUT = 0, 1, 2, 3
FORMATS = ("bfile", "csv", "jsonl", "json", "table")


class UsageError(Exception):
    pass


class TimedOut(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which is reserved for mismatches
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# -- output -------------------------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return "?"
    if isinstance(v, dict):
        return json.dumps(_jsonable(v), separators=(",", ":"))
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return sd.render(v) if isinstance(v, str) else str(v)


def _jsonable(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def write_pairs(pairs: Iterable[tuple[int, object]], fmt: str, out, value_name: str = "value") -> None:
    """Stream (index, value) rows in the chosen format."""
    if fmt == "bfile":
        for i, v in pairs:
            out.write(f"{i} {_cell(v)}\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", value_name])
        for i, v in pairs:
            w.writerow([i, _cell(v)])
    elif fmt in ("jsonl", "json"):
        for i, v in pairs:
            out.write(json.dumps({"index": i, value_name: _jsonable(v)}) + "\n")
    else:
        rows = [(str(i), _cell(v)) for i, v in pairs]
        w = max((len(r[0]) for r in rows), default=1)
        for i, v in rows:
            out.write(f"{i.rjust(w)} | {v}\n")


def parse_range(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"range must look like LO:HI, got {text!r}") from None
    if lo > hi:
        raise UsageError("range is empty")
    return lo, hi


def parse_params(items: Optional[list[str]]) -> dict[str, str]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k] = v
    return out


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x)


@contextlib.contextmanager
def deadline(seconds: Optional[float]):
    if not seconds:
        yield
        return

    def fire(signum, frame):
        raise TimedOut()

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# -- commands -----------------------------------------------------------------------------------


def cmd_seq(args, out) -> int:
    fam = args.family
    count = args.count if args.count is not None else 10
    if fam in sd.FAMILIES:
        gen = (sd.term(fam, n) for n in range(1, count + 1))
    elif fam in sd.SUBSEQ_KINDS:
        gen = iter(sd.subsequence_stream(fam, count))
    elif fam.startswith("addon:"):
        gen = iter(sd.concatenated_terms(sd.BaseSeqSpec(fam[6:]), count))
    elif fam == "prime_digital":
        gen = iter(sd.prime_digital_terms(count))
    elif fam == "lucky":
        gen = iter(sd.lucky_numbers(max(count * 12, 50))[:count])
    else:
        raise UsageError(f"unknown family {fam!r}; known: {', '.join(SEQ_FAMILIES)}")
    write_pairs(((i, t) for i, t in enumerate(gen, 1)), args.format, out)
    return EXIT_OK


SEQ_FAMILIES = sd.FAMILIES + sd.SUBSEQ_KINDS + ("prime_digital", "lucky", "addon:<source>")


def cmd_sieve(args, out) -> int:
    if args.kind == "random" and args.seed is None and not args.choices:
        raise UsageError("the random sieve needs --seed (or --choices)")
    params = {"n": args.n or 0, "u": _ints(args.u or ""), "v": _ints(args.v or ""),
              "seed": args.seed, "choices": _ints(args.choices or "")}
    try:
        kind = sv.SieveKind(args.kind, **params)
    except ValueError as e:
        raise UsageError(str(e)) from None
    run = sv.run_sieve(kind, args.limit or 100)
    terms = run.survivors if args.count is None else run.survivors[: args.count]
    write_pairs(enumerate(terms, 1), args.format, out)
    return EXIT_OK


FN_TABLE: dict[str, Callable[[int], object]] = {
    "S": af.S, "Z": af.Z, "SK": af.SK, "SW": af.SW, "SNTP": af.SNTP, "SP": af.SP,
    "quotient": af.quotient, "double_factorial": af.double_factorial_df,
    "divisor_product": af.divisor_product,
}


def cmd_fn(args, out) -> int:
    lo, hi = parse_range(args.range) or (1, args.count or 20)
    name = args.name
    if name in ("S", "Z") or name.startswith("S_p:"):
        vals = lookup(name, lo, hi)
        pairs = zip(range(lo, hi + 1), (int(v) for v in vals))
    elif name in FN_TABLE:
        f = FN_TABLE[name]
        pairs = ((n, f(n)) for n in range(lo, hi + 1))
    else:
        raise UsageError(f"unknown function {name!r}; known: {', '.join(FN_TABLE)}, S_p:<prime>")
    write_pairs(pairs, args.format, out)
    return EXIT_OK


def cmd_base(args, out) -> int:
    try:
        base = rs.get_base(args.base)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.decode is not None:
        out.write(f"{rs.decode(rs.parse_numeral(args.decode, base))}\n")
        return EXIT_OK
    if args.encode is not None:
        out.write(f"{rs.encode(args.encode, base)}\n")
        return EXIT_OK
    lo, hi = parse_range(args.range) or (base.first_numeral, base.first_numeral + (args.count or 20) - 1)
    write_pairs(((n, str(rs.encode(n, base))) for n in range(lo, hi + 1)), args.format, out)
    return EXIT_OK


def cmd_arith(args, out) -> int:
    op, xs = args.op, args.operands
    need = {"romanian": 2, "divpow": 3, "fadd": 2, "fsub": 2, "stepped-product": 2, "stepped-sum": 2}
    if len(xs) != need[op]:
        raise UsageError(f"{op} takes {need[op]} operands")
    if op == "romanian":
        prod, table = rs.romanian_multiply(int(xs[0]), int(xs[1]), args.k)
        out.write(f"{prod}\n")
        if args.show_table:
            out.write(table.render() + "\n")
    elif op == "divpow":
        q, r, table = rs.divide_by_power(int(xs[0]), int(xs[1]), int(xs[2]))
        out.write(f"quotient {q} rest {r}\n")
        if args.show_table:
            out.write(table.render() + "\n")
    elif op in ("fadd", "fsub"):
        base = rs.factorial_base()
        a, b = (rs.parse_numeral(x, base) for x in xs)
        res = rs.factorial_add(a, b) if op == "fadd" else rs.factorial_sub(a, b)
        out.write(f"{res}\n")
    elif op == "stepped-product":
        out.write(f"{rs.stepped_product(int(xs[0]), int(xs[1]), args.bound)}\n")
    else:
        out.write(f"{rs.stepped_sum(int(xs[0]), int(xs[1]), args.absolute)}\n")
    return EXIT_OK


# explore: each experiment yields hits so a timeout can still report what it found


def _staged(search, limit: int, first: int = 10**4):
    """Run a table-based search on growing limits so a timeout still leaves the hits found so far."""
    done = 0
    step = min(first, limit)
    while done < limit:
        for n in search(step):
            if n > done:
                yield n
        done, step = step, min(step * 4, limit)


def _exp_triplets(p, args):
    yield from _staged(ex.triplet_search, args.limit or 10**5)


def _exp_duplets(p, args):
    yield from _staged(ex.duplet_search, args.limit or 10**4)


def _exp_goldbach_t(p, args):
    for n in range(1, (args.count or 14) + 1):
        yield {"n": n, "t": ex.goldbach_t(n)}


def _exp_vinogradov_v(p, args):
    for n in range(1, (args.count or 14) + 1):
        yield {"n": n, "v": ex.vinogradov_v(n)}


def _exp_vinogradov_a(p, args):
    lo, hi = parse_range(args.range) or (1, 2 * (args.count or 31) - 1)
    for m in range(lo | 1, hi + 1, 2):
        yield {"m": m, "a": ex.vinogradov_a(m)}


def _exp_loop(p, args):
    kind = p.get("kind", "reverse_subtract")
    param = int(p["param"]) if "param" in p else None
    start = int(p.get("start", 52))
    lo, hi = parse_range(args.range) or (start, start)
    if kind == "reverse_subtract" and param is None:
        param = len(str(hi))  # width defaults to the widest start
    for s in range(lo, hi + 1):
        r = ex.periodic_loop(kind, s, param)
        yield {"start": s, "tail": r.tail, "period": r.period, "cycle": r.cycle,
               "closed_after": r.closed_after, "invariant_hit": r.invariant_hit}


def _exp_carpet(p, args):
    n = int(p.get("n", args.count or 3))
    yield from ex.carpet(n)


def _exp_partition(p, args):
    m = int(p.get("m", 2))
    lo, hi = parse_range(args.range) or ((int(p["n"]),) * 2 if "n" in p else (1, 20))
    for n in range(lo, hi + 1):
        yield {"n": n, "count": ex.partition_count(n, m)}


def _exp_bad_numbers(p, args):
    found, missing = ex.bad_number_scan(args.limit or 20, int(p.get("x", 10**4)), int(p.get("y", 10**6)))
    for a in sorted(found):
        yield {"a": a, "x": found[a][0], "y": found[a][1]}
    yield {"unrepresented": missing}


def _exp_prime_conjecture(p, args):
    bound = int(p.get("bound", 200))
    lo, hi = parse_range(args.range) or (1, 99)
    for m in range(lo | 1, hi + 1, 2):
        count, reps = ex.prime_conjecture_count(m, bound)
        yield {"m": m, "count": count, "first": list(reps[0]) if reps else None}


def _exp_recurrence(p, args):
    spec = ex.RecurrenceSetSpec(_ints(p.get("seeds", "1,2")), p.get("relation", "squares2"),
                                p.get("polarity", "positive"))
    yield from ex.recurrence_set(spec, args.limit or 1000)


def _exp_progression(p, args):
    yield from ex.progression_avoider(p.get("kind", "arithmetic"), _ints(p.get("seeds", "1,2")),
                                      args.count or 20, int(p.get("t", 3)))


def _exp_multiplicative(p, args):
    yield from ex.multiplicative_builder(p.get("kind", "multiplicative"), _ints(p.get("seeds", "2,3")),
                                         args.count or 10, int(p.get("k", 2)))


def _exp_relationship(p, args):
    lo, hi = parse_range(args.range) or (0, 100)
    yield from ex.relationship_search(p.get("f", "S"), int(p.get("p", 2)), int(p.get("q", 2)),
                                      p.get("law", "add"), lo, hi)


def _exp_partial_additive(p, args):
    yield from ex.partial_perfect_additive(args.count or 16)


def _exp_magic_index(p, args):
    lo, hi, count = ex.magic_index(int(p.get("n", 3)))
    yield {"min": lo, "max": hi, "count": count}


def _exp_expression_primes(p, args):
    for xs, v in ex.expression_prime_search(p.get("form", "xy"), args.limit or 20, int(p.get("n", 2))):
        yield {"x": list(xs), "value": v}


def _exp_addon(p, args):
    rep = ex.gadd_on(sd.BaseSeqSpec(p.get("source", "odds")), 1, args.count or 50)
    yield from rep.prime_ranks


def _exp_products(p, args):
    for n in range(1, (args.count or 10) + 1):
        v, prime = ex.product_sequence(p.get("kind", "prime"), n)
        yield {"n": n, "value": v, "prime": prime}


EXPERIMENTS: dict[str, Callable] = {
    "triplets": _exp_triplets, "duplets": _exp_duplets, "goldbach_t": _exp_goldbach_t,
    "vinogradov_v": _exp_vinogradov_v, "vinogradov_a": _exp_vinogradov_a, "loop": _exp_loop,
    "carpet": _exp_carpet, "partition": _exp_partition, "bad_numbers": _exp_bad_numbers,
    "prime_conjecture": _exp_prime_conjecture, "recurrence": _exp_recurrence,
    "progression": _exp_progression, "multiplicative": _exp_multiplicative,
    "relationship": _exp_relationship, "partial_additive": _exp_partial_additive,
    "magic_index": _exp_magic_index, "expression_primes": _exp_expression_primes,
    "addon_primes": _exp_addon, "products": _exp_products,
}


def cmd_explore(args, out) -> int:
    if args.experiment not in EXPERIMENTS:
        raise UsageError(f"unknown experiment {args.experiment!r}; known: {', '.join(EXPERIMENTS)}")
    params = parse_params(args.param)
    bounds = {k: getattr(args, k) for k in ("limit", "count", "range") if getattr(args, k) is not None}
    hits: list = []
    incomplete = False
    t0 = time.perf_counter()
    try:
        with deadline(args.timeout):
            for h in EXPERIMENTS[args.experiment](params, args):
                hits.append(h)
    except TimedOut:
        incomplete = True
    except ValueError as e:
        raise UsageError(str(e)) from None
    runtime = round(time.perf_counter() - t0, 6)
    record = {"experiment": args.experiment, "params": params, "hits": _jsonable(hits),
              "bounds": bounds, "incomplete": incomplete}
    if args.format in ("json", "jsonl"):
        # runtime goes only to the report file so stdout stays byte-identical across runs
        out.write(json.dumps(record) + "\n")
    else:
        write_pairs(enumerate(hits, 1), args.format, out, "hit")
    if args.out:
        with open(args.out, "a") as fh:
            fh.write(json.dumps({**record, "runtime": runtime}) + "\n")
    return EXIT_TIMEOUT if incomplete else EXIT_OK


def cmd_verify(args, out) -> int:
    if args.scope != "all" and args.scope not in MODULES:
        raise UsageError(f"scope is 'all' or one of {', '.join(MODULES)}")
    report = run_checks(None if args.scope == "all" else args.scope)
    lines = [json.dumps(r) for r in report]
    if args.out:
        Path(args.out).write_text("".join(line + "\n" for line in lines))
    if args.format in ("json", "jsonl"):
        out.write("".join(line + "\n" for line in lines))
    else:
        w = max((len(r["check"]) for r in report), default=5)
        for r in report:
            out.write(f"{r['check'].ljust(w)}  {r['status']}\n")
        counts: dict[str, int] = {}
        for r in report:
            counts[r["status"]] = counts.get(r["status"], 0) + 1
        out.write(", ".join(f"{k}: {v}" for k, v in sorted(counts.items())) + "\n")
    return EXIT_MISMATCH if any(r["status"] == "mismatch-new" for r in report) else EXIT_OK


def cmd_cache(args, out) -> int:
    fn = args.function
    if args.action == "clear":
        d = cache_dir()
        removed = 0
        if d.is_dir():
            pattern = f"{fn.replace(':', '_')}_*.bin" if fn else "*.bin"
            for path in d.glob(pattern):
                path.unlink()
                removed += 1
        out.write(f"removed {removed} file(s) from {d}\n")
        return EXIT_OK
    if not fn:
        raise UsageError("--function is required")
    lo, hi = parse_range(args.range) or (1, 1000)
    path = cache_path(fn, lo, hi)
    if args.action == "build":
        vals = cached_values(fn, lo, hi)
        cache_write(fn, lo, hi, vals)
        out.write(f"wrote {path} ({hi - lo + 1} records)\n")
        return EXIT_OK
    got = cache_read(path)
    if got is None:
        out.write(f"{path}: missing or corrupt; values will be recomputed\n")
        return EXIT_OK
    head, vals = got
    out.write(f"{MAGIC} v{CACHE_VERSION} function={head['function']} range={head['lo']}:{head['hi']}\n")
    for n in sorted({head["lo"], (head["lo"] + head["hi"]) // 2, head["hi"]}):
        out.write(f"{n} {int(vals[n - head['lo']])}\n")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="bfile")
    common.add_argument("--count", type=int)
    common.add_argument("--limit", type=int)
    common.add_argument("--range", help="LO:HI, inclusive")
    common.add_argument("--seed", type=int)
    common.add_argument("--timeout", type=float, help="seconds; a cut-short run exits 3")
    common.add_argument("--out", help="also write a report file")

    p = _Parser(prog="seqlab", description="Digit sequences, sieves, arithmetic functions and number experiments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", parents=[common], help="terms of a sequence family")
    s.add_argument("--family", required=True)

    s = sub.add_parser("sieve", parents=[common], help="survivors of a sieve")
    s.add_argument("--kind", required=True)
    s.add_argument("--n", type=int, help="power for n_ary / m_power_free")
    s.add_argument("--u", help="comma list of steps")
    s.add_argument("--v", help="comma list of offsets")
    s.add_argument("--choices", help="comma list of explicit random-sieve picks")

    s = sub.add_parser("fn", parents=[common], help="values of an arithmetic function")
    s.add_argument("--name", required=True)

    s = sub.add_parser("base", parents=[common], help="generalized-base numerals")
    s.add_argument("--base", required=True)
    s.add_argument("--encode", type=int)
    s.add_argument("--decode")

    s = sub.add_parser("arith", parents=[common], help="worktable arithmetic")
    s.add_argument("op", choices=("romanian", "divpow", "fadd", "fsub", "stepped-product", "stepped-sum"))
    s.add_argument("operands", nargs="*")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--bound", type=int)
    s.add_argument("--absolute", action="store_true")
    s.add_argument("--show-table", action="store_true")

    s = sub.add_parser("explore", parents=[common], help="bounded searches and tables")
    s.add_argument("--experiment", required=True)
    s.add_argument("--param", action="append", help="key=value, repeatable")

    s = sub.add_parser("verify", parents=[common], help="check computed values against the reference table")
    s.add_argument("--scope", default="all")

    s = sub.add_parser("cache", parents=[common], help="build, inspect or clear the memo cache")
    s.add_argument("action", choices=("build", "inspect", "clear"))
    s.add_argument("--function")
    return p


COMMANDS = {"seq": cmd_seq, "sieve": cmd_sieve, "fn": cmd_fn, "base": cmd_base, "arith": cmd_arith,
            "explore": cmd_explore, "verify": cmd_verify, "cache": cmd_cache}


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command != "explore" and args.timeout:
            buf = io.StringIO()
            try:
                with deadline(args.timeout):
                    code = COMMANDS[args.command](args, buf)
            except TimedOut:
                out.write(buf.getvalue())
                print("timed out; output is partial", file=sys.stderr)
                return EXIT_TIMEOUT
            out.write(buf.getvalue())
            return code
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        print(f"seqlab {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
