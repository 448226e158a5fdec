"""Command-line front end: set, weight, base, carmichael, bounds, verify, scan.

Exit codes: 0 success (verify: all checks passed), 1 usage error, 2 domain
error (not squarefree / not composite), 3 verification failures found.

All file and stdout output is deterministic: identical invocations produce
identical bytes regardless of --jobs.  Range work is split into contiguous
blocks handled by a worker pool; the parent process alone owns the output
stream and flushes results in ascending order.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import tempfile
from fractions import Fraction
from multiprocessing import Pool

from .arith import NotCompositeError, NotSquarefreeError, factor_squarefree
from .core import korselt_bounds, m_value
from .records import (
    ScanRecord,
    build_scan_record,
    parse_rational,
    rational_str,
    rational_to_obj,
    record_from_json_line,
    record_to_json_line,
)
from .solver import (
    base_set,
    carmichael_scan,
    q_korselt_set,
    squarefree_composites,
    z_korselt_set,
)
from .verify import CHECK_IDS, TheoremReport, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_FAILURES = 3


def _int_at_least(minimum):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return parse


def _alpha_arg(text):
    try:
        a = parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational") from None
    if a == 0:
        raise argparse.ArgumentTypeError("alpha = 0 is excluded by definition")
    return a


# Family aliases accepted by --checks, expanding to their member check ids.
_CHECK_ALIASES = {
    "lemma24": ("lemma24_delta", "lemma24_gamma"),
    "prop21": ("prop21_oracle",),
    "prop23": ("prop23_pos", "prop23_neg", "prop23_k3"),
    "thm25": ("thm25_bounds", "thm25_theta"),
    "thm27": ("thm27_attain",),
}


def _checks_arg(text):
    if text.strip().lower() == "all":
        return None
    ids = []
    for part in text.split(","):
        name = part.strip()
        if not name:
            continue
        ids.extend(_CHECK_ALIASES.get(name, (name,)))
    return ids


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_set(args) -> int:
    f = factor_squarefree(args.n)
    ks = q_korselt_set(f) if args.domain == "q" else z_korselt_set(f)
    bases = list(ks.bases)
    if args.include_trivial:
        bases.append(Fraction(f.n))
        bases.sort()
    if args.format == "json":
        obj = {
            "n": f.n,
            "domain": args.domain,
            "include_trivial": args.include_trivial,
            "bases": [rational_to_obj(b) for b in bases],
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "base"])
        for b in bases:
            w.writerow([f.n, rational_str(b)])
    else:
        print(", ".join(str(b) for b in bases))
    return EXIT_OK


def cmd_weight(args) -> int:
    if (args.n is None) == (args.range is None):
        raise ValueError("give either a single n or --range LO HI")
    if args.range is not None:
        rows = [
            (f.n, (q_korselt_set(f) if args.domain == "q" else z_korselt_set(f)).weight)
            for f in squarefree_composites(args.range[0], args.range[1])
        ]
    else:
        f = factor_squarefree(args.n)
        ks = q_korselt_set(f) if args.domain == "q" else z_korselt_set(f)
        rows = [(f.n, ks.weight)]
    if args.format == "json":
        for n, w in rows:
            obj = {"n": n, "domain": args.domain, "weight": w, "weight_with_trivial": w + 1}
            print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "domain", "weight", "weight_with_trivial"])
        for n, wt in rows:
            w.writerow([n, args.domain, wt, wt + 1])
    elif args.range is not None:
        for n, wt in rows:
            print(f"{n}\t{wt}")
    else:
        print(f"{rows[0][1]} (strict)")
        print("+1 with --include-trivial")
    return EXIT_OK


def cmd_base(args) -> int:
    rec = base_set(args.alpha, args.max)
    if args.format == "json":
        obj = {
            "alpha": rational_to_obj(rec.alpha),
            "limit": rec.limit,
            "members": list(rec.members),
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["alpha", "n"])
        for n in rec.members:
            w.writerow([rational_str(rec.alpha), n])
    else:
        print(", ".join(str(n) for n in rec.members))
    return EXIT_OK


def cmd_carmichael(args) -> int:
    nums = carmichael_scan(args.max)
    if args.format == "json":
        print(json.dumps({"limit": args.max, "carmichael": nums}, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n"])
        for n in nums:
            w.writerow([n])
    else:
        print(", ".join(str(n) for n in nums))
    return EXIT_OK


def cmd_bounds(args) -> int:
    f = factor_squarefree(args.n)
    rep = korselt_bounds(f)
    second = m_value(f.n, f.m - 1, f.primes[f.m - 2])
    last = m_value(f.n, f.m, f.primes[f.m - 1])
    if args.format == "json":
        obj = {
            "n": f.n,
            "primes": list(f.primes),
            "lower": rational_to_obj(rep.lower),
            "upper": rational_to_obj(rep.upper),
            "upper_argmin": rep.upper_argmin,
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["n", "lower", "upper", "upper_argmin"])
        w.writerow([f.n, rational_str(rep.lower), rational_str(rep.upper), rep.upper_argmin])
    else:
        print(f"N={f.n} primes={'*'.join(str(p) for p in f.primes)}")
        print(f"lower = {rep.lower}")
        print(
            f"upper = {rep.upper} (candidates: k={f.m - 1} p={f.primes[f.m - 2]} -> {second}, "
            f"k={f.m} p={f.primes[f.m - 1]} -> {last}; min attained by {rep.upper_argmin})"
        )
    return EXIT_OK


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous sub-ranges covering [lo, hi]; at most `parts` of them."""
    span = hi - lo + 1
    if span <= 0:
        return [(lo, hi)]
    parts = max(1, min(parts, span))
    out = []
    base, extra = divmod(span, parts)
    start = lo
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        out.append((start, start + size - 1))
        start += size
    return out


def _verify_block(block) -> list[TheoremReport]:
    lo, hi, ids = block
    return run_suite(lo, hi, ids)


def _merge_reports(parts: list[list[TheoremReport]], lo: int, hi: int) -> list[TheoremReport]:
    merged = []
    for idx in range(len(parts[0])):
        pieces = [part[idx] for part in parts]
        cid = pieces[0].check_id
        failures = tuple(w for piece in pieces for w in piece.failures)
        merged.append(
            TheoremReport(cid, lo, hi, sum(p.tested_count for p in pieces), failures)
        )
    return merged


def cmd_verify(args) -> int:
    lo, hi = args.range
    ids = sorted(set(args.checks)) if args.checks is not None else list(CHECK_IDS)
    if args.jobs > 1 and hi - lo > args.jobs:
        blocks = [(a, b, ids) for a, b in _split_range(lo, hi, args.jobs)]
        with Pool(processes=args.jobs) as pool:
            parts = pool.map(_verify_block, blocks)
        reports = _merge_reports(parts, lo, hi)
    else:
        reports = run_suite(lo, hi, ids)
    total_failures = sum(len(r.failures) for r in reports)
    if args.format == "json":
        obj = {
            "n_lo": lo,
            "n_hi": hi,
            "failures": total_failures,
            "reports": [_report_to_obj(r) for r in reports],
        }
        print(json.dumps(obj, separators=(",", ":")))
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["check_id", "n_lo", "n_hi", "tested_count", "failures"])
        for r in reports:
            w.writerow([r.check_id, r.n_lo, r.n_hi, r.tested_count, len(r.failures)])
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{r.check_id:<14} range=[{r.n_lo},{r.n_hi}] "
                f"tested={r.tested_count} failures={len(r.failures)} {status}"
            )
            for w in r.failures[:20]:
                detail = f"  n={w.n} {w.description}"
                if w.lhs is not None:
                    detail += f" lhs={w.lhs} rhs={w.rhs}"
                if w.indices:
                    detail += " " + " ".join(f"{k}={v}" for k, v in sorted(w.indices.items()))
                print(detail)
            if len(r.failures) > 20:
                print(f"  ... and {len(r.failures) - 20} more")
        print(f"total failures: {total_failures}")
    return EXIT_FAILURES if total_failures else EXIT_OK


def _report_to_obj(r: TheoremReport) -> dict:
    return {
        "check_id": r.check_id,
        "n_lo": r.n_lo,
        "n_hi": r.n_hi,
        "tested_count": r.tested_count,
        "failures": [
            {
                "n": w.n,
                "check_id": w.check_id,
                "description": w.description,
                "lhs": None if w.lhs is None else rational_to_obj(w.lhs),
                "rhs": None if w.rhs is None else rational_to_obj(w.rhs),
                "indices": dict(w.indices),
            }
            for w in r.failures
        ],
    }


class CacheError(ValueError):
    pass


def _load_cache(path: str) -> dict[int, ScanRecord]:
    records: dict[int, ScanRecord] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = record_from_json_line(line)
            except ValueError as exc:
                raise CacheError(f"{path}: corrupt cache line {lineno}: {exc}") from None
            records[rec.n] = rec
    return records


def _chunk(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    base, extra = divmod(len(items), parts)
    out = []
    start = 0
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        if size:
            out.append(items[start:start + size])
        start += size
    return out


def _scan_block(fs) -> list[ScanRecord]:
    return [build_scan_record(f) for f in fs]


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".korselt-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_scan(args) -> int:
    lo, hi = args.range
    cached = _load_cache(args.cache) if args.cache and os.path.exists(args.cache) else {}
    fs = list(squarefree_composites(lo, hi))
    missing = [f for f in fs if f.n not in cached]
    if args.jobs > 1 and len(missing) > 1:
        with Pool(processes=args.jobs) as pool:
            parts = pool.map(_scan_block, _chunk(missing, args.jobs * 4))
        computed = {r.n: r for part in parts for r in part}
    else:
        computed = {r.n: r for r in _scan_block(missing)}
    records = [cached[f.n] if f.n in cached else computed[f.n] for f in fs]
    data = "".join(record_to_json_line(r) + "\n" for r in records)
    _atomic_write(args.out, data)
    if args.cache and computed:
        new_lines = "".join(
            record_to_json_line(computed[n]) + "\n" for n in sorted(computed)
        )
        with open(args.cache, "a", encoding="utf-8", newline="\n") as fh:
            fh.write(new_lines)
    print(
        f"scan: {len(records)} records ({len(computed)} computed, "
        f"{len(records) - len(computed)} cached) -> {args.out}",
        file=sys.stderr,
    )
    return EXIT_OK


def _add_output_flags(p, formats=("text", "json", "csv")):
    p.add_argument("--format", choices=formats, default="text", help="output format")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="korselt",
        description="Exact rational Korselt sets, weights, bounds, inverse "
        "base-sets and Carmichael scans for squarefree composite integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("set", help="print the Korselt set of n")
    p.add_argument("n", type=_int_at_least(2))
    p.add_argument("--domain", choices=("q", "z"), default="q")
    p.add_argument(
        "--include-trivial",
        action="store_true",
        help="append n itself (presentation only; never counted in weights)",
    )
    _add_output_flags(p)
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("weight", help="print Korselt weights (strict)")
    p.add_argument("n", nargs="?", type=_int_at_least(2), default=None)
    p.add_argument("--range", nargs=2, type=_int_at_least(2), metavar=("LO", "HI"))
    p.add_argument("--domain", choices=("q", "z"), default="q")
    _add_output_flags(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("base", help="numbers admitting a given base, up to a limit")
    p.add_argument("alpha", type=_alpha_arg, help="rational base, e.g. 12 or 7/2")
    p.add_argument("--max", type=_int_at_least(1), required=True)
    _add_output_flags(p)
    p.set_defaults(func=cmd_base)

    p = sub.add_parser("carmichael", help="Carmichael numbers up to a limit")
    p.add_argument("--max", type=_int_at_least(2), required=True)
    _add_output_flags(p)
    p.set_defaults(func=cmd_carmichael)

    p = sub.add_parser("bounds", help="global base bounds of n and the attaining candidate")
    p.add_argument("n", type=_int_at_least(2))
    _add_output_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run range checks; exit 0 iff all pass")
    p.add_argument("--range", nargs=2, type=_int_at_least(6), required=True, metavar=("LO", "HI"))
    p.add_argument(
        "--checks",
        type=_checks_arg,
        default=None,
        help=f"comma list or 'all'; known: {', '.join(CHECK_IDS)}",
    )
    p.add_argument("--jobs", type=_int_at_least(1), default=1)
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="write one JSONL record per squarefree composite")
    p.add_argument("--range", nargs=2, type=_int_at_least(1), required=True, metavar=("LO", "HI"))
    p.add_argument("--out", required=True, help="output JSONL path (written atomically)")
    p.add_argument("--jobs", type=_int_at_least(1), default=1)
    p.add_argument("--cache", default=None, help="JSONL cache; cached n are not recomputed")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (NotSquarefreeError, NotCompositeError) as exc:
        print(f"korselt: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"korselt: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
