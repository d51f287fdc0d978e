"""Command-line surface: stats | dist | expand | verify.

Exit codes: 0 success (findings allowed), 1 at least one verification check
failed, 2 malformed input or usage error.  PERMCROSS_BOUND overrides default
bounds.  Output is deterministic modulo the runtime field of verify reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .checks import CHECKS, CheckResult, run_checks, suite_passed
from .distributions import (
    DistributionReport,
    crossing_cfrac_series,
    crossing_gf_by_class,
    des_inv_series,
    dist,
    exc_crs_series,
    joint_dist,
    joint_poly,
)
from .patterns import BoundExceededError, class_spec
from .perm import STAT_NAMES, Permutation, crossings, format_word, nestings, parse_word

MAX_EXPAND_ORDER = 12

EXPAND_IDS = ("cfrac-321", "thm24", "thm52", "chung")


class CliError(Exception):
    pass


def _env_bound() -> int | None:
    raw = os.environ.get("PERMCROSS_BOUND")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"PERMCROSS_BOUND must be an integer, got {raw!r}") from None


def _parse_perm(text: str) -> Permutation:
    try:
        return Permutation(parse_word(text))
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _parse_patterns(text: str | None):
    if not text:
        return ()
    return tuple(parse_word(part) for part in text.split(","))


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(f"cannot parse size range {text!r}; expected e.g. 6 or 1..8") from None
    if hi < lo or lo < 0:
        raise CliError(f"empty or negative size range {text!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# subcommands


def _cmd_stats(args) -> int:
    p = _parse_perm(args.word)
    bundle = p.stats()
    crs, crs_pairs = crossings(p)
    nes, nes_pairs = nestings(p)
    if args.json:
        print(
            json.dumps(
                {
                    "word": list(p.word),
                    "n": p.n,
                    **bundle.as_dict(),
                    "crs_pairs": [list(pair) for pair in crs_pairs],
                    "nes_pairs": [list(pair) for pair in nes_pairs],
                },
                sort_keys=True,
            )
        )
        return 0
    print(f"word: {format_word(p.word)}  (n={p.n})")
    print("  ".join(f"{name}={value}" for name, value in bundle.as_dict().items()))
    print("crossings: " + (" ".join(f"({i},{j})" for i, j in crs_pairs) or "none"))
    print("nestings:  " + (" ".join(f"({i},{j})" for i, j in nes_pairs) or "none"))
    return 0


def _dist_report(args, n: int, stats: tuple[str, ...]) -> DistributionReport:
    spec = class_spec(
        n,
        avoid=_parse_patterns(args.avoid),
        one_at=args.one_at,
        ends_with=args.ends_with,
        tail=args.tail,
        maxdrop_le=args.maxdrop,
    )
    bound = _env_bound()
    if len(stats) == 1:
        return dist(spec, stats[0], bound)
    return joint_dist(spec, (stats[0], stats[1]), bound)


def _cmd_dist(args) -> int:
    stats = tuple(s.strip() for s in args.stat.split(","))
    if not 1 <= len(stats) <= 2:
        raise CliError("--stat takes one statistic or two comma-separated ones")
    for s in stats:
        if s not in STAT_NAMES:
            raise CliError(f"unknown statistic {s!r}; choose from {', '.join(STAT_NAMES)}")
    lo, hi = _parse_range(args.n)
    rows = []
    for n in range(lo, hi + 1):
        try:
            rows.append(_dist_report(args, n, stats))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if args.json:
        for report in rows:
            print(json.dumps(report.to_json(), sort_keys=True))
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(DistributionReport.CSV_HEADER)
        for report in rows:
            writer.writerow(report.to_csv_row())
    else:
        width = max(len(report.poly_text()) for report in rows)
        print(f"{'n':>3}  {'poly':<{width}}  size")
        for report in rows:
            print(f"{report.spec.n:>3}  {report.poly_text():<{width}}  {report.cardinality}")
    return 0


def _expand_rows(gf: str, order: int, bound: int | None):
    """Yield (n, series_text, brute_text, match) rows for one generating function."""
    if gf == "cfrac-321":
        series = crossing_cfrac_series(order)
        brute = crossing_gf_by_class(((3, 2, 1),), order, bound).coeffs
    elif gf == "thm24":
        f231 = crossing_gf_by_class(((2, 3, 1),), order, bound)
        one = type(f231).constant(f231.ring, order)
        series = (one - f231.times_z()).reciprocal()
        brute = crossing_gf_by_class(((3, 1, 2),), order, bound).coeffs
    elif gf == "thm52":
        series = exc_crs_series(order)
        brute = tuple(
            joint_poly(class_spec(n, avoid=((2, 3, 1), (3, 2, 1))), "exc", "crs", bound)[0]
            for n in range(order + 1)
        )
    elif gf == "chung":
        series = des_inv_series(order)
        brute = tuple(
            joint_poly(class_spec(n, avoid=((2, 3, 1), (3, 2, 1))), "des", "inv", bound)[0]
            for n in range(order + 1)
        )
    else:
        raise CliError(f"unknown generating function {gf!r}; choose from {', '.join(EXPAND_IDS)}")
    for n in range(order + 1):
        s, b = series.coefficient(n), brute[n]
        yield n, s.to_text(), b.to_text(), s == b


def _cmd_expand(args) -> int:
    if args.order < 0 or args.order > MAX_EXPAND_ORDER:
        raise CliError(f"order must be between 0 and {MAX_EXPAND_ORDER}")
    rows = list(_expand_rows(args.gf, args.order, _env_bound()))
    note = (
        "brute-force column enumerates the (321,231)-avoiders; the printed label"
        " (321,213) does not match this series (see check eq-chung)"
        if args.gf == "chung"
        else None
    )
    if args.json:
        for n, s, b, ok in rows:
            print(
                json.dumps(
                    {"gf": args.gf, "n": n, "series": s, "brute": b, "match": ok},
                    sort_keys=True,
                )
            )
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(("gf", "n", "series", "brute", "match"))
        for n, s, b, ok in rows:
            writer.writerow((args.gf, n, s, b, "true" if ok else "false"))
    else:
        width = max(len(s) for _, s, _, _ in rows)
        bwidth = max(len(b) for _, _, b, _ in rows)
        print(f"gf: {args.gf}  order: {args.order}")
        if note:
            print(f"note: {note}")
        print(f"{'n':>3}  {'series':<{width}}  {'brute':<{bwidth}}  match")
        for n, s, b, ok in rows:
            print(f"{n:>3}  {s:<{width}}  {b:<{bwidth}}  {'yes' if ok else 'NO'}")
        print("overall match: " + ("yes" if all(ok for _, _, _, ok in rows) else "NO"))
    return 0


def _format_verify_human(results: list[CheckResult]) -> str:
    out = io.StringIO()
    width = max(len(r.check_id) for r in results)
    bwidth = max(len(r.bound) for r in results)
    for r in results:
        line = f"{r.status.upper():<8} {r.check_id:<{width}}  {r.bound:<{bwidth}}  {r.runtime:7.3f}s"
        if r.status != "pass" and r.witnesses:
            line += f"  witnesses: {len(r.witnesses)}"
        print(line, file=out)
    counts = {s: sum(1 for r in results if r.status == s) for s in ("pass", "fail", "finding")}
    print(
        f"{len(results)} checks: {counts['pass']} pass, {counts['fail']} fail,"
        f" {counts['finding']} findings",
        file=out,
    )
    return out.getvalue()


def _cmd_verify(args) -> int:
    ids = args.checks or ["all"]
    bound = args.bound if args.bound is not None else _env_bound()
    try:
        results = run_checks("all" if ids == ["all"] else ids, bound)
    except KeyError as exc:
        raise CliError(exc.args[0]) from None
    if args.json:
        for r in results:
            print(json.dumps(r.to_json(), sort_keys=True))
    elif args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(("check_id", "bound", "status", "witnesses", "runtime"))
        for r in results:
            writer.writerow(
                (r.check_id, r.bound, r.status, json.dumps(list(r.witnesses)), f"{r.runtime:.6f}")
            )
    else:
        sys.stdout.write(_format_verify_human(results))
    return 0 if suite_passed(results) else 1


# ---------------------------------------------------------------------------
# parser


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcross",
        description="Exact crossing statistics on pattern-avoiding permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="all statistics of one permutation")
    p_stats.add_argument("word", help="permutation word, e.g. 4735126 or 10,2,3,...")
    p_stats.add_argument("--json", action="store_true")
    p_stats.set_defaults(func=_cmd_stats)

    p_dist = sub.add_parser("dist", help="distribution polynomial over a class")
    p_dist.add_argument("--avoid", default="", help="comma-separated forbidden patterns")
    p_dist.add_argument("--stat", default="crs", help="statistic, or two for a joint distribution")
    p_dist.add_argument("--n", required=True, help="size or range, e.g. 6 or 1..8")
    p_dist.add_argument("--one-at", dest="one_at", type=int, help="letter 1 at position n+1-k")
    p_dist.add_argument("--ends-with", dest="ends_with", type=int, help="last letter is k")
    p_dist.add_argument("--tail", type=int, help="word ends with k,k-1,...,1")
    p_dist.add_argument("--maxdrop", type=int, help="max drop at most d")
    p_dist.add_argument("--json", action="store_true")
    p_dist.add_argument("--csv", action="store_true")
    p_dist.set_defaults(func=_cmd_dist)

    p_expand = sub.add_parser("expand", help="expand a generating function with a brute-force column")
    p_expand.add_argument("gf", choices=EXPAND_IDS)
    p_expand.add_argument("--order", type=int, required=True)
    p_expand.add_argument("--json", action="store_true")
    p_expand.add_argument("--csv", action="store_true")
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument("checks", nargs="*", help="check ids, or 'all' (default)")
    p_verify.add_argument("--bound", type=int, help="override every selected check's bound")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--csv", action="store_true")
    p_verify.add_argument(
        "--list", action="store_true", help="list available checks and exit"
    )
    p_verify.set_defaults(func=_cmd_verify_or_list)

    return parser


def _cmd_verify_or_list(args) -> int:
    if args.list:
        width = max(len(c) for c in CHECKS)
        for check_id in sorted(CHECKS):
            print(f"{check_id:<{width}}  {CHECKS[check_id].description}")
        return 0
    return _cmd_verify(args)


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, BoundExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
