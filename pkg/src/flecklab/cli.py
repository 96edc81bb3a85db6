"""Command-line interface.

Subcommands:

  sum         evaluate one restricted alternating binomial sum exactly
  table1      order-gap table for the fixed demonstration grid (p=3, alpha=2, r=2)
  example13   orders vs. bounds for the fixed demonstration row (p=2, alpha=1)
  verify      sweep one cataloged statement over a grid
  conjecture  sweep one conjectural statement looking for counterexamples

Axis flags accept single values, comma lists, and inclusive ranges written
a..b (use --flag=-2..5 when the first value is negative).  Exit codes:
0 pass, 1 a proven statement failed, 2 usage or parameter error,
3 a conjecture sweep found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .combinatorics import Polynomial
from .errors import InvalidParameterError
from .padic import PrimePowerModulus, padic_order
from .quantities import order_gap
from .sums import (
    RestrictedSumSpec,
    alt_sum_power,
    degree_order_bound,
    floor_order_bound,
    restricted_sum,
)
from .verifier import DEFAULT_FAILURE_CAP, run_statement, search_conjecture

__all__ = ["main", "main_entry"]

_AXIS_FLAGS = (
    "p",
    "alpha",
    "n",
    "r",
    "l",
    "m",
    "s",
    "t",
    "k",
    "beta",
    "q",
    "c",
    "d",
    "e",
    "j",
    "fdeg",
)


def _parse_values(text: str) -> list[int]:
    """Parse '3', '1,2,5', '0..8', or a mix like '-2..2,10'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_text, hi_text = part.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"no values in {text!r}")
    return out


def _parse_coeffs(text: str) -> list[int]:
    try:
        return [int(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from exc


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("FLECKLAB_JOBS", "1")))
    except ValueError:
        return 1


def _order_json(order: "int | float") -> "int | str":
    return order if isinstance(order, int) else "infinity"


def _emit(text: str, out_path: "str | None") -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _rows_to_delimited(rows: list[list[str]], delimiter: str) -> str:
    import csv
    import io

    buf = io.StringIO()
    csv.writer(buf, delimiter=delimiter, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_sum(args: argparse.Namespace) -> int:
    if args.coeffs is not None:
        f = Polynomial(args.coeffs)
    else:
        f = Polynomial.monomial(args.l if args.l is not None else 0)
    pm = PrimePowerModulus(args.p, args.alpha)
    spec = RestrictedSumSpec(n=args.n, r=args.r, modulus=pm.m, f=f)
    value = restricted_sum(spec)
    payload = {
        "p": args.p,
        "alpha": args.alpha,
        "n": args.n,
        "r": args.r,
        "coeffs": list(f.coeffs),
        "sum": str(value),
        "order": _order_json(padic_order(args.p, value)),
        "degree_bound": _order_json(degree_order_bound(pm, args.n, args.r, f.degree)),
        "floor_bound": _order_json(floor_order_bound(pm, args.n, args.r)),
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


_TABLE1_P, _TABLE1_ALPHA, _TABLE1_R = 3, 2, 2
_TABLE1_N = range(90, 99)
_TABLE1_L = range(10)


def _cmd_table1(args: argparse.Namespace) -> int:
    rows = []
    for n in _TABLE1_N:
        gaps = [
            _order_json(order_gap(_TABLE1_P, _TABLE1_ALPHA, n, _TABLE1_R, l))
            for l in _TABLE1_L
        ]
        rows.append({"n": n, "gaps": gaps})
    if args.format == "json":
        payload = {
            "p": _TABLE1_P,
            "alpha": _TABLE1_ALPHA,
            "r": _TABLE1_R,
            "l": list(_TABLE1_L),
            "rows": rows,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        table = [["n", *[f"l={l}" for l in _TABLE1_L]]]
        for row in rows:
            table.append([str(row["n"]), *[str(g) for g in row["gaps"]]])
        _emit(_rows_to_delimited(table, "," if args.format == "csv" else "\t"), args.out)
    return 0


_EX13_P, _EX13_ALPHA, _EX13_R, _EX13_N, _EX13_LMAX = 2, 1, 0, 20, 21


def _cmd_example13(args: argparse.Namespace) -> int:
    pm = PrimePowerModulus(_EX13_P, _EX13_ALPHA)
    ls = range(_EX13_LMAX + 1)
    orders = [
        _order_json(padic_order(_EX13_P, alt_sum_power(_EX13_N, _EX13_R, pm.m, l)))
        for l in ls
    ]
    degree_bounds = [_order_json(degree_order_bound(pm, _EX13_N, _EX13_R, l)) for l in ls]
    floor_bound = _order_json(floor_order_bound(pm, _EX13_N, _EX13_R))
    if args.format == "json":
        payload = {
            "p": _EX13_P,
            "alpha": _EX13_ALPHA,
            "r": _EX13_R,
            "n": _EX13_N,
            "l": list(ls),
            "orders": orders,
            "degree_bounds": degree_bounds,
            "floor_bound": floor_bound,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        table = [["l", "order", "degree_bound", "floor_bound"]]
        for l in ls:
            table.append([str(l), str(orders[l]), str(degree_bounds[l]), str(floor_bound)])
        _emit(_rows_to_delimited(table, "," if args.format == "csv" else "\t"), args.out)
    return 0


def _collect_grid(args: argparse.Namespace) -> dict[str, list[int]]:
    return {
        name: getattr(args, name)
        for name in _AXIS_FLAGS
        if getattr(args, name, None) is not None
    }


def _report_command(args: argparse.Namespace, runner) -> int:
    report = runner(
        args.id,
        grid=_collect_grid(args),
        jobs=args.jobs,
        failure_cap=args.failure_cap,
    )
    text = {"json": report.to_json, "csv": report.to_csv, "tsv": report.to_tsv}[args.format]()
    _emit(text, args.out)
    print(
        f"{report.statement}: {report.status} "
        f"(checked {report.checked}, skipped {report.skipped}, "
        f"failures reported {len(report.failures)})",
        file=sys.stderr,
    )
    if report.status == "pass":
        return 0
    return 3 if report.status == "counterexample-found" else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    return _report_command(args, run_statement)


def _cmd_conjecture(args: argparse.Namespace) -> int:
    return _report_command(args, search_conjecture)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("json", "csv", "tsv"),
        default="json",
        help="output format (default json)",
    )
    sub.add_argument("--out", default=None, help="write output to this file instead of stdout")


def _add_sweep_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        help="worker processes (default from FLECKLAB_JOBS, else 1); "
        "reports are byte-identical at any job count",
    )
    sub.add_argument(
        "--failure-cap",
        type=int,
        default=DEFAULT_FAILURE_CAP,
        help=f"maximum failures to record (default {DEFAULT_FAILURE_CAP})",
    )
    sub.add_argument(
        "--seed",
        type=int,
        default=0,
        help="accepted for interface stability; sweeps are exhaustive and "
        "deterministic, so the seed has no effect",
    )
    for name in _AXIS_FLAGS:
        sub.add_argument(
            f"--{name}",
            type=_parse_values,
            default=None,
            metavar="VALS",
            help=f"override the {name} axis (e.g. 3 or 1,2,5 or 0..8)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flecklab",
        description="exact p-adic analysis of restricted alternating binomial sums",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_sum = subs.add_parser("sum", help="evaluate one restricted alternating sum")
    p_sum.add_argument("--p", type=int, required=True, help="prime")
    p_sum.add_argument("--alpha", type=int, required=True, help="exponent of the modulus p**alpha")
    p_sum.add_argument("--n", type=int, required=True, help="binomial upper index")
    p_sum.add_argument("--r", type=int, required=True, help="residue class")
    weight = p_sum.add_mutually_exclusive_group()
    weight.add_argument("--l", type=int, default=None, help="monomial weight degree (default 0)")
    weight.add_argument(
        "--coeffs",
        type=_parse_coeffs,
        default=None,
        help="weight polynomial coefficients, constant term first (e.g. 1,0,2)",
    )
    p_sum.add_argument("--out", default=None, help="write output to this file instead of stdout")
    p_sum.set_defaults(handler=_cmd_sum)

    p_t1 = subs.add_parser(
        "table1",
        help="order-gap table (observed order minus degree bound) on the fixed "
        "grid p=3, alpha=2, r=2, n=90..98, l=0..9",
    )
    _add_output_flags(p_t1)
    p_t1.set_defaults(handler=_cmd_table1)

    p_e13 = subs.add_parser(
        "example13",
        help="orders vs. bounds on the fixed row p=2, alpha=1, r=0, n=20, l=0..21",
    )
    _add_output_flags(p_e13)
    p_e13.set_defaults(handler=_cmd_example13)

    p_ver = subs.add_parser("verify", help="sweep one cataloged statement")
    p_ver.add_argument("id", help="statement id (e.g. T1.1)")
    _add_output_flags(p_ver)
    _add_sweep_flags(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    p_conj = subs.add_parser("conjecture", help="search a conjecture for counterexamples")
    p_conj.add_argument("id", help="conjecture id (e.g. CONJ1.1)")
    _add_output_flags(p_conj)
    _add_sweep_flags(p_conj)
    p_conj.set_defaults(handler=_cmd_conjecture)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
