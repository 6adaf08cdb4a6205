"""Command-line front end: ``rwhitney {whitney,bernoulli,cauchy,series,verify}``.

Exit codes: 0 success / all identities pass, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .bernoulli import (
    bernoulli_q_explicit,
    bernoulli_q_gf,
    bernoulli_q_gf_series,
    bernoulli_q_wsum,
    poly_bernoulli_q,
    poly_bernoulli_q_series,
)
from .cauchy import cauchy
from .identities import FAMILIES, run_suite
from .poly import MPoly
from .rational import parse_rational
from .whitney import triangle, whitney_egf_series

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _point(args, names: Sequence[str]) -> dict[str, Fraction]:
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


# -- emitters -------------------------------------------------------------------


def _cell(value):
    if isinstance(value, MPoly):
        return str(value)
    return value


def _json_cell(value):
    if isinstance(value, MPoly):
        return {"text": str(value), "terms": value.to_json()}
    return value


def emit(records: list[dict], fmt: str, plain_lines: list[str]) -> str:
    if fmt == "plain":
        return "".join(line + "\n" for line in plain_lines)
    if fmt == "json":
        data = [{k: _json_cell(v) for k, v in rec.items()} for rec in records]
        return json.dumps(data, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    fields = list(records[0]) if records else []
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([_cell(rec[f]) for f in fields])
    return buf.getvalue()


# -- subcommands ----------------------------------------------------------------


def cmd_whitney(args) -> tuple[list[dict], list[str], int]:
    tri = triangle(args.kind)
    point = _point(args, ("q", "r"))
    if args.k is not None and args.k > args.nmax:
        raise UsageError(f"--k {args.k} exceeds --nmax {args.nmax}")
    records, lines = [], []
    for n in range(args.nmax + 1):
        ks = [args.k] if args.k is not None else range(n + 1)
        row = []
        for k in ks:
            if k > n:
                continue
            value = tri(n, k).evaluate(point)
            records.append({"n": n, "k": k, "value": value})
            row.append(str(value))
        if row:
            lines.append(f"{n}: " + ", ".join(row))
    return records, lines, EXIT_OK


def _explicit_values(args) -> list[Fraction]:
    if args.q is None or args.r is None:
        raise UsageError("the explicit route needs numeric --q and --r")
    if args.q == 0:
        raise UsageError("the explicit route divides by q^k; --q must be nonzero")
    return [bernoulli_q_explicit(n, args.q, args.r) for n in range(args.nmax + 1)]


def cmd_bernoulli(args) -> tuple[list[dict], list[str], int]:
    if args.k_order is not None:
        if args.route not in (None, "wsum"):
            raise UsageError("--route does not apply to poly-Bernoulli output (--k-order)")
        point = _point(args, ("q", "z"))
        values = [v.evaluate(point) for v in poly_bernoulli_q(args.nmax, args.k_order)]
        records = [{"n": n, "k": args.k_order, "value": v} for n, v in enumerate(values)]
        return records, [str(v) for v in values], EXIT_OK

    route = args.route or "wsum"
    point = _point(args, ("q", "r"))
    if route == "wsum":
        values = [bernoulli_q_wsum(n).evaluate(point) for n in range(args.nmax + 1)]
    elif route == "gf":
        values = [v.evaluate(point) for v in bernoulli_q_gf(args.nmax)]
    elif route == "explicit":
        values = [MPoly.const(v) for v in _explicit_values(args)]
    else:
        wsum = [bernoulli_q_wsum(n) for n in range(args.nmax + 1)]
        gf = bernoulli_q_gf(args.nmax)
        explicit = _explicit_values(args) if args.q is not None and args.r is not None else None
        records, lines, status = [], [], EXIT_OK
        for n in range(args.nmax + 1):
            value = wsum[n].evaluate(point)
            gf_ok = wsum[n] == gf[n]
            rec = {"n": n, "value": value, "gf": "agree" if gf_ok else "differ"}
            ok = gf_ok
            if explicit is not None:
                ex_ok = value == explicit[n]
                rec["explicit"] = "agree" if ex_ok else "differ"
                ok = ok and ex_ok
            else:
                rec["explicit"] = "skipped"
            if not ok:
                status = EXIT_FAIL
            records.append(rec)
            lines.append(f"{n}: {value}  [gf {rec['gf']}, explicit {rec['explicit']}]")
        return records, lines, status
    records = [{"n": n, "value": v} for n, v in enumerate(values)]
    return records, [str(v) for v in values], EXIT_OK


def cmd_cauchy(args) -> tuple[list[dict], list[str], int]:
    point = _point(args, ("q", "r"))
    values = [cauchy(args.kind, n).evaluate(point) for n in range(args.nmax + 1)]
    records = [{"n": n, "kind": args.kind, "value": v} for n, v in enumerate(values)]
    return records, [str(v) for v in values], EXIT_OK


def cmd_series(args) -> tuple[list[dict], list[str], int]:
    order = args.order if args.order is not None else args.nmax
    if args.which == "ebq":
        series = bernoulli_q_gf_series(order)
        point = _point(args, ("q", "r"))
    elif args.which == "egf_W":
        if args.k is None:
            raise UsageError("series egf_W needs --k")
        series = whitney_egf_series(args.k, order)
        point = _point(args, ("q", "r"))
    else:
        if args.k is None:
            raise UsageError("series polybern needs --k")
        series = poly_bernoulli_q_series(order, args.k)
        point = _point(args, ("q", "z"))
    values = [c.evaluate(point) for c in series.coeffs]
    records = [{"power": i, "coefficient": v} for i, v in enumerate(values)]
    return records, [f"t^{i}: {v}" for i, v in enumerate(values)], EXIT_OK


def cmd_verify(args) -> tuple[list[dict], list[str], int]:
    reports = run_suite(args.nmax, args.seed, args.family)
    failed = [rep for rep in reports if not rep.passed]
    if args.format == "csv":
        records = [
            {**rep.to_dict(), "instance": json.dumps(rep.instance, sort_keys=True)}
            for rep in reports
        ]
    else:
        records = [rep.to_dict() for rep in reports]
    lines = []
    for rep in reports:
        inst = " ".join(f"{k}={v}" for k, v in sorted(rep.instance.items()))
        line = f"{rep.status.upper():4}  {rep.identity_id}  {inst}"
        if not rep.passed:
            line += f"  lhs={rep.lhs}  rhs={rep.rhs}"
        lines.append(line)
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} identities passed")
    return records, lines, EXIT_FAIL if failed else EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--nmax", type=_nonneg, default=5, metavar="N")
    common.add_argument("--seed", type=int, default=0, metavar="S")

    parser = argparse.ArgumentParser(
        prog="rwhitney",
        description="Exact r-Whitney numbers, Bernoulli and Cauchy polynomials with a q parameter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("whitney", parents=[common], help="r-Whitney triangles")
    p.add_argument("--kind", choices=("first", "second"), default="second")
    p.add_argument("--k", type=_nonneg, help="only column k")
    p.add_argument("--q", type=_rational_arg)
    p.add_argument("--r", type=_rational_arg)
    p.set_defaults(func=cmd_whitney)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli polynomials with a q parameter")
    p.add_argument("--route", choices=("wsum", "explicit", "gf", "all"))
    p.add_argument("--k-order", type=int, dest="k_order", help="poly-Bernoulli order k")
    p.add_argument("--q", type=_rational_arg)
    p.add_argument("--r", type=_rational_arg)
    p.add_argument("--z", type=_rational_arg)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("cauchy", parents=[common], help="Cauchy polynomials at z = r / z = -r")
    p.add_argument("--kind", choices=("first", "second"), default="first")
    p.add_argument("--q", type=_rational_arg)
    p.add_argument("--r", type=_rational_arg)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("series", parents=[common], help="generating-function coefficients")
    p.add_argument("--which", choices=("ebq", "egf_W", "polybern"), default="ebq")
    p.add_argument("--order", type=_nonneg, help="truncation order (defaults to --nmax)")
    p.add_argument("--k", type=int, help="column (egf_W) or polylog order (polybern)")
    p.add_argument("--q", type=_rational_arg)
    p.add_argument("--r", type=_rational_arg)
    p.add_argument("--z", type=_rational_arg)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--family", action="append", choices=sorted(FAMILIES),
                   help="restrict to a family (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        records, lines, status = args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"rwhitney {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = emit(records, args.format, lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
