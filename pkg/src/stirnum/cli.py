"""Command-line interface.

Every invocation writes one output record to stdout in the requested
format (plain, json, or csv) and exits with:

    0  success
    1  domain error: pole, empty series window, or similar
    2  usage or literal-parse error
    3  a verification ran to completion and reported a failure

Rationals on the command line use the literal form -?digits(/digits)?,
e.g. 3, -1/2, 7/3.  With option=value syntax (--lambda=-3/2) negative
values never collide with option parsing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .errors import (
    DomainError,
    PoleError,
    PrecisionExhaustedError,
    RationalParseError,
    ZeroSeriesError,
)
from .identities import (
    ALL_IDENTITY_IDS,
    run_sweep,
)
from .rationals import format_rational, parse_rational
from .sequences import (
    bernoulli_formula,
    bernoulli_oracle,
    euler_number,
    euler_polynomial_formula,
    sequence_value,
    stirling_alternating_sum,
    verify_two_param_reductions,
)
from .series import LaurentSeries, exp_linear
from .stirling import (
    m_determinant,
    stirling1,
    stirling2,
    verify_first_kind_determinant_relation,
)

__all__ = ["build_parser", "main"]

_CHECK_TARGETS = ("det-relation", "alt-sum", "reductions")
_REDUCTION_ALPHAS = (Fraction(1), Fraction(2), Fraction(-1, 2))
_REDUCTION_LAMBDAS = (Fraction(1), Fraction(3), Fraction(1, 4))

_VERIFY_CSV_HEADER = [
    "id",
    "k",
    "n",
    "alpha",
    "lambda",
    "order",
    "window_lo",
    "window_hi",
    "passed",
    "discrepancy_exponent",
    "discrepancy_lhs",
    "discrepancy_rhs",
]


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


@dataclass
class CommandOutput:
    record: dict
    plain: str
    csv_header: List[str]
    csv_rows: List[List[str]]
    exit_code: int = 0
    notes: Sequence[str] = field(default=())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default="plain",
        help="output format (default: plain)",
    )

    parser = argparse.ArgumentParser(
        prog="stirnum",
        description=(
            "Exact Stirling-number computation of Bernoulli/Euler-type "
            "families, with series-based verification"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("stirling2", parents=[common], help="Stirling number S(n, k), second kind")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("stirling1", parents=[common], help="signed Stirling number s(n, k), first kind")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("mdet", parents=[common], help="bordered Hessenberg determinant M_j(k, i)")
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("i", type=int)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number B_n")
    p.add_argument("n", type=int)
    p.add_argument(
        "--method",
        choices=("formula", "oracle"),
        default="oracle",
        help="closed Stirling form (even n >= 2 only) or generating series (default)",
    )

    p = sub.add_parser("apostol-bernoulli", parents=[common], help="Apostol-Bernoulli number B_n(lambda)")
    p.add_argument("n", type=int)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)

    p = sub.add_parser("euler-number", parents=[common], help="Euler number E_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("euler-poly", parents=[common], help="Euler polynomial E_n(x)")
    p.add_argument("n", type=int)
    p.add_argument("--at", type=_rational, default=None, help="evaluate at this point")

    p = sub.add_parser(
        "two-param-euler",
        parents=[common],
        help="two-parameter Euler polynomial E_n(x; alpha, lambda)",
    )
    p.add_argument("n", type=int)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--at", type=_rational, default=None, help="evaluate at this point")

    p_series = sub.add_parser("series", help="inspect the underlying generating series")
    series_sub = p_series.add_subparsers(dest="series_command", required=True, metavar="action")
    p = series_sub.add_parser("dump", parents=[common], help="print a coefficient table")
    p.add_argument(
        "which",
        choices=("recip-exp-minus-one", "recip-exp-plus-one", "apostol"),
        help=(
            "1/(e^t-1), 1/(e^t+1), or the Apostol-Bernoulli generating "
            "function t/(lambda e^t - 1)"
        ),
    )
    p.add_argument("--lambda", dest="lam", type=_rational, default=None)
    p.add_argument("--order", type=int, required=True, help="truncation order of the source series")

    p = sub.add_parser("verify", parents=[common], help="run identity verification sweeps")
    p.add_argument(
        "target",
        choices=("all",) + ALL_IDENTITY_IDS + _CHECK_TARGETS,
        help="identity tag, named check, or 'all'",
    )
    p.add_argument("--k-max", dest="k_max", type=int, default=8)
    p.add_argument("--alpha", type=_rational, default=None, help="restrict the parameter grid")
    p.add_argument("--lambda", dest="lam", type=_rational, default=None, help="restrict the parameter grid")
    p.add_argument("--order", type=int, default=None, help="override the truncation order")

    return parser


def _post_validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "series":
        if args.which == "apostol" and args.lam is None:
            parser.error("--lambda is required for the apostol series")
        if args.which != "apostol" and args.lam is not None:
            parser.error("--lambda applies only to the apostol series")
        if args.order < 1:
            parser.error("--order must be >= 1")
    if args.command == "verify" and args.k_max < 1:
        parser.error("--k-max must be >= 1")


# -- output assembly ---------------------------------------------------------


def _jsonable_params(params: Dict[str, object]) -> Dict[str, object]:
    out: Dict[str, object] = {}
    for name, value in params.items():
        if isinstance(value, Fraction):
            out[name] = format_rational(value)
        else:
            out[name] = value
    return out


def _scalar_output(argv, params, value, notes=()) -> CommandOutput:
    text = format_rational(value)
    record = {
        "command": list(argv),
        "parameters": _jsonable_params(params),
        "result": text,
        "status": "ok",
    }
    if notes:
        record["notes"] = list(notes)
    plain = text
    if notes:
        plain += "".join(f"\nnote: {note}" for note in notes)
    header = [str(name) for name in params] + ["result"]
    row = [
        format_rational(v) if isinstance(v, Fraction) else str(v) for v in params.values()
    ] + [text]
    return CommandOutput(record, plain, header, [row], 0, notes)


def _poly_output(argv, params, poly, notes=()) -> CommandOutput:
    coeff_texts = [format_rational(c) for c in poly.coeffs]
    record = {
        "command": list(argv),
        "parameters": _jsonable_params(params),
        "result": {"coefficients": coeff_texts},
        "status": "ok",
    }
    if notes:
        record["notes"] = list(notes)
    plain = str(poly)
    if notes:
        plain += "".join(f"\nnote: {note}" for note in notes)
    rows = [[str(i), text] for i, text in enumerate(coeff_texts)]
    return CommandOutput(record, plain, ["degree", "coefficient"], rows, 0, notes)


def _series_output(argv, params, series: LaurentSeries) -> CommandOutput:
    pairs = [(e, format_rational(c)) for e, c in series.coefficients()]
    record = {
        "command": list(argv),
        "parameters": _jsonable_params(params),
        "result": {
            "offset": series.offset,
            "precision": series.precision,
            "coefficients": [[e, text] for e, text in pairs],
        },
        "status": "ok",
    }
    plain = "\n".join(f"t^{e}: {text}" for e, text in pairs)
    rows = [[str(e), text] for e, text in pairs]
    return CommandOutput(record, plain, ["exponent", "coefficient"], rows)


def _error_output(argv, kind: str, message: str) -> CommandOutput:
    record = {
        "command": list(argv),
        "status": "error",
        "error_kind": kind,
        "message": message,
    }
    plain = f"error[{kind}]: {message}"
    return CommandOutput(record, plain, ["status", "error_kind", "message"], [["error", kind, message]], 1)


# -- handlers ----------------------------------------------------------------


def _handle_stirling2(args, argv):
    return _scalar_output(argv, {"n": args.n, "k": args.k}, stirling2(args.n, args.k))


def _handle_stirling1(args, argv):
    return _scalar_output(argv, {"n": args.n, "k": args.k}, stirling1(args.n, args.k))


def _handle_mdet(args, argv):
    return _scalar_output(
        argv, {"j": args.j, "k": args.k, "i": args.i}, m_determinant(args.j, args.k, args.i)
    )


def _handle_bernoulli(args, argv):
    if args.method == "formula":
        if args.n < 2 or args.n % 2:
            raise DomainError(
                "the closed Stirling form covers even n >= 2 only; use --method oracle"
            )
        value = bernoulli_formula(args.n // 2)
    else:
        value = bernoulli_oracle(args.n)
    return _scalar_output(argv, {"n": args.n, "method": args.method}, value)


def _handle_apostol_bernoulli(args, argv):
    provenance = "oracle" if args.n == 0 else "formula"
    result = sequence_value("apostol_bernoulli", args.n, provenance, lam=args.lam)
    return _scalar_output(argv, {"n": args.n, "lambda": args.lam}, result.value, result.notes)


def _handle_euler_number(args, argv):
    return _scalar_output(argv, {"n": args.n}, euler_number(args.n))


def _handle_euler_poly(args, argv):
    poly = euler_polynomial_formula(args.n)
    if args.at is None:
        return _poly_output(argv, {"n": args.n}, poly)
    return _scalar_output(argv, {"n": args.n, "x": args.at}, poly.evaluate(args.at))


def _handle_two_param_euler(args, argv):
    result = sequence_value(
        "two_param_euler", args.n, "formula", alpha=args.alpha, lam=args.lam, x=args.at
    )
    params = {"n": args.n, "alpha": args.alpha, "lambda": args.lam}
    if args.at is not None:
        params["x"] = args.at
        return _scalar_output(argv, params, result.value, result.notes)
    return _poly_output(argv, params, result.value, result.notes)


def _handle_series_dump(args, argv):
    order = args.order
    one = LaurentSeries.one(order)
    if args.which == "recip-exp-minus-one":
        series = (exp_linear(1, order) - one).reciprocal()
        params = {"which": args.which, "order": order}
    elif args.which == "recip-exp-plus-one":
        series = (exp_linear(1, order) + one).reciprocal()
        params = {"which": args.which, "order": order}
    else:
        denom = exp_linear(1, order).scale(args.lam) - one
        series = denom.reciprocal().shift(1)
        params = {"which": args.which, "lambda": args.lam, "order": order}
    return _series_output(argv, params, series)


def _check_row(check: str, passed: bool, **fields) -> dict:
    row: dict = {"check": check}
    row.update(fields)
    row["passed"] = passed
    return row


def _verify_rows(args) -> List[dict]:
    target = args.target
    k_max = args.k_max
    alphas = None if args.alpha is None else [args.alpha]
    lambdas = None if args.lam is None else [args.lam]
    rows: List[dict] = []

    identity_targets: Sequence[str]
    if target == "all":
        identity_targets = ALL_IDENTITY_IDS
    elif target in ALL_IDENTITY_IDS:
        identity_targets = (target,)
    else:
        identity_targets = ()
    if identity_targets:
        for report in run_sweep(identity_targets, k_max, args.order, alphas, lambdas):
            rows.append(report.to_dict())

    if target in ("all", "det-relation"):
        for n in range(1, k_max + 1):
            for k in range(1, n + 1):
                rows.append(
                    _check_row(
                        "det-relation", verify_first_kind_determinant_relation(n, k), n=n, k=k
                    )
                )
    if target in ("all", "alt-sum"):
        for n in range(1, k_max + 1):
            rows.append(_check_row("alt-sum", stirling_alternating_sum(n) == 0, n=n))
    if target in ("all", "reductions"):
        alpha_grid = sorted(alphas or _REDUCTION_ALPHAS)
        lambda_grid = sorted(lambdas or _REDUCTION_LAMBDAS)
        for n in range(0, k_max + 1):
            for alpha in alpha_grid:
                for lam in lambda_grid:
                    rows.append(
                        _check_row(
                            "reductions",
                            verify_two_param_reductions(n, alpha, lam),
                            n=n,
                            alpha=format_rational(alpha),
                            **{"lambda": format_rational(lam)},
                        )
                    )
    return rows


def _verify_plain_line(row: dict) -> str:
    if "identity_id" in row:
        bits = [row["identity_id"], f"k={row['k']}"]
        if row["alpha"] is not None:
            bits.append(f"alpha={row['alpha']}")
        if row["lambda"] is not None:
            bits.append(f"lambda={row['lambda']}")
        bits.append(f"order={row['order']}")
        lo, hi = row["window"]
        bits.append(f"window=[{lo},{hi})")
        head = " ".join(bits)
        if row["passed"]:
            return f"{head} ok"
        disc = row["first_discrepancy"]
        return f"{head} FAIL at t^{disc['exponent']}: lhs={disc['lhs']} rhs={disc['rhs']}"
    bits = [row["check"]]
    for name in ("n", "k", "alpha", "lambda"):
        if name in row:
            bits.append(f"{name}={row[name]}")
    return " ".join(bits) + (" ok" if row["passed"] else " FAIL")


def _verify_csv_row(row: dict) -> List[str]:
    def cell(value) -> str:
        return "" if value is None else str(value)

    if "identity_id" in row:
        disc = row["first_discrepancy"] or {}
        lo, hi = row["window"]
        return [
            row["identity_id"],
            str(row["k"]),
            "",
            cell(row["alpha"]),
            cell(row["lambda"]),
            str(row["order"]),
            str(lo),
            str(hi),
            str(row["passed"]).lower(),
            cell(disc.get("exponent")),
            cell(disc.get("lhs")),
            cell(disc.get("rhs")),
        ]
    return [
        row["check"],
        cell(row.get("k")),
        cell(row.get("n")),
        cell(row.get("alpha")),
        cell(row.get("lambda")),
        "",
        "",
        "",
        str(row["passed"]).lower(),
        "",
        "",
        "",
    ]


def _handle_verify(args, argv):
    rows = _verify_rows(args)
    passed = sum(1 for row in rows if row["passed"])
    all_ok = passed == len(rows)
    params: Dict[str, object] = {"target": args.target, "k_max": args.k_max}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    if args.lam is not None:
        params["lambda"] = args.lam
    if args.order is not None:
        params["order"] = args.order
    record = {
        "command": list(argv),
        "parameters": _jsonable_params(params),
        "result": {"passed": all_ok, "total": len(rows), "ok": passed, "checks": rows},
        "status": "ok",
    }
    lines = [_verify_plain_line(row) for row in rows]
    lines.append(f"{passed}/{len(rows)} ok")
    csv_rows = [_verify_csv_row(row) for row in rows]
    return CommandOutput(record, "\n".join(lines), _VERIFY_CSV_HEADER, csv_rows, 0 if all_ok else 3)


_HANDLERS = {
    "stirling2": _handle_stirling2,
    "stirling1": _handle_stirling1,
    "mdet": _handle_mdet,
    "bernoulli": _handle_bernoulli,
    "apostol-bernoulli": _handle_apostol_bernoulli,
    "euler-number": _handle_euler_number,
    "euler-poly": _handle_euler_poly,
    "two-param-euler": _handle_two_param_euler,
    "series": _handle_series_dump,
    "verify": _handle_verify,
}


def _emit(out: CommandOutput, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(out.record, indent=2))
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(out.csv_header)
        writer.writerows(out.csv_rows)
        sys.stdout.write(buffer.getvalue())
    else:
        print(out.plain)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _post_validate(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        out = _HANDLERS[args.command](args, argv)
    except PoleError as exc:
        out = _error_output(argv, "pole", str(exc))
    except DomainError as exc:
        out = _error_output(argv, "domain", str(exc))
    except PrecisionExhaustedError as exc:
        out = _error_output(argv, "precision", str(exc))
    except ZeroSeriesError as exc:
        out = _error_output(argv, "zero-series", str(exc))
    _emit(out, args.format)
    return out.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
