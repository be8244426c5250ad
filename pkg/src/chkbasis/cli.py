"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical finding
(singular matrix, degenerate normalization, zero norm).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chk import MassParams
from .convert import (
    BASIS_LAYOUT,
    BERNSTEIN_TO_CHK,
    CANONICAL,
    CHK_TO_BERNSTEIN,
    COEFFICIENT_LAYOUT,
    VERBATIM,
    DegenerateNormError,
    apply,
    audit,
    build,
)
from .exact import SingularMatrixError
from .lsq import ZeroNormError, lsq_monomial, lsq_orthogonal
from .poly import Polynomial, evaluate
from .serialize import (
    format_rational,
    matrix_to_csv,
    matrix_to_json,
    parse_rational,
    parse_rational_list,
    report_to_dict,
    to_jsonable,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FINDING = 3

DEFAULT_MAX_DEGREE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _direction_arg(text: str) -> str:
    return text.replace("-", "_")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="fixed Bernstein degree")
    common.add_argument("--mass-left", type=_rational_arg, default=Fraction(0), metavar="P/Q")
    common.add_argument("--mass-right", type=_rational_arg, default=Fraction(0), metavar="P/Q")
    common.add_argument("--mode", choices=[VERBATIM, CANONICAL], default=CANONICAL)
    common.add_argument("--direction", type=_direction_arg, choices=[CHK_TO_BERNSTEIN, BERNSTEIN_TO_CHK],
                        default=CHK_TO_BERNSTEIN, help="chk-to-bernstein or bernstein-to-chk")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", default=None, metavar="PATH", help="write here instead of stdout")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    coeffs = _Parser(add_help=False)
    coeffs.add_argument("--coeffs", default=None, help="comma-separated rationals")
    coeffs.add_argument("--coeffs-file", default=None,
                        help="one rational per line or a JSON list ('-' for stdin)")

    parser = _Parser(prog="chkbasis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("matrix", parents=[common], help="emit a conversion matrix")
    p.add_argument("--layout", choices=[BASIS_LAYOUT, COEFFICIENT_LAYOUT], default=BASIS_LAYOUT,
                   help="basis: row r expands source element r; coefficient: transpose")

    sub.add_parser("convert", parents=[common, coeffs], help="transform a coefficient vector")

    p = sub.add_parser("eval", parents=[common, coeffs], help="evaluate a polynomial exactly")
    p.add_argument("--basis", choices=["monomial", "bernstein", "chk"], default="chk")
    p.add_argument("--points", required=True, help="comma-separated rationals in [0, 1]")

    sub.add_parser("audit", parents=[common], help="compare published formulas with oracles")

    p = sub.add_parser("lsq", parents=[common, coeffs], help="least-squares fit of a polynomial")
    p.add_argument("--basis", choices=["monomial", "chk"], default="monomial",
                   help="approximating basis")
    p.add_argument("--target-basis", choices=["monomial", "bernstein", "chk"], default="monomial",
                   help="basis of the target coefficients")
    p.add_argument("--no-masses", action="store_true", help="drop point masses from the measure")
    return parser


def _params(args) -> MassParams:
    try:
        return MassParams(args.mass_left, args.mass_right)
    except ValueError as err:
        raise UsageError(str(err))


def _degree(args, required=True):
    if args.n is None:
        if required:
            raise UsageError("--n is required")
        return None
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.n > args.max_degree:
        raise UsageError(f"--n {args.n} exceeds the degree cap {args.max_degree} (see --max-degree)")
    return args.n


def _read_coeffs(args) -> list[Fraction]:
    try:
        if args.coeffs is not None:
            return [parse_rational(t.strip()) for t in args.coeffs.split(",") if t.strip()]
        if args.coeffs_file is not None:
            if args.coeffs_file == "-":
                text = sys.stdin.read()
            else:
                with open(args.coeffs_file) as fh:
                    text = fh.read()
            return parse_rational_list(text)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read coefficients: {err}")
    raise UsageError("give --coeffs or --coeffs-file")


def _coeff_degree(args, values) -> int:
    if not values:
        raise UsageError("empty coefficient list")
    n = _degree(args, required=False)
    if n is None:
        n = len(values) - 1
        if n > args.max_degree:
            raise UsageError(f"degree {n} exceeds the degree cap {args.max_degree}")
    elif len(values) != n + 1:
        raise UsageError(f"expected {n + 1} coefficients for n = {n}, got {len(values)}")
    return n


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_vector(args, header: dict, values):
    if args.format == "csv":
        _emit(args, "".join(format_rational(v) + "\n" for v in values))
    else:
        doc = dict(header)
        doc["coefficients"] = [format_rational(v) for v in values]
        _emit(args, json.dumps(doc, indent=2) + "\n")


def cmd_matrix(args):
    m = build(_degree(args), _params(args), args.direction, args.mode).with_layout(args.layout)
    _emit(args, matrix_to_csv(m) if args.format == "csv" else matrix_to_json(m) + "\n")


def cmd_convert(args):
    values = _read_coeffs(args)
    n = _coeff_degree(args, values)
    m = build(n, _params(args), args.direction, args.mode)
    header = {"n": n, "mass_left": format_rational(m.params.mass_left),
              "mass_right": format_rational(m.params.mass_right),
              "direction": m.direction, "mode": m.mode}
    _emit_vector(args, header, apply(m, values))


def _points(text: str) -> list[Fraction]:
    try:
        pts = [parse_rational(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError as err:
        raise UsageError(str(err))
    if not pts or any(not 0 <= x <= 1 for x in pts):
        raise UsageError("points must be rationals in [0, 1]")
    return pts


def _polynomial(basis: str, values, params: MassParams) -> Polynomial:
    if basis == "monomial":
        return Polynomial.monomial(values)
    if basis == "bernstein":
        return Polynomial.bernstein(values)
    return Polynomial.chk(values, params)


def cmd_eval(args):
    values = _read_coeffs(args)
    _coeff_degree(args, values)
    pts = _points(args.points)
    p = _polynomial(args.basis, values, _params(args))
    results = [evaluate(p, x) for x in pts]
    if args.format == "csv":
        _emit(args, "".join(f"{format_rational(x)},{format_rational(y)}\n" for x, y in zip(pts, results)))
    else:
        doc = {"basis": args.basis, "points": [format_rational(x) for x in pts],
               "values": [format_rational(y) for y in results]}
        _emit(args, json.dumps(doc, indent=2) + "\n")


def cmd_audit(args):
    if args.format != "json":
        raise UsageError("audit reports are JSON only")
    rep = audit(_degree(args), _params(args))
    _emit(args, json.dumps(report_to_dict(rep), indent=2) + "\n")


def cmd_lsq(args):
    n = _degree(args)
    params = _params(args)
    values = _read_coeffs(args)
    f = _polynomial(args.target_basis, values, params)
    if args.basis == "monomial":
        res = lsq_monomial(f, n)
    else:
        res = lsq_orthogonal(f, n, params, include_masses=not args.no_masses)
    if args.format == "csv":
        _emit(args, "".join(format_rational(v) + "\n" for v in res.coefficients))
        return
    doc = {"basis": res.basis, "n": n, "mass_left": format_rational(params.mass_left),
           "mass_right": format_rational(params.mass_right),
           "coefficients": [format_rational(v) for v in res.coefficients],
           "residual_norm_squared": to_jsonable(res.residual_norm_squared)}
    _emit(args, json.dumps(doc, indent=2) + "\n")


COMMANDS = {"matrix": cmd_matrix, "convert": cmd_convert, "eval": cmd_eval,
            "audit": cmd_audit, "lsq": cmd_lsq}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args)
    except UsageError as err:
        print(f"chkbasis: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularMatrixError, DegenerateNormError, ZeroNormError) as err:
        print(f"chkbasis: {err}", file=sys.stderr)
        return EXIT_FINDING
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
