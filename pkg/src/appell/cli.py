"""Command-line interface: ``appell {stirling,family,assoc,daehee,verify}``.

All rationals are printed as ``p/q`` (or ``p``) in lowest terms; JSON output
never contains floats. Output depends only on the arguments, so repeated
runs are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import families
from .appell import polynomial_of
from .numeric import format_rational, parse_rational
from .stirling import stirling_table

SCHEMA_VERSION = "appell/1"
# lets argparse read "-7/4" as a value rather than an option
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")
DEFAULT_MAX_ORDER = 64


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return value


def _row(values) -> list[str]:
    return [v if isinstance(v, str) else format_rational(v) for v in values]


def render(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, indent=2, ensure_ascii=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for label, cells in document["payload"].items():
        writer.writerow([label, *cells])
    if document.get("status") is not None:
        writer.writerow(["status", document["status"]])
    return buf.getvalue()


def _document(command: str, parameters: dict, payload: dict, status: str | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": {k: _param(v) for k, v in parameters.items()},
        "payload": payload,
    }
    if status is not None:
        doc["status"] = status
    return doc


def _param(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def _limit(args, *values: int) -> None:
    for v in values:
        if v > args.max_order:
            args.parser.error(f"{v} exceeds --max-order {args.max_order}")


def _warn_beta(beta: Fraction | None) -> None:
    if beta is not None and not 0 <= beta <= 1:
        print(
            f"warning: beta={format_rational(beta)} lies outside [0, 1]; computing formally",
            file=sys.stderr,
        )


def cmd_stirling(args) -> tuple[dict, int]:
    _limit(args, args.n)
    table = stirling_table(args.kind, args.n)
    payload = {str(n): _row(row) for n, row in enumerate(table)}
    return _document("stirling", {"kind": args.kind, "n": args.n}, payload), 0


def _associated(args):
    if args.family == "bernoulli":
        return families.bernoulli_associated(args.t, args.n)
    return families.euler_associated(args.t, args.beta, args.n)


def _family_params(args) -> dict:
    params = {"family": args.family, "t": args.t}
    if args.family == "apostol-euler":
        params["beta"] = args.beta
    params["n"] = args.n
    return params


def _check_family(args) -> None:
    _limit(args, args.n)
    if args.family == "apostol-euler" and args.beta is None:
        args.parser.error("--beta is required for the apostol-euler family")
    if args.family == "bernoulli" and args.beta is not None:
        args.parser.error("--beta only applies to the apostol-euler family")
    _warn_beta(args.beta)


def cmd_family(args) -> tuple[dict, int]:
    _check_family(args)
    params = _family_params(args)
    if args.x is not None:
        params["x"] = args.x
        if args.family == "bernoulli":
            value = families.bernoulli_polynomial(args.t, args.n, args.x)
        else:
            value = families.apostol_euler_polynomial(args.t, args.beta, args.n, args.x)
        payload = {"value": _row([value])}
    else:
        a = _associated(args)
        if args.family == "bernoulli":
            seq = families.bernoulli_sequence(args.t, args.n)
        else:
            seq = families.apostol_euler_sequence(args.t, args.beta, args.n)
        poly = polynomial_of(seq, args.n)
        payload = {
            "coefficients": _row(poly.padded(args.n + 1)),
            "associated": _row(a.terms),
        }
    return _document("family", params, payload), 0


def cmd_assoc(args) -> tuple[dict, int]:
    _check_family(args)
    a = _associated(args)
    return _document("assoc", _family_params(args), {"associated": _row(a.terms)}), 0


def cmd_daehee(args) -> tuple[dict, int]:
    _limit(args, args.n)
    if args.m < 1:
        args.parser.error("--m must be at least 1")
    row = [families.daehee_number(args.m, k) for k in range(args.n + 1)]
    return _document("daehee", {"m": args.m, "n": args.n}, {"daehee": _row(row)}), 0


def cmd_verify(args) -> tuple[dict, int]:
    _limit(args, args.max_degree)
    _warn_beta(args.beta)
    try:
        report = families.verify_identity(
            args.identity,
            {"m": args.m, "r": args.r, "beta": args.beta},
            max_degree=args.max_degree,
            trials=args.trials,
            seed=args.seed,
        )
    except ValueError as exc:
        args.parser.error(str(exc))
    params = {"identity": args.identity, **report.parameters}
    params.update(max_degree=args.max_degree, trials=args.trials, seed=args.seed)
    payload = {"checked": [str(report.checked)]}
    if report.first_failure is not None:
        n, lhs, rhs, note = report.first_failure
        payload["witness"] = [str(n), format_rational(lhs), format_rational(rhs)]
        payload["note"] = [note]
    return _document("verify", params, payload, report.status), 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--max-order", type=_natural, default=DEFAULT_MAX_ORDER)

    parser = argparse.ArgumentParser(
        prog="appell", description="Exact Appell polynomial tables and identity checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[common], help="Stirling number table")
    p.add_argument("--kind", choices=("first", "second"), required=True)
    p.add_argument("--n", type=_natural, required=True, help="last row index")
    p.set_defaults(func=cmd_stirling, parser=p)

    for name, func, helptext in (
        ("family", cmd_family, "polynomial coefficients or a value"),
        ("assoc", cmd_assoc, "associated sequence prefix"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("family", choices=("bernoulli", "apostol-euler"))
        p.add_argument("--t", type=_rational, required=True, help="order, e.g. 1/2")
        p.add_argument("--beta", type=_rational)
        p.add_argument("--n", type=_natural, required=True)
        if name == "family":
            p.add_argument("--x", type=_rational)
        p.set_defaults(func=func, parser=p)

    p = sub.add_parser("daehee", parents=[common], help="Daehee numbers b_0(m)..b_n(m)")
    p.add_argument("--m", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.set_defaults(func=cmd_daehee, parser=p)

    p = sub.add_parser("verify", parents=[common], help="check an identity exactly")
    p.add_argument("identity", choices=families.IDENTITIES)
    p.add_argument("--m", type=_natural)
    p.add_argument("--r", type=_natural)
    p.add_argument("--beta", type=_rational)
    p.add_argument("--max-degree", type=_natural, default=10)
    p.add_argument("--trials", type=_natural, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify, parser=p)

    for each in (parser, *sub.choices.values()):
        each._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    document, code = args.func(args)
    sys.stdout.write(render(document, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
