"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (singular minor, truncation,
failed identity), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import powerseries
from .btransform import METHODS, transform
from .factorization import (JFractionError, SingularMinorError, hankel_from_jfraction,
                            hankel_matrix, hankel_transform, jfraction, ldu, tph_ldu, tph_matrix,
                            verify_conjugation)
from .matrix import Matrix, SymMatrix
from .orthopoly import Recurrence, coeff_array, moment_matrix
from .parse import ParseError, parse_riordan, parse_seq, parse_series
from .powerseries import TruncationError, aerate, reversion, sqrt1
from .riordan import aerate_matrix, matrix_reversal, to_matrix

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def rat(v) -> str:
    """Exact string form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    return str(Fraction(v))


def _rows(m: Matrix) -> list[list[str]]:
    return [[rat(v) for v in r] for r in m.rows]


def emit_json(doc: dict) -> str:
    out = {"v": SCHEMA_VERSION}
    out.update(doc)
    return json.dumps(out, separators=(",", ":"), ensure_ascii=False)


def _emit_table(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            width = max((len(c) for row in value for c in row), default=1)
            if len(doc) > 1:
                lines.append(f"{key}:")
            lines.extend(" ".join(c.rjust(width) for c in row) for row in value)
        elif isinstance(value, list):
            text = ",".join(value)
            lines.append(f"{key}: {text}" if len(doc) > 1 else text)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _emit_csv(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.extend(",".join(row) for row in value)
        elif isinstance(value, list):
            lines.append(",".join(value))
        else:
            lines.append(f"{key},{value}")
    return "\n".join(lines)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return emit_json(doc)
    if fmt == "csv":
        return _emit_csv(doc)
    return _emit_table(doc)


# -- subcommands -------------------------------------------------------------

def _seq_arg(args, length=None):
    spec = args.seq_from or args.seq
    if spec is None:
        raise UsageError("one of --seq or --seq-from is required")
    try:
        return parse_seq(spec, length)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _series_arg(text, order=None):
    if text.startswith(("btransform:", "seq:")):
        spec = text[4:] if text.startswith("seq:") else text
        try:
            return parse_seq(spec, order).gf()
        except ParseError as exc:
            raise UsageError(str(exc)) from None
    try:
        return parse_series(text, order)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def cmd_series(args):
    s = _series_arg(args.gf, args.n)
    if args.op == "reversion":
        s = reversion(s)
    elif args.op == "sqrt":
        s = sqrt1(s)
    elif args.op == "aerate":
        s = aerate(s, args.n)
    return {"coeffs": [rat(v) for v in s.coeffs[: args.n]]}, 0


def cmd_riordan(args):
    try:
        r = parse_riordan(args.pair, max(args.n, 2) + 2)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if args.inverse:
        r = r.inverse()
    m = to_matrix(r, args.n)
    if args.reversal:
        m = matrix_reversal(m)
    if args.aerate:
        m = aerate_matrix(m)
    return {"rows": _rows(m)}, 0


def cmd_btransform(args):
    a = _seq_arg(args, max(args.n + 1, powerseries.default_order()))
    return {"terms": [rat(v) for v in transform(a, args.n, args.method)]}, 0


def cmd_hankel(args):
    b = _seq_arg(args, max(2 * args.n + 1, powerseries.default_order()))
    if args.transform:
        return {"h": [rat(v) for v in hankel_transform(b, args.n - 1)]}, 0
    return {"rows": _rows(hankel_matrix(b, args.n))}, 0


def cmd_tph(args):
    a = _seq_arg(args, max(2 * args.n, powerseries.default_order()))
    return {"rows": _rows(tph_matrix(a, args.n))}, 0


def _read_matrix(path: str) -> SymMatrix:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("rows", data.get("matrix"))
        return SymMatrix([[Fraction(str(v)) for v in row] for row in data])
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad matrix file: {exc}") from None


def cmd_ldu(args):
    f = ldu(_read_matrix(args.matrix))
    return {"L": _rows(f.L), "D": [rat(v) for v in f.D]}, 0


def cmd_jfraction(args):
    s = _series_arg(args.gf, max(2 * args.depth + 1, powerseries.default_order()))
    j = jfraction(s, args.depth)
    doc = {"a0": rat(j.a0),
           "alphas": [rat(v) for v in j.alphas],
           "betas": [rat(v) for v in j.betas]}
    doc["hankel"] = [rat(v) for v in hankel_from_jfraction(j, len(j.betas))]
    return doc, 0


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_orthopoly(args):
    alphas = _rational_list(args.alphas)
    betas = _rational_list(args.betas)
    r = Recurrence.monic(alphas, betas)
    if args.p1:
        r = Recurrence((1,), _rational_list(args.p1), alphas, betas)
    m = coeff_array(r, args.n) if args.what == "coeff" else moment_matrix(r, args.n)
    return {"rows": _rows(m)}, 0


def cmd_verify(args):
    a = _seq_arg(args, max(2 * args.n + 2, powerseries.default_order()))
    check = verify_conjugation(a, args.n)
    doc = {"conjugation": "ok" if check.ok else f"FAILED at {check.witness}"}
    status = 0 if check.ok else 1
    try:
        f = tph_ldu(a, args.n)
        doc["tph_ldu"] = "ok"
        doc["D"] = [rat(v) for v in f.D]
        doc["L_inv_calL"] = _rows(f.L)
    except SingularMinorError as exc:
        doc["tph_ldu"] = f"not applicable: {exc}"
    except ArithmeticError as exc:
        doc["tph_ldu"] = f"FAILED: {exc}"
        status = 1
    return doc, status


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help="global series truncation order (default 64)")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--out", "--format", dest="fmt", choices=("table", "json", "csv"),
                     default="table")

    seq = argparse.ArgumentParser(add_help=False)
    seq.add_argument("--seq", help="fib|jac|catalan|delta|genr:r|list:1,2,3|gf:<expr>")
    seq.add_argument("--seq-from", dest="seq_from",
                     help="pipeline source, e.g. btransform:fib")

    p = argparse.ArgumentParser(prog="riordan-tph", parents=[common],
                                description="Exact Riordan-array tools for 𝔹-transforms, "
                                            "Hankel and Toeplitz-plus-Hankel matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common, fmt], help="expand a series")
    s.add_argument("--gf", required=True)
    s.add_argument("--n", type=int, default=16)
    s.add_argument("--op", choices=("none", "reversion", "sqrt", "aerate"), default="none")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("riordan", parents=[common, fmt], help="matrix of a Riordan pair")
    s.add_argument("--pair", required=True, help="'g=<expr>; f=<expr>'")
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--reversal", action="store_true")
    s.add_argument("--aerate", action="store_true")
    s.set_defaults(func=cmd_riordan)

    s = sub.add_parser("btransform", parents=[common, fmt, seq], help="𝔹-transform of a sequence")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default="matrix")
    s.set_defaults(func=cmd_btransform)

    s = sub.add_parser("hankel", parents=[common, fmt, seq], help="Hankel matrix or transform")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--transform", action="store_true", help="print h_0..h_{n-1}")
    s.set_defaults(func=cmd_hankel)

    s = sub.add_parser("tph", parents=[common, fmt, seq], help="Toeplitz-plus-Hankel matrix")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_tph)

    s = sub.add_parser("ldu", parents=[common, fmt], help="LDLᵀ of a symmetric matrix")
    s.add_argument("--matrix", required=True, help="JSON file of rows of rational strings, or -")
    s.set_defaults(func=cmd_ldu)

    s = sub.add_parser("jfraction", parents=[common, fmt], help="J-fraction coefficients")
    s.add_argument("--gf", required=True, help="series expression, list, or btransform:<seq>")
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_jfraction)

    s = sub.add_parser("orthopoly", parents=[common],
                       help="coefficient or moment array of a three-term family")
    s.add_argument("--alphas", required=True)
    s.add_argument("--betas", required=True)
    s.add_argument("--p1", help="explicit P_1 coefficients (ascending), overrides x - alpha_0")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", dest="what", choices=("coeff", "moments"), default="coeff")
    s.add_argument("--format", dest="fmt", choices=("table", "json", "csv"), default="table")
    s.set_defaults(func=cmd_orthopoly)

    s = sub.add_parser("verify", parents=[common, fmt, seq],
                       help="check H = L A L^t and the induced factorization of A")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.order is not None:
        powerseries.set_default_order(args.order)
    try:
        doc, status = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (SingularMinorError, JFractionError, TruncationError, ArithmeticError,
            IndexError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(render(doc, args.fmt), file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
