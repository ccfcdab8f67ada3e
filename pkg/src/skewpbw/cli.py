"""Command line front end: ``skewpbw divide|groebner|member``.

Inputs are positional files (one expression per line, brackets may span
lines) and ``-e`` expressions, taken in command-line order.  For
``divide`` and ``member`` the first expression is the dividend and the
rest are the generators; ``groebner`` uses them all as generators.

Exit status: 0 on success, 2 on a parse or validation error, 3 when the
subset cap of the completion loop is exceeded.
"""

import argparse
import sys

from .algebra import AlgebraMismatch, Poly
from .buchberger import SubsetCapExceeded, groebner, member, trim
from .division import as_vectors, divide
from .order import OrderSpec
from .parsing import ParseError, format_poly, format_vec, parse_algebra, parse_expr, split_exprs

__all__ = ["main", "build_parser"]


def build_parser():
    p = argparse.ArgumentParser(prog="skewpbw",
                                description="Right division and right Groebner bases in "
                                            "skew PBW extensions.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, text in (("divide", "divide the first input by the others"),
                       ("groebner", "right Groebner basis of the inputs"),
                       ("member", "decide whether the first input lies in the module "
                                  "generated by the others")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--algebra", required=True, metavar="FILE", help="algebra definition file")
        s.add_argument("--order", default="deglex",
                       help="deglex (gradlex) or degrevlex (gradlexrev); default deglex")
        s.add_argument("--module-order", default="top", help="top or toprev; default top")
        s.add_argument("--trim", action="store_true",
                       help="drop basis elements reducible by the others (groebner)")
        s.add_argument("--max-subset", type=int, default=None, metavar="K",
                       help="fail instead of examining subsets larger than K")
        s.add_argument("-e", "--expr", action="append", default=[], metavar="EXPR",
                       help="inline expression (repeatable)")
        s.add_argument("inputs", nargs="*", metavar="FILE", help="files of expressions")
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


_VALUED = {"--algebra", "--order", "--module-order", "--max-subset"}


def _sources(argv, args):
    """Files and inline expressions in the order they appear on the command line."""
    files = list(args.inputs)
    exprs = list(args.expr)
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("-e", "--expr"):
            out.append(("expr", exprs.pop(0)))
            next(it, None)
        elif tok.startswith("--expr=") or (tok.startswith("-e") and len(tok) > 2):
            out.append(("expr", exprs.pop(0)))
        elif tok in _VALUED:
            next(it, None)
        elif files and tok == files[0]:
            out.append(("file", files.pop(0)))
    out += [("file", f) for f in files] + [("expr", e) for e in exprs]
    return out


def _load(args, argv):
    try:
        alg = parse_algebra(_read(args.algebra))
    except ParseError as exc:
        raise ParseError(f"{args.algebra}: {exc}") from None
    items = []
    k = 0
    for kind, value in _sources(argv, args):
        if kind == "file":
            for line, src in split_exprs(_read(value)):
                try:
                    items.append(parse_expr(src, alg, line=line))
                except ParseError as exc:
                    raise ParseError(f"{value}: {exc}") from None
        else:
            k += 1
            try:
                items.append(parse_expr(value, alg))
            except ParseError as exc:
                raise ParseError(f"-e #{k}: {exc}") from None
    return alg, items


def _fmt(v, spec, scalar_out):
    if scalar_out:
        return format_poly(v.components[0], spec)
    return format_vec(v, spec)


def run(args, out, argv=()):
    spec = OrderSpec(args.order, args.module_order)
    alg, items = _load(args, argv)
    scalar_out = all(isinstance(x, Poly) for x in items)
    need = 1 if args.command == "groebner" else 2
    if len(items) < need:
        raise ParseError(f"{args.command} needs at least {need} expression(s)")
    if args.command == "groebner":
        _, F = as_vectors(items[0], items)
        G = groebner(F, spec, args.max_subset)
        basis = trim(G).basis if args.trim else G.basis
        for k, g in enumerate(basis, start=1):
            print(f"g{k} = {_fmt(g, spec, scalar_out)}", file=out)
        return 0
    f, F = as_vectors(items[0], items[1:])
    if args.command == "divide":
        res = divide(f, F, spec)
        for k, q in enumerate(res.quotients, start=1):
            print(f"q{k} = {format_poly(q, spec)}", file=out)
        print(f"h = {_fmt(res.remainder, spec, scalar_out)}", file=out)
        return 0
    G = groebner(F, spec, args.max_subset)
    m = member(f, G)
    if m.is_member:
        # rewrite the certificate over the given generators
        memo = {}
        coeffs = [alg.zero] * len(F)
        for k, q in enumerate(m.quotients):
            if q:
                comb = G.combination(k, memo)
                coeffs = [c + a * q for c, a in zip(coeffs, comb)]
        print("member", file=out)
        for k, q in enumerate(coeffs, start=1):
            print(f"q{k} = {format_poly(q, spec)}", file=out)
    else:
        print("not member", file=out)
        print(f"h = {_fmt(m.remainder, spec, scalar_out)}", file=out)
    return 0


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return run(args, out, argv)
    except (ParseError, AlgebraMismatch, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SubsetCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
