"""Command-line interface: ``qset <command> ...``.

Exit status: 0 success, 2 usage or input error, 3 rank/size guard, 4 closure
violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import clifford, grassmann, hfs, palev
from .errors import ClosureViolation, DimensionMismatch, ParseError, QsetError, RankGuard
from .expr import parse_element, print_canonical
# the package re-exports quantify(), which shadows the submodule attribute
from .quantify import FockOperator, multiquantify, occupation, quantify, rank_basis
from .io import (
    element_to_json,
    fock_to_json,
    fraction_text,
    load_matrix,
    matrix_from_json,
)

EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_CLOSURE = 4


def _rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_clifford(a: clifford.CliffordElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for k, (w, c) in enumerate(a.items()):
        name = " ".join(f"v{i}" for i in w)
        mag = abs(c)
        body = _rational(mag) if not w else (name if mag == 1 else f"{_rational(mag)}*{name}")
        sign = "-" if c < 0 else "+"
        parts.append(("-" if c < 0 else "") + body if k == 0 else f" {sign} {body}")
    return "".join(parts)


class _Ctx:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.json = args.format == "json"
        self.guard = args.rank_guard

    def element(self, text: str) -> grassmann.Element:
        return parse_element(text, self.guard)

    def out_element(self, a: grassmann.Element) -> None:
        if a.max_rank() > self.guard:
            raise RankGuard(f"result has rank {a.max_rank()} above guard {self.guard}")
        self.emit(print_canonical(a), element_to_json(a))

    def emit(self, text: str, payload: Any) -> None:
        if self.json:
            print(json.dumps(payload))
        else:
            print(text)


def _cmd_normalize(ctx: _Ctx) -> None:
    ctx.out_element(ctx.element(ctx.args.expr))


def _cmd_serial(ctx: _Ctx) -> None:
    a = ctx.element(ctx.args.expr)
    items = a.items()
    if len(items) != 1 or items[0][1] != 1:
        raise DimensionMismatch("serial needs a single basis set with coefficient 1")
    n = hfs.serial_encode(items[0][0], ctx.guard)
    ctx.emit(str(n), {"serial": str(n)})


def _cmd_unserial(ctx: _Ctx) -> None:
    x = hfs.serial_decode(ctx.args.n)
    if x.rank > ctx.guard:
        raise RankGuard(f"serial {ctx.args.n} has rank {x.rank} above guard {ctx.guard}")
    ctx.emit(x.braces(), {"set": x.braces(), "rank": x.rank, "children": [str(c.serial) for c in x]})


def _cmd_wedge(ctx: _Ctx) -> None:
    a = grassmann.wedge_all(ctx.element(t) for t in ctx.args.exprs)
    ctx.out_element(a)


def _cmd_iota(ctx: _Ctx) -> None:
    ctx.out_element(grassmann.iota(ctx.element(ctx.args.expr)))


def _cmd_grade(ctx: _Ctx) -> None:
    a = ctx.element(ctx.args.expr)
    if ctx.args.project is None:
        ctx.out_element(grassmann.grade_op(a))
    else:
        ctx.out_element(grassmann.grade_project(a, ctx.args.project))


def _cmd_rank(ctx: _Ctx) -> None:
    r = ctx.element(ctx.args.expr).max_rank()
    ctx.emit(str(r), {"rank": r})


def _cmd_tier(ctx: _Ctx) -> None:
    lo, hi = hfs.tier_range(ctx.args.r, ctx.guard)
    ctx.emit(f"{lo} {hi}", {"low": str(lo), "high": str(hi)})


def _cmd_hexp(ctx: _Ctx) -> None:
    v = hfs.hexp(ctx.args.r, ctx.guard)
    ctx.emit(str(v), {"value": str(v)})


def _cmd_table(ctx: _Ctx) -> None:
    rows = [(n, hfs.serial_decode(n)) for n in range(ctx.args.max_serial + 1)]
    ctx.emit(
        "\n".join(f"{n}\t{x.rank}\t{x.braces()}" for n, x in rows),
        [{"serial": str(n), "rank": x.rank, "set": x.braces()} for n, x in rows],
    )


def _cmd_pair(ctx: _Ctx) -> None:
    b = palev.pair_import(ctx.args.v, ctx.args.w, ctx.args.dim)
    ctx.emit(_format_clifford(b), {"dim": b.dim, "terms": b.to_json()})


def _cmd_beta(ctx: _Ctx) -> None:
    seed = clifford.SeedSpace.standard(ctx.args.dim)
    qp, q = ctx.element(ctx.args.qp), ctx.element(ctx.args.q)
    form = clifford.beta_literal if ctx.args.convention == "literal" else clifford.beta_chevalley
    v = form(qp, q, seed)
    ctx.emit(_rational(v), {"value": fraction_text(v), "convention": ctx.args.convention})


def _emit_fock(ctx: _Ctx, op: FockOperator) -> None:
    if ctx.args.apply is not None:
        ctx.out_element(op.apply(ctx.element(ctx.args.apply)))
        return
    lines = [f"{r.serial}\t{c.serial}\t{_rational(v)}" for r, c, v in op.entries()]
    ctx.emit("\n".join(lines), fock_to_json(op))


def _cmd_quantify(ctx: _Ctx) -> None:
    _emit_fock(ctx, quantify(load_matrix(ctx.args.matrix)))


def _cmd_occupation(ctx: _Ctx) -> None:
    seed = clifford.SeedSpace.standard(ctx.args.dim)
    _emit_fock(ctx, occupation(hfs.serial_decode(ctx.args.x), seed))


def _cmd_lift(ctx: _Ctx) -> None:
    r = ctx.args.rank
    target = ctx.args.to if ctx.args.to is not None else r + 1
    basis = rank_basis(r)
    if ctx.args.matrix:
        with open(ctx.args.matrix) as fh:
            h = matrix_from_json(json.load(fh))
        if list(h.seed.labels) != basis:
            raise DimensionMismatch(f"matrix basis must list the rank-{r} serials in ascending order")
        seed_op = FockOperator.from_matrix(basis, h.matrix)
    else:
        seed_op = FockOperator.identity(basis)
    _emit_fock(ctx, multiquantify(seed_op, r, target))


def _cmd_palev_closure(ctx: _Ctx) -> None:
    t = palev.closure_check(ctx.args.dim)
    pairs = palev.bivector_pairs(ctx.args.dim)
    trip = t.triplets()
    ctx.emit(
        "\n".join(f"{i}\t{j}\t{k}\t{_rational(c)}" for i, j, k, c in trip),
        {"dim": t.d, "pairs": [list(p) for p in pairs],
         "triplets": [[i, j, k, fraction_text(c)] for i, j, k, c in trip]},
    )


def _cmd_contract(ctx: _Ctx) -> None:
    rows = [(j, ctx.args.k, palev.contraction_residual(j, ctx.args.k)) for j in ctx.args.j]
    ctx.emit(
        "\n".join(["j,k,residual"] + [f"{j},{k},{res!r}" for j, k, res in rows]),
        [{"j": j, "k": k, "residual": res} for j, k, res in rows],
    )


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-guard", type=int, default=argparse.SUPPRESS,
                        help="largest rank accepted for inputs and outputs (<= 5)")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="qset", description=__doc__.splitlines()[0])
    parser.add_argument("--rank-guard", type=int, default=hfs.RANK_CAP)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("normalize", _cmd_normalize, "print the canonical form").add_argument("expr")
    add("serial", _cmd_serial, "serial number of a basis set").add_argument("expr")
    add("unserial", _cmd_unserial, "basis set with the given serial").add_argument("n", type=int)
    add("wedge", _cmd_wedge, "wedge product of expressions").add_argument("exprs", nargs="+")
    add("iota", _cmd_iota, "association").add_argument("expr")
    p = add("grade", _cmd_grade, "grade operator or grade projection")
    p.add_argument("expr")
    p.add_argument("--project", type=int)
    add("rank", _cmd_rank, "largest rank among the terms").add_argument("expr")
    add("tier", _cmd_tier, "serial range [low, high) of a tier").add_argument("r", type=int)
    add("hexp", _cmd_hexp, "hyperexponential").add_argument("r", type=int)
    add("table", _cmd_table, "serial / set table").add_argument("--max-serial", type=int, default=24)
    p = add("pair", _cmd_pair, "Clifford product of two generators")
    p.add_argument("v", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--dim", type=int, required=True)
    p = add("beta", _cmd_beta, "spinor form of two elements")
    p.add_argument("qp")
    p.add_argument("q")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--convention", choices=("chevalley", "literal"), default="chevalley")
    p = add("quantify", _cmd_quantify, "quantify a one-body matrix file")
    p.add_argument("--matrix", required=True)
    p.add_argument("--apply")
    p = add("occupation", _cmd_occupation, "occupation-number operator of a seed label")
    p.add_argument("x", type=int, help="serial of the seed label")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--apply")
    p = add("lift", _cmd_lift, "multiquantify an operator on a rank truncation")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--to", type=int)
    p.add_argument("--matrix", help="operator on the rank basis (default: identity)")
    p.add_argument("--apply")
    add("palev-closure", _cmd_palev_closure, "bivector structure tensor").add_argument(
        "--dim", type=int, required=True)
    p = add("contract", _cmd_contract, "Bose contraction residuals as CSV")
    p.add_argument("--j", type=_int_list, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 0 <= args.rank_guard <= hfs.RANK_CAP:
        parser.error(f"--rank-guard must be between 0 and {hfs.RANK_CAP}")
    try:
        args.func(_Ctx(args))
    except ClosureViolation as exc:
        print(f"qset: closure violation: {exc}", file=sys.stderr)
        return EXIT_CLOSURE
    except RankGuard as exc:
        print(f"qset: guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ParseError as exc:
        print(f"qset: syntax error: {exc.msg} at byte {exc.offset}", file=sys.stderr)
        return EXIT_USAGE
    except (QsetError, ValueError, IndexError, OSError, KeyError) as exc:
        print(f"qset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
