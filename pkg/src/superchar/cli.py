"""Command-line entry point: ``superchar <subcommand> --algebra ... --weight ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .charlib import simple_character
from .diagrams import diagram_of
from .errors import SupercharError
from .kdengine import BlockIndex, block_for_weight, block_report, d_matrix, k_matrix
from .oracle import k_poly_recursive, k_poly_row
from .rootdata import AlgebraDescriptor, ExtendedWeight, atypicality, core_marks, from_lambda, require_dominant


class UsageError(Exception):
    """A required flag is missing."""


SUBCOMMANDS = ("diagram", "block", "kmatrix", "dmatrix", "character", "oracle", "verify", "export-dot")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superchar", description=__doc__)
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("--algebra", help="gl:m:n or osp:M:N")
    p.add_argument("--weight", help='coordinates "a1,...,am|b1,...,bn" (lambda+rho unless --weight-is-lambda)')
    p.add_argument("--lambda", dest="lam", help="alias of --weight for the oracle command")
    p.add_argument("--mu", help="lower weight for the oracle command")
    p.add_argument("--weight-is-lambda", action="store_true", help="read weights as lambda instead of lambda+rho")
    p.add_argument("--mode", choices=("expr", "laurent"), default="expr")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--max-position", type=int, default=None, help="largest cross position a block may reach")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks in verify")
    return p


def _algebra(args) -> AlgebraDescriptor:
    if not args.algebra:
        raise UsageError("--algebra is required")
    return AlgebraDescriptor.parse(args.algebra)


def _weight(alg: AlgebraDescriptor, text: Optional[str], as_lambda: bool) -> ExtendedWeight:
    if not text:
        raise UsageError("--weight is required")
    w = ExtendedWeight.parse(text)
    if as_lambda:
        w = from_lambda(alg, w)
    require_dominant(alg, w)
    return w


def _block(args) -> tuple[AlgebraDescriptor, BlockIndex]:
    alg = _algebra(args)
    w = _weight(alg, args.weight or args.lam, args.weight_is_lambda)
    block, f, _ = block_for_weight(alg, w)
    if args.max_position is not None and f.rightmost_cross() > args.max_position:
        raise SupercharError(f"block reaches position {f.rightmost_cross()} > --max-position {args.max_position}")
    return alg, block


def _emit_matrix(args, block: BlockIndex, rows: list[list[int]], name: str) -> str:
    if args.format == "json":
        return json.dumps({"algebra": block.alg.spec, "order": block.labels(), name: rows})
    width = max(len(str(x)) for row in rows for x in row)
    lines = [f"{block.alg} block, order: " + "; ".join(block.labels())]
    lines += [" ".join(str(x).rjust(width) for x in row) for row in rows]
    return "\n".join(lines)


def to_dot(block: BlockIndex) -> str:
    lines = ["digraph block {"]
    for i, f in enumerate(block.members):
        lines.append(f'  n{i} [label="{block.weight(f).render()}"];')
    for e in block.edges:
        lines.append(f'  n{block.index(e.source)} -> n{block.index(e.target)} [label="{e.move.label()}"];')
    lines.append("}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        out = _dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"superchar: error: {exc}", file=sys.stderr)
        return 2
    except SupercharError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if isinstance(out, tuple):
        text, code = out
    else:
        text, code = out, 0
    if text:
        print(text)
    return code


def _dispatch(args):
    cmd = args.command
    if cmd == "verify":
        from .verify import run_all

        report = run_all(seed=args.seed, max_position=args.max_position or 4)
        failed = [r for r in report if not r[1]]
        if args.format == "json":
            text = json.dumps([{"check": n, "ok": ok, "detail": d} for n, ok, d in report])
        else:
            text = "\n".join(f"{'PASS' if ok else 'FAIL'} {n}" + (f": {d}" if d and not ok else "") for n, ok, d in report)
        return text, 1 if failed else 0
    if cmd == "diagram":
        alg = _algebra(args)
        w = _weight(alg, args.weight, args.weight_is_lambda)
        f = diagram_of(alg, w)
        if args.format == "json":
            marks = core_marks(alg, w)
            return json.dumps(
                {
                    "algebra": alg.spec,
                    "weight": w.render(),
                    "diagram": f.render(),
                    "atypicality": atypicality(alg, w)[0],
                    "core": {"a": list(marks.a_marks), "b": list(marks.b_marks), "zero": marks.zero_mark_present},
                }
            )
        return f.render()
    if cmd == "oracle":
        alg = _algebra(args)
        lam = _weight(alg, args.lam or args.weight, args.weight_is_lambda)
        if args.mu:
            mu = _weight(alg, args.mu, args.weight_is_lambda)
            poly = k_poly_recursive(alg, lam, mu)
            return json.dumps({"K": str(poly)}) if args.format == "json" else str(poly)
        row = k_poly_row(alg, lam)
        if args.format == "json":
            return json.dumps({w.render(): str(p) for w, p in row.items()})
        return "\n".join(f"{w.render()}: {p}" for w, p in row.items())
    if cmd == "character":
        alg = _algebra(args)
        w = _weight(alg, args.weight, args.weight_is_lambda)
        result = simple_character(alg, w, args.mode)
        if args.mode == "expr":
            if args.format == "json":
                return json.dumps({"algebra": alg.spec, "terms": [[c, wt.render()] for c, wt in result.terms]})
            return result.render()
        if args.format == "json":
            return json.dumps({"algebra": alg.spec, "terms": [[list(v), c] for v, c in sorted(result.terms.items())]})
        return result.render(alg.m)
    alg, block = _block(args)
    if cmd == "export-dot" or args.format == "dot":
        return to_dot(block)
    if cmd == "block":
        report = block_report(block)
        if args.format == "json":
            return json.dumps(report)
        lines = [f"{block.alg} block, order: " + "; ".join(report["order"])]
        lines += [f"{e['from']} -> {e['to']} {e['label']}" for e in report["edges"]]
        return "\n".join(lines)
    kmat = k_matrix(block)
    if cmd == "kmatrix":
        return _emit_matrix(args, block, kmat.rows, "K")
    return _emit_matrix(args, block, d_matrix(block, kmat).rows, "D")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
