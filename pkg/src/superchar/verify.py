"""Self-contained consistency checks run by ``superchar verify``."""

from __future__ import annotations

import random
from typing import Callable

from .charlib import dimension_eval, euler_character, simple_character
from .diagrams import Cell, WeightDiagram, canonical_diagram, weight_of_canonical
from .kdengine import (
    ancestors_of,
    compose_check,
    d_matrix,
    invert_unitriangular,
    k_entry,
    k_entry_regular,
    k_entry_strong,
    k_matrix,
    k_poly_level,
    universe,
)
from .oracle import k_poly_row_canonical
from .rootdata import AlgebraDescriptor, ExtendedWeight, Family, from_lambda, weyl_elements

GATE_ALGEBRAS = ("osp:3:2", "osp:4:2", "osp:4:4", "osp:5:4", "osp:6:4", "osp:6:6")

Check = tuple[str, bool, str]


def zero_diagram(alg: AlgebraDescriptor) -> WeightDiagram:
    zero = from_lambda(alg, ExtendedWeight((0,) * alg.m, (0,) * alg.n))
    return canonical_diagram(alg, zero)


def maximal_diagrams(alg: AlgebraDescriptor, max_position: int) -> list[WeightDiagram]:
    tail = zero_diagram(alg).tail
    return universe(alg, Cell(tail.gt, tail.lt, 0), max_position)


def _golden() -> Check:
    alg = AlgebraDescriptor.parse("osp:6:6")
    f = canonical_diagram(alg, ExtendedWeight.parse("2,1,0|2,1,0"))
    block = ancestors_of(alg, f)
    k = k_matrix(block).rows
    d = d_matrix(block).rows
    ok = k == [[1, 0, 0, 0], [2, 1, 0, 0], [0, 1, 1, 0], [-2, -1, 2, 1]] and d == [
        [1, 0, 0, 0],
        [-2, 1, 0, 0],
        [2, -1, 1, 0],
        [-4, 3, -2, 1],
    ]
    return "osp(6,6) example matrices", ok, "" if ok else f"K={k} D={d}"


def _gate(max_position: int) -> Check:
    bad = []
    for spec in GATE_ALGEBRAS:
        alg = AlgebraDescriptor.parse(spec)
        zero = zero_diagram(alg)
        for f in maximal_diagrams(alg, max_position):
            if f == zero:
                continue
            block = ancestors_of(alg, f)
            expected = k_poly_row_canonical(alg, f)
            for mu in block.members:
                got = k_poly_level(block, 1, f, mu)
                if got != expected.get(mu, 0):
                    bad.append(f"{spec} {f} {mu}")
            if any(mu not in block for mu in expected):
                bad.append(f"{spec} {f}: oracle weight outside the block")
    return "oracle agrees with single moves", not bad, "; ".join(bad[:5])


def _block_checks(max_position: int) -> list[Check]:
    bad: dict[str, list[str]] = {"paths": [], "bounds": [], "inverse": []}
    for spec in GATE_ALGEBRAS:
        alg = AlgebraDescriptor.parse(spec)
        bound = 2 if alg.family is Family.OSP_EVEN and alg.m == alg.n else 1
        for f in maximal_diagrams(alg, max_position):
            block = ancestors_of(alg, f)
            kmat = k_matrix(block)
            dmat = d_matrix(block, kmat)
            if dmat.rows != invert_unitriangular(kmat.rows):
                bad["inverse"].append(f"{spec} {f}")
            for mu in block.members:
                value = k_entry(block, f, mu)
                others = (k_entry_regular(block, f, mu), k_entry_strong(block, f, mu), compose_check(block, f, mu))
                if any(v != value for v in others):
                    bad["paths"].append(f"{spec} {f} {mu}")
                if abs(value) > bound:
                    bad["bounds"].append(f"{spec} {f} {mu}")
    return [
        ("path sums agree across evaluators", not bad["paths"], "; ".join(bad["paths"][:5])),
        ("entry bounds", not bad["bounds"], "; ".join(bad["bounds"][:5])),
        ("D inverts K", not bad["inverse"], "; ".join(bad["inverse"][:5])),
    ]


def _tail_switch(max_position: int) -> Check:
    bad = []
    for k in (1, 2, 3):
        even = AlgebraDescriptor.parse(f"osp:{2 * k + 2}:{2 * k}")
        odd = AlgebraDescriptor.parse(f"osp:{2 * k + 1}:{2 * k}")
        for f in maximal_diagrams(even, max_position):
            g = WeightDiagram(Family.OSP_ODD, (Cell(0, 1, f.tail.cross),) + f.cells[1:])
            be, bo = ancestors_of(even, f), ancestors_of(odd, g)
            same_members = [x.cells[1:] for x in be.members] == [y.cells[1:] for y in bo.members]
            if not same_members or k_matrix(be).rows != k_matrix(bo).rows:
                bad.append(str(f))
    return "tail switch between osp(2k+2,2k) and osp(2k+1,2k)", not bad, "; ".join(bad[:5])


def _characters(seed: int) -> list[Check]:
    rng = random.Random(seed)
    out: list[Check] = []
    alg = AlgebraDescriptor.parse("osp:2:2")
    ok = True
    for a in range(0, 5):
        expr = simple_character(alg, ExtendedWeight((2 * a,), (2 * a,)))
        expected = {ExtendedWeight((2 * j,), (2 * j,)): (-1) ** (a + j) for j in range(a + 1)}
        ok &= expr.as_dict() == expected
    out.append(("osp(2,2) alternating sums", ok, ""))
    alg = AlgebraDescriptor.parse("osp:3:2")
    std = simple_character(alg, ExtendedWeight.parse("1/2|1/2"), "laurent")
    out.append(("osp(3,2) standard module has dimension 5", dimension_eval(std) == 5, str(dimension_eval(std))))
    alg = AlgebraDescriptor.parse("osp:4:2")
    elements = list(weyl_elements(alg))
    ok = True
    for f in maximal_diagrams(alg, 3):
        e = euler_character(alg, weight_of_canonical(alg, f))
        for w in rng.sample(elements, min(20, len(elements))):
            ok &= e.map_exponents(w.apply) == e
    out.append(("Weyl invariance of Euler characteristics", ok, ""))
    return out


def run_all(seed: int = 0, max_position: int = 4) -> list[Check]:
    steps: list[Callable[[], list[Check]]] = [
        lambda: [_golden()],
        lambda: [_gate(max_position)],
        lambda: _block_checks(max_position),
        lambda: [_tail_switch(max_position)],
        lambda: _characters(seed),
    ]
    report: list[Check] = []
    for step in steps:
        report.extend(step())
    return report
