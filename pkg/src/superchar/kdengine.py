"""Blocks, the move graph, and the K and D matrices.

A block is the finite set of canonical diagrams from which a given diagram
can be reached by moves.  Entries of K are signed counts of decreasing
paths, entries of D signed counts of increasing paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, Optional

from .diagrams import (
    Cell,
    WeightDiagram,
    bar_reduce,
    canonical_diagram,
    weight_of_canonical,
)
from .errors import CycleDetected, InversionMismatch, MalformedDiagram, NonCanonical, WrongFamily
from .moves import MoveEdge, MoveKind, all_moves_from, caps_of, free_positions
from .poly import ZPoly
from .rootdata import AlgebraDescriptor, ExtendedWeight, Family, is_positive, sigma_flip


@dataclass(frozen=True)
class Edge:
    source: WeightDiagram
    target: WeightDiagram
    move: MoveEdge

    @property
    def end(self) -> int:
        return self.move.end

    @property
    def degree(self) -> int:
        return self.move.degree


@dataclass
class BlockIndex:
    alg: AlgebraDescriptor
    members: list[WeightDiagram]
    edges: list[Edge] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._pos = {f: i for i, f in enumerate(self.members)}
        self._out: dict[WeightDiagram, list[Edge]] = {f: [] for f in self.members}
        for e in self.edges:
            self._out[e.source].append(e)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f: WeightDiagram) -> bool:
        return f in self._pos

    def index(self, f: WeightDiagram) -> int:
        return self._pos[f]

    def out_edges(self, f: WeightDiagram) -> list[Edge]:
        return self._out[f]

    def weight(self, f: WeightDiagram) -> ExtendedWeight:
        return weight_of_canonical(self.alg, f)

    def labels(self) -> list[str]:
        return [self.weight(f).render() for f in self.members]


def check_reduced(alg: AlgebraDescriptor) -> None:
    ok = (
        (alg.family is Family.OSP_ODD and alg.m == alg.n)
        or (alg.family is Family.OSP_EVEN and alg.m in (alg.n, alg.n + 1))
    )
    if not ok or alg.n == 0:
        raise WrongFamily(f"{alg} is not the algebra of a maximal atypical orthosymplectic block")


def universe(alg: AlgebraDescriptor, tail_core: Cell, limit: int) -> list[WeightDiagram]:
    """Every canonical diagram with the given tail symbols and crosses at positions <= limit."""
    k = alg.n
    out = []
    for r in range(0, min(k, limit) + 1):
        for positions in itertools.combinations(range(1, limit + 1), r):
            cells = [Cell()] * (limit + 1)
            cells[0] = Cell(tail_core.gt, tail_core.lt, k - r)
            for p in positions:
                cells[p] = Cell(0, 0, 1)
            f = WeightDiagram(alg.family, tuple(cells))
            try:
                weight_of_canonical(alg, f)
            except MalformedDiagram:
                continue
            out.append(f)
    return out


@lru_cache(maxsize=64)
def _universe_graph(alg: AlgebraDescriptor, tail_core: Cell, limit: int):
    verts = universe(alg, tail_core, limit)
    vset = set(verts)
    edges = []
    for f in verts:
        for g, e in all_moves_from(f):
            if g in vset:
                edges.append(Edge(f, g, e))
    return tuple(verts), tuple(edges)


def _order_key(f: WeightDiagram) -> tuple:
    return f.sort_key()


def ancestors_of(alg: AlgebraDescriptor, f_lambda: WeightDiagram) -> BlockIndex:
    check_reduced(alg)
    if any(c.core for c in f_lambda.cells[1:]):
        raise NonCanonical(f"{f_lambda} has core symbols outside the tail")
    tail = f_lambda.tail
    limit = f_lambda.rightmost_cross()
    verts, edges = _universe_graph(alg, Cell(tail.gt, tail.lt, 0), limit)
    if f_lambda not in verts:
        raise MalformedDiagram(f"{f_lambda} is not a canonical diagram of {alg}")
    into: dict[WeightDiagram, list[WeightDiagram]] = {}
    for e in edges:
        into.setdefault(e.target, []).append(e.source)
    seen = {f_lambda}
    stack = [f_lambda]
    while stack:
        g = stack.pop()
        for h in into.get(g, []):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    members = sorted(seen, key=_order_key, reverse=True)
    kept = [e for e in edges if e.source in seen and e.target in seen]
    block = BlockIndex(alg, members, kept)
    _assert_acyclic(block)
    return block


def build_graph(block: BlockIndex) -> list[Edge]:
    return list(block.edges)


def _assert_acyclic(block: BlockIndex) -> None:
    ts = TopologicalSorter({f: [] for f in block.members})
    for e in block.edges:
        ts.add(e.target, e.source)
    try:
        tuple(ts.static_order())
    except CycleError as exc:
        raise CycleDetected(str(exc)) from exc


def block_for_weight(alg: AlgebraDescriptor, w: ExtendedWeight) -> tuple[BlockIndex, WeightDiagram, bool]:
    """Block of ``w`` after reduction, the canonical diagram of ``w`` and a negativity flag."""
    small, sw = bar_reduce(alg, w)
    negative = small.family is Family.OSP_EVEN and not is_positive(small, sw)
    if negative:
        sw = sigma_flip(small, sw)
    f = canonical_diagram(small, sw)
    return ancestors_of(small, f), f, negative


# ------------------------------------------------------------------ paths


def _paths(block: BlockIndex, src: WeightDiagram, dst: WeightDiagram, decreasing: bool) -> Iterator[list[Edge]]:
    def walk(f: WeightDiagram, bound: Optional[int], acc: list[Edge]):
        if f == dst:
            yield list(acc)
        for e in block.out_edges(f):
            if bound is not None and (e.end >= bound if decreasing else e.end <= bound):
                continue
            acc.append(e)
            yield from walk(e.target, e.end, acc)
            acc.pop()

    yield from walk(src, None, [])


def decreasing_paths(block: BlockIndex, mu: WeightDiagram, lam: WeightDiagram) -> list[list[Edge]]:
    return list(_paths(block, mu, lam, True))


def increasing_paths(block: BlockIndex, mu: WeightDiagram, lam: WeightDiagram) -> list[list[Edge]]:
    return list(_paths(block, mu, lam, False))


def _sign(path: list[Edge], extra: int = 0) -> int:
    return -1 if (sum(e.degree for e in path) + extra) % 2 else 1


def k_entry(block: BlockIndex, lam: WeightDiagram, mu: WeightDiagram) -> int:
    return sum(_sign(p) for p in decreasing_paths(block, mu, lam))


def _is_regular(path: list[Edge], caps: set[tuple[int, int]], free: set[int]) -> bool:
    for e in path:
        m = e.move
        if m.kind is MoveKind.ORDINARY:
            if (m.start, m.end) not in caps:
                return False
        elif m.end not in free:
            return False
    return True


def _regular_context(mu: WeightDiagram, lam: WeightDiagram):
    limit = max(lam.rightmost_cross(), mu.rightmost_cross()) + 1
    caps = set(caps_of(mu))
    free = free_positions(mu, limit)
    return caps, free


def k_entry_regular(block: BlockIndex, lam: WeightDiagram, mu: WeightDiagram) -> int:
    caps, free = _regular_context(mu, lam)
    fset = set(free)
    return sum(_sign(p) for p in decreasing_paths(block, mu, lam) if _is_regular(p, caps, fset))


def _vanishing_pair(first: Edge, second: Edge, free: list[int]) -> bool:
    if not (first.move.is_tail and second.move.is_tail):
        return False
    hi, lo = first.end, second.end
    if hi not in free or lo not in free:
        return False
    i = free.index(hi)
    if i == 0 or free[i - 1] != lo:
        return False
    for _, e in all_moves_from(first.source):
        if e.kind is MoveKind.EXCEPTIONAL and e.mid == lo and e.end == hi and e.degree == 0:
            return True
    return False


def k_entry_strong(block: BlockIndex, lam: WeightDiagram, mu: WeightDiagram) -> int:
    caps, free = _regular_context(mu, lam)
    fset = set(free)
    total = 0
    for p in decreasing_paths(block, mu, lam):
        if not _is_regular(p, caps, fset):
            continue
        if any(e.move.kind is MoveKind.EXCEPTIONAL for e in p):
            continue
        if any(_vanishing_pair(a, b, free) for a, b in zip(p, p[1:])):
            continue
        total += _sign(p)
    return total


def d_entry(block: BlockIndex, lam: WeightDiagram, mu: WeightDiagram) -> int:
    return sum(_sign(p, len(p)) for p in increasing_paths(block, mu, lam))


# ------------------------------------------------------------- matrices


@dataclass
class IntMatrix:
    """``rows[i][j]`` is the entry for the pair (upper = member j, lower = member i)."""

    block: BlockIndex
    rows: list[list[int]]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return self.rows == other

    def entry(self, lam: WeightDiagram, mu: WeightDiagram) -> int:
        return self.rows[self.block.index(mu)][self.block.index(lam)]

    def __matmul__(self, other: "IntMatrix") -> list[list[int]]:
        n = len(self.rows)
        return [
            [sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    def render(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def k_matrix(block: BlockIndex) -> IntMatrix:
    ms = block.members
    rows = [[k_entry(block, ms[j], ms[i]) if i >= j else 0 for j in range(len(ms))] for i in range(len(ms))]
    _assert_order(block)
    return IntMatrix(block, rows)


def _assert_order(block: BlockIndex) -> None:
    """Every edge must go from a later member to an earlier one, so K is lower triangular."""
    for e in block.edges:
        if block.index(e.source) <= block.index(e.target):
            raise CycleDetected(f"edge {e.move.label()} runs against the block order")


def invert_unitriangular(rows: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1
        for i in range(j + 1, n):
            inv[i][j] = -sum(rows[i][k] * inv[k][j] for k in range(j, i))
    return inv


def d_matrix(block: BlockIndex, k: Optional[IntMatrix] = None) -> IntMatrix:
    ms = block.members
    rows = [[d_entry(block, ms[j], ms[i]) if i >= j else 0 for j in range(len(ms))] for i in range(len(ms))]
    kmat = k if k is not None else k_matrix(block)
    if rows != invert_unitriangular(kmat.rows):
        raise InversionMismatch(f"path sums and inversion disagree on the block of {ms[0]}")
    return IntMatrix(block, rows)


# --------------------------------------------------------------- levels


def level_position(lam: WeightDiagram, j: int) -> int:
    positions = lam.cross_positions()
    if not 1 <= j <= len(positions):
        raise ValueError(f"level {j} out of range for {lam}")
    return positions[j - 1]


def k_poly_level(block: BlockIndex, j: int, lam: WeightDiagram, mu: WeightDiagram) -> ZPoly:
    """Poincare polynomial of the j-th parabolic step: identity plus single moves ending at the j-th cross."""
    if lam == mu:
        return ZPoly.one()
    t = level_position(lam, j)
    if t == 0:
        return ZPoly()
    total = ZPoly()
    for e in block.out_edges(mu):
        if e.target == lam and e.end == t:
            total = total + ZPoly.monomial(e.degree)
    return total


def level_row(block: BlockIndex, j: int, lam: WeightDiagram) -> dict[WeightDiagram, ZPoly]:
    out = {lam: ZPoly.one()}
    t = level_position(lam, j)
    if t == 0:
        return out
    for e in block.edges:
        if e.target == lam and e.end == t:
            out[e.source] = out.get(e.source, ZPoly()) + ZPoly.monomial(e.degree)
    return out


def compose_check(block: BlockIndex, lam: WeightDiagram, mu: WeightDiagram) -> int:
    """Evaluate K at -1 as a composition of one-step polynomials, highest level first."""
    r = len(lam.nontail_crosses())
    current = {lam: 1}
    for j in range(r, 0, -1):
        nxt: dict[WeightDiagram, int] = {}
        for upper, coeff in current.items():
            for lower, poly in level_row(block, j, upper).items():
                nxt[lower] = nxt.get(lower, 0) + coeff * poly.at(-1)
        current = nxt
    return current.get(mu, 0)


def block_report(block: BlockIndex) -> dict:
    kmat = k_matrix(block)
    dmat = d_matrix(block, kmat)
    return {
        "algebra": block.alg.spec,
        "order": block.labels(),
        "edges": [
            {
                "from": block.weight(e.source).render(),
                "to": block.weight(e.target).render(),
                "label": e.move.label(),
            }
            for e in sorted(block.edges, key=lambda e: (block.index(e.source), block.index(e.target), e.move))
        ],
        "K": kmat.rows,
        "D": dmat.rows,
    }
