"""Characters as Laurent polynomials.

Euler characteristics are computed by Weyl symmetrization over the even
Weyl group: the odd directions outside the tail Levi contribute a finite
product, each monomial of which is moved to the dominant chamber and
replaced by the matching irreducible character of the even part.  Those
characters come from Freudenthal's formula, one simple factor at a time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .diagrams import Cell, WeightDiagram, bar_reduce, canonical_diagram, diagram_of, weights_of
from .errors import MalformedDiagram, NotDominant, TooLarge, WrongFamily
from .kdengine import BlockIndex, block_for_weight, d_matrix
from .poly import LaurentPoly
from .rootdata import (
    AlgebraDescriptor,
    ExtendedWeight,
    Family,
    is_positive,
    positive_roots,
    require_dominant,
    rho_even,
    sigma_flip,
    to_lambda,
    weyl_group_order,
    WEYL_BUDGET,
)

Vec = tuple[int, ...]

# ------------------------------------------------------ simple factors
# A factor is ("B", r), ("C", r) or ("D", r); vectors are doubled.


def _factor_roots(kind: str, r: int) -> list[Vec]:
    roots = []
    for i, j in itertools.combinations(range(r), 2):
        for s in (-1, 1):
            v = [0] * r
            v[i], v[j] = 2, 2 * s
            roots.append(tuple(v))
    for i in range(r):
        v = [0] * r
        if kind == "B":
            v[i] = 2
            roots.append(tuple(v))
        elif kind == "C":
            v[i] = 4
            roots.append(tuple(v))
    return roots


@lru_cache(maxsize=None)
def _factor_rho(kind: str, r: int) -> Vec:
    total = [0] * r
    for root in _factor_roots(kind, r):
        total = [t + x // 2 for t, x in zip(total, root)]
    return tuple(total)


def _det_sort(values: list[int]) -> tuple[int, list[int]]:
    """Sort descending and report the sign of the sorting permutation."""
    order = sorted(range(len(values)), key=lambda i: -values[i])
    inversions = sum(1 for i, j in itertools.combinations(range(len(order)), 2) if order[i] > order[j])
    return (-1 if inversions % 2 else 1), [values[i] for i in order]


def _dominant(kind: str, v: Vec) -> tuple[int, Vec]:
    """Dominant representative of the orbit of ``v`` and the determinant of a Weyl element reaching it."""
    flips = sum(1 for x in v if x < 0)
    sign, out = _det_sort([abs(x) for x in v])
    if kind == "D":
        if flips % 2 and out and out[-1] != 0:
            out[-1] = -out[-1]
        return sign, tuple(out)
    return sign * (-1) ** flips, tuple(out)


def _resolve(kind: str, v: Vec) -> Optional[tuple[int, Vec]]:
    """For a regular ``v`` return (determinant, dominant image); None when singular."""
    sign, dom = _dominant(kind, v)
    absvals = [abs(x) for x in dom]
    if len(set(absvals)) < len(absvals):
        return None
    if kind in "BC" and 0 in absvals:
        return None
    return sign, dom


def _below(kind: str, top: Vec, v: Vec) -> bool:
    """True iff top - v is a nonnegative integer combination of simple roots."""
    x = [Fraction(a - b, 2) for a, b in zip(top, v)]
    r = len(x)
    if r == 0:
        return True
    s = list(itertools.accumulate(x))
    if kind == "D":
        if r == 1:
            return x[0] == 0
        coeffs = s[: r - 2] + [s[r - 2] - s[r - 1] / 2, s[r - 1] / 2]
    elif kind == "C":
        coeffs = s[:-1] + [s[-1] / 2]
    else:
        coeffs = s
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def _orbit(kind: str, v: Vec) -> set[Vec]:
    out = set()
    r = len(v)
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            if kind == "D" and signs.count(-1) % 2:
                continue
            out.add(tuple(signs[i] * v[perm[i]] for i in range(r)))
    return out


def _dot(u: Vec, v: Vec) -> int:
    return sum(a * b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def dominant_multiplicities(kind: str, top: Vec) -> tuple[tuple[Vec, int], ...]:
    """Freudenthal multiplicities of the dominant weights of the irreducible with highest weight ``top``."""
    r = len(top)
    roots = _factor_roots(kind, r)
    found = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                _, cand = _dominant(kind, tuple(x - y for x, y in zip(mu, a)))
                if cand not in found and _below(kind, top, cand):
                    found.add(cand)
                    nxt.append(cand)
        frontier = nxt
    rho = _factor_rho(kind, r)
    lr = tuple(x + y for x, y in zip(top, rho))
    norm_top = _dot(lr, lr)
    ordered = sorted(found, key=lambda mu: -_dot(mu, rho))
    mult: dict[Vec, int] = {top: 1}

    def lookup(v: Vec) -> int:
        _, d = _dominant(kind, v)
        return mult.get(d, 0) if d in found else 0

    for mu in ordered:
        if mu == top:
            continue
        num = 0
        for a in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, a))
                _, d = _dominant(kind, v)
                if d not in found:
                    break
                num += lookup(v) * _dot(v, a)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = norm_top - _dot(mr, mr)
        value, rem = divmod(2 * num, den)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu} in {kind}{r}{top}")
        mult[mu] = value
    return tuple((mu, m) for mu, m in mult.items() if m)


@lru_cache(maxsize=None)
def factor_character(kind: str, top: Vec) -> tuple[tuple[Vec, int], ...]:
    terms: dict[Vec, int] = {}
    for mu, m in dominant_multiplicities(kind, top):
        for v in _orbit(kind, mu):
            terms[v] = m
    return tuple(sorted(terms.items()))


# ------------------------------------------------------------ even part


def _kinds(alg: AlgebraDescriptor) -> tuple[str, str]:
    if alg.family is Family.GL:
        raise WrongFamily("characters are implemented for the orthosymplectic families")
    return ("B" if alg.family is Family.OSP_ODD else "D"), "C"


def even_character(alg: AlgebraDescriptor, top: ExtendedWeight) -> LaurentPoly:
    """Character of the irreducible even-part module with doubled highest weight ``top``."""
    ka, kb = _kinds(alg)
    left = factor_character(ka, top.a)
    right = factor_character(kb, top.b)
    return LaurentPoly({va + vb: ma * mb for va, ma in left for vb, mb in right})


def expand_even(alg: AlgebraDescriptor, decomposition: dict[ExtendedWeight, int]) -> LaurentPoly:
    """Expand a signed sum of even-part irreducibles into a Laurent polynomial.

    Highest weights sharing the first factor are summed on the second factor
    before the product is formed, which keeps the work near the output size.
    """
    ka, kb = _kinds(alg)
    by_left: dict[Vec, dict[Vec, int]] = {}
    for top, c in decomposition.items():
        if not c:
            continue
        inner = by_left.setdefault(top.a, {})
        for vb, mb in factor_character(kb, top.b):
            inner[vb] = inner.get(vb, 0) + c * mb
    acc: dict[Vec, int] = {}
    for ta, inner in by_left.items():
        right = [(vb, mb) for vb, mb in inner.items() if mb]
        for va, ma in factor_character(ka, ta):
            for vb, mb in right:
                key = va + vb
                acc[key] = acc.get(key, 0) + ma * mb
    return LaurentPoly({v: c for v, c in acc.items() if c})


def _even_rho_parts(alg: AlgebraDescriptor) -> ExtendedWeight:
    ka, kb = _kinds(alg)
    return ExtendedWeight(_factor_rho(ka, alg.m), _factor_rho(kb, alg.n))


# ------------------------------------------------------------ Euler


def tail_levi(alg: AlgebraDescriptor, w: ExtendedWeight) -> tuple[int, int]:
    """Numbers (p, q) of trailing eps and delta coordinates spanned by the tail Levi of ``w``."""
    lam = to_lambda(alg, w)
    tail_value = 1 if alg.family is Family.OSP_ODD else 0

    def count(coords, lam_coords):
        c = 0
        for x, l in zip(reversed(coords), reversed(lam_coords)):
            if abs(x) != tail_value or l != 0:
                break
            c += 1
        return c

    return count(w.a, lam.a), count(w.b, lam.b)


def _outside_odd_roots(alg: AlgebraDescriptor, p: int, q: int) -> list[Vec]:
    _, odd = positive_roots(alg)
    inside = set(range(alg.m - p, alg.m)) | {alg.m + j for j in range(alg.n - q, alg.n)}
    out = []
    for root in odd:
        support = {i for i, x in enumerate(root) if x}
        if not support <= inside:
            out.append(tuple(2 * x for x in root))
    return out


def _check_budget(alg: AlgebraDescriptor) -> None:
    if weyl_group_order(alg) > WEYL_BUDGET:
        raise TooLarge(f"|W| of {alg} exceeds {WEYL_BUDGET}")


def euler_even_decomposition(alg: AlgebraDescriptor, w: ExtendedWeight) -> dict[ExtendedWeight, int]:
    """E_w as a signed sum of even-part irreducibles, keyed by doubled highest weight."""
    require_dominant(alg, w)
    _check_budget(alg)
    ka, kb = _kinds(alg)
    lam = to_lambda(alg, w)
    rho0 = _even_rho_parts(alg)
    if rho0 != rho_even(alg):
        raise MalformedDiagram("even rho mismatch")
    start = (lam + rho0).flat
    terms: dict[Vec, int] = {start: 1}
    for root in _outside_odd_roots(alg, *tail_levi(alg, w)):
        nxt = dict(terms)
        for v, c in terms.items():
            u = tuple(x - y for x, y in zip(v, root))
            nxt[u] = nxt.get(u, 0) + c
        terms = {v: c for v, c in nxt.items() if c}
    m = alg.m
    out: dict[ExtendedWeight, int] = {}
    for v, c in terms.items():
        ra = _resolve(ka, v[:m])
        rb = _resolve(kb, v[m:])
        if ra is None or rb is None:
            continue
        top = ExtendedWeight(ra[1], rb[1]) - rho0
        out[top] = out.get(top, 0) + c * ra[0] * rb[0]
    return {k: v for k, v in out.items() if v}


def euler_character(alg: AlgebraDescriptor, w: ExtendedWeight) -> LaurentPoly:
    return expand_even(alg, euler_even_decomposition(alg, w))


# ------------------------------------------------------------ simple


@dataclass(frozen=True)
class CharacterExpr:
    alg: AlgebraDescriptor
    terms: tuple[tuple[int, ExtendedWeight], ...]

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (c, w) in enumerate(self.terms):
            mag = "" if abs(c) == 1 else str(abs(c))
            body = f"{mag}E({w.render()})"
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __str__(self) -> str:
        return self.render()

    def as_dict(self) -> dict[ExtendedWeight, int]:
        return {w: c for c, w in self.terms}


def _lift_map(alg: AlgebraDescriptor, w: ExtendedWeight, block: BlockIndex) -> dict[WeightDiagram, ExtendedWeight]:
    """Match block members of the reduced algebra with weights of ``alg`` in the block of ``w``."""
    small_members = {block.weight(f): f for f in block.members}
    if block.alg == alg:
        return {f: wt for wt, f in small_members.items()}
    f0 = diagram_of(alg, w)
    core_positions = [p for p, c in enumerate(f0.cells) if c.core]
    k = f0.crosses
    top = max(f.rightmost_cross() for f in block.members) + len(core_positions) + 2
    free = [p for p in range(top + 1) if p not in core_positions or p == 0]
    result: dict[WeightDiagram, ExtendedWeight] = {}
    for tail in range(k + 1):
        for positions in itertools.combinations([p for p in free if p > 0], k - tail):
            cells = [Cell(c.gt, c.lt, 0) for c in f0.cells] + [Cell()] * (top + 1 - len(f0.cells))
            cells[0] = Cell(cells[0].gt, cells[0].lt, tail)
            for p in positions:
                cells[p] = Cell(0, 0, 1)
            indicators = [None]
            if alg.family is Family.OSP_ODD and tail and not cells[0].core:
                indicators = ["+", "-"]
            for ind in indicators:
                try:
                    cand = WeightDiagram(alg.family, tuple(cells), 0, ind)
                    options = weights_of(alg, cand)
                except MalformedDiagram:
                    continue
                for wt in options:
                    try:
                        small, sw = bar_reduce(alg, wt)
                    except NotDominant:
                        continue
                    if small != block.alg:
                        continue
                    if small.family is Family.OSP_EVEN and small.m == small.n:
                        if not is_positive(small, sw):
                            continue
                    g = canonical_diagram(small, sw)
                    if g in block and g not in result:
                        result[g] = wt
    return result


def simple_character_expr(alg: AlgebraDescriptor, w: ExtendedWeight) -> CharacterExpr:
    """Ch(L_w) as a combination of Euler characteristics, weights given as lambda+rho."""
    require_dominant(alg, w)
    block, f, negative = block_for_weight(alg, w)
    dmat = d_matrix(block)
    j = block.index(f)
    lift = _lift_map(alg, sigma_flip(alg, w) if negative and alg.family is Family.OSP_EVEN else w, block)
    terms = []
    for i, g in enumerate(block.members):
        c = dmat.rows[i][j]
        if not c:
            continue
        if g not in lift:
            raise MalformedDiagram(f"no weight of {alg} lifts {g}")
        wt = lift[g]
        if negative:
            wt = sigma_flip(alg, wt)
        terms.append((c, wt))
    return CharacterExpr(alg, tuple(terms))


def simple_character(alg: AlgebraDescriptor, w: ExtendedWeight, mode: str = "expr"):
    expr = simple_character_expr(alg, w)
    if mode == "expr":
        return expr
    if mode != "laurent":
        raise ValueError(f"unknown mode {mode!r}")
    return expand(expr)


def expand(expr: CharacterExpr) -> LaurentPoly:
    return expand_even(expr.alg, even_decomposition(expr))


def even_decomposition(expr: CharacterExpr) -> dict[ExtendedWeight, int]:
    """Multiplicities of even-part irreducibles (doubled highest weights) in ``expr``."""
    out: dict[ExtendedWeight, int] = {}
    for c, wt in expr.terms:
        for top, m in euler_even_decomposition(expr.alg, wt).items():
            out[top] = out.get(top, 0) + c * m
    return {top: m for top, m in out.items() if m}


def dimension_eval(c: LaurentPoly) -> int:
    return c.evaluate_at_one()
