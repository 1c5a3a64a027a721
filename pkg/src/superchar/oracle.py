"""Recursive evaluation of the first-level Poincare polynomials.

This module never looks at moves.  It follows the cohomological recursion
on native (signed) diagrams: a translation step when the rightmost cross is
isolated, a rank reduction when the two rightmost crosses are adjacent, an
explicit list of exceptional pairs, and closed forms for the handful of
weights sitting right above the trivial one.  Its output is used to check
the move calculus.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import (
    Cell,
    WeightDiagram,
    canonical_diagram,
    diagram_of,
    positive_weight_of,
    weight_of_canonical,
)
from .errors import OutOfRegime, WrongFamily
from .poly import ZPoly
from .rootdata import AlgebraDescriptor, ExtendedWeight, Family, is_positive, sigma_flip

Row = dict[WeightDiagram, ZPoly]


def _rank(alg: AlgebraDescriptor) -> int:
    if alg.family is Family.GL:
        raise WrongFamily("the recursion covers the orthosymplectic families only")
    if alg.family is Family.OSP_EVEN and alg.m not in (alg.n, alg.n + 1):
        raise WrongFamily(f"{alg} is not a reduced algebra")
    if alg.family is Family.OSP_ODD and alg.m != alg.n:
        raise WrongFamily(f"{alg} is not a reduced algebra")
    return alg.n


def _big_tail(alg: AlgebraDescriptor) -> bool:
    return alg.family is Family.OSP_EVEN and alg.m == alg.n + 1


def _tail_diagram(alg: AlgebraDescriptor, crosses: list[int], tail: int, sign) -> WeightDiagram:
    top = max(crosses, default=0)
    cells = [Cell()] * (top + 1)
    cells[0] = Cell(1 if _big_tail(alg) else 0, 0, tail)
    for p in crosses:
        cells[p] = Cell(0, 0, 1)
    indicator = sign if alg.family is Family.OSP_ODD and tail else None
    return WeightDiagram(alg.family, tuple(cells), 0, indicator)


def _zero(alg: AlgebraDescriptor) -> WeightDiagram:
    return _tail_diagram(alg, [], _rank(alg), "-")


def _eps1(alg: AlgebraDescriptor) -> WeightDiagram:
    return _tail_diagram(alg, [], _rank(alg), "+")


def _l(f: WeightDiagram, s: int, t: int) -> int:
    return sum(1 if f.cell(r).cross else -1 for r in range(s + 1, t))


def _norm(f: WeightDiagram) -> int:
    return 2 * f.tail.cross + f.tail.core


def exceptional_partner(alg: AlgebraDescriptor, f: WeightDiagram):
    """The weight forming an exceptional pair with ``f`` (as the upper weight), or None."""
    top = f.nontail_crosses()
    if len(top) < 2 or top[0] != top[1] + 1:
        return None
    t = top[1]
    lst = _l(f, 0, t)
    odd_wanted = not _big_tail(alg)
    if (lst % 2 == 1) != odd_wanted:
        return None
    if any(_l(f, s, t) > 0 for s in range(t)):
        return None
    if lst + _norm(f) <= 0:
        return None
    tail = f.tail.cross + 2
    sign = f.indicator or "-"
    return _tail_diagram(alg, top[2:], tail, sign)


def _sub_algebra(alg: AlgebraDescriptor) -> AlgebraDescriptor:
    return AlgebraDescriptor(alg.family, alg.m - 1, alg.n - 1)


def _drop_top(alg: AlgebraDescriptor, f: WeightDiagram) -> WeightDiagram:
    top = f.nontail_crosses()
    return _tail_diagram(alg, top[1:], f.tail.cross, f.indicator)


def _base_case(alg: AlgebraDescriptor, f: WeightDiagram) -> Row:
    k = _rank(alg)
    top = f.nontail_crosses()
    one = ZPoly.one()
    zero = _zero(alg)
    if alg.family is Family.OSP_ODD:
        eps1 = _eps1(alg)
        if not top:
            if f.indicator == "-":
                raise OutOfRegime("the trivial weight of the odd family is not covered")
            return {f: one, zero: ZPoly.monomial(2 * k - 1)}
        if f.indicator == "+":
            return {f: one, zero: one, eps1: ZPoly.monomial(2 * k - 2)}
        return {f: one, eps1: one, zero: ZPoly.monomial(2 * k - 2)}
    if not top:
        degree = 2 * k if _big_tail(alg) else 2 * k - 1
        return {f: one + ZPoly.monomial(degree)}
    if _big_tail(alg):
        return {f: one, zero: ZPoly.monomial(2 * k - 1)}
    if k == 1:
        return {f: one, zero: one}
    return {f: one, zero: one + ZPoly.monomial(2 * k - 2)}


@lru_cache(maxsize=None)
def _row(alg: AlgebraDescriptor, f: WeightDiagram) -> tuple[tuple[WeightDiagram, ZPoly], ...]:
    k = _rank(alg)
    top = f.nontail_crosses()
    if not top or top[0] <= 1:
        return tuple(_base_case(alg, f).items())
    p1 = top[0]
    p2 = top[1] if len(top) > 1 else 0
    if k == 1 or p1 > p2 + 1:
        lower = f.move_cross(p1, p1 - 1)
        row: Row = {}
        for mu, poly in _row(alg, lower):
            shifted = poly.shift(-1)
            if shifted:
                row[mu] = shifted
        row[f] = ZPoly.one()
        row[lower] = ZPoly.one()
        return tuple(row.items())
    # the two rightmost crosses are adjacent and off the tail
    small = _sub_algebra(alg)
    reduced = _drop_top(alg, f)
    reduced = WeightDiagram(small.family, reduced.cells, 0, reduced.indicator)
    row = {}
    for mu_small, poly in _row(small, reduced):
        if mu_small.rightmost_cross() >= p2:
            continue
        crosses = mu_small.nontail_crosses() + [p2]
        mu = _tail_diagram(alg, crosses, mu_small.tail.cross, mu_small.indicator)
        row[mu] = poly.shift(1)
    partner = exceptional_partner(alg, f)
    if partner is not None:
        row[partner] = ZPoly.one()
    row[f] = ZPoly.one()
    return tuple(row.items())


def _require_principal(alg: AlgebraDescriptor, f: WeightDiagram) -> None:
    zero = _zero(alg)
    outside = any(c.core for c in f.cells[1:])
    if outside or f.crosses != zero.crosses or f.tail.core != zero.tail.core:
        raise OutOfRegime(f"{f.render()} is not in the block of the trivial module of {alg}")


def k_poly_row(alg: AlgebraDescriptor, lam: ExtendedWeight) -> dict[ExtendedWeight, ZPoly]:
    """All nonzero first-level polynomials of ``lam``, keyed by the lower weight (lambda+rho).

    For a negative weight of osp(2k,2k) the row of its sigma image is
    computed and flipped back.
    """
    f = diagram_of(alg, lam)
    _rank(alg)
    _require_principal(alg, f)
    negative = alg.family is Family.OSP_EVEN and not is_positive(alg, lam)
    out = {}
    for mu, poly in _row(alg, f):
        w = _weight(alg, mu)
        out[sigma_flip(alg, w) if negative else w] = poly
    return out


def k_poly_row_canonical(alg: AlgebraDescriptor, f_canonical: WeightDiagram) -> dict[WeightDiagram, ZPoly]:
    """Same as :func:`k_poly_row` with canonical diagrams on both sides."""
    lam = weight_of_canonical(alg, f_canonical)
    return {canonical_diagram(alg, w): p for w, p in k_poly_row(alg, lam).items()}


def _weight(alg: AlgebraDescriptor, f: WeightDiagram) -> ExtendedWeight:
    return positive_weight_of(alg, f)


def k_poly_recursive(alg: AlgebraDescriptor, lam: ExtendedWeight, mu: ExtendedWeight) -> ZPoly:
    row = k_poly_row(alg, lam)
    return row.get(mu, ZPoly())


def is_exceptional_pair(alg: AlgebraDescriptor, lam: ExtendedWeight, mu: ExtendedWeight) -> bool:
    f = diagram_of(alg, lam)
    g = diagram_of(alg, mu)
    partner = exceptional_partner(alg, f)
    return partner is not None and partner == g


__all__ = [
    "exceptional_partner",
    "is_exceptional_pair",
    "k_poly_recursive",
    "k_poly_row",
    "k_poly_row_canonical",
]
