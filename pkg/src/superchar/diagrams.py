"""Weight diagrams: a weight drawn as symbols on a line of positions.

A ``>`` marks an eps coordinate, a ``<`` a delta coordinate, and a position
holding both becomes a cross.  For the orthosymplectic families the line
starts at a tail position (0, or 1/2 for the odd family) that may hold many
crosses.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Optional

from .errors import IllegalStep, MalformedDiagram, NotDominant, WrongFamily
from .rootdata import (
    AlgebraDescriptor,
    ExtendedWeight,
    Family,
    is_dominant,
    is_positive,
    require_dominant,
)


@dataclass(frozen=True)
class Cell:
    gt: int = 0
    lt: int = 0
    cross: int = 0

    @property
    def empty(self) -> bool:
        return not (self.gt or self.lt or self.cross)

    @property
    def core(self) -> int:
        return self.gt + self.lt

    def render(self) -> str:
        if self.empty:
            return "0"
        text = "" if not self.cross else ("x" if self.cross == 1 else f"{self.cross}x")
        return text + ">" * self.gt + "<" * self.lt


EMPTY = Cell()


@dataclass(frozen=True)
class WeightDiagram:
    """Finitely supported function from positions to symbol multisets.

    ``cells[p]`` describes position index ``p``; its value is ``p + offset``
    for gl, ``p`` for osp(2m,2n) and ``p + 1/2`` for osp(2m+1,2n).
    """

    family: Family
    cells: tuple[Cell, ...]
    offset: int = 0
    indicator: Optional[str] = None

    def __post_init__(self) -> None:
        cells = list(self.cells)
        offset = self.offset
        if self.family is Family.GL:
            while cells and cells[0].empty:
                cells.pop(0)
                offset += 1
            if not cells:
                offset = 0
        while cells and cells[-1].empty:
            cells.pop()
        object.__setattr__(self, "cells", tuple(cells))
        object.__setattr__(self, "offset", offset)
        self._validate()

    def _validate(self) -> None:
        for p, c in enumerate(self.cells):
            if min(c.gt, c.lt, c.cross) < 0 or c.gt > 1 or c.lt > 1:
                raise MalformedDiagram(f"bad cell {c} at {p}")
            tail = p == 0 and self.family is not Family.GL
            if not tail and c.gt + c.lt + c.cross > 1:
                raise MalformedDiagram(f"non-tail cell {c.render()} at {p}")
            if tail and self.family is Family.OSP_EVEN and c.lt:
                raise MalformedDiagram("even tail cannot hold <")
        if self.indicator is not None:
            if self.family is not Family.OSP_ODD:
                raise MalformedDiagram("only the odd family carries an indicator")
            if self.indicator not in "+-" or not self.tail.cross or self.tail.core:
                raise MalformedDiagram("indicator needs tail crosses and no tail core symbol")

    # -- access

    def cell(self, p: int) -> Cell:
        return self.cells[p] if 0 <= p < len(self.cells) else EMPTY

    @property
    def tail(self) -> Cell:
        return self.cell(0)

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def crosses(self) -> int:
        return sum(c.cross for c in self.cells)

    def cross_positions(self) -> list[int]:
        """Position indices of crosses, right to left, with multiplicity."""
        out: list[int] = []
        for p in range(len(self.cells) - 1, -1, -1):
            out += [p] * self.cells[p].cross
        return out

    def nontail_crosses(self) -> list[int]:
        return [p for p in self.cross_positions() if p > 0]

    def rightmost_cross(self) -> int:
        pos = self.cross_positions()
        return pos[0] if pos else 0

    def doubled_position(self, p: int) -> int:
        if self.family is Family.GL:
            return 2 * (p + self.offset)
        return 2 * p + (1 if self.family is Family.OSP_ODD else 0)

    def with_cell(self, p: int, cell: Cell, indicator: Optional[str] = "keep") -> "WeightDiagram":
        cells = list(self.cells) + [EMPTY] * max(0, p + 1 - len(self.cells))
        cells[p] = cell
        ind = self.indicator if indicator == "keep" else indicator
        return replace(self, cells=tuple(cells), indicator=ind)

    def move_cross(self, s: int, t: int) -> "WeightDiagram":
        """Return f_s^t: one cross taken from ``s`` and put at ``t``."""
        src, dst = self.cell(s), self.cell(t)
        if not src.cross:
            raise MalformedDiagram(f"no cross at {s}")
        out = self.with_cell(s, replace(src, cross=src.cross - 1))
        return out.with_cell(t, replace(dst, cross=dst.cross + 1))

    # -- text

    def render(self) -> str:
        body = ",".join(c.render() for c in self.cells) or "0"
        prefix = f"({self.indicator})" if self.indicator else ""
        suffix = f"@{self.offset}" if self.family is Family.GL else ""
        return prefix + body + suffix

    def __str__(self) -> str:
        return self.render()

    def sort_key(self) -> tuple:
        positions = [self.doubled_position(p) for p in self.cross_positions()]
        return (sum(positions), tuple(positions), self.render())


def parse_diagram(family: Family, text: str) -> WeightDiagram:
    """Inverse of ``WeightDiagram.render``; core symbols may precede or follow crosses."""
    text = text.strip().replace("−", "-")
    indicator = None
    if text[:3] in ("(+)", "(-)"):
        indicator, text = text[1], text[3:]
    offset = 0
    if "@" in text:
        text, off = text.rsplit("@", 1)
        offset = int(off)
    cells = []
    for item in text.split(","):
        item = item.strip()
        gt, lt = item.count(">"), item.count("<")
        rest = item.replace(">", "").replace("<", "")
        if rest in ("", "0"):
            cross = 0
        elif rest == "x":
            cross = 1
        elif rest.endswith("x"):
            cross = int(rest[:-1])
        else:
            raise MalformedDiagram(f"cannot read cell {item!r}")
        cells.append(Cell(gt, lt, cross))
    return WeightDiagram(family, tuple(cells), offset, indicator)


# ------------------------------------------------------- weight <-> diagram


def _index(alg: AlgebraDescriptor, doubled: int) -> int:
    if alg.family is Family.OSP_ODD:
        return (doubled - 1) // 2
    return doubled // 2


def diagram_of(alg: AlgebraDescriptor, w: ExtendedWeight) -> WeightDiagram:
    require_dominant(alg, w)
    if alg.family is Family.GL:
        xs = [x // 2 for x in w.a]
        ys = [-y // 2 for y in w.b]
        lo = min(xs + ys) if xs or ys else 0
        hi = max(xs + ys) if xs or ys else 0
        cells = []
        for t in range(lo, hi + 1):
            g, l = xs.count(t), ys.count(t)
            c = min(g, l)
            cells.append(Cell(g - c, l - c, c))
        return WeightDiagram(Family.GL, tuple(cells), lo)
    xs = Counter(_index(alg, abs(x)) for x in w.a)
    ys = Counter(_index(alg, y) for y in w.b)
    top = max(list(xs) + list(ys) + [0])
    cells = []
    for p in range(top + 1):
        c = min(xs[p], ys[p])
        cells.append(Cell(xs[p] - c, ys[p] - c, c))
    indicator = None
    tail = cells[0]
    if alg.family is Family.OSP_ODD and tail.cross and not tail.core:
        indicator = "+" if 1 in w.a else "-"
    return WeightDiagram(alg.family, tuple(cells), 0, indicator)


def weights_of(alg: AlgebraDescriptor, f: WeightDiagram) -> list[ExtendedWeight]:
    """All dominant weights drawn by ``f`` (two for an even diagram with empty tail)."""
    if f.family is not alg.family:
        raise MalformedDiagram(f"diagram family {f.family} does not match {alg}")
    a: list[int] = []
    b: list[int] = []
    for p, c in enumerate(f.cells):
        t = f.doubled_position(p)
        a += [t] * (c.gt + c.cross)
        b += [t] * (c.lt + c.cross)
    if alg.family is Family.GL:
        b = [-y for y in b]
    if alg.family is Family.OSP_ODD:
        level = [x for x in a if x == 1]
        a = [x for x in a if x != 1]
        if level:
            tail = f.tail
            plus = tail.gt == 1 or (f.indicator == "+" and not tail.core)
            if tail.cross and not tail.core and f.indicator is None:
                raise MalformedDiagram("odd diagram with tail crosses needs an indicator")
            level = ([1] if plus else [-1]) + [-1] * (len(level) - 1)
        a += level
    a.sort(reverse=True)
    b.sort(reverse=True)
    if len(a) != alg.m or len(b) != alg.n:
        raise MalformedDiagram(f"diagram {f} does not describe a weight of {alg}")
    w = ExtendedWeight(tuple(a), tuple(b))
    out = [w]
    if alg.family is Family.OSP_EVEN and f.tail.empty and a:
        out.append(ExtendedWeight(w.a[:-1] + (-w.a[-1],), w.b))
    for x in out:
        if not is_dominant(alg, x):
            raise MalformedDiagram(f"diagram {f} gives non-dominant {x}")
    return out


def positive_weight_of(alg: AlgebraDescriptor, f: WeightDiagram) -> ExtendedWeight:
    return weights_of(alg, f)[0]


# ------------------------------------------------------------ translation


def translation_step(f: WeightDiagram, p: int, direction: int) -> WeightDiagram:
    """Move the core symbol at ``p`` one step left (-1) or right (+1).

    The symbol swaps places with an empty position or with a cross.  In the
    odd family a symbol may leave the tail (the tail crosses then receive a
    sign) or enter it (consuming the sign).
    """
    if direction not in (1, -1):
        raise IllegalStep("direction must be +1 or -1")
    q = p + direction
    if f.family is Family.GL and q < 0:
        f = replace(f, cells=(EMPTY,) + f.cells, offset=f.offset - 1)
        p, q = p + 1, q + 1
    src, dst = f.cell(p), f.cell(q)
    if not src.core:
        raise IllegalStep(f"no core symbol at {p}")
    if dst.core:
        raise IllegalStep(f"target {q} already holds a core symbol")
    if f.family is not Family.GL:
        if q < 0:
            raise IllegalStep("cannot leave the line")
        if f.family is Family.OSP_EVEN and 0 in (p, q):
            raise IllegalStep("the zero position is frozen")
    symbol = Cell(src.gt, src.lt, 0)
    if f.family is Family.OSP_ODD and p == 0:
        c = src.cross + dst.cross
        sign = ("+" if dst.cross else "-") if c else None
        return f.with_cell(0, Cell(0, 0, c), indicator=sign).with_cell(1, symbol)
    if f.family is Family.OSP_ODD and q == 0:
        c = dst.cross
        if f.indicator == "+":
            out = f.with_cell(0, replace(symbol, cross=c - 1), indicator=None)
            return out.with_cell(1, Cell(0, 0, 1))
        return f.with_cell(0, replace(symbol, cross=c), indicator=None).with_cell(1, EMPTY)
    return f.with_cell(q, symbol).with_cell(p, Cell(0, 0, dst.cross))


def _needs_push(f: WeightDiagram, p: int) -> bool:
    cell = f.cell(p)
    if not cell.core:
        return False
    if f.family is Family.OSP_EVEN and p == 0:
        return False
    if f.family is Family.OSP_ODD and p == 0 and cell.cross:
        return True
    return any(x > p for x in f.cross_positions())


def reduced_diagram(f: WeightDiagram) -> WeightDiagram:
    """Push every core symbol right of all crosses by translation steps, then erase it.

    The ``>`` on the zero position of an even diagram is frozen and kept.
    """

    def push(f: WeightDiagram, p: int) -> WeightDiagram:
        # a symbol blocking the way is moved one step first
        if f.cell(p + 1).core:
            f = push(f, p + 1)
        return translation_step(f, p, +1)

    while True:
        pending = [p for p in range(len(f.cells)) if _needs_push(f, p)]
        if not pending:
            break
        p = pending[-1]
        while _needs_push(f, p):
            f = push(f, p)
            p += 1
    keep_tail = f.family is Family.OSP_EVEN
    cells = tuple(
        Cell(c.gt if keep_tail and p == 0 else 0, 0, c.cross) for p, c in enumerate(f.cells)
    )
    indicator = f.indicator if cells and cells[0].cross else None
    return WeightDiagram(f.family, cells, f.offset, indicator)


def bar_reduce(alg: AlgebraDescriptor, w: ExtendedWeight) -> tuple[AlgebraDescriptor, ExtendedWeight]:
    """Pass to the maximal atypical block of the smaller algebra with the same combinatorics."""
    f = diagram_of(alg, w)
    small_f = reduced_diagram(f)
    k = f.crosses
    if k == 0:
        raise NotDominant(f"{w} is typical; there is no reduced block")
    if alg.family is Family.GL:
        small = AlgebraDescriptor(Family.GL, k, k)
    elif alg.family is Family.OSP_ODD:
        small = AlgebraDescriptor(Family.OSP_ODD, k, k)
    elif small_f.tail.gt:
        small = AlgebraDescriptor(Family.OSP_EVEN, k + 1, k)
    else:
        small = AlgebraDescriptor(Family.OSP_EVEN, k, k)
    options = weights_of(small, small_f)
    if alg.family is Family.OSP_EVEN and not is_positive(alg, w) and len(options) == 2:
        return small, options[1]
    return small, options[0]


# ---------------------------------------------------- canonical odd tails


def canonicalize_odd(f: WeightDiagram) -> WeightDiagram:
    """Signed maximal-atypical odd diagram -> diagram with ``<`` on the tail.

    Non-tail crosses move one step right; a ``+`` sign sends one tail cross
    to the first non-tail position.
    """
    if f.family is not Family.OSP_ODD or any(c.core for c in f.cells):
        raise WrongFamily("canonicalize_odd needs a signed odd diagram without core symbols")
    tail_cross = f.tail.cross
    cells = [EMPTY] * (len(f.cells) + 2)
    for p in range(1, len(f.cells)):
        if f.cells[p].cross:
            cells[p + 1] = Cell(0, 0, 1)
    if f.indicator == "+":
        tail_cross -= 1
        cells[1] = Cell(0, 0, 1)
    cells[0] = Cell(0, 1, tail_cross)
    return WeightDiagram(Family.OSP_ODD, tuple(cells))


def decanonicalize(f: WeightDiagram) -> WeightDiagram:
    """Inverse of ``canonicalize_odd``."""
    if f.family is not Family.OSP_ODD or f.tail.lt != 1 or f.tail.gt:
        raise WrongFamily("decanonicalize needs a <-tailed odd diagram")
    if any(c.core for c in f.cells[1:]):
        raise WrongFamily("core symbol outside the tail")
    tail_cross = f.tail.cross
    plus = f.cell(1).cross == 1
    if plus:
        tail_cross += 1
    cells = [Cell(0, 0, tail_cross)]
    for p in range(2, len(f.cells)):
        cells.append(Cell(0, 0, f.cells[p].cross))
    indicator = None
    if tail_cross:
        indicator = "+" if plus else "-"
    return WeightDiagram(Family.OSP_ODD, tuple(cells), 0, indicator)


def tail_length(alg: AlgebraDescriptor, w: ExtendedWeight) -> int:
    f = diagram_of(alg, w)
    if alg.family is Family.GL:
        raise WrongFamily("gl has no tail")
    s = f.tail.cross
    if f.indicator == "+":
        s -= 1
    return s


# ----------------------------------------- reduced-block conversions


def canonical_diagram(alg: AlgebraDescriptor, w: ExtendedWeight) -> WeightDiagram:
    """Diagram used by the move calculus for a weight of a reduced algebra."""
    f = diagram_of(alg, w)
    if any(c.core for c in f.cells[1:]):
        raise NotDominant(f"{w} is not maximally atypical in {alg}")
    if alg.family is Family.OSP_ODD:
        return canonicalize_odd(f)
    return f


def weight_of_canonical(alg: AlgebraDescriptor, f: WeightDiagram, negative: bool = False) -> ExtendedWeight:
    if alg.family is Family.OSP_ODD:
        f = decanonicalize(f)
    options = weights_of(alg, f)
    return options[-1] if negative else options[0]


def check_family(alg: AlgebraDescriptor, f: WeightDiagram) -> None:
    if alg.family is not f.family:
        raise WrongFamily(f"{f} is not a diagram of {alg}")
