"""Legal and exceptional moves on maximal-atypical diagrams.

A move takes a cross from a start position ``s`` to an empty end position
``t > s``.  Its admissibility depends on the running balance of crosses
versus empty positions between the two, computed by :func:`l_between`.
The intermediate balance conditions are only imposed at empty positions:
those are the positions where the moving cross could have landed earlier.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .diagrams import WeightDiagram
from .errors import InternalError, NonCanonical


class MoveKind(enum.Enum):
    ORDINARY = "ordinary"
    TAIL_LOW = "tail-low"
    TAIL_HIGH = "tail-high"
    EXCEPTIONAL = "exceptional"


@dataclass(frozen=True, order=True)
class MoveEdge:
    start: int
    end: int
    degree: int
    kind: MoveKind
    mid: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.start < self.end or self.degree < 0:
            raise InternalError(f"malformed edge {self}")
        if self.mid is not None and not self.start < self.mid < self.end:
            raise InternalError(f"malformed exceptional edge {self}")

    @property
    def is_tail(self) -> bool:
        return self.kind in (MoveKind.TAIL_LOW, MoveKind.TAIL_HIGH)

    def label(self) -> str:
        if self.kind is MoveKind.EXCEPTIONAL:
            return f"({self.start}:{self.mid},{self.end};{self.degree})"
        return f"({self.start},{self.end};{self.degree})"


def _check_canonical(f: WeightDiagram) -> None:
    if any(c.core for c in f.cells[1:]):
        raise NonCanonical(f"{f} has core symbols outside the tail")


def l_between(f: WeightDiagram, s: int, t: int) -> int:
    """Crosses minus empty positions strictly between ``s`` and ``t``."""
    total = 0
    for r in range(s + 1, t):
        c = f.cell(r)
        if c.core:
            raise NonCanonical(f"core symbol at {r}")
        total += 1 if c.cross else -1
    return total


def tail_norm(f: WeightDiagram) -> int:
    tail = f.tail
    return 2 * tail.cross + tail.core


def horizon(f: WeightDiagram) -> int:
    """A position beyond which no move can end."""
    return f.size + tail_norm(f) + 2 * f.crosses + 2


def _empty_between(f: WeightDiagram, s: int, t: int) -> list[int]:
    return [r for r in range(s + 1, t) if f.cell(r).empty]


def legal_moves_from(f: WeightDiagram) -> list[tuple[WeightDiagram, MoveEdge]]:
    _check_canonical(f)
    out: list[tuple[WeightDiagram, MoveEdge]] = []
    limit = horizon(f)
    for s in range(f.size):
        cell = f.cell(s)
        if not cell.cross:
            continue
        plain_start = not cell.core
        for t in range(s + 1, limit):
            if not f.cell(t).empty:
                continue
            between = [l_between(f, s, r) for r in _empty_between(f, s, t)]
            lst = l_between(f, s, t)
            g = f.move_cross(s, t)
            degrees: list[tuple[int, MoveKind]] = []
            if plain_start and all(v > 0 for v in between) and lst >= 0:
                kind = MoveKind.ORDINARY if s else MoveKind.TAIL_LOW
                degrees.append((lst, kind))
            if s == 0:
                norm = tail_norm(g)
                if all(norm + v > 0 for v in between) and norm + lst >= 0:
                    high = norm + lst
                    if not degrees or degrees[0][0] != high:
                        degrees.append((high, MoveKind.TAIL_HIGH))
            for degree, kind in degrees:
                out.append((g, MoveEdge(s, t, degree, kind)))
    return out


def exceptional_moves_from(f: WeightDiagram) -> list[tuple[WeightDiagram, MoveEdge]]:
    _check_canonical(f)
    out: list[tuple[WeightDiagram, MoveEdge]] = []
    if f.tail.cross < 2:
        return out
    limit = horizon(f)
    for s in range(1, limit):
        if not f.cell(s).empty:
            continue
        if any(l_between(f, a, s) > 0 for a in range(s)):
            continue
        for t in range(s + 1, limit):
            if not f.cell(t).empty:
                continue
            g = f.move_cross(0, s).move_cross(0, t)
            parity = tail_norm(g) + l_between(f, 0, s)
            if parity <= 0 or parity % 2 == 0:
                continue
            if any(l_between(f, s, b) <= 0 for b in _empty_between(f, s, t)):
                continue
            lst = l_between(f, s, t)
            if lst < 0:
                continue
            out.append((g, MoveEdge(0, t, lst, MoveKind.EXCEPTIONAL, mid=s)))
    return out


def all_moves_from(f: WeightDiagram) -> list[tuple[WeightDiagram, MoveEdge]]:
    return legal_moves_from(f) + exceptional_moves_from(f)


def caps_of(f: WeightDiagram) -> list[tuple[int, int]]:
    """Join each non-tail cross to the end of its unique degree-zero ordinary move."""
    _check_canonical(f)
    caps = []
    by_start: dict[int, list[int]] = {}
    for _, e in legal_moves_from(f):
        if e.kind is MoveKind.ORDINARY and e.degree == 0:
            by_start.setdefault(e.start, []).append(e.end)
    for s in f.nontail_crosses():
        ends = by_start.get(s, [])
        if len(ends) != 1:
            raise InternalError(f"cross at {s} of {f} has {len(ends)} degree-zero moves")
        caps.append((s, ends[0]))
    caps.sort()
    for (s1, t1), (s2, t2) in zip(caps, caps[1:]):
        if s1 < s2 < t1 < t2:
            raise InternalError(f"overlapping caps in {f}")
    return caps


def free_positions(f: WeightDiagram, limit: Optional[int] = None) -> list[int]:
    """Empty non-tail positions that are not cap ends, up to the horizon."""
    ends = {t for _, t in caps_of(f)}
    top = horizon(f) if limit is None else limit
    free = [p for p in range(1, top) if f.cell(p).empty and p not in ends]
    for s, t in caps_of(f):
        if any(s < p < t for p in free):
            raise InternalError(f"free position under the cap ({s},{t}) of {f}")
    return free
