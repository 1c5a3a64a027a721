"""Exact integer polynomials: one variable (Poincare polynomials) and
several variables with possibly negative exponents (characters)."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class ZPoly:
    """Polynomial in ``z`` with integer coefficients and nonnegative degrees."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean = {}
        for d, c in (coeffs or {}).items():
            if d < 0:
                raise ValueError("ZPoly degrees must be nonnegative")
            if c:
                clean[int(d)] = int(c)
        self._c = clean

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "ZPoly":
        return cls({degree: coeff})

    @classmethod
    def one(cls) -> "ZPoly":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ZPoly({0: other})
        return isinstance(other, ZPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "ZPoly") -> "ZPoly":
        out = dict(self._c)
        for d, c in other._c.items():
            out[d] = out.get(d, 0) + c
        return ZPoly(out)

    def __neg__(self) -> "ZPoly":
        return ZPoly({d: -c for d, c in self._c.items()})

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        out: dict[int, int] = defaultdict(int)
        for d1, c1 in self._c.items():
            for d2, c2 in other._c.items():
                out[d1 + d2] += c1 * c2
        return ZPoly(out)

    def shift(self, k: int) -> "ZPoly":
        """Multiply by ``z**k`` and drop the monomials that end up with negative degree."""
        return ZPoly({d + k: c for d, c in self._c.items() if d + k >= 0})

    def at(self, z: int) -> int:
        return sum(c * z**d for d, c in self._c.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c):
            c = self._c[d]
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += sign + body
        return text

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "ZPoly":
        text = text.replace(" ", "").replace("−", "-")
        if text == "0":
            return cls()
        out: dict[int, int] = defaultdict(int)
        for term in text.replace("-", "+-").split("+"):
            if not term:
                continue
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("-")
            if "z" not in term:
                out[0] += sign * int(term)
                continue
            coeff, _, mono = term.rpartition("*") if "*" in term else ("1", "", term)
            degree = int(mono[2:]) if mono.startswith("z^") else 1
            out[degree] += sign * int(coeff)
        return cls(out)


Exponent = tuple[int, ...]


class LaurentPoly:
    """Finite sum of ``c * e(v)`` with ``v`` an integer vector (doubled coordinates)."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] | None = None) -> None:
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else (terms or [])
        for v, c in items:
            acc[tuple(v)] += c
        self._t = {v: c for v, c in acc.items() if c}

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = defaultdict(int, self._t)
        for v, c in other._t.items():
            out[v] += c
        return LaurentPoly(out)

    @classmethod
    def combination(cls, parts: Iterable[tuple[int, "LaurentPoly"]]) -> "LaurentPoly":
        """Sum of ``c * p`` over ``parts``, accumulated in one pass."""
        acc: dict[Exponent, int] = defaultdict(int)
        for k, poly in parts:
            for v, c in poly._t.items():
                acc[v] += k * c
        out = cls.__new__(cls)
        out._t = {v: c for v, c in acc.items() if c}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(-1)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({v: k * c for v, c in self._t.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[Exponent, int] = defaultdict(int)
        for v1, c1 in self._t.items():
            for v2, c2 in other._t.items():
                out[tuple(x + y for x, y in zip(v1, v2))] += c1 * c2
        return LaurentPoly(out)

    def map_exponents(self, fn) -> "LaurentPoly":
        return LaurentPoly([(fn(v), c) for v, c in self._t.items()])

    def evaluate_at_one(self) -> int:
        return sum(self._t.values())

    def render(self, m: int) -> str:
        from .rootdata import ExtendedWeight

        lines = []
        for v in sorted(self._t, reverse=True):
            w = ExtendedWeight(v[:m], v[m:])
            lines.append(f"{self._t[v]} * e({w.render()})")
        return "\n".join(lines) if lines else "0"
