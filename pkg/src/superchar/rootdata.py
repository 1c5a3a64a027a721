"""Root data for gl(m,n), osp(2m,2n) and osp(2m+1,2n).

Every coordinate is stored doubled so that the half-integers of the odd
orthosymplectic family stay integral.  A weight is always kept in the
shifted form lambda+rho; subtract ``rho`` to recover lambda.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Iterator

from .errors import NotDominant, ParityError, SupercharError, TooLarge, WrongFamily

WEYL_BUDGET = 10**7


class Family(enum.Enum):
    GL = "gl"
    OSP_EVEN = "osp-even"
    OSP_ODD = "osp-odd"


@dataclass(frozen=True, order=True)
class AlgebraDescriptor:
    """A basic classical superalgebra: family plus the number of eps and delta coordinates."""

    family: Family
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise SupercharError(f"invalid ranks m={self.m}, n={self.n}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraDescriptor":
        """Read ``gl:m:n`` or ``osp:M:N`` (the latter meaning osp(M,N))."""
        try:
            kind, first, second = text.strip().lower().split(":")
            p, q = int(first), int(second)
        except ValueError as exc:
            raise SupercharError(f"cannot parse algebra {text!r}") from exc
        if kind == "gl":
            return cls(Family.GL, p, q)
        if kind != "osp":
            raise SupercharError(f"unknown algebra family {kind!r}")
        if q % 2:
            raise SupercharError("osp(M,N) needs N even")
        if p % 2:
            return cls(Family.OSP_ODD, (p - 1) // 2, q // 2)
        return cls(Family.OSP_EVEN, p // 2, q // 2)

    @property
    def spec(self) -> str:
        if self.family is Family.GL:
            return f"gl:{self.m}:{self.n}"
        return f"osp:{self.big_m}:{2 * self.n}"

    @property
    def big_m(self) -> int:
        """The M of osp(M, N)."""
        return 2 * self.m + (1 if self.family is Family.OSP_ODD else 0)

    def __str__(self) -> str:
        if self.family is Family.GL:
            return f"gl({self.m},{self.n})"
        return f"osp({self.big_m},{2 * self.n})"

    @property
    def parity(self) -> int:
        """Parity shared by all doubled coordinates."""
        return 1 if self.family is Family.OSP_ODD else 0


def _fmt_half(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


@dataclass(frozen=True, order=True)
class ExtendedWeight:
    """Coordinates of lambda+rho, doubled."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "ExtendedWeight":
        """Parse ``"a1,a2|b1,b2"``; entries may be integers, decimals or ``p/q``."""
        if text.count("|") != 1:
            raise SupercharError(f"weight {text!r} needs exactly one '|'")
        left, right = text.split("|")

        def side(chunk: str) -> tuple[int, ...]:
            out = []
            for item in chunk.replace(" ", "").split(","):
                if not item:
                    continue
                value = 2 * Fraction(item.replace("−", "-"))
                if value.denominator != 1:
                    raise ParityError(f"{item} is not a half-integer")
                out.append(int(value))
            return tuple(out)

        return cls(side(left), side(right))

    def render(self) -> str:
        return ",".join(map(_fmt_half, self.a)) + "|" + ",".join(map(_fmt_half, self.b))

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "ExtendedWeight") -> "ExtendedWeight":
        return ExtendedWeight(
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
        )

    def __sub__(self, other: "ExtendedWeight") -> "ExtendedWeight":
        return ExtendedWeight(
            tuple(x - y for x, y in zip(self.a, other.a)),
            tuple(x - y for x, y in zip(self.b, other.b)),
        )

    @property
    def flat(self) -> tuple[int, ...]:
        return self.a + self.b


@dataclass(frozen=True)
class CoreMarks:
    """Unpaired coordinates left after removing the atypical pairs."""

    a_marks: tuple[int, ...]
    b_marks: tuple[int, ...]
    zero_mark_present: bool = False


# ---------------------------------------------------------------- roots


def letter_sequence(alg: AlgebraDescriptor) -> list[tuple[str, int]]:
    """Order of the basis vectors fixed by the chosen Borel subalgebra.

    A letter is ``("e", i)`` or ``("d", j)`` with 0-based index.  Simple
    roots are the consecutive differences plus one closing root.
    """
    m, n = alg.m, alg.n
    if alg.family is Family.GL:
        return [("e", i) for i in range(m)] + [("d", j) for j in range(n)]
    if alg.family is Family.OSP_EVEN:
        if m > n:
            seq = [("e", i) for i in range(m - n)]
            for j in range(n):
                seq += [("d", j), ("e", m - n + j)]
        else:
            seq = [("d", j) for j in range(n - m)]
            for i in range(m):
                seq += [("d", n - m + i), ("e", i)]
        return seq
    if m >= n:
        seq = [("e", i) for i in range(m - n)]
        for j in range(n):
            seq += [("e", m - n + j), ("d", j)]
    else:
        seq = [("d", j) for j in range(n - m)]
        for i in range(m):
            seq += [("e", i), ("d", n - m + i)]
    return seq


def _unit(alg: AlgebraDescriptor, letter: tuple[str, int], coeff: int = 1) -> list[int]:
    vec = [0] * (alg.m + alg.n)
    kind, idx = letter
    vec[idx if kind == "e" else alg.m + idx] = coeff
    return vec


def _combine(x: list[int], y: list[int], sign: int) -> tuple[int, ...]:
    return tuple(p + sign * q for p, q in zip(x, y))


def positive_roots(alg: AlgebraDescriptor) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Return ``(even, odd)`` positive roots as plain (undoubled) integer vectors."""
    seq = letter_sequence(alg)
    even: list[tuple[int, ...]] = []
    odd: list[tuple[int, ...]] = []
    for u, v in itertools.combinations(range(len(seq)), 2):
        x, y = seq[u], seq[v]
        bucket = even if x[0] == y[0] else odd
        bucket.append(_combine(_unit(alg, x), _unit(alg, y), -1))
        if alg.family is not Family.GL:
            bucket.append(_combine(_unit(alg, x), _unit(alg, y), +1))
    if alg.family is not Family.GL:
        for j in range(alg.n):
            even.append(tuple(_unit(alg, ("d", j), 2)))
    if alg.family is Family.OSP_ODD:
        even += [tuple(_unit(alg, ("e", i))) for i in range(alg.m)]
        odd += [tuple(_unit(alg, ("d", j))) for j in range(alg.n)]
    return even, odd


def simple_roots(alg: AlgebraDescriptor) -> list[tuple[int, ...]]:
    seq = letter_sequence(alg)
    roots = [
        _combine(_unit(alg, seq[u]), _unit(alg, seq[u + 1]), -1) for u in range(len(seq) - 1)
    ]
    if alg.family is Family.GL:
        return roots
    last = seq[-1]
    if alg.family is Family.OSP_ODD:
        roots.append(tuple(_unit(alg, last)))
    elif last[0] == "d":
        roots.append(tuple(_unit(alg, last, 2)))
    elif len(seq) >= 2:
        roots.append(_combine(_unit(alg, seq[-2]), _unit(alg, last), +1))
    return roots


def _split(alg: AlgebraDescriptor, vec) -> ExtendedWeight:
    return ExtendedWeight(tuple(vec[: alg.m]), tuple(vec[alg.m :]))


def rho(alg: AlgebraDescriptor) -> ExtendedWeight:
    """Half the even positive roots minus half the odd ones, doubled.

    For gl the result is shifted by a multiple of the supertrace so that
    lambda+rho is integral for integral lambda.
    """
    even, odd = positive_roots(alg)
    total = [0] * (alg.m + alg.n)
    for root in even:
        total = [t + r for t, r in zip(total, root)]
    for root in odd:
        total = [t - r for t, r in zip(total, root)]
    if alg.family is Family.GL and (alg.m - alg.n) % 2 == 0:
        total = [t - 1 for t in total[: alg.m]] + [t + 1 for t in total[alg.m :]]
    return _split(alg, total)


def rho_even(alg: AlgebraDescriptor) -> ExtendedWeight:
    """Doubled half-sum of the even positive roots."""
    even, _ = positive_roots(alg)
    total = [0] * (alg.m + alg.n)
    for root in even:
        total = [t + r for t, r in zip(total, root)]
    return _split(alg, total)


def from_lambda(alg: AlgebraDescriptor, lam: ExtendedWeight) -> ExtendedWeight:
    """Shift a doubled lambda to lambda+rho."""
    return lam + rho(alg)


def to_lambda(alg: AlgebraDescriptor, w: ExtendedWeight) -> ExtendedWeight:
    return w - rho(alg)


# ------------------------------------------------------------- dominance


def check_parity(alg: AlgebraDescriptor, w: ExtendedWeight) -> None:
    if len(w.a) != alg.m or len(w.b) != alg.n:
        raise SupercharError(f"weight {w} has wrong length for {alg}")
    if any(x % 2 != alg.parity for x in w.flat):
        raise ParityError(f"weight {w} has wrong parity for {alg}")


def _strict(seq) -> bool:
    return all(x > y for x, y in zip(seq, seq[1:]))


def _trailing(seq, value: int) -> int:
    count = 0
    for x in reversed(seq):
        if x != value:
            break
        count += 1
    return count


def is_dominant(alg: AlgebraDescriptor, w: ExtendedWeight) -> bool:
    check_parity(alg, w)
    a, b = w.a, w.b
    if alg.family is Family.GL:
        return _strict(a) and _strict(b)
    if alg.family is Family.OSP_EVEN:
        za, zb = _trailing(a, 0), _trailing(b, 0)
        head_b = b[: len(b) - zb]
        if not _strict(head_b) or any(x <= 0 for x in head_b):
            return False
        if zb == 0:
            if za > 1:
                return False
            if za == 1:
                return _strict(a[:-1]) and all(x > 0 for x in a[:-1])
            if not a:
                return True
            head = a[:-1]
            return _strict(head) and all(x > abs(a[-1]) for x in head[-1:]) and all(x > 0 for x in head)
        if za not in (zb, zb + 1):
            return False
        head_a = a[: len(a) - za]
        return _strict(head_a) and all(x > 0 for x in head_a)
    # odd family: entries are odd doubles
    ca, cb = _trailing(a, -1), _trailing(b, 1)
    head_a, head_b = a[: len(a) - ca], b[: len(b) - cb]
    if not (_strict(head_a) and all(x >= 1 for x in head_a)):
        return False
    if not (_strict(head_b) and all(x > 1 for x in head_b)):
        return False
    if ca == 0:
        return cb <= 1
    return cb in (ca, ca + 1)


def require_dominant(alg: AlgebraDescriptor, w: ExtendedWeight) -> None:
    if not is_dominant(alg, w):
        raise NotDominant(f"{w} is not dominant for {alg}")


def atypicality(alg: AlgebraDescriptor, w: ExtendedWeight) -> tuple[int, list[tuple[int, int]]]:
    """Greedy matching of eps and delta coordinates that annihilate an isotropic root."""
    require_dominant(alg, w)
    used_b: set[int] = set()
    pairs: list[tuple[int, int]] = []
    for i, x in enumerate(w.a):
        target = -x if alg.family is Family.GL else abs(x)
        for j, y in enumerate(w.b):
            value = y if alg.family is Family.GL else abs(y)
            if j not in used_b and value == target:
                used_b.add(j)
                pairs.append((i, j))
                break
    return len(pairs), pairs


def core_marks(alg: AlgebraDescriptor, w: ExtendedWeight) -> CoreMarks:
    _, pairs = atypicality(alg, w)
    paired_a = {i for i, _ in pairs}
    paired_b = {j for _, j in pairs}
    if alg.family is Family.GL:
        a_marks = [x for i, x in enumerate(w.a) if i not in paired_a]
        b_marks = [y for j, y in enumerate(w.b) if j not in paired_b]
    else:
        a_marks = [abs(x) for i, x in enumerate(w.a) if i not in paired_a]
        b_marks = [abs(y) for j, y in enumerate(w.b) if j not in paired_b]
    zero = alg.family is Family.OSP_EVEN and 0 in a_marks
    return CoreMarks(tuple(sorted(a_marks, reverse=True)), tuple(sorted(b_marks, reverse=True)), zero)


@lru_cache(maxsize=None)
def _simple_root_solver(alg: AlgebraDescriptor):
    """Integer matrix ``M`` and denominator ``q`` with ``M / q`` inverting the simple roots.

    None when the simple roots do not form a square system.
    """
    from sympy import Matrix, ilcm

    roots = simple_roots(alg)
    if len(roots) != alg.m + alg.n or not roots:
        return None
    inv = Matrix([list(r) for r in roots]).T.inv()
    q = int(ilcm(*[x.q for x in inv]))
    rows = tuple(tuple(int(x * q) for x in inv.row(i)) for i in range(inv.rows))
    return rows, q


def leq_standard(alg: AlgebraDescriptor, u: ExtendedWeight, v: ExtendedWeight) -> bool:
    """True iff v-u is a non-negative integer combination of positive roots."""
    diff = [(y - x) for x, y in zip(u.flat, v.flat)]
    if any(d % 2 for d in diff):
        return False
    target = [d // 2 for d in diff]
    solver = _simple_root_solver(alg)
    if solver is not None:
        rows, q = solver
        for row in rows:
            c = sum(a * t for a, t in zip(row, target))
            if c < 0 or c % q:
                return False
        return True
    from sympy import Matrix

    basis = Matrix([list(r) for r in simple_roots(alg)]).T
    if basis.cols == 0:
        return all(d == 0 for d in diff)
    try:
        sol, params = basis.gauss_jordan_solve(Matrix(target))
    except ValueError:
        return False
    if params.shape[0]:
        return False
    return all(c.is_integer and c >= 0 for c in sol)


# ------------------------------------------------------------ Weyl group


def weyl_group_order(alg: AlgebraDescriptor) -> int:
    m, n = alg.m, alg.n
    if alg.family is Family.GL:
        return factorial(m) * factorial(n)
    eps = factorial(m) * 2**m
    if alg.family is Family.OSP_EVEN and m > 0:
        eps //= 2
    return eps * factorial(n) * 2**n


def _perm_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation acting on the eps block and the delta block separately.

    ``apply`` sends coordinate ``i`` of the input to slot ``perm[i]`` with
    sign ``signs[i]``.
    """

    perm_a: tuple[int, ...]
    signs_a: tuple[int, ...]
    perm_b: tuple[int, ...]
    signs_b: tuple[int, ...]
    sign: int

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        m = len(self.perm_a)
        out = [0] * len(vec)
        for i, (p, s) in enumerate(zip(self.perm_a, self.signs_a)):
            out[p] = s * vec[i]
        for j, (p, s) in enumerate(zip(self.perm_b, self.signs_b)):
            out[m + p] = s * vec[m + j]
        return tuple(out)


def _signed_perms(size: int, signed: bool, even_only: bool):
    for perm in itertools.permutations(range(size)):
        base = _perm_sign(perm)
        choices = itertools.product((1, -1), repeat=size) if signed else [(1,) * size]
        for signs in choices:
            flips = signs.count(-1)
            if even_only and flips % 2:
                continue
            yield perm, signs, base * (-1) ** flips


def weyl_elements(alg: AlgebraDescriptor) -> Iterator[WeylElement]:
    """Enumerate the Weyl group of the even part with determinant signs."""
    if weyl_group_order(alg) > WEYL_BUDGET:
        raise TooLarge(f"|W| of {alg} exceeds {WEYL_BUDGET}")
    signed = alg.family is not Family.GL
    even_only = alg.family is Family.OSP_EVEN
    eps = list(_signed_perms(alg.m, signed, even_only))
    dels = list(_signed_perms(alg.n, signed, False))
    for (pa, sa, ea), (pb, sb, eb) in itertools.product(eps, dels):
        yield WeylElement(pa, sa, pb, sb, ea * eb)


def _block_generators(size: int, kind: str) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    ident = list(range(size))
    gens = []
    for i in range(size - 1):
        perm = ident[:]
        perm[i], perm[i + 1] = i + 1, i
        gens.append((tuple(perm), (1,) * size))
    if size and kind == "BC":
        gens.append((tuple(ident), (1,) * (size - 1) + (-1,)))
    if size >= 2 and kind == "D":
        perm = ident[:]
        perm[-2], perm[-1] = size - 1, size - 2
        gens.append((tuple(perm), (1,) * (size - 2) + (-1, -1)))
    return gens


def simple_reflections(alg: AlgebraDescriptor) -> list[WeylElement]:
    """Generators of the even Weyl group; invariance under these gives invariance under all of W."""
    kind_a = {Family.GL: "A", Family.OSP_ODD: "BC", Family.OSP_EVEN: "D"}[alg.family]
    kind_b = "A" if alg.family is Family.GL else "BC"
    ida, idb = tuple(range(alg.m)), tuple(range(alg.n))
    out = [WeylElement(p, s, idb, (1,) * alg.n, -1) for p, s in _block_generators(alg.m, kind_a)]
    out += [WeylElement(ida, (1,) * alg.m, p, s, -1) for p, s in _block_generators(alg.n, kind_b)]
    return out


def sigma_flip(alg: AlgebraDescriptor, w: ExtendedWeight) -> ExtendedWeight:
    """Diagram automorphism of osp(2m,2n): negate the last eps coordinate."""
    if alg.family is not Family.OSP_EVEN:
        raise WrongFamily("sigma_flip needs an even orthosymplectic algebra")
    if not w.a:
        return w
    return ExtendedWeight(w.a[:-1] + (-w.a[-1],), w.b)


def is_positive(alg: AlgebraDescriptor, w: ExtendedWeight) -> bool:
    """An osp(2m,2n) weight is positive when no eps coordinate is negative."""
    return all(x >= 0 for x in w.a)
