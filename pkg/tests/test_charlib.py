import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import alg, lam, wt
from superchar.charlib import (
    dimension_eval,
    euler_character,
    euler_even_decomposition,
    even_character,
    expand,
    factor_character,
    simple_character,
    simple_character_expr,
    tail_levi,
)
from superchar.errors import NotDominant, TooLarge, WrongFamily
from superchar.poly import LaurentPoly
from superchar.rootdata import ExtendedWeight, simple_reflections


def weyl_dimension(kind, top):
    """Weyl dimension formula on undoubled coordinates, independent of the Freudenthal code."""
    r = len(top)
    x = [Fraction(v, 2) for v in top]
    shift = {"B": Fraction(1, 2), "C": Fraction(1), "D": Fraction(0)}[kind]
    rho = [r - 1 - i + shift for i in range(r)]
    roots = []
    for i, j in itertools.combinations(range(r), 2):
        for s in (1, -1):
            v = [0] * r
            v[i], v[j] = 1, s
            roots.append(v)
    if kind in "BC":
        for i in range(r):
            v = [0] * r
            v[i] = 1 if kind == "B" else 2
            roots.append(v)
    num = den = Fraction(1)
    for a in roots:
        num *= sum((p + q) * c for p, q, c in zip(x, rho, a))
        den *= sum(q * c for q, c in zip(rho, a))
    return num / den


@st.composite
def factor_tops(draw):
    kind = draw(st.sampled_from("BCD"))
    r = draw(st.integers(1, 3))
    spin = kind in "BD" and draw(st.booleans())
    parts = sorted(draw(st.lists(st.integers(0, 3), min_size=r, max_size=r)), reverse=True)
    top = [2 * p + (1 if spin else 0) for p in parts]
    if kind == "D" and r > 1 and draw(st.booleans()):
        top[-1] = -top[-1]
    if kind == "D" and r == 1:
        top = [2 * parts[0]]
    return kind, tuple(top)


@given(factor_tops())
def test_factor_dimension_matches_weyl_formula(case):
    kind, top = case
    total = sum(m for _, m in factor_character(kind, top))
    assert total == weyl_dimension(kind, top)


@given(factor_tops())
def test_factor_character_is_weyl_invariant(case):
    kind, top = case
    terms = dict(factor_character(kind, top))
    r = len(top)
    for v, m in terms.items():
        if kind == "D":
            if r > 1:
                assert terms[(-v[0], -v[1]) + v[2:]] == m
        else:
            assert terms[(-v[0],) + v[1:]] == m
        if r > 1:
            assert terms[(v[1], v[0]) + v[2:]] == m


@pytest.mark.parametrize(
    "kind,top,dim",
    [("B", (2,), 3), ("B", (1,), 2), ("C", (2,), 2), ("C", (4,), 3), ("D", (2, 0), 4), ("B", (2, 2), 10), ("C", (2, 2), 5), ("D", (2, 2, 0), 15)],
)
def test_small_factor_dimensions(kind, top, dim):
    assert sum(m for _, m in factor_character(kind, top)) == dim


def test_even_character_is_product():
    a = alg("osp:5:2")
    c = even_character(a, ExtendedWeight((2, 0), (2,)))
    assert dimension_eval(c) == 5 * 2


def test_euler_of_trivial_weight_is_one():
    for spec in ("osp:2:2", "osp:3:2", "osp:4:2", "osp:4:4", "osp:5:4", "osp:6:4"):
        a = alg(spec)
        zero = lam(a, ",".join(["0"] * a.m) + "|" + ",".join(["0"] * a.n))
        assert euler_character(a, zero) == LaurentPoly({(0,) * (a.m + a.n): 1})


def test_tail_levi_counts_trailing_zero_coordinates():
    a = alg("osp:6:6")
    assert tail_levi(a, wt("2,1,0|2,1,0")) == (1, 1)
    assert tail_levi(a, wt("0,0,0|0,0,0")) == (3, 3)
    assert tail_levi(a, wt("2,0,0|2,0,0")) == (2, 2)


def test_standard_euler_characteristic_of_osp32():
    a = alg("osp:3:2")
    assert dimension_eval(euler_character(a, wt("1/2|1/2"))) == 4


@pytest.mark.parametrize(
    "spec,text",
    [("osp:3:2", "1/2|1/2"), ("osp:4:2", "2,0|2"), ("osp:4:4", "1,0|1,0"), ("osp:6:4", "2,0,0|2,0"), ("osp:5:4", "3/2,1/2|3/2,1/2")],
)
def test_euler_characteristic_is_weyl_invariant(spec, text):
    a = alg(spec)
    e = euler_character(a, wt(text))
    for s in simple_reflections(a):
        assert e.map_exponents(s.apply) == e


def test_osp22_alternating_sums():
    a = alg("osp:2:2")
    for n in range(6):
        expr = simple_character_expr(a, wt(f"{n}|{n}"))
        assert expr.as_dict() == {wt(f"{j}|{j}"): (-1) ** (n + j) for j in range(n + 1)}


def test_render_matches_cli_format():
    assert simple_character(alg("osp:2:2"), wt("3|3")).render() == "E(3|3) - E(2|2) + E(1|1) - E(0|0)"


def test_expand_equals_sum_of_euler_characters():
    a = alg("osp:6:6")
    expr = simple_character_expr(a, wt("2,1,0|2,1,0"))
    direct = LaurentPoly.combination((c, euler_character(a, w)) for c, w in expr.terms)
    assert expand(expr) == direct


@pytest.mark.parametrize(
    "spec,text,dim",
    [
        ("osp:3:2", "1|0", 5),
        ("osp:4:2", "1,0|0", 6),
        ("osp:5:2", "1,0|0", 7),
        ("osp:5:4", "1,0|0,0", 9),
        ("osp:6:4", "1,0,0|0,0", 10),
        ("osp:7:2", "1,0,0|0", 9),
        ("osp:3:4", "0|1,0", 7),
        ("osp:4:4", "0,0|1,0", 8),
        ("osp:6:6", "0,0,0|1,0,0", 12),
    ],
)
def test_standard_module_dimension(spec, text, dim):
    a = alg(spec)
    assert dimension_eval(simple_character(a, lam(a, text), "laurent")) == dim


@pytest.mark.parametrize(
    "spec,text,dim",
    [
        ("osp:4:2", "1,0|1", 17),
        ("osp:5:2", "1,1|0", 23),
        ("osp:7:2", "1,1,0|0", 38),
        ("osp:3:4", "0|2,0", 25),
        ("osp:5:4", "1,0|1,0", 40),
        ("osp:6:4", "1,0,0|1,0", 49),
        ("osp:4:4", "0,0|2,0", 32),
        ("osp:6:6", "0,0,0|2,0,0", 72),
    ],
)
def test_adjoint_module_dimension(spec, text, dim):
    a = alg(spec)
    assert dimension_eval(simple_character(a, lam(a, text), "laurent")) == dim


@pytest.mark.parametrize(
    "spec,text,dim",
    [("osp:4:2", "2,0|0", 18), ("osp:5:2", "2,0|0", 25), ("osp:6:4", "2,0,0|0,0", 50), ("osp:7:2", "2,0,0|0", 42), ("osp:5:4", "2,0|0,0", 40)],
)
def test_symmetric_square_minus_trivial(spec, text, dim):
    a = alg(spec)
    assert dimension_eval(simple_character(a, lam(a, text), "laurent")) == dim


def test_sigma_flip_conjugates_characters():
    a = alg("osp:4:4")
    w = wt("2,-1|2,1")
    ch = simple_character(a, w, "laurent")
    ch_flip = simple_character(a, wt("2,1|2,1"), "laurent")
    flip = lambda v: v[:1] + (-v[1],) + v[2:]
    assert ch == ch_flip.map_exponents(flip)


def test_typical_weight_rejected():
    with pytest.raises(NotDominant):
        simple_character(alg("osp:4:2"), wt("2,0|1"))


def test_gl_has_no_character_expansion():
    with pytest.raises(WrongFamily):
        euler_character(alg("gl:1:1"), wt("0|0"))


def test_weyl_budget():
    a = alg("osp:12:12")
    with pytest.raises(TooLarge):
        euler_even_decomposition(a, wt("0,0,0,0,0,0|0,0,0,0,0,0"))


def test_random_weyl_elements_fix_simple_character():
    a = alg("osp:4:2")
    ch = simple_character(a, wt("3,0|3"), "laurent")
    gens = simple_reflections(a)
    rng = random.Random(7)
    for _ in range(10):
        v = ch
        for s in rng.choices(gens, k=6):
            v = v.map_exponents(s.apply)
        assert v == ch
