import itertools

import pytest
from hypothesis import assume, given, strategies as st

from conftest import alg, lam, wt
from superchar.diagrams import (
    Cell,
    WeightDiagram,
    bar_reduce,
    canonical_diagram,
    canonicalize_odd,
    decanonicalize,
    diagram_of,
    parse_diagram,
    tail_length,
    translation_step,
    weight_of_canonical,
    weights_of,
)
from superchar.errors import IllegalStep, MalformedDiagram, NotDominant, WrongFamily
from superchar.rootdata import ExtendedWeight, Family, atypicality, is_dominant, sigma_flip


def dominant_weights(spec, top):
    a = alg(spec)
    parity = a.parity
    values = [v for v in range(-top, top + 1) if v % 2 == parity]
    for a_part in itertools.product(values, repeat=a.m):
        for b_part in itertools.product(values, repeat=a.n):
            w = ExtendedWeight(a_part, b_part)
            if is_dominant(a, w):
                yield w


SMALL = ["osp:4:4", "osp:5:4", "osp:6:4", "osp:4:2", "osp:3:4", "gl:2:2", "gl:2:1"]


class TestExamples:
    def test_gl(self):
        f = diagram_of(alg("gl:3:3"), wt("4,3,0|1,0,-4"))
        assert f.render() == "<,x,0,0,>,x@-1"

    def test_even_with_core(self):
        assert diagram_of(alg("osp:6:4"), wt("2,0,0|3,0")).render() == "x>,0,>,<"

    def test_two_crosses_at_tail(self):
        f = diagram_of(alg("osp:6:6"), wt("1,0,0|1,0,0"))
        assert f.tail.cross == 2 and f.cell(1).cross == 1

    def test_two_weights_share_a_diagram(self):
        f = parse_diagram(Family.OSP_EVEN, "0,0,<,x,>")
        assert weights_of(alg("osp:4:4"), f) == [wt("4,3|3,2"), wt("4,-3|3,2")]

    def test_indicator_chooses_weight(self):
        a = alg("osp:5:4")
        assert weights_of(a, parse_diagram(Family.OSP_ODD, "(-)2x")) == [wt("-1/2,-1/2|1/2,1/2")]
        assert weights_of(a, parse_diagram(Family.OSP_ODD, "(+)2x")) == [wt("1/2,-1/2|1/2,1/2")]

    def test_not_dominant(self):
        with pytest.raises(NotDominant):
            diagram_of(alg("osp:6:6"), wt("1,2,0|2,1,0"))


class TestParse:
    @pytest.mark.parametrize("text", ["x>,0,>,<", "3x", "(-)2x,0,x", "0,0,<,x,>", "<,x,0,0,>,x@-1", "x<,0,x"])
    def test_round_trip(self, text):
        family = Family.GL if "@" in text else (Family.OSP_ODD if "<" in text.split(",")[0] or "(" in text else Family.OSP_EVEN)
        assert parse_diagram(family, text).render() == text

    def test_bad_cell(self):
        with pytest.raises(MalformedDiagram):
            parse_diagram(Family.OSP_EVEN, "x,y")

    def test_two_symbols_off_tail(self):
        with pytest.raises(MalformedDiagram):
            parse_diagram(Family.OSP_EVEN, "0,x>")

    def test_even_tail_has_no_lt(self):
        with pytest.raises(MalformedDiagram):
            parse_diagram(Family.OSP_EVEN, "x<")


class TestRoundTrip:
    @pytest.mark.parametrize("spec", SMALL)
    def test_weights_of_diagram(self, spec):
        a = alg(spec)
        for w in dominant_weights(spec, 6):
            f = diagram_of(a, w)
            assert w in weights_of(a, f)
            assert f.crosses == atypicality(a, w)[0]

    @pytest.mark.parametrize("spec", ["osp:4:4", "osp:6:4"])
    def test_sigma_shares_diagram(self, spec):
        a = alg(spec)
        for w in dominant_weights(spec, 6):
            assert diagram_of(a, sigma_flip(a, w)) == diagram_of(a, w)


class TestTranslation:
    def test_gl_exchange(self):
        f = parse_diagram(Family.GL, "<,x@0")
        assert translation_step(f, 0, 1).render() == "x,<@0"

    def test_odd_leaves_tail(self):
        f = parse_diagram(Family.OSP_ODD, "x<,0")
        assert translation_step(f, 0, 1).render() == "(-)x,<"

    def test_odd_returns_to_tail(self):
        f = parse_diagram(Family.OSP_ODD, "(+)x,<,0")
        assert translation_step(f, 1, -1).render() == "<,x"

    def test_blocked(self):
        f = parse_diagram(Family.GL, "<,>@0")
        with pytest.raises(IllegalStep):
            translation_step(f, 0, 1)

    def test_even_tail_ban(self):
        f = parse_diagram(Family.OSP_EVEN, "0,>,x")
        with pytest.raises(IllegalStep):
            translation_step(f, 1, -1)


class TestBarReduce:
    def test_gl_example(self):
        small, w = bar_reduce(alg("gl:3:3"), wt("4,3,0|1,0,-4"))
        assert small == alg("gl:2:2")
        assert diagram_of(small, w).render() == "x,0,0,x@-1"

    def test_even_example(self):
        small, w = bar_reduce(alg("osp:4:4"), wt("4,3|3,2"))
        assert small == alg("osp:2:2")
        assert diagram_of(small, w).render() == "0,0,x"

    def test_zero_mark_keeps_tail_symbol(self):
        small, w = bar_reduce(alg("osp:6:4"), wt("2,0,0|3,0"))
        assert small == alg("osp:4:2")
        assert diagram_of(small, w).render() == "x>"

    @pytest.mark.parametrize("spec", SMALL)
    def test_output_is_reduced(self, spec):
        a = alg(spec)
        for w in dominant_weights(spec, 6):
            if atypicality(a, w)[0] == 0:
                with pytest.raises(NotDominant):
                    bar_reduce(a, w)
                continue
            small, wb = bar_reduce(a, w)
            assert is_dominant(small, wb)
            f = diagram_of(small, wb)
            assert not any(c.core for c in f.cells[1:] if f.family is not Family.GL)
            assert f.crosses == atypicality(a, w)[0]
            if f.family is Family.GL:
                assert not any(c.core for c in f.cells)

    @given(st.lists(st.integers(-4, 4), min_size=4, max_size=4))
    def test_gl_shift_covariance(self, xs):
        a = alg("gl:2:2")
        w = ExtendedWeight(tuple(sorted((2 * x for x in xs[:2]), reverse=True)), tuple(sorted((2 * x for x in xs[2:]), reverse=True)))
        assume(is_dominant(a, w))
        f = diagram_of(a, w)
        g = diagram_of(a, w + ExtendedWeight((2, 2), (-2, -2)))
        assert g.cells == f.cells and g.offset == f.offset + 1


class TestOddCanonical:
    def test_trivial_weight(self):
        a = alg("osp:3:2")
        zero = lam(a, "0|0")
        assert diagram_of(a, zero).render() == "(-)x"
        assert canonical_diagram(a, zero).render() == "x<"

    def test_eps1(self):
        a = alg("osp:3:2")
        assert canonical_diagram(a, lam(a, "1|0")).render() == "<,x"

    @pytest.mark.parametrize("text", ["(-)x", "(+)x", "(-)2x,0,x", "(+)2x,x", "0,x,x", "(+)x,0,x"])
    def test_inverse(self, text):
        f = parse_diagram(Family.OSP_ODD, text)
        assert decanonicalize(canonicalize_odd(f)) == f

    def test_rejects_even(self):
        with pytest.raises(WrongFamily):
            canonicalize_odd(parse_diagram(Family.OSP_EVEN, "2x"))

    def test_weight_of_canonical(self):
        a = alg("osp:5:4")
        for w in dominant_weights("osp:5:4", 7):
            try:
                f = canonical_diagram(a, w)
            except NotDominant:
                continue
            assert weight_of_canonical(a, f) == w


class TestTailLength:
    def test_trivial(self):
        assert tail_length(alg("osp:6:6"), wt("0,0,0|0,0,0")) == 3

    def test_indicator_plus(self):
        assert tail_length(alg("osp:5:4"), wt("1/2,-1/2|1/2,1/2")) == 1
        assert tail_length(alg("osp:5:4"), wt("-1/2,-1/2|1/2,1/2")) == 2


def test_cell_validation():
    with pytest.raises(MalformedDiagram):
        WeightDiagram(Family.OSP_EVEN, (Cell(), Cell(1, 1, 0)))
