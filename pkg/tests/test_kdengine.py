from collections import Counter

import pytest
from hypothesis import given, strategies as st

from conftest import alg, lam, wt
from superchar.diagrams import Cell, canonical_diagram, parse_diagram
from superchar.errors import NonCanonical, WrongFamily
from superchar.kdengine import (
    ancestors_of,
    block_for_weight,
    block_report,
    compose_check,
    d_entry,
    d_matrix,
    decreasing_paths,
    increasing_paths,
    invert_unitriangular,
    k_entry,
    k_entry_regular,
    k_entry_strong,
    k_matrix,
    k_poly_level,
    universe,
)
from superchar.poly import ZPoly
from superchar.rootdata import Family
from superchar.verify import maximal_diagrams

EXAMPLE_K = [[1, 0, 0, 0], [2, 1, 0, 0], [0, 1, 1, 0], [-2, -1, 2, 1]]
EXAMPLE_D = [[1, 0, 0, 0], [-2, 1, 0, 0], [2, -1, 1, 0], [-4, 3, -2, 1]]


@pytest.fixture(scope="module")
def example():
    block, f, negative = block_for_weight(alg("osp:6:6"), wt("2,1,0|2,1,0"))
    assert not negative
    return block


class TestExampleBlock:
    def test_members(self, example):
        assert example.labels() == ["2,1,0|2,1,0", "2,0,0|2,0,0", "1,0,0|1,0,0", "0,0,0|0,0,0"]

    def test_edges(self, example):
        names = dict(zip(example.members, "λμνκ"))
        got = Counter((names[e.source], names[e.target], e.move.label()) for e in example.edges)
        assert got == Counter(
            [
                ("κ", "ν", "(0,1;0)"),
                ("κ", "ν", "(0,1;4)"),
                ("κ", "μ", "(0,2;3)"),
                ("ν", "μ", "(1,2;0)"),
                ("ν", "λ", "(0,2;1)"),
                ("ν", "λ", "(0,2;3)"),
                ("μ", "λ", "(0,1;0)"),
                ("μ", "λ", "(0,1;2)"),
            ]
        )

    def test_matrices(self, example):
        assert k_matrix(example).rows == EXAMPLE_K
        assert d_matrix(example).rows == EXAMPLE_D

    def test_entries(self, example):
        l, m, n, k = example.members
        assert k_entry(example, l, k) == -2
        assert k_entry(example, l, l) == 1
        assert k_entry(example, l, n) == 0
        assert k_entry_regular(example, n, k) == 2
        assert d_entry(example, l, k) == -4

    def test_levels(self, example):
        l, m, n, k = example.members
        assert k_poly_level(example, 2, l, m) == ZPoly.parse("1+z^2")
        assert k_poly_level(example, 1, l, n) == ZPoly.parse("z+z^3")
        assert k_poly_level(example, 1, l, l) == 1

    def test_paths(self, example):
        l, m, n, k = example.members
        # two direct edges plus nu -> mu -> lambda, whose ends run 2 then 1
        assert len(decreasing_paths(example, n, l)) == 4
        assert len(decreasing_paths(example, k, l)) == 2
        assert all(len(p) == 1 for p in increasing_paths(example, n, l))

    def test_report(self, example):
        report = block_report(example)
        assert report["K"] == EXAMPLE_K and report["D"] == EXAMPLE_D
        assert len(report["edges"]) == 8


class TestSmallBlocks:
    def test_osp22_chain(self):
        block, _, _ = block_for_weight(alg("osp:2:2"), wt("3|3"))
        assert [e.move.label() for e in sorted(block.edges, key=lambda e: e.move.end)] == ["(0,1;0)", "(1,2;0)", "(2,3;0)"]
        assert d_matrix(block).rows == [[(-1) ** (i + j) if i >= j else 0 for j in range(4)] for i in range(4)]

    def test_osp32_edges(self):
        a = alg("osp:3:2")
        block, _, _ = block_for_weight(a, lam(a, "3|2"))
        got = sorted((block.weight(e.source).render(), block.weight(e.target).render(), e.move.label()) for e in block.edges)
        assert got == sorted(
            [
                ("-1/2|1/2", "1/2|1/2", "(0,1;1)"),
                ("-1/2|1/2", "3/2|3/2", "(0,2;0)"),
                ("1/2|1/2", "3/2|3/2", "(1,2;0)"),
                ("3/2|3/2", "5/2|5/2", "(2,3;0)"),
            ]
        )

    def test_trivial_block(self):
        a = alg("osp:4:4")
        block, f, _ = block_for_weight(a, wt("0,0|0,0"))
        assert block.members == [f]

    def test_negative_weight(self):
        block, f, negative = block_for_weight(alg("osp:4:4"), wt("3,-1|3,1"))
        assert negative and f in block

    def test_rejects_non_reduced(self):
        with pytest.raises(WrongFamily):
            ancestors_of(alg("osp:8:4"), parse_diagram(Family.OSP_EVEN, "2x"))

    def test_rejects_core(self):
        with pytest.raises(NonCanonical):
            ancestors_of(alg("osp:4:4"), parse_diagram(Family.OSP_EVEN, "x,>,x"))


def test_inversion_helper():
    rows = [[1, 0, 0], [2, 1, 0], [-1, 3, 1]]
    inv = invert_unitriangular(rows)
    n = len(rows)
    assert [[sum(rows[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)] == [
        [int(i == j) for j in range(n)] for i in range(n)
    ]


ALGEBRAS = ["osp:3:2", "osp:4:2", "osp:4:4", "osp:5:4", "osp:6:4", "osp:6:6"]


@st.composite
def blocks(draw):
    spec = draw(st.sampled_from(ALGEBRAS))
    members = maximal_diagrams(alg(spec), 5)
    f = draw(st.sampled_from(members))
    return ancestors_of(alg(spec), f)


class TestBlockInvariants:
    @given(blocks())
    def test_dk_is_identity(self, block):
        kmat = k_matrix(block)
        dmat = d_matrix(block, kmat)
        n = len(block)
        assert dmat @ kmat == [[int(i == j) for j in range(n)] for i in range(n)]

    @given(blocks())
    def test_order_and_content(self, block):
        first = block.members[0]
        for f in block.members:
            assert f.crosses == first.crosses and f.tail.core == first.tail.core
        for e in block.edges:
            assert block.index(e.source) > block.index(e.target)

    @given(blocks(), st.data())
    def test_evaluators_agree(self, block, data):
        top = block.members[0]
        mu = data.draw(st.sampled_from(block.members))
        value = k_entry(block, top, mu)
        assert k_entry_regular(block, top, mu) == value
        assert k_entry_strong(block, top, mu) == value
        assert compose_check(block, top, mu) == value

    @given(blocks())
    def test_first_level_matches_k_at_minus_one_for_single_cross(self, block):
        top = block.members[0]
        if len(top.nontail_crosses()) == 1:
            for mu in block.members:
                assert k_poly_level(block, 1, top, mu).at(-1) == k_entry(block, top, mu)


def test_universe_counts():
    a = alg("osp:6:6")
    zero = canonical_diagram(a, wt("0,0,0|0,0,0"))
    # three crosses spread over positions 0..3 with any number at the tail
    assert len(universe(a, Cell(zero.tail.gt, zero.tail.lt, 0), 3)) == 1 + 3 + 3 + 1
