from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from melonevc.errors import DisconnectedGraph, MultiEdge, SPSyntaxError
from melonevc.families import melon_expression, melon_graph
from melonevc.graph import build_graph, complete_graph, min_vertex_covers_bruteforce
from melonevc.sp import (
    LEAF,
    CanonicalSPTree,
    Leaf,
    Parallel,
    Series,
    alt,
    canonicalize,
    format_sp,
    leaf_count,
    parse_sp,
    realize,
    recognize_melon,
    vc_sp,
)

K23_TEXT = "P(S(e,e),P(S(e,e),S(e,e)))"


def test_parse_examples():
    assert parse_sp("e") == LEAF
    assert parse_sp("P(S(e,e),S(e,e))") == Parallel(Series(LEAF, LEAF), Series(LEAF, LEAF))
    assert parse_sp(" S( e , e ) ") == Series(LEAF, LEAF)


@pytest.mark.parametrize("text, offset", [("S(e", 4), ("", 1), ("e)", 2), ("X", 1), ("S(e;e)", 4)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(SPSyntaxError) as info:
        parse_sp(text)
    assert info.value.offset == offset


def test_format_round_trip():
    for text in ("e", "S(e,e)", K23_TEXT):
        assert format_sp(parse_sp(text)) == text
        assert parse_sp(format_sp(parse_sp(text))) == parse_sp(text)


def test_realize_examples():
    g, s, t = realize(parse_sp("S(e,e)"))
    assert (s, t) == (0, 1)
    assert set(g.edges) == {(0, 2), (2, 1)}
    g, _, _ = realize(parse_sp(K23_TEXT))
    assert {frozenset(e) for e in g.edges} == {
        frozenset(e) for e in [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]
    }
    with pytest.raises(MultiEdge):
        realize(parse_sp("P(e,e)"))


def test_realize_is_deterministic():
    a, _, _ = realize(parse_sp(K23_TEXT))
    b, _, _ = realize(parse_sp(K23_TEXT))
    assert a == b


def test_series_chain_numbering():
    g, _, _ = realize(parse_sp("S(e,S(e,S(e,e)))"))
    assert g.edges == ((0, 2), (2, 3), (3, 4), (4, 1))


def test_canonicalize_examples():
    assert str(canonicalize(parse_sp("S(S(e,e),e)"))) == "Series[e,e,e]"
    tree = canonicalize(parse_sp("P(S(e,e),S(e,e))"))
    series = CanonicalSPTree("series", (CanonicalSPTree("leaf"),) * 2)
    assert tree == CanonicalSPTree("parallel", (series, series))
    assert canonicalize(LEAF).kind == "leaf"


def test_alt_examples():
    assert alt(parse_sp("S(e,S(e,e))")) == 0
    assert alt(parse_sp("S(P(S(e,e),S(e,e)),P(S(e,e),S(e,e)))")) == 2
    assert alt(LEAF) == 0
    for lengths in ([2, 2], [1, 2, 3], [2, 4, 6], [5]):
        assert alt(melon_expression(lengths)) <= 1


def test_alt_is_decomposition_independent():
    # two associativity variants of the same series-parallel graph
    left = parse_sp("P(P(S(e,e),S(e,e)),S(e,e))")
    right = parse_sp("P(S(e,e),P(S(e,e),S(e,e)))")
    assert canonicalize(left) == canonicalize(right)
    assert alt(left) == alt(right) == 1


def test_vc_sp_examples():
    assert vc_sp(parse_sp(K23_TEXT)) == 2
    assert vc_sp(LEAF) == 1
    with pytest.raises(MultiEdge):
        vc_sp(parse_sp("P(e,e)"))


def sp_trees(max_leaves=8):
    def extend(children):
        return st.one_of(
            st.builds(Series, children, children),
            st.builds(Parallel, children, children),
        )

    return st.recursive(st.just(LEAF), extend, max_leaves=max_leaves).filter(
        lambda t: leaf_count(t) <= max_leaves
    )


@settings(max_examples=200, deadline=None)
@given(sp_trees())
def test_vc_sp_matches_brute_force(tree):
    try:
        g, _, _ = realize(tree)
    except MultiEdge:
        return
    assert vc_sp(tree) == min_vertex_covers_bruteforce(g)[0]


@settings(max_examples=100, deadline=None)
@given(sp_trees())
def test_parse_format_round_trip(tree):
    assert parse_sp(str(tree)) == tree
    assert isinstance(tree, (Leaf, Series, Parallel))


def test_recognize_examples():
    g, _, _ = realize(parse_sp(K23_TEXT))
    m = recognize_melon(g)
    assert (m.s, m.t, m.lengths) == (0, 1, (2, 2, 2))
    g, _, _ = realize(parse_sp("S(e,e)"))
    m = recognize_melon(g)
    assert m.lengths == (2,)
    assert recognize_melon(complete_graph(4)) is None
    with pytest.raises(DisconnectedGraph):
        recognize_melon(build_graph(4, [(0, 1), (2, 3)]))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=5).filter(lambda ls: ls.count(1) <= 1))
def test_recognize_recovers_lengths(lengths):
    if 2 + sum(length - 1 for length in lengths) > 14:
        return
    g, m = melon_graph(lengths)
    found = recognize_melon(g)
    assert found is not None
    assert sorted(found.lengths) == sorted(lengths)
    if len(lengths) != 2:
        assert found == m


def test_recognize_rejects_theta_with_extra_edge():
    g, _ = melon_graph([2, 3, 3])
    extra = build_graph(g.n, list(g.edges) + [(2, 3)])
    assert recognize_melon(extra) is None
