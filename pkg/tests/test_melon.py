from __future__ import annotations

import itertools

import pytest

from melonevc.errors import (
    CaseMismatch,
    ConfigurationNotInClass,
    EvenLengthPath,
    TwoUnitPaths,
)
from melonevc.families import melon_expression, melon_graph
from melonevc.graph import apply_defense, is_vertex_cover, min_vertex_covers_bruteforce
from melonevc.melon import (
    CaseTag,
    CycleClass,
    OddClass,
    any_class,
    classify,
    evc_melon,
    matching_through_edge,
    odd_path_matchings,
    path_class,
    respond,
    shift_along,
    strategy_class,
    vc_melon,
)
from melonevc.oracle import verify_class
from melonevc.sp import vc_sp


def small_length_lists(max_k=6, max_len=6, max_n=14):
    for k in range(1, max_k + 1):
        for lengths in itertools.combinations_with_replacement(range(1, max_len + 1), k):
            if lengths.count(1) > 1 or 2 + sum(x - 1 for x in lengths) > max_n:
                continue
            yield list(lengths)


@pytest.mark.parametrize(
    "lengths, tag",
    [
        ([3, 3, 3], CaseTag.ODD),
        ([2, 2, 3], CaseTag.MIXED_ONE_ODD),
        ([2, 4], CaseTag.CYCLE),
        ([2, 2, 2], CaseTag.EVEN),
        ([2, 3, 3], CaseTag.MIXED_ONE_EVEN),
        ([2, 2, 3, 3], CaseTag.MIXED_BOTH),
        ([1], CaseTag.SINGLE_EDGE),
        ([4], CaseTag.PATH),
    ],
)
def test_classify_examples(lengths, tag):
    assert classify(melon_graph(lengths)[1]) is tag


def test_classify_is_total():
    for lengths in small_length_lists(max_k=6, max_len=6, max_n=40):
        assert isinstance(classify(melon_graph(lengths)[1]), CaseTag)


@pytest.mark.parametrize(
    "lengths, vc, evc",
    [
        ([3, 3, 3], 4, 4),
        ([2, 2, 2], 2, 3),
        ([2, 3, 3], 4, 4),
        ([2, 2, 3], 3, 4),
        ([2, 2, 3, 3], 4, 5),
        ([3], 2, 3),
        ([1], 1, 1),
    ],
)
def test_evc_examples(lengths, vc, evc):
    r = evc_melon(melon_graph(lengths)[1])
    assert (r.vc, r.evc) == (vc, evc)


def test_vc_closed_form_matches_dp_and_brute_force():
    for lengths in small_length_lists(max_n=12):
        g, m = melon_graph(lengths)
        expected = min_vertex_covers_bruteforce(g)[0]
        assert vc_melon(m) == vc_sp(melon_expression(lengths)) == expected, lengths


def test_evc_result_bounds():
    for lengths in small_length_lists():
        r = evc_melon(melon_graph(lengths)[1])
        assert r.vc <= r.evc <= 2 * r.vc
        if len(lengths) >= 2:
            assert r.evc - r.vc in (0, 1)


def test_odd_path_matchings_examples():
    mm = odd_path_matchings((0, 2, 3, 1))
    assert set(mm.perfect) == {(0, 2), (3, 1)} and set(mm.imperfect) == {(2, 3)}
    mm = odd_path_matchings((0, 1))
    assert mm.perfect == ((0, 1),) and mm.imperfect == ()
    path = tuple(range(6))
    mm = odd_path_matchings(path)
    assert len(mm.perfect) == 3 and len(mm.imperfect) == 2
    assert set(mm.perfect) | set(mm.imperfect) == set(zip(path, path[1:]))
    assert not set(mm.perfect) & set(mm.imperfect)
    with pytest.raises(EvenLengthPath):
        odd_path_matchings((0, 2, 1))


@pytest.mark.parametrize("length", [1, 3, 5, 7, 9])
def test_matching_cardinalities(length):
    path = tuple(range(length + 1))
    mm = odd_path_matchings(path)
    assert len(mm.perfect) == (length + 1) // 2
    assert len(mm.imperfect) == (length - 1) // 2
    covered = {v for e in mm.perfect for v in e}
    assert covered == set(path)
    assert not {v for e in mm.imperfect for v in e} & {path[0], path[-1]}


def test_matching_through_edge_examples():
    _, m = melon_graph([3, 3, 3])
    assert matching_through_edge(m, (0, 2)) == {(0, 2), (3, 1), (4, 5), (6, 7)}
    assert matching_through_edge(m, (2, 3)) == {(2, 3), (0, 4), (5, 1), (6, 7)}
    _, m = melon_graph([3, 3])
    assert matching_through_edge(m, (0, 2)) == {(0, 2), (3, 1), (4, 5)}
    with pytest.raises(CaseMismatch):
        matching_through_edge(melon_graph([2, 2, 2])[1], (0, 2))


def test_strategy_class_examples():
    g, m = melon_graph([2, 2, 2])
    sc = strategy_class(m, g)
    assert sc.configurations() == [frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({0, 1, 4})]
    g, m = melon_graph([3, 3, 3])
    assert strategy_class(m, g).configurations() == [frozenset({0, 3, 5, 7}), frozenset({1, 2, 4, 6})]
    g, m = melon_graph([2, 3, 3])
    assert len(strategy_class(m, g)) == 4
    with pytest.raises(CaseMismatch):
        strategy_class(melon_graph([4])[1])
    assert len(path_class(melon_graph([4])[1])) == 5


def test_class_validity_and_size():
    for lengths in small_length_lists(max_n=12):
        g, m = melon_graph(lengths)
        sc = any_class(m, g)
        r = evc_melon(m)
        configs = sc.configurations()
        assert len(configs) == len(set(configs)) == r.class_size, lengths
        for c in configs:
            assert len(c) == r.evc and is_vertex_cover(g, c), (lengths, sorted(c))


def test_respond_examples():
    g, m = melon_graph([3, 3, 3])
    sc = strategy_class(m, g)
    moves = respond(sc, {0, 3, 5, 7}, (0, 2))
    assert moves == {0: 2, 3: 1, 5: 4, 7: 6}
    assert apply_defense(g, {0, 3, 5, 7}, moves, (0, 2)) == frozenset({1, 2, 4, 6})

    g, m = melon_graph([2, 2, 2])
    sc = strategy_class(m, g)
    moves = respond(sc, {0, 1, 2}, (0, 3))
    assert moves == {0: 3, 2: 0, 1: 1}
    assert apply_defense(g, {0, 1, 2}, moves, (0, 3)) == frozenset({0, 1, 3})
    assert respond(sc, {0, 1, 2}, (0, 2)) == {0: 2, 2: 0, 1: 1}
    with pytest.raises(ConfigurationNotInClass):
        respond(sc, {2, 3, 4}, (0, 2))


def test_mixed_one_odd_forward_attack_switches_even_path():
    g, m = melon_graph([2, 2, 3])
    sc = strategy_class(m, g)
    c = sc.config(("s", 0))
    odd = m.paths[m.odd[0]]
    # the odd path's first guard is on its s-side end; push it toward t
    z, w = odd[0], odd[1]
    assert z in c and w not in c
    image = apply_defense(g, c, sc.respond(c, (z, w)), (z, w))
    assert sc.label_of(image) == ("t", 1)


def test_double_guarded_attack_is_a_swap():
    g, m = melon_graph([2, 2, 3, 3])
    sc = strategy_class(m, g)
    for c in sc.configurations():
        for v, w in g.edges:
            if v in c and w in c:
                moves = sc.respond(c, (v, w))
                assert moves[v] == w and moves[w] == v
                assert all(moves[u] == u for u in c - {v, w})


@pytest.mark.parametrize(
    "lengths",
    [[2, 2, 2], [3, 3, 3], [2, 3, 3], [2, 2, 3], [2, 2, 3, 3], [4, 4], [3, 4], [5], [1], [1, 3, 5]],
)
def test_closure_examples(lengths):
    g, m = melon_graph(lengths)
    report = verify_class(g, any_class(m, g))
    assert report.ok, report.failures[:3]


def test_even_cycle_bipartition_class_agrees_with_cycle_class():
    for lengths in ([1, 3], [3, 3], [3, 5], [1, 5]):
        g, m = melon_graph(lengths)
        cycle = CycleClass(m, g)
        odd = OddClass(m, g)
        assert set(cycle.configurations()) == set(odd.configurations())
        assert verify_class(g, odd).ok


def test_shift_along_reaches_target():
    # guards 0 and 2 on a 4-cycle both step forward
    walk = ((0, 1, 2, 3), True)
    assert shift_along([walk], {0, 2}, {1, 3}) == {0: 1, 2: 3}


def test_two_unit_paths_rejected():
    with pytest.raises(TwoUnitPaths):
        melon_graph([1, 1, 2])
