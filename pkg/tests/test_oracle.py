from __future__ import annotations

import itertools
import random

import pytest

from melonevc.errors import LimitExceeded, SizeMismatch
from melonevc.families import melon_graph
from melonevc.graph import (
    apply_defense,
    build_graph,
    cycle_graph,
    min_vertex_covers_bruteforce,
    path_graph,
)
from melonevc.melon import ExplicitClass, strategy_class
from melonevc.oracle import (
    can_shift,
    evc_exact,
    find_shift,
    safe_set,
    safe_set_naive,
    verify_class,
    vertex_covers_of_size,
)


@pytest.fixture
def k23():
    return melon_graph([2, 2, 2])[0]


def test_vertex_covers_of_size_examples(k23):
    assert vertex_covers_of_size(cycle_graph(4), 2) == [frozenset({0, 2}), frozenset({1, 3})]
    assert vertex_covers_of_size(path_graph(2), 1) == [frozenset({0}), frozenset({1})]
    assert vertex_covers_of_size(k23, 2) == [frozenset({0, 1})]
    with pytest.raises(LimitExceeded):
        vertex_covers_of_size(path_graph(17), 16)


def test_can_shift_examples():
    g = cycle_graph(4)
    assert can_shift(g, {0, 2}, {1, 3}, (0, 1))
    assert not can_shift(g, {0, 2}, {0, 2}, (0, 1))
    assert can_shift(g, {0, 1, 2}, {0, 1, 2}, (0, 1))
    with pytest.raises(SizeMismatch):
        can_shift(g, {0, 2}, {0, 1, 2}, (0, 1))


def test_find_shift_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        g, _ = melon_graph(rng.choice([[2, 2, 2], [2, 3, 3], [3, 3, 3], [2, 2, 3]]))
        covers = vertex_covers_of_size(g, rng.randint(3, 5))
        for c, c2 in itertools.islice(itertools.product(covers, covers), 40):
            for a in g.edges:
                moves = find_shift(g, c, c2, a)
                assert (moves is not None) == can_shift(g, c, c2, a)
                if moves is not None:
                    assert apply_defense(g, c, moves, a) == c2


def test_safe_set_examples(k23):
    assert set(safe_set(cycle_graph(4), 2).configs) == {frozenset({0, 2}), frozenset({1, 3})}
    assert not safe_set(k23, 2)
    found = safe_set(k23, 3)
    assert {frozenset({0, 1, 2}), frozenset({0, 1, 3}), frozenset({0, 1, 4})} <= set(found.configs)


@pytest.mark.parametrize(
    "graph, evc",
    [
        (path_graph(4), 3),
        (cycle_graph(6), 3),
        (melon_graph([2, 2, 3])[0], 4),
        (path_graph(2), 1),
    ],
)
def test_evc_exact_examples(graph, evc):
    assert evc_exact(graph)[0] == evc


def test_path_on_four_vertices_needs_three():
    g = path_graph(4)
    assert not safe_set(g, 2)
    assert safe_set(g, 3)


def _random_connected(rng, n):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < 0.25:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


@pytest.mark.parametrize("seed", range(25))
def test_work_list_matches_naive_iteration(seed):
    rng = random.Random(seed)
    g = _random_connected(rng, rng.randint(2, 7))
    for k in range(1, g.n + 1):
        assert set(safe_set(g, k).configs) == set(safe_set_naive(g, k).configs)


@pytest.mark.parametrize("seed", range(25))
def test_monotone_and_bounded(seed):
    rng = random.Random(100 + seed)
    g = _random_connected(rng, rng.randint(2, 8))
    evc, witness = evc_exact(g)
    vc = min_vertex_covers_bruteforce(g)[0]
    assert vc <= evc <= 2 * vc
    assert all(len(c) == evc for c in witness.configs)
    for k in range(evc, g.n + 1):
        assert safe_set(g, k)


def test_safe_set_members_are_closed():
    g, _ = melon_graph([2, 3, 3])
    found = safe_set(g, 4)
    members = list(found.configs)
    for c in members:
        for a in g.edges:
            assert any(can_shift(g, c, c2, a) for c2 in members)


def test_verify_class_examples(k23):
    g, m = melon_graph([2, 2, 2])
    report = verify_class(g, strategy_class(m, g))
    assert report.ok and report.checked == 18
    g, m = melon_graph([3, 3, 3])
    report = verify_class(g, strategy_class(m, g))
    assert report.ok and report.checked == 18


def test_verify_class_rejects_minimum_cover_family(k23):
    report = verify_class(k23, ExplicitClass(k23, [{0, 1}]))
    assert not report.ok
    attacked = {a for _, a, _ in report.failures}
    # every edge of K_{2,3} lies on an even path, and each attack fails
    assert attacked == set(k23.edges)


def test_oracle_limit_override():
    g = path_graph(18)
    with pytest.raises(LimitExceeded):
        safe_set(g, 17)
    assert safe_set(g, 17, max_n=18)
