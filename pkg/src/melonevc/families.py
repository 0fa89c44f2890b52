"""Generators for melon graphs and the G_k separation family.

Every generator builds its graph by realizing an SP expression, so the
structural view (expression) and the game view (graph) share one numbering.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import TwoUnitPaths
from .graph import Graph
from .sp import LEAF, MelonStructure, Parallel, Series, SPTree, realize


def series_chain(length: int) -> SPTree:
    """Right-nested series chain of ``length`` edges."""
    if length < 1:
        raise ValueError(f"path length must be positive, got {length}")
    tree: SPTree = LEAF
    for _ in range(length - 1):
        tree = Series(LEAF, tree)
    return tree


def parallel_of(parts: Sequence[SPTree]) -> SPTree:
    if not parts:
        raise ValueError("parallel composition needs at least one part")
    tree = parts[-1]
    for part in reversed(parts[:-1]):
        tree = Parallel(part, tree)
    return tree


def ordered_lengths(lengths: Sequence[int]) -> list[int]:
    """Sort by length; Python's stable sort keeps input order among ties."""
    return sorted(lengths)


def melon_expression(lengths: Sequence[int]) -> SPTree:
    lengths = list(lengths)
    if not lengths:
        raise ValueError("a melon needs at least one path")
    if any(length < 1 for length in lengths):
        raise ValueError(f"path lengths must be positive: {lengths}")
    if lengths.count(1) > 1:
        raise TwoUnitPaths("two paths of length 1 would form a multi-edge")
    return parallel_of([series_chain(length) for length in ordered_lengths(lengths)])


def melon_graph(lengths: Sequence[int]) -> tuple[Graph, MelonStructure]:
    """Melon with source 0, sink 1 and paths numbered in (length, position) order."""
    g, s, t = realize(melon_expression(lengths))
    paths = []
    next_id = 2
    for length in ordered_lengths(lengths):
        inner = tuple(range(next_id, next_id + length - 1))
        next_id += length - 1
        paths.append((s, *inner, t))
    return g, MelonStructure(s, t, tuple(paths))


def path_melon(n: int) -> tuple[Graph, MelonStructure]:
    return melon_graph([n - 1])


# G_k -----------------------------------------------------------------------


class GkInstance(NamedTuple):
    graph: Graph
    expected_vc: int
    evc_lower_bound: int


def _hub_block(k: int) -> SPTree:
    # K_{2,k+3}: k+3 parallel paths of length 2
    return parallel_of([series_chain(2)] * (k + 3))


def gk_expression(k: int) -> SPTree:
    if k < 2:
        raise ValueError(f"G_k is defined for k >= 2, got {k}")
    primed = Series(LEAF, Series(LEAF, _hub_block(k)))
    return parallel_of([primed] * k + [_hub_block(k)])


def gk_vertex_count(k: int) -> int:
    return 2 + (k + 3) + k * (k + 5)


def gk_hubs(k: int) -> tuple[int, ...]:
    """Vertex ids of the sources s_1..s_k of the inner K_{2,k+3} blocks.

    Copy ``i`` occupies ids ``2 + i*(k+5)`` onward: the 2-path midpoint first,
    then its hub, then the k+3 block midpoints.
    """
    return tuple(2 + i * (k + 5) + 1 for i in range(k))


def g_k(k: int) -> GkInstance:
    g, _, _ = realize(gk_expression(k))
    return GkInstance(g, k + 2, 2 * k + 2)


def sp_expression_of(obj: MelonStructure | GkInstance) -> SPTree:
    """SP expression whose realization reproduces a generated graph exactly."""
    if isinstance(obj, GkInstance):
        return gk_expression(obj.expected_vc - 2)
    if isinstance(obj, MelonStructure):
        return melon_expression(obj.lengths)
    raise TypeError(f"cannot express {type(obj).__name__}")
