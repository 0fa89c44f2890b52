"""Simple undirected graphs and the move semantics of the guard game.

Configurations are plain ``frozenset`` objects of vertex ids and defense
functions are ``dict`` objects mapping each occupied vertex to its target.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import kernel
from .errors import (
    DefenseError,
    DisconnectedGraph,
    EdgeNotProtected,
    GraphConstructionError,
    IllegalMove,
    LimitExceeded,
    NotInjective,
)

Edge = tuple[int, int]
Configuration = frozenset
DefenseFunction = dict

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edge_index

    def closed_neighborhood(self, v: int) -> frozenset:
        return frozenset(self.adjacency[v]) | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(
            (1 << v) | sum(1 << u for u in self.adjacency[v]) for v in range(self.n)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a simple graph on vertices ``0..n-1``.

    Edge order is preserved so that edge indices are reproducible.
    """
    if n < 0:
        raise GraphConstructionError(f"negative vertex count {n}")
    edges: list[Edge] = []
    seen: set[frozenset] = set()
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for raw in edge_list:
        u, v = (int(x) for x in raw)
        pair = (u, v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"endpoint out of range in {pair}", pair)
        if u == v:
            raise GraphConstructionError(f"self-loop {pair}", pair)
        key = frozenset(pair)
        if key in seen:
            raise GraphConstructionError(f"duplicate edge {pair}", pair)
        seen.add(key)
        edges.append(pair)
        neighbors[u].append(v)
        neighbors[v].append(u)
    return Graph(n, tuple(edges), tuple(tuple(sorted(nb)) for nb in neighbors))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"{g!r} is not connected")


def is_vertex_cover(g: Graph, c: Iterable[int]) -> bool:
    occupied = c if isinstance(c, (set, frozenset)) else set(c)
    return all(u in occupied or v in occupied for u, v in g.edges)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def apply_defense(
    g: Graph, c: Iterable[int], d: Mapping[int, int], a: Sequence[int]
) -> frozenset:
    """Apply the simultaneous guard move ``d`` in answer to attack ``a``.

    Raises a ``DefenseError`` subclass unless ``d`` is injective, every guard
    stays inside its closed neighborhood, and some guard crosses ``a``.
    """
    occupied = frozenset(c)
    v, w = a
    if not g.has_edge(v, w):
        raise DefenseError(f"attack {tuple(a)} is not an edge")
    if set(d) != occupied:
        raise DefenseError("defense function domain differs from the configuration")
    for u, target in d.items():
        if target != u and not g.has_edge(u, target):
            raise IllegalMove(u, target)
    image = frozenset(d.values())
    if len(image) != len(occupied):
        raise NotInjective("two guards land on the same vertex")
    if d.get(v) != w and d.get(w) != v:
        raise EdgeNotProtected(f"no guard crosses {tuple(a)}")
    return image


def swap_defense(c: Iterable[int], a: Sequence[int]) -> dict[int, int]:
    """Identity move except that the guards on both ends of ``a`` trade places."""
    v, w = a
    moves = {u: u for u in c}
    moves[v], moves[w] = w, v
    return moves


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise LimitExceeded(f"{g.n} vertices exceeds the brute-force limit {limit}")


def vertex_covers_by_size(g: Graph, k: int, limit: int = BRUTE_FORCE_LIMIT) -> list[frozenset]:
    _check_limit(g, limit)
    return [vertices_of(m) for m in kernel.vertex_covers(g.n, g.edges, k)]


def min_vertex_covers_bruteforce(
    g: Graph, limit: int = BRUTE_FORCE_LIMIT
) -> tuple[int, list[frozenset]]:
    """Return the vertex cover number and every minimum vertex cover.

    Subsets are enumerated by increasing size, so the work is bounded by the
    number of subsets up to the answer rather than by ``2**n``.
    """
    _check_limit(g, limit)
    for k in range(g.n + 1):
        masks = kernel.vertex_covers(g.n, g.edges, k)
        if masks:
            return k, [vertices_of(m) for m in masks]
    raise AssertionError("the full vertex set is always a cover")


def bipartition(g: Graph) -> tuple[frozenset, frozenset] | None:
    require_connected(g)
    if g.n == 0:
        return frozenset(), frozenset()
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if color[u] < 0:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    return side_a, frozenset(range(g.n)) - side_a


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# Edge-list text format -----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: optional ``n <count>`` header, ``#`` comments."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    seen_content = False
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if fields[0] == "n":
            if seen_content or len(fields) != 2:
                raise GraphConstructionError(f"line {lineno}: misplaced header")
            n = _parse_int(fields[1], lineno)
            seen_content = True
            continue
        if len(fields) != 2:
            raise GraphConstructionError(f"line {lineno}: expected two vertex ids")
        pairs.append((_parse_int(fields[0], lineno), _parse_int(fields[1], lineno)))
        seen_content = True
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return build_graph(n, pairs)


def _parse_int(field: str, lineno: int) -> int:
    if not field.isdigit():
        raise GraphConstructionError(f"line {lineno}: bad vertex id {field!r}")
    return int(field)


def format_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"n {g.n}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8")
