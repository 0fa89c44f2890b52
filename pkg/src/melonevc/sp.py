"""Two-terminal series-parallel expressions and melon recognition.

Expressions use the grammar ``e | S(x,y) | P(x,y)``. A realized graph has
source 0 and sink 1; every series node allocates its junction vertex before
its children are visited (pre-order), so right-nested series chains number
their internal vertices in source-to-sink order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import MultiEdge, SPSyntaxError
from .graph import Graph, build_graph, require_connected


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "e"


@dataclass(frozen=True)
class Series:
    left: "SPTree"
    right: "SPTree"

    def __str__(self) -> str:
        return f"S({self.left},{self.right})"


@dataclass(frozen=True)
class Parallel:
    left: "SPTree"
    right: "SPTree"

    def __str__(self) -> str:
        return f"P({self.left},{self.right})"


SPTree = Union[Leaf, Series, Parallel]

LEAF = Leaf()


@dataclass(frozen=True)
class CanonicalSPTree:
    """Series/parallel tree with n-ary nodes and no same-kind parent/child pair."""

    kind: str  # "leaf", "series" or "parallel"
    children: tuple["CanonicalSPTree", ...] = ()

    def __str__(self) -> str:
        if self.kind == "leaf":
            return "e"
        name = "Series" if self.kind == "series" else "Parallel"
        return f"{name}[{','.join(map(str, self.children))}]"


# Parsing -------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> SPSyntaxError:
        # offsets are reported 1-based
        return SPSyntaxError(message, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error(f"expected {ch!r}, got end of input")
        if self.text[self.pos] != ch:
            raise self.error(f"expected {ch!r}, got {self.text[self.pos]!r}")
        self.pos += 1

    def expr(self) -> SPTree:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "e":
            self.pos += 1
            return LEAF
        if ch in "SP":
            self.pos += 1
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Series(left, right) if ch == "S" else Parallel(left, right)
        raise self.error(f"unexpected {ch!r}")


def parse_sp(text: str) -> SPTree:
    parser = _Parser(text)
    tree = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input")
    return tree


def format_sp(sp: SPTree) -> str:
    return str(sp)


def leaf_count(sp: SPTree) -> int:
    if isinstance(sp, Leaf):
        return 1
    return leaf_count(sp.left) + leaf_count(sp.right)


# Realization ---------------------------------------------------------------


def realize(sp: SPTree) -> tuple[Graph, int, int]:
    edges: list[tuple[int, int]] = []
    next_id = 2

    def build(node: SPTree, s: int, t: int) -> None:
        nonlocal next_id
        if isinstance(node, Leaf):
            edges.append((s, t))
        elif isinstance(node, Series):
            mid = next_id
            next_id += 1
            build(node.left, s, mid)
            build(node.right, mid, t)
        else:
            build(node.left, s, t)
            build(node.right, s, t)

    build(sp, 0, 1)
    seen: set[frozenset] = set()
    for u, v in edges:
        key = frozenset((u, v))
        if key in seen:
            raise MultiEdge(f"parallel composition duplicates edge {(u, v)}")
        seen.add(key)
    return build_graph(next_id, edges), 0, 1


# Canonical form and alternations -------------------------------------------


def canonicalize(sp: SPTree) -> CanonicalSPTree:
    if isinstance(sp, Leaf):
        return CanonicalSPTree("leaf")
    kind = "series" if isinstance(sp, Series) else "parallel"
    children: list[CanonicalSPTree] = []
    for part in (sp.left, sp.right):
        sub = canonicalize(part)
        if sub.kind == kind:
            children.extend(sub.children)
        else:
            children.append(sub)
    return CanonicalSPTree(kind, tuple(children))


def alt(sp: SPTree | CanonicalSPTree) -> int:
    """Most series/parallel alternations on a root-to-leaf path of the canonical tree."""
    tree = sp if isinstance(sp, CanonicalSPTree) else canonicalize(sp)

    # Adjacent internal nodes of a canonical tree always differ in kind, so
    # the count is the internal depth minus one.
    def internal_depth(node: CanonicalSPTree) -> int:
        if node.kind == "leaf":
            return 0
        return 1 + max(internal_depth(ch) for ch in node.children)

    return max(internal_depth(tree) - 1, 0)


# Vertex cover DP -----------------------------------------------------------

_INF = math.inf


def _vc_table(node: SPTree) -> dict[tuple[int, int], float]:
    """Minimum cover size keyed by (source in cover, sink in cover)."""
    if isinstance(node, Leaf):
        return {(0, 0): _INF, (0, 1): 1, (1, 0): 1, (1, 1): 2}
    left = _vc_table(node.left)
    right = _vc_table(node.right)
    states = [(a, b) for a in (0, 1) for b in (0, 1)]
    if isinstance(node, Series):
        return {
            (a, b): min(left[a, c] + right[c, b] - c for c in (0, 1)) for a, b in states
        }
    return {(a, b): left[a, b] + right[a, b] - a - b for a, b in states}


def vc_sp(sp: SPTree) -> int:
    realize(sp)
    return int(min(_vc_table(sp).values()))


# Melon structure -----------------------------------------------------------


@dataclass(frozen=True)
class MelonStructure:
    """Source, sink and the internally disjoint paths between them.

    Every path is a vertex tuple running from ``s`` to ``t``.
    """

    s: int
    t: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.paths)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def even(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.paths) if (len(p) - 1) % 2 == 0)

    @property
    def odd(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.paths) if (len(p) - 1) % 2 == 1)

    @property
    def n(self) -> int:
        return 2 + sum(len(p) - 2 for p in self.paths)

    def edges(self) -> list[tuple[int, int]]:
        return [(p[i], p[i + 1]) for p in self.paths for i in range(len(p) - 1)]

    def validate(self) -> None:
        seen: set[int] = set()
        units = 0
        for p in self.paths:
            if len(p) < 2 or p[0] != self.s or p[-1] != self.t:
                raise ValueError(f"path {p} does not run from {self.s} to {self.t}")
            units += len(p) == 2
            for v in p[1:-1]:
                if v in seen or v in (self.s, self.t):
                    raise ValueError(f"vertex {v} shared between paths")
                seen.add(v)
        if units > 1:
            raise ValueError("more than one path of length 1")


def _path_key(p: tuple[int, ...]) -> tuple[int, int]:
    return len(p) - 1, min(p[1:-1], default=-1)


def _walk(g: Graph, start: int, first: int, stop: set[int]) -> list[int]:
    """Follow degree-2 vertices from ``start`` through ``first`` until a stop vertex."""
    walk = [start, first]
    prev, cur = start, first
    while cur not in stop:
        if g.degree(cur) != 2:
            return []
        a, b = g.adjacency[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        walk.append(cur)
        if len(walk) > g.n + 1:
            return []
    return walk


def recognize_melon(g: Graph) -> MelonStructure | None:
    """Decompose a connected graph into a path, a cycle or a k-melon (k >= 3)."""
    require_connected(g)
    if g.n < 2:
        return None
    degrees = [g.degree(v) for v in range(g.n)]
    if g.m == g.n - 1 and max(degrees) <= 2:
        ends = [v for v in range(g.n) if degrees[v] == 1]
        s, t = min(ends), max(ends)
        walk = _walk(g, s, g.adjacency[s][0], {t}) if g.n > 2 else [s, t]
        return MelonStructure(s, t, (tuple(walk),))
    if g.m == g.n and all(d == 2 for d in degrees):
        s, t = 0, 1
        arcs = [tuple(_walk(g, s, u, {t})) for u in g.adjacency[s]]
        return MelonStructure(s, t, tuple(sorted(arcs, key=_path_key)))
    hubs = [v for v in range(g.n) if degrees[v] != 2]
    if len(hubs) != 2 or degrees[hubs[0]] != degrees[hubs[1]] or degrees[hubs[0]] < 3:
        return None
    s, t = hubs
    paths = []
    for u in g.adjacency[s]:
        walk = _walk(g, s, u, {s, t})
        if not walk or walk[-1] != t:
            return None
        paths.append(tuple(walk))
    structure = MelonStructure(s, t, tuple(sorted(paths, key=_path_key)))
    if structure.n != g.n:
        return None
    return structure
