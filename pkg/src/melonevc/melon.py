"""Eternal vertex cover numbers and defense strategies for melon graphs.

Paths are stored source-to-sink. On an even path the *internal* pattern puts
guards on every other vertex including both terminals, and the *external*
pattern on the complementary vertices plus both terminals. On an odd path an
*anchored* pattern alternates guards starting from one terminal (the
``s``-path or ``t``-path pattern) and leaves the far terminal to the rest of
the configuration.

Almost every defense here rotates guards one step along a walk assembled
from two or three melon paths: a guard moves iff it must vacate its vertex
(it is not in the target configuration) or the guard behind it is moving in.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import (
    CaseMismatch,
    ConfigurationNotInClass,
    DefenseError,
    EvenLengthPath,
    StrategyError,
)
from .graph import Graph, apply_defense, bipartition, build_graph, swap_defense
from .sp import MelonStructure

Walk = tuple[tuple[int, ...], bool]  # (vertex sequence, closed?)


class CaseTag(str, enum.Enum):
    SINGLE_EDGE = "single_edge"
    PATH = "path"
    CYCLE = "cycle"
    ODD = "odd"
    EVEN = "even"
    MIXED_BOTH = "mixed_both"
    MIXED_ONE_ODD = "mixed_one_odd"
    MIXED_ONE_EVEN = "mixed_one_even"

    def __str__(self) -> str:
        return self.value


def classify(m: MelonStructure) -> CaseTag:
    if m.k == 1:
        return CaseTag.SINGLE_EDGE if m.lengths[0] == 1 else CaseTag.PATH
    if m.k == 2:
        return CaseTag.CYCLE
    n_odd, n_even = len(m.odd), len(m.even)
    if n_odd == 0:
        return CaseTag.EVEN
    if n_even == 0:
        return CaseTag.ODD
    if n_odd == 1:
        return CaseTag.MIXED_ONE_ODD
    if n_even == 1:
        return CaseTag.MIXED_ONE_EVEN
    return CaseTag.MIXED_BOTH


# Vertex cover number -------------------------------------------------------


def _interior_cover(length: int, s_in: int, t_in: int) -> float:
    """Fewest interior guards covering one path given the terminal states."""
    inner = length - 1
    if inner == 0:
        return 0 if (s_in or t_in) else float("inf")
    if s_in and t_in:
        return inner // 2
    if s_in or t_in:
        return (inner + 1) // 2
    return inner // 2 + 1


def vc_melon(m: MelonStructure) -> int:
    """Vertex cover number in linear time, optimizing over the terminal states."""
    return int(
        min(
            a + b + sum(_interior_cover(length, a, b) for length in m.lengths)
            for a in (0, 1)
            for b in (0, 1)
        )
    )


@dataclass(frozen=True)
class EvcResult:
    case: CaseTag
    vc: int
    evc: int
    class_size: int


def evc_melon(m: MelonStructure) -> EvcResult:
    case = classify(m)
    vc = vc_melon(m)
    n_odd, n_even = len(m.odd), len(m.even)
    if case in (CaseTag.SINGLE_EDGE, CaseTag.PATH):
        # a path on n vertices needs n - 1 guards
        evc, size = m.n - 1, m.n
    elif case is CaseTag.CYCLE:
        evc = (m.n + 1) // 2
        size = 2 if m.n % 2 == 0 else m.n
    elif case is CaseTag.ODD:
        evc, size = vc, 2
    elif case is CaseTag.EVEN:
        evc, size = vc + 1, m.k
    elif case is CaseTag.MIXED_BOTH:
        evc, size = vc + 1, n_even * (2**n_odd - 2)
    elif case is CaseTag.MIXED_ONE_ODD:
        evc, size = vc + 1, 2 * n_even
    else:
        evc, size = vc, 2 + (2**n_odd - 2)
    if 1 in m.lengths and case in _UNIT_SENSITIVE:
        # the unit path's two anchored patterns are the same set
        size = {
            CaseTag.MIXED_BOTH: n_even * 2 ** (n_odd - 1),
            CaseTag.MIXED_ONE_ODD: n_even,
            CaseTag.MIXED_ONE_EVEN: 2 + 2 ** (n_odd - 1),
        }[case]
    return EvcResult(case, vc, evc, size)


_UNIT_SENSITIVE = (CaseTag.MIXED_BOTH, CaseTag.MIXED_ONE_ODD, CaseTag.MIXED_ONE_EVEN)


# Matchings on odd melons ---------------------------------------------------


@dataclass(frozen=True)
class PathMatchings:
    perfect: tuple[tuple[int, int], ...]
    imperfect: tuple[tuple[int, int], ...]


def odd_path_matchings(path: Sequence[int]) -> PathMatchings:
    length = len(path) - 1
    if length < 1 or length % 2 == 0:
        raise EvenLengthPath(f"path of length {length} is not odd")
    edges = [(path[i], path[i + 1]) for i in range(length)]
    return PathMatchings(tuple(edges[0::2]), tuple(edges[1::2]))


def _edge_location(m: MelonStructure, e: Sequence[int]) -> tuple[int, int]:
    key = frozenset(e)
    for pi, p in enumerate(m.paths):
        for i in range(len(p) - 1):
            if frozenset((p[i], p[i + 1])) == key:
                return pi, i
    raise ValueError(f"{tuple(e)} is not an edge of the melon")


def matching_through_edge(m: MelonStructure, e: Sequence[int]) -> frozenset:
    """A perfect matching of an odd melon containing edge ``e``."""
    if m.k < 2 or m.even:
        raise CaseMismatch("only melons whose paths are all odd (k >= 2) are elementary")
    pi, i = _edge_location(m, e)
    if i % 2 == 0:
        perfect_path = pi
    else:
        perfect_path = min(j for j in range(m.k) if j != pi)
    out: set[tuple[int, int]] = set()
    for j, p in enumerate(m.paths):
        mm = odd_path_matchings(p)
        out.update(mm.perfect if j == perfect_path else mm.imperfect)
    return frozenset(out)


# Guard patterns ------------------------------------------------------------


def internal_pattern(p: Sequence[int]) -> set[int]:
    return set(p[0::2])


def external_pattern(p: Sequence[int]) -> set[int]:
    return set(p[1::2]) | {p[0], p[-1]}


def anchored_pattern(q: Sequence[int]) -> set[int]:
    """Every other vertex starting at ``q[0]``, never the far end ``q[-1]``."""
    return set(q[0:-1:2])


def _cycle_walk(pa: Sequence[int], pb: Sequence[int], forward: bool) -> Walk:
    """The cycle formed by two paths, oriented along ``pa`` toward the sink if ``forward``."""
    seq = list(pa) + list(reversed(pb[1:-1]))
    if not forward:
        seq.reverse()
    return tuple(seq), True


def shift_along(walks: Iterable[Walk], occupied: Iterable[int], target: Iterable[int]) -> dict[int, int]:
    """Move guards one step forward along ``walks`` so ``occupied`` becomes ``target``."""
    occupied, target = frozenset(occupied), frozenset(target)
    succ: dict[int, int] = {}
    for seq, closed in walks:
        for a, b in zip(seq, seq[1:]):
            succ[a] = b
        if closed:
            succ[seq[-1]] = seq[0]
    moving: set[int] = set()
    stack = [v for v in occupied if v not in target]
    while stack:
        v = stack.pop()
        if v in moving:
            continue
        if v not in succ:
            raise StrategyError(f"guard on {v} must move but lies on no walk")
        moving.add(v)
        if succ[v] in occupied:
            stack.append(succ[v])
    moves = {v: succ[v] if v in moving else v for v in occupied}
    if frozenset(moves.values()) != target or len(set(moves.values())) != len(moves):
        raise StrategyError("rotation does not reach the target configuration")
    return moves


# Strategy classes ----------------------------------------------------------


class StrategyClass:
    """A finite eternal vertex cover class with a constructive responder.

    Configurations are addressed by hashable labels; ``respond`` maps a
    configuration and an attacked edge to a defense function whose image is
    again a member of the class.
    """

    case: CaseTag

    def __init__(self, melon: MelonStructure, graph: Graph | None = None):
        self.melon = melon
        self.graph = graph if graph is not None else melon_graph_of(melon)
        self._edge_at = {
            frozenset((p[i], p[i + 1])): (pi, i)
            for pi, p in enumerate(melon.paths)
            for i in range(len(p) - 1)
        }

    # enumeration

    def _labels(self) -> list[Hashable]:
        raise NotImplementedError

    @cached_property
    def _distinct_labels(self) -> list[Hashable]:
        # a unit odd path makes its s- and t-anchored patterns coincide
        seen: set[frozenset] = set()
        out = []
        for label in self._labels():
            c = self.config(label)
            if c not in seen:
                seen.add(c)
                out.append(label)
        return out

    def labels(self) -> list[Hashable]:
        return list(self._distinct_labels)

    def config(self, label: Hashable) -> frozenset:
        raise NotImplementedError

    @cached_property
    def _by_config(self) -> dict[frozenset, Hashable]:
        return {self.config(label): label for label in self._distinct_labels}

    def configurations(self) -> list[frozenset]:
        return [self.config(label) for label in self.labels()]

    def __len__(self) -> int:
        return len(self.labels())

    def __contains__(self, c: object) -> bool:
        return frozenset(c) in self._by_config  # type: ignore[arg-type]

    def label_of(self, c: Iterable[int]) -> Hashable:
        try:
            return self._by_config[frozenset(c)]
        except KeyError:
            raise ConfigurationNotInClass(f"{sorted(c)} is not in the {self.case} class") from None

    # defense

    def respond(self, c: Iterable[int], a: Sequence[int]) -> dict[int, int]:
        c = frozenset(c)
        label = self.label_of(c)
        v, w = a
        if frozenset((v, w)) not in self._edge_at:
            raise DefenseError(f"{(v, w)} is not an edge")
        if v in c and w in c:
            moves = swap_defense(c, a)
            target = c
        else:
            z, w = (v, w) if v in c else (w, v)
            pi, i = self._edge_at[frozenset((z, w))]
            forward = self.melon.paths[pi][i] == z
            moves, target = self._defend(label, z, w, pi, forward)
        image = apply_defense(self.graph, c, moves, a)
        if image != target or image not in self:
            raise StrategyError(f"defense of {tuple(a)} from {sorted(c)} leaves the class")
        return moves

    def _defend(
        self, label: Hashable, z: int, w: int, pi: int, forward: bool
    ) -> tuple[dict[int, int], frozenset]:
        """Moves and target for a single-guarded attack, guard ``z`` crossing to ``w``."""
        raise NotImplementedError

    def _rotate(self, label: Hashable, target_label: Hashable, walks: list[Walk]):
        target = self.config(target_label)
        return shift_along(walks, self.config(label), target), target

    def path(self, i: int) -> tuple[int, ...]:
        return self.melon.paths[i]

    def oriented(self, i: int, anchor: str) -> tuple[int, ...]:
        p = self.melon.paths[i]
        return p if anchor == "s" else p[::-1]

    def _even_rotation(self, evens: Sequence[int], external: int, pi: int, forward: bool):
        """Two-path rotation on an even sub-melon: returns (new external, walk)."""
        if pi != external:
            partner, new_external = external, pi
        else:
            partner = new_external = min(j for j in evens if j != external)
        return new_external, _cycle_walk(self.path(pi), self.path(partner), forward)


def _other(anchor: str) -> str:
    return "t" if anchor == "s" else "s"


class PathClass(StrategyClass):
    """All but one vertex guarded; the attacked guard steps into the hole."""

    case = CaseTag.PATH

    def _labels(self):
        return list(self.path(0))

    def config(self, hole):
        return frozenset(self.path(0)) - {hole}

    def _defend(self, label, z, w, pi, forward):
        return {**{u: u for u in self.config(label)}, z: w}, self.config(z)


class CycleClass(StrategyClass):
    """Minimum covers of a cycle; every guard steps in the attack direction."""

    case = CaseTag.CYCLE

    @cached_property
    def order(self) -> tuple[int, ...]:
        return _cycle_walk(self.path(0), self.path(1), True)[0]

    def _labels(self):
        n = len(self.order)
        return [0, 1] if n % 2 == 0 else list(range(n))

    def config(self, r):
        n = len(self.order)
        return frozenset(self.order[(j + r) % n] for j in range(0, n, 2))

    def _defend(self, label, z, w, pi, forward):
        seq, _ = _cycle_walk(self.path(0), self.path(1), True)
        succ = dict(zip(seq, seq[1:] + seq[:1]))
        if succ[z] != w:
            succ = {b: a for a, b in succ.items()}
        moves = {u: succ[u] for u in self.config(label)}
        return moves, frozenset(moves.values())


class OddClass(StrategyClass):
    """The two sides of the bipartition; guards shift along a perfect matching."""

    case = CaseTag.ODD

    @cached_property
    def sides(self) -> tuple[frozenset, frozenset]:
        parts = bipartition(self.graph)
        assert parts is not None
        return parts

    def _labels(self):
        return ["A", "B"]

    def config(self, label):
        return self.sides[0] if label == "A" else self.sides[1]

    def _defend(self, label, z, w, pi, forward):
        partner: dict[int, int] = {}
        for a, b in matching_through_edge(self.melon, (z, w)):
            partner[a], partner[b] = b, a
        moves = {u: partner[u] for u in self.config(label)}
        return moves, self.config("B" if label == "A" else "A")


class EvenClass(StrategyClass):
    """One configuration per path: that path external, every other path internal."""

    case = CaseTag.EVEN

    def _labels(self):
        return list(range(self.melon.k))

    def config(self, i):
        out = external_pattern(self.path(i))
        for j in range(self.melon.k):
            if j != i:
                out |= internal_pattern(self.path(j))
        return frozenset(out)

    def _defend(self, label, z, w, pi, forward):
        new_external, walk = self._even_rotation(range(self.melon.k), label, pi, forward)
        return self._rotate(label, new_external, [walk])


class MixedBothClass(StrategyClass):
    """Labels (external even path, odd paths anchored at s); the other odd paths anchor at t."""

    case = CaseTag.MIXED_BOTH

    def _labels(self):
        odd = self.melon.odd
        subsets = [
            frozenset(combo)
            for r in range(1, len(odd))
            for combo in itertools.combinations(odd, r)
        ]
        return [(e, s_paths) for e in self.melon.even for s_paths in subsets]

    def config(self, label):
        external, s_paths = label
        out = external_pattern(self.path(external))
        for j in self.melon.even:
            if j != external:
                out |= internal_pattern(self.path(j))
        for j in self.melon.odd:
            out |= anchored_pattern(self.oriented(j, "s" if j in s_paths else "t"))
        return frozenset(out)

    def _defend(self, label, z, w, pi, forward):
        external, s_paths = label
        if pi in self.melon.even:
            new_external, walk = self._even_rotation(self.melon.even, external, pi, forward)
            return self._rotate(label, (new_external, s_paths), [walk])
        partner = min(j for j in self.melon.odd if (j in s_paths) != (pi in s_paths))
        walk = _cycle_walk(self.path(pi), self.path(partner), forward)
        return self._rotate(label, (external, s_paths ^ {pi, partner}), [walk])


class MixedOneOddClass(StrategyClass):
    """Labels (anchor terminal, external even path) for the single odd path."""

    case = CaseTag.MIXED_ONE_ODD

    def _labels(self):
        return [(x, e) for x in ("s", "t") for e in self.melon.even]

    def config(self, label):
        anchor, external = label
        out = external_pattern(self.path(external))
        for j in self.melon.even:
            if j != external:
                out |= internal_pattern(self.path(j))
        out |= anchored_pattern(self.oriented(self.melon.odd[0], anchor))
        return frozenset(out)

    def _defend(self, label, z, w, pi, forward):
        anchor, external = label
        if pi in self.melon.even:
            new_external, walk = self._even_rotation(self.melon.even, external, pi, forward)
            return self._rotate(label, (anchor, new_external), [walk])
        other = _other(anchor)
        q_odd = self.oriented(pi, anchor)
        toward_anchor = q_odd.index(w) < q_odd.index(z)
        if toward_anchor:
            # only the odd path's guards slide toward the anchor
            return self._rotate(label, (other, external), [(q_odd[::-1], False)])
        spare = min(j for j in self.melon.even if j != external)
        q_ext = self.oriented(external, anchor)
        q_spare = self.oriented(spare, anchor)
        chain = q_ext[::-1][1:] + q_odd[1:] + q_spare[::-1][1:-1]
        return self._rotate(label, (other, spare), [(chain, False)])


class MixedOneEvenClass(StrategyClass):
    """Labels ``"s"``, ``"t"`` or a set of odd paths anchored at s.

    Under ``"s"`` every odd path is anchored at s and the even path is external
    without t; ``"t"`` is the mirror image. Under a set label the even path is
    internal.
    """

    case = CaseTag.MIXED_ONE_EVEN

    @property
    def even_path(self) -> int:
        return self.melon.even[0]

    def _labels(self):
        odd = self.melon.odd
        subsets = [
            frozenset(combo)
            for r in range(1, len(odd))
            for combo in itertools.combinations(odd, r)
        ]
        return ["s", "t", *subsets]

    def config(self, label):
        m = self.melon
        if label in ("s", "t"):
            far = m.t if label == "s" else m.s
            out = external_pattern(self.path(self.even_path)) - {far}
            for j in m.odd:
                out |= anchored_pattern(self.oriented(j, label))
            return frozenset(out)
        out = internal_pattern(self.path(self.even_path))
        for j in m.odd:
            out |= anchored_pattern(self.oriented(j, "s" if j in label else "t"))
        return frozenset(out)

    def _s_paths_after(self, anchor: str, flipped: int) -> frozenset:
        same = frozenset(j for j in self.melon.odd if j != flipped)
        return same if anchor == "s" else frozenset({flipped})

    def _defend(self, label, z, w, pi, forward):
        ev = self.even_path
        if label in ("s", "t"):
            if pi == ev:
                flipped = min(self.melon.odd)
                walk = _cycle_walk(self.path(ev), self.path(flipped), forward)
            else:
                flipped = pi
                walk = _cycle_walk(self.path(pi), self.path(ev), forward)
            return self._rotate(label, self._s_paths_after(label, flipped), [walk])
        if pi == ev:
            anchor = "t" if forward else "s"
            walks: list[Walk] = [(self.oriented(ev, anchor)[::-1], False)]
            for j in self.melon.odd:
                if (j in label) != (anchor == "s"):
                    walks.append((self.oriented(j, anchor)[1:-1], False))
            return self._rotate(label, anchor, walks)
        partner = min(j for j in self.melon.odd if (j in label) != (pi in label))
        walk = _cycle_walk(self.path(pi), self.path(partner), forward)
        return self._rotate(label, label ^ {pi, partner}, [walk])


_CLASSES: dict[CaseTag, type[StrategyClass]] = {
    CaseTag.CYCLE: CycleClass,
    CaseTag.ODD: OddClass,
    CaseTag.EVEN: EvenClass,
    CaseTag.MIXED_BOTH: MixedBothClass,
    CaseTag.MIXED_ONE_ODD: MixedOneOddClass,
    CaseTag.MIXED_ONE_EVEN: MixedOneEvenClass,
}


def melon_graph_of(m: MelonStructure) -> Graph:
    n = 1 + max(v for p in m.paths for v in p)
    return build_graph(n, m.edges())


def strategy_class(m: MelonStructure, graph: Graph | None = None) -> StrategyClass:
    """The constructive minimum eternal vertex cover class for a melon with k >= 2."""
    if m.k < 2:
        raise CaseMismatch("single paths use path_class")
    return _CLASSES[classify(m)](m, graph)


def path_class(m: MelonStructure, graph: Graph | None = None) -> PathClass:
    if m.k != 1:
        raise CaseMismatch(f"expected a single path, got {m.k} paths")
    return PathClass(m, graph)


def any_class(m: MelonStructure, graph: Graph | None = None) -> StrategyClass:
    return path_class(m, graph) if m.k == 1 else strategy_class(m, graph)


def respond(sc: StrategyClass, c: Iterable[int], a: Sequence[int]) -> dict[int, int]:
    return sc.respond(c, a)


class ExplicitClass:
    """A hand-listed family whose responder searches for any shift inside it."""

    def __init__(self, graph: Graph, configs: Iterable[Iterable[int]]):
        self.graph = graph
        self._configs = [frozenset(c) for c in configs]

    def configurations(self) -> list[frozenset]:
        return list(self._configs)

    def __contains__(self, c: object) -> bool:
        return frozenset(c) in self._configs  # type: ignore[arg-type]

    def respond(self, c: Iterable[int], a: Sequence[int]) -> dict[int, int]:
        from .oracle import find_shift

        c = frozenset(c)
        if c not in self._configs:
            raise ConfigurationNotInClass(f"{sorted(c)} is not in the class")
        for c2 in self._configs:
            moves = find_shift(self.graph, c, c2, a)
            if moves is not None:
                return moves
        raise DefenseError(f"no shift inside the class protects {tuple(a)}")
