"""Exact solver for the eternal vertex cover game on small graphs.

The defender's winning region at guard count ``k`` is computed as a greatest
fixed point over all size-``k`` vertex covers: a cover survives while every
edge attack has a defended shift to another surviving cover. Shift
feasibility is a bipartite perfect matching between old and new guard
positions with the crossing guard pinned to the attacked edge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Protocol, Sequence

from . import kernel
from .errors import EvcError, LimitExceeded, SizeMismatch
from .graph import (
    Graph,
    apply_defense,
    is_vertex_cover,
    mask_of,
    min_vertex_covers_bruteforce,
    require_connected,
    vertices_of,
)

log = logging.getLogger(__name__)

ORACLE_LIMIT = 16


@dataclass(frozen=True)
class SafeSet:
    k: int
    configs: tuple[frozenset, ...]

    def __len__(self) -> int:
        return len(self.configs)

    def __bool__(self) -> bool:
        return bool(self.configs)

    def __contains__(self, c: object) -> bool:
        return frozenset(c) in set(self.configs)  # type: ignore[arg-type]


@dataclass
class VerificationReport:
    ok: bool
    failures: list[tuple[frozenset, tuple[int, int], str]] = field(default_factory=list)
    checked: int = 0


class EnumerableClass(Protocol):
    def configurations(self) -> list[frozenset]: ...

    def respond(self, c: Iterable[int], a: Sequence[int]) -> dict[int, int]: ...


def _check_limit(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise LimitExceeded(f"{g.n} vertices exceeds the oracle limit {max_n}")


def lex_key(c: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(c))


def vertex_covers_of_size(g: Graph, k: int, max_n: int = ORACLE_LIMIT) -> list[frozenset]:
    _check_limit(g, max_n)
    return [vertices_of(m) for m in kernel.vertex_covers(g.n, g.edges, k)]


def find_shift(
    g: Graph, c: Iterable[int], c2: Iterable[int], a: Sequence[int]
) -> dict[int, int] | None:
    """A defense function moving ``c`` onto ``c2`` that protects ``a``, if any."""
    c, c2 = frozenset(c), frozenset(c2)
    if len(c) != len(c2):
        raise SizeMismatch(f"|c|={len(c)} differs from |c2|={len(c2)}")
    v, w = a
    return kernel.shift_assignment(mask_of(c), mask_of(c2), v, w, g.closed_masks)


def can_shift(g: Graph, c: Iterable[int], c2: Iterable[int], a: Sequence[int]) -> bool:
    c, c2 = frozenset(c), frozenset(c2)
    if len(c) != len(c2):
        raise SizeMismatch(f"|c|={len(c)} differs from |c2|={len(c2)}")
    v, w = a
    return kernel.shift_exists(mask_of(c), mask_of(c2), v, w, g.closed_masks)


def safe_set(g: Graph, k: int, max_n: int = ORACLE_LIMIT) -> SafeSet:
    """The largest family of size-``k`` covers closed under defended shifts."""
    _check_limit(g, max_n)
    covers = kernel.vertex_covers(g.n, g.edges, k)
    survivors = kernel.safe_set(g.closed_masks, g.edges, covers)
    log.debug("safe_set k=%d: %d covers, %d survive", k, len(covers), len(survivors))
    return SafeSet(k, tuple(vertices_of(m) for m in survivors))


def safe_set_naive(g: Graph, k: int, max_n: int = ORACLE_LIMIT) -> SafeSet:
    """Round-based reference iteration of the same fixed point."""
    current = vertex_covers_of_size(g, k, max_n)
    while True:
        keep = [
            c
            for c in current
            if all(any(can_shift(g, c, c2, e) for c2 in current) for e in g.edges)
        ]
        if len(keep) == len(current):
            return SafeSet(k, tuple(keep))
        current = keep


def evc_exact(g: Graph, max_n: int = ORACLE_LIMIT) -> tuple[int, SafeSet]:
    """Eternal vertex cover number by searching ``vc <= k <= 2 vc``."""
    _check_limit(g, max_n)
    require_connected(g)
    vc, _ = min_vertex_covers_bruteforce(g, limit=max_n)
    for k in range(vc, 2 * vc + 1):
        found = safe_set(g, k, max_n)
        if found:
            return k, found
    if g.m == 0:
        return 0, SafeSet(0, (frozenset(),))
    raise AssertionError(f"no safe set up to 2*vc={2 * vc}; the bound is violated")


def verify_class(g: Graph, sc: EnumerableClass) -> VerificationReport:
    """Check every (configuration, edge) pair of a strategy class.

    Each pair is answered by the class's own responder, validated as a legal
    move, and its image checked for membership. Independently, the pair must
    admit some shift inside the class at all; a pair failing only the first
    check points at the responder, one failing both at the class itself.
    """
    configs = [frozenset(c) for c in sc.configurations()]
    members = set(configs)
    report = VerificationReport(ok=True)
    for c in configs:
        if not is_vertex_cover(g, c):
            report.failures.append((c, (-1, -1), "configuration is not a vertex cover"))
        for a in g.edges:
            report.checked += 1
            try:
                image = apply_defense(g, c, sc.respond(c, a), a)
                if image not in members:
                    report.failures.append((c, a, f"image {lex_key(image)} not in class"))
            except EvcError as exc:
                report.failures.append((c, a, f"responder: {exc}"))
            if not any(can_shift(g, c, c2, a) for c2 in configs):
                report.failures.append((c, a, "no defended shift inside the class"))
    report.ok = not report.failures
    return report
