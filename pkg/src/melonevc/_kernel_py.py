"""Pure-Python kernels: vertex-cover enumeration, shift feasibility, safe sets.

Vertex sets are integer bitmasks. ``closed`` holds the closed-neighborhood
mask of every vertex. The compiled twin in ``_kernel.pyx`` exposes the same
functions with identical results.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

BACKEND = "python"


def vertex_covers(n: int, edges: Sequence[tuple[int, int]], k: int) -> list[int]:
    """All vertex covers of size ``k`` as masks, in lexicographic order."""
    if k < 0 or k > n:
        return []
    lower = [0] * n
    for u, v in edges:
        a, b = (u, v) if u < v else (v, u)
        lower[b] |= 1 << a
    out: list[int] = []

    # Skipped vertices must form an independent set; a vertex may be skipped
    # only if none of its lower neighbors was skipped before it.
    def extend(start: int, chosen: int, skipped: int, left: int) -> None:
        if left == 0:
            for v in range(start, n):
                if lower[v] & skipped:
                    return
                skipped |= 1 << v
            out.append(chosen)
            return
        for x in range(start, n - left + 1):
            extend(x + 1, chosen | (1 << x), skipped, left - 1)
            if lower[x] & skipped:
                return
            skipped |= 1 << x

    extend(0, 0, 0, k)
    return out


def _perfect_matching(
    sources: list[int], target_mask: int, closed: Sequence[int]
) -> dict[int, int] | None:
    """Kuhn's augmenting-path matching of every source into ``target_mask``."""
    owner: dict[int, int] = {}

    def augment(u: int, seen: list[int]) -> bool:
        cand = closed[u] & target_mask & ~seen[0]
        while cand:
            low = cand & -cand
            cand ^= low
            if seen[0] & low:
                continue
            seen[0] |= low
            r = low.bit_length() - 1
            if r not in owner or augment(owner[r], seen):
                owner[r] = u
                return True
        return False

    for u in sources:
        if not augment(u, [0]):
            return None
    return {u: r for r, u in owner.items()}


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def shift_assignment(
    c: int, c2: int, v: int, w: int, closed: Sequence[int]
) -> dict[int, int] | None:
    """A guard move taking ``c`` onto ``c2`` with a guard crossing edge ``vw``.

    Returns the move map, or ``None`` if no such move exists.
    """
    for src, dst in ((v, w), (w, v)):
        if not (c >> src) & 1 or not (c2 >> dst) & 1:
            continue
        rest = _perfect_matching(
            _bits(c & ~(1 << src)), c2 & ~(1 << dst), closed
        )
        if rest is not None:
            rest[src] = dst
            return rest
    return None


def shift_exists(c: int, c2: int, v: int, w: int, closed: Sequence[int]) -> bool:
    return shift_assignment(c, c2, v, w, closed) is not None


def _reach(mask: int, closed: Sequence[int]) -> int:
    out = 0
    for u in _bits(mask):
        out |= closed[u]
    return out


def safe_set(
    closed: Sequence[int], edges: Sequence[tuple[int, int]], covers: Sequence[int]
) -> list[int]:
    """Greatest subset of ``covers`` closed under defended shifts.

    Work-list formulation: ``count[i*E + e]`` is the number of live successors
    of cover ``i`` under attack ``e``; a cover dies when any count hits zero,
    and its death is propagated to the (cover, edge) pairs that relied on it.
    """
    num = len(covers)
    num_edges = len(edges)
    reach = [_reach(c, closed) for c in covers]
    count = [0] * (num * num_edges)
    preds: list[list[int]] = [[] for _ in range(num)]
    for i, c in enumerate(covers):
        ri = reach[i]
        for j, c2 in enumerate(covers):
            if c2 & ~ri or c & ~reach[j]:
                continue
            for e, (v, w) in enumerate(edges):
                if shift_exists(c, c2, v, w, closed):
                    count[i * num_edges + e] += 1
                    preds[j].append(i * num_edges + e)
    alive = [True] * num
    queue: deque[int] = deque()
    for i in range(num):
        if any(count[i * num_edges + e] == 0 for e in range(num_edges)):
            alive[i] = False
            queue.append(i)
    while queue:
        j = queue.popleft()
        for slot in preds[j]:
            count[slot] -= 1
            i = slot // num_edges
            if count[slot] == 0 and alive[i]:
                alive[i] = False
                queue.append(i)
    return [c for c, ok in zip(covers, alive) if ok]
