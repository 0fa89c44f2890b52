"""Compare the compiled and pure-Python kernels on the safe-set fixed point.

    python benchmarks/bench_kernel.py [--repeat 3] [--big]

``--big`` adds G_2 (21 vertices), which takes about a minute in pure Python.
"""

from __future__ import annotations

import argparse
import time

from melonevc import _kernel_py
from melonevc.families import g_k, melon_graph
from melonevc.graph import min_vertex_covers_bruteforce

try:
    from melonevc import _kernel as _compiled
except ImportError:
    _compiled = None


def _evc(impl, g):
    vc, _ = min_vertex_covers_bruteforce(g, limit=g.n)
    for k in range(vc, 2 * vc + 1):
        covers = impl.vertex_covers(g.n, g.edges, k)
        if impl.safe_set(g.closed_masks, g.edges, covers):
            return k
    raise AssertionError("window exhausted")


def _time(impl, g, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = _evc(impl, g)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--big", action="store_true")
    args = ap.parse_args()

    cases = [(str(lengths), melon_graph(lengths)[0]) for lengths in
             ([2, 2, 2, 2], [2, 3, 3, 3], [2, 2, 3, 3], [4, 4, 4, 4], [2, 2, 2, 3, 3, 3])]
    if args.big:
        cases.append(("G_2", g_k(2).graph))

    print(f"{'graph':<20}{'n':>4}{'evc':>5}{'python s':>12}{'cython s':>12}{'speedup':>9}")
    for name, g in cases:
        t_py, v_py = _time(_kernel_py, g, 1 if name == "G_2" else args.repeat)
        if _compiled is None:
            print(f"{name:<20}{g.n:>4}{v_py:>5}{t_py:>12.4f}{'n/a':>12}{'':>9}")
            continue
        t_c, v_c = _time(_compiled, g, args.repeat)
        assert v_py == v_c, (name, v_py, v_c)
        print(f"{name:<20}{g.n:>4}{v_c:>5}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
