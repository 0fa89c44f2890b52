"""Command-line front end.

Every batch command prints one JSON object on a single line (``--pretty``
indents it). Exit codes: 0 success, 1 verification failure, 2 usage or parse
error, 3 unrecognized graph family, 4 resource limit or timeout.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing as mp
import random
import sys
from typing import Sequence, TextIO

from .errors import DefenseError, DisconnectedGraph, EvcError, LimitExceeded, StrategyError
from .families import g_k, melon_expression, melon_graph
from .graph import (
    BRUTE_FORCE_LIMIT,
    Graph,
    apply_defense,
    format_edge_list,
    is_connected,
    min_vertex_covers_bruteforce,
    read_edge_list,
    write_edge_list,
)
from .melon import any_class, evc_melon
from .oracle import ORACLE_LIMIT, find_shift, lex_key, safe_set, verify_class
from .sp import MelonStructure, alt, parse_sp, recognize_melon

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNRECOGNIZED, EXIT_LIMIT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(obj: dict, pretty: bool, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2 if pretty else None) + "\n")


def _lengths(text: str) -> list[int]:
    try:
        lengths = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"bad path-length list {text!r}") from None
    if not lengths:
        raise UsageError("empty path-length list")
    return lengths


def _family(m: MelonStructure | None) -> str:
    if m is None:
        return "unrecognized"
    return {1: "path", 2: "cycle"}.get(m.k, "melon")


def _load(args) -> tuple[Graph, MelonStructure | None]:
    """Graph from ``--melon`` or ``--edges``, with its melon structure when it has one."""
    if bool(args.melon) == bool(args.edges):
        raise UsageError("give exactly one of --melon or --edges")
    if args.melon:
        return melon_graph(_lengths(args.melon))
    try:
        g = read_edge_list(args.edges)
    except OSError as exc:
        raise UsageError(f"cannot read {args.edges}: {exc.strerror}") from None
    if not is_connected(g):
        return g, None
    return g, recognize_melon(g)


# solve ---------------------------------------------------------------------


def solve_output(g: Graph, m: MelonStructure | None) -> dict:
    out: dict = {"vertices": g.n, "edge_count": g.m, "family": _family(m)}
    if m is None:
        if g.n <= BRUTE_FORCE_LIMIT:
            out["vc"] = min_vertex_covers_bruteforce(g)[0]
        return out
    r = evc_melon(m)
    out.update(case=r.case.value, vc=r.vc, evc=r.evc, class_size=r.class_size)
    return out


def cmd_solve(args, out: TextIO) -> int:
    g, m = _load(args)
    _emit(solve_output(g, m), args.pretty, out)
    return EXIT_OK if m is not None else EXIT_UNRECOGNIZED


# oracle --------------------------------------------------------------------


def _safe_set_worker(g: Graph, k: int, max_n: int, queue) -> None:
    queue.put([lex_key(c) for c in safe_set(g, k, max_n).configs])


def _safe_set_timed(g: Graph, k: int, max_n: int, timeout: float | None):
    if timeout is None:
        return [lex_key(c) for c in safe_set(g, k, max_n).configs]
    ctx = mp.get_context("fork" if "fork" in mp.get_all_start_methods() else "spawn")
    queue = ctx.Queue()
    proc = ctx.Process(target=_safe_set_worker, args=(g, k, max_n, queue), daemon=True)
    proc.start()
    try:
        return queue.get(timeout=timeout)
    except Exception:
        return None
    finally:
        proc.terminate()
        proc.join()


def cmd_oracle(args, out: TextIO) -> int:
    import time

    g, m = _load(args)
    if g.n > args.max_n:
        raise LimitExceeded(f"{g.n} vertices exceeds the oracle limit {args.max_n}")
    if not is_connected(g):
        raise DisconnectedGraph("the game is played on connected graphs")
    vc = min_vertex_covers_bruteforce(g, limit=max(args.max_n, BRUTE_FORCE_LIMIT))[0]
    deadline = None if args.timeout is None else time.monotonic() + args.timeout
    for k in range(vc, 2 * vc + 1):
        remaining = None if deadline is None else max(deadline - time.monotonic(), 0.0)
        found = _safe_set_timed(g, k, args.max_n, remaining)
        if found is None:
            print(
                f"timeout after {args.timeout}s: no safe set for k < {k}, k = {k} unfinished",
                file=sys.stderr,
            )
            return EXIT_LIMIT
        if found:
            break
    else:
        raise AssertionError("no safe set within the 2*vc window")
    result: dict = {
        "vertices": g.n,
        "edge_count": g.m,
        "family": _family(m),
        "vc": vc,
        "evc": k,
        "safe_set_size": len(found),
    }
    if m is not None:
        result["case"] = evc_melon(m).case.value
    if args.dump:
        result["safe_set"] = [list(c) for c in found]
    _emit(result, args.pretty, out)
    return EXIT_OK


# verify --------------------------------------------------------------------


def cmd_verify(args, out: TextIO) -> int:
    lengths = _lengths(args.melon)
    g, m = melon_graph(lengths)
    sc = any_class(m, g)
    report = verify_class(g, sc)
    r = evc_melon(m)
    result: dict = {
        "ok": report.ok,
        "case": r.case.value,
        "configs": len(sc),
        "edges": g.m,
        "checked": report.checked,
        "evc": r.evc,
    }
    ok = report.ok
    if args.oracle_cross_check:
        from .oracle import evc_exact

        oracle_evc, _ = evc_exact(g, max_n=args.max_n)
        result["evc_oracle"] = oracle_evc
        ok = ok and oracle_evc == r.evc
    result["ok"] = ok
    result["failures"] = [
        {"config": list(lex_key(c)), "edge": list(a), "reason": why}
        for c, a, why in report.failures
    ]
    _emit(result, args.pretty, out)
    return EXIT_OK if ok else EXIT_FAIL


# play ----------------------------------------------------------------------


class PlaySession:
    """Attacker REPL state; the defender answers through a class or the oracle."""

    def __init__(self, g: Graph, m: MelonStructure | None, defender: str, max_n: int):
        self.graph = g
        self.defender = defender
        self.log: list[tuple[tuple[int, int], dict[int, int], tuple[int, ...]]] = []
        if defender == "strategy":
            if m is None:
                raise UsageError("strategy defender needs a melon, path or cycle")
            self.sc = any_class(m, g)
            self.config = self.sc.configurations()[0]
        else:
            from .oracle import evc_exact

            _, safe = evc_exact(g, max_n=max_n)
            self.safe = sorted(safe.configs, key=lex_key)
            self.config = self.safe[0]

    def attack(self, u: int, v: int) -> dict[int, int]:
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        if self.defender == "strategy":
            moves = self.sc.respond(self.config, (u, v))
        else:
            moves = next(
                mv
                for c2 in self.safe
                if (mv := find_shift(self.graph, self.config, c2, (u, v))) is not None
            )
        # fail closed: every move is revalidated before the state changes
        self.config = apply_defense(self.graph, self.config, moves, (u, v))
        self.log.append(((u, v), moves, lex_key(self.config)))
        return moves


def _fmt_moves(moves: dict[int, int]) -> str:
    moved = {u: w for u, w in sorted(moves.items()) if u != w}
    return "{" + ", ".join(f"{u}->{w}" for u, w in moved.items()) + "}"


def _fmt_config(c) -> str:
    return "{" + ", ".join(map(str, lex_key(c))) + "}"


def _auto(session: PlaySession, rounds: int, rng: random.Random, out: TextIO) -> None:
    edges = session.graph.edges
    for _ in range(rounds):
        session.attack(*rng.choice(edges))
    out.write(f"{rounds} rounds defended; configuration {_fmt_config(session.config)}\n")


def run_repl(session: PlaySession, rng: random.Random, inp: TextIO, out: TextIO) -> int:
    out.write(f"configuration {_fmt_config(session.config)}\n")
    for line in inp:
        words = line.split()
        if not words:
            continue
        cmd = words[0]
        try:
            if cmd == "quit":
                break
            elif cmd == "show":
                out.write(f"configuration {_fmt_config(session.config)}\n")
            elif cmd == "attack" and len(words) == 3:
                moves = session.attack(int(words[1]), int(words[2]))
                out.write(f"moves {_fmt_moves(moves)}; configuration {_fmt_config(session.config)}\n")
            elif cmd == "auto" and len(words) == 2:
                _auto(session, int(words[1]), rng, out)
            elif cmd == "log":
                for i, (a, moves, c) in enumerate(session.log, 1):
                    out.write(f"{i}. attack {a[0]} {a[1]}: {_fmt_moves(moves)} -> {_fmt_config(c)}\n")
            else:
                out.write("commands: show | attack u v | auto N | log | quit\n")
        except EvcError:
            raise
        except ValueError as exc:
            # covers malformed numbers and non-edges; the configuration is untouched
            out.write(f"not an edge: {exc}\n" if "not an edge" in str(exc) else f"error: {exc}\n")
        out.flush()
    return EXIT_OK


def cmd_play(args, out: TextIO, inp: TextIO = sys.stdin) -> int:
    g, m = _load(args)
    session = PlaySession(g, m, args.defender, args.max_n)
    rng = random.Random(args.seed)
    if args.auto is not None:
        _auto(session, args.auto, rng, out)
        return EXIT_OK
    return run_repl(session, rng, inp, out)


# gen / alt -----------------------------------------------------------------


def cmd_gen(args, out: TextIO) -> int:
    if args.family == "melon":
        g, _ = melon_graph(_lengths(",".join(args.params)))
    else:
        if len(args.params) != 1 or not args.params[0].isdigit():
            raise UsageError("gen gk takes one integer k >= 2")
        k = int(args.params[0])
        if k < 2:
            raise UsageError("gen gk needs k >= 2")
        g = g_k(k).graph
    if args.out:
        write_edge_list(g, args.out)
        _emit({"vertices": g.n, "edge_count": g.m, "out": args.out}, args.pretty, out)
    else:
        out.write(format_edge_list(g))
    return EXIT_OK


def cmd_alt(args, out: TextIO) -> int:
    if bool(args.sp) == bool(args.melon):
        raise UsageError("give exactly one of --sp or --melon")
    tree = parse_sp(args.sp) if args.sp else melon_expression(_lengths(args.melon))
    out.write(f"{alt(tree)}\n")
    return EXIT_OK


# entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--melon", help="comma-separated path lengths, e.g. 2,2,3")
    source.add_argument("--edges", help="edge-list file")

    parser = argparse.ArgumentParser(prog="melonevc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, source], help="closed-form evc of a melon")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common, source], help="exact game solver")
    p.add_argument("--max-n", type=int, default=ORACLE_LIMIT)
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.add_argument("--dump", action="store_true", help="include the full safe set")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="check a strategy class for closure")
    p.add_argument("--melon", required=True)
    p.add_argument("--oracle-cross-check", action="store_true")
    p.add_argument("--max-n", type=int, default=ORACLE_LIMIT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", parents=[source], help="interactive attacker REPL")
    p.add_argument("--defender", choices=("strategy", "oracle"), default="strategy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--auto", type=int, default=None, metavar="N", help="run N random attacks and exit")
    p.add_argument("--max-n", type=int, default=ORACLE_LIMIT)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph")
    p.add_argument("family", choices=("melon", "gk"))
    p.add_argument("params", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("alt", help="series/parallel alternation count")
    p.add_argument("--sp")
    p.add_argument("--melon")
    p.set_defaults(func=cmd_alt)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except LimitExceeded as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DefenseError, StrategyError) as exc:
        print(f"defense failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, EvcError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
