"""Shared test helpers: graph corpora and a direct Bellman-equation audit."""

from __future__ import annotations

import random

from copwin.graph import Graph, generate
from copwin.solver import ESCAPE, SolveResult
from copwin.statespace import is_capture

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}"
    if detail:
        line += f" :: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def prufer_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n >= 1 vertices."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def gnp_corpus(count: int, seed0: int = 0):
    """``count`` G(n, p) graphs with n in 4..8 and p in 0.2..0.8, fixed seeds."""
    ps = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)
    for i in range(count):
        n = 4 + i % 5
        p = ps[(i // 5) % len(ps)]
        yield generate("random_gnp", n, p, seed=seed0 + i)


def small_corpus():
    yield generate("path", 1)
    yield generate("path", 2)
    yield generate("path", 4)
    yield generate("cycle", 3)
    yield generate("cycle", 4)
    yield generate("cycle", 5)
    yield generate("star", 3)
    yield generate("complete", 4)
    yield generate("grid", 2, 3)
    yield Graph.from_edges(4, [(0, 1), (2, 3)])
    yield Graph.from_edges(5, [(0, 1), (1, 2)])


def bellman_violations(result: SolveResult) -> list[str]:
    """Check win flags and capture times against the game's one-step equations."""
    ts = result.system
    win, ct = result.copswin, result.capture_time
    bad = []
    for i in range(ts.state_count):
        s = ts.decode(i)
        if is_capture(s):
            if not win[i] or ct[i] != 0:
                bad.append(f"capture {s}: win={win[i]} ct={ct[i]}")
            continue
        succ = [ts.encode(x) for x in ts.enumerate_out(s)]
        cop = ts.next_mover(s) != 0
        want = any(win[j] for j in succ) if cop else all(win[j] for j in succ)
        if bool(win[i]) != want:
            bad.append(f"flag {s}: win={win[i]} expected {want}")
            continue
        if want:
            vals = [ct[j] for j in succ if win[j]]
            expect = 1 + (min(vals) if cop else max(vals))
        else:
            expect = ESCAPE
        if ct[i] != expect:
            bad.append(f"value {s}: ct={ct[i]} expected {expect}")
    return bad
