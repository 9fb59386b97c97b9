"""Brute-force reference solvers for small instances.

Nothing here goes through TransitionSystem or the queue-based solver: moves
are generated straight from adjacency sets, and labels come from sweeping
the whole state space until nothing changes.  Results use the same state
index layout as the main solver so the two can be compared entry by entry.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .graph import Graph

ESCAPE = 0xFFFFFFFF
DEFAULT_ORACLE_CAP = 10**6


class OracleCapExceeded(RuntimeError):
    pass


@dataclass
class OracleResult:
    n: int
    k: int
    winning: list[bool]
    value: list[int]


def _distances(g: Graph) -> list[dict[int, int]]:
    out = []
    for s in range(g.n):
        dist = {s: 0}
        frontier = deque([s])
        while frontier:
            v = frontier.popleft()
            for u in g.adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    frontier.append(u)
        out.append(dist)
    return out


def _index(positions: tuple[int, ...], tag: int, n: int) -> int:
    code = 0
    for weight, p in enumerate(positions):
        code += p * n**weight
    return tag + (len(positions)) * code


def oracle_fixedpoint(
    g: Graph,
    k: int,
    rule: str = "classic",
    *,
    cap: int = DEFAULT_ORACLE_CAP,
    reverse_sweep: bool = False,
) -> OracleResult:
    """Sweep to the least fixpoint of the win labels, then value-iterate.

    ``reverse_sweep`` visits states in descending order; the fixpoint must
    not depend on it.
    """
    n = g.n
    size = (k + 1) * n ** (k + 1)
    if size > cap:
        raise OracleCapExceeded(f"{size} states exceed the oracle cap of {cap}")
    zombie = str(rule).lower().endswith("zombie")
    dist = _distances(g) if zombie else None
    nbr = [set(a) for a in g.adjacency]

    def moves(piece: int, here: int, robber: int) -> list[int]:
        if piece == 0 or not zombie:
            return sorted(nbr[here] | {here})
        d = dist[here].get(robber)
        if d is None or d == 0:
            return [here]
        return sorted(u for u in nbr[here] if dist[u].get(robber) == d - 1)

    states = []
    for rev in itertools.product(range(n), repeat=k + 1):
        positions = tuple(reversed(rev))
        for tag in range(k + 1):
            states.append((positions, tag))
    states.sort(key=lambda st: _index(st[0], st[1], n))

    terminal = [st[0][0] in st[0][1:] for st in states]
    cop_turn = [(st[1] + 1) % (k + 1) != 0 for st in states]
    succ: list[list[int]] = []
    for positions, tag in states:
        mover = (tag + 1) % (k + 1)
        nxt = []
        for v in moves(mover, positions[mover], positions[0]):
            moved = positions[:mover] + (v,) + positions[mover + 1:]
            nxt.append(_index(moved, mover, n))
        succ.append(nxt)

    sweep = range(size - 1, -1, -1) if reverse_sweep else range(size)
    winning = list(terminal)
    changed = True
    while changed:
        changed = False
        for i in sweep:
            if winning[i]:
                continue
            if cop_turn[i]:
                now = any(winning[j] for j in succ[i])
            else:
                now = all(winning[j] for j in succ[i])
            if now:
                winning[i] = True
                changed = True

    # synchronous value iteration: after m sweeps, value[i] is exact for
    # every state the cops can finish within m piece-moves
    value = [0 if t else ESCAPE for t in terminal]
    for _ in range(size):
        new = list(value)
        for i in sweep:
            if terminal[i]:
                continue
            vals = [value[j] for j in succ[i]]
            best = min(vals) if cop_turn[i] else max(vals)
            new[i] = ESCAPE if best == ESCAPE else best + 1
        if new == value:
            break
        value = new
    return OracleResult(n, k, winning, value)


def oracle_simultaneous(g: Graph, k: int, *, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Decide the classic game with all cops moving together each turn."""
    n = g.n
    if k >= n:
        return True
    configs = list(itertools.product(range(n), repeat=k))
    if 2 * n * len(configs) > cap:
        raise OracleCapExceeded(f"{2 * n * len(configs)} states exceed the oracle cap of {cap}")
    closed = [sorted(set(a) | {v}) for v, a in enumerate(g.adjacency)]
    cop_succ = {c: list(itertools.product(*(closed[p] for p in c))) for c in configs}

    # cops_win[(robber, cops)] with cops to move / robber to move
    cops_move = {(r, c): r in c for c in configs for r in range(n)}
    robber_move = dict(cops_move)
    changed = True
    while changed:
        changed = False
        for (r, c), won in cops_move.items():
            if not won and any(robber_move[(r, c2)] for c2 in cop_succ[c]):
                cops_move[(r, c)] = True
                changed = True
        for (r, c), won in robber_move.items():
            if not won and all(cops_move[(r2, c)] for r2 in closed[r]):
                robber_move[(r, c)] = True
                changed = True
    return any(all(cops_move[(r, c)] for r in range(n)) for c in configs)
