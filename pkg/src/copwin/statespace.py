"""Game states and the implicit move graph.

A state is ``(p_0, p_1, ..., p_k; t)``: ``p_0`` is the robber, ``p_i`` cop
``i`` and ``t`` the piece that moved last, so piece ``(t + 1) % (k + 1)``
moves next.  A transition moves exactly one piece, the one named by the
*destination* tag.

States are packed into integers as
``t + (k+1) * (p_0 + n*p_1 + ... + n**k * p_k)``.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Sequence

from .graph import UNREACHABLE, DistanceMatrix, Graph, apsp


class Rule(enum.IntEnum):
    CLASSIC = 0
    ZOMBIE = 1


class State(NamedTuple):
    positions: tuple[int, ...]
    tag: int


def is_capture(s: State) -> bool:
    robber = s.positions[0]
    return any(p == robber for p in s.positions[1:])


class MoveRule:
    """Movement rule; the zombie rule carries the graph's distance matrix."""

    def __init__(self, variant: Rule = Rule.CLASSIC, distances: DistanceMatrix | None = None):
        self.variant = Rule(variant)
        if self.variant is Rule.ZOMBIE and distances is None:
            raise ValueError("the zombie rule needs a distance matrix")
        self.distances = distances

    @classmethod
    def classic(cls) -> MoveRule:
        return cls(Rule.CLASSIC)

    @classmethod
    def zombie(cls, g: Graph) -> MoveRule:
        return cls(Rule.ZOMBIE, apsp(g))

    def __repr__(self) -> str:
        return f"MoveRule({self.variant.name})"


class TransitionSystem:
    """Implicit move graph over all ``(k+1) * n**(k+1)`` states."""

    def __init__(self, graph: Graph, k: int, rule: MoveRule | None = None):
        if k < 1:
            raise ValueError(f"need at least one cop, got k={k}")
        if graph.n < 1:
            raise ValueError("need a non-empty graph")
        rule = rule or MoveRule.classic()
        if rule.variant is Rule.ZOMBIE and rule.distances.n != graph.n:
            raise ValueError("distance matrix does not match the graph")
        self.graph = graph
        self.k = k
        self.rule = rule
        self.n = n = graph.n
        self.pieces = k + 1
        self.state_count = (k + 1) * n ** (k + 1)
        # stride[j]: index step for moving piece j by one vertex
        self.stride = tuple((k + 1) * n**j for j in range(k + 1))
        self.closed = tuple(tuple(sorted((v, *graph.adjacency[v]))) for v in range(n))
        if rule.variant is Rule.ZOMBIE:
            self.zombie_moves, self.zombie_preds = self._zombie_tables()

    def _zombie_tables(self):
        d = self.rule.distances.rows
        adj = self.graph.adjacency
        n = self.n
        moves = [[()] * n for _ in range(n)]
        preds = [[()] * n for _ in range(n)]
        for r in range(n):
            for c in range(n):
                dc = d[c][r]
                if dc == UNREACHABLE or dc == 0:
                    moves[c][r] = (c,)
                else:
                    moves[c][r] = tuple(u for u in adj[c] if d[u][r] == dc - 1)
            for v in range(n):
                dv = d[v][r]
                if dv == UNREACHABLE:
                    preds[v][r] = (v,)
                else:
                    before = [c for c in adj[v] if d[c][r] == dv + 1]
                    if dv == 0:
                        before.append(v)
                    preds[v][r] = tuple(sorted(before))
        return moves, preds

    # -- encoding ---------------------------------------------------------------

    def encode(self, s: State) -> int:
        pos, t = s
        if len(pos) != self.pieces:
            raise ValueError(f"expected {self.pieces} positions, got {len(pos)}")
        if not 0 <= t <= self.k:
            raise ValueError(f"tag {t} out of range 0..{self.k}")
        idx = 0
        for p in reversed(pos):
            if not 0 <= p < self.n:
                raise ValueError(f"position {p} out of range 0..{self.n - 1}")
            idx = idx * self.n + p
        return t + self.pieces * idx

    def decode(self, i: int) -> State:
        if not 0 <= i < self.state_count:
            raise IndexError(f"state index {i} out of range 0..{self.state_count - 1}")
        i, t = divmod(i, self.pieces)
        pos = []
        for _ in range(self.pieces):
            i, p = divmod(i, self.n)
            pos.append(p)
        return State(tuple(pos), t)

    def make_state(self, robber: int, cops: Sequence[int], tag: int) -> State:
        return State((robber, *cops), tag)

    # -- moves -------------------------------------------------------------------

    def next_mover(self, s: State) -> int:
        return (s.tag + 1) % self.pieces

    def legal_piece_moves(self, s: State, j: int) -> tuple[int, ...]:
        """Destinations of piece ``j`` from ``s``, ascending."""
        if j != self.next_mover(s):
            raise ValueError(f"piece {j} is not to move in {s}")
        here = s.positions[j]
        if j == 0 or self.rule.variant is Rule.CLASSIC:
            return self.closed[here]
        return self.zombie_moves[here][s.positions[0]]

    def enumerate_out(self, q: State) -> list[State]:
        j = self.next_mover(q)
        pos = list(q.positions)
        out = []
        for v in self.legal_piece_moves(q, j):
            pos[j] = v
            out.append(State(tuple(pos), j))
        return out

    def _pred_positions(self, j: int, here: int, robber: int) -> tuple[int, ...]:
        if j == 0 or self.rule.variant is Rule.CLASSIC:
            return self.closed[here]
        return self.zombie_preds[here][robber]

    def enumerate_in(self, s: State) -> list[State]:
        j = s.tag
        prev = (j - 1) % self.pieces
        pos = list(s.positions)
        out = []
        for c in self._pred_positions(j, pos[j], pos[0]):
            pos[j] = c
            out.append(State(tuple(pos), prev))
        return out

    def out_degree(self, s: State) -> int:
        return len(self.legal_piece_moves(s, self.next_mover(s)))
