"""Counter-based retrograde analysis for k cops (or zombies) and one robber.

Capture states are seeded as won for the cops and labels are pushed backwards
through the move graph with a FIFO queue.  A cop-to-move predecessor is won
as soon as one successor is; a robber-to-move predecessor keeps a counter of
successors not yet known to be won and falls when it reaches zero.  Because
the queue is FIFO, the order in which states are labeled is also the order of
their optimal capture times, so one pass yields both.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field

from .graph import Graph
from .statespace import MoveRule, Rule, State, TransitionSystem, is_capture

logger = logging.getLogger(__name__)

#: capture_time of states the robber can hold forever
ESCAPE = 0xFFFFFFFF
DEFAULT_MAX_STATES = 2**31


class StateSpaceTooLarge(RuntimeError):
    """The (k+1) * n**(k+1) state space exceeds the configured cap."""

    def __init__(self, n: int, k: int, cap: int):
        self.n, self.k, self.cap = n, k, cap
        self.state_count = (k + 1) * n ** (k + 1)
        super().__init__(
            f"state space (k+1)*n^(k+1) = {k + 1}*{n}^{k + 1} = {self.state_count} "
            f"exceeds the cap of {cap} states"
        )


def as_move_rule(graph: Graph, rule: MoveRule | Rule | str | None) -> MoveRule:
    if isinstance(rule, MoveRule):
        return rule
    if rule is None:
        return MoveRule.classic()
    if isinstance(rule, str):
        rule = Rule[rule.upper()]
    return MoveRule.zombie(graph) if rule is Rule.ZOMBIE else MoveRule.classic()


def check_state_cap(n: int, k: int, max_states: int | None) -> None:
    cap = DEFAULT_MAX_STATES if max_states is None else max_states
    if (k + 1) * n ** (k + 1) > cap:
        raise StateSpaceTooLarge(n, k, cap)


@dataclass
class SolveStats:
    states_total: int
    states_winning: int = 0
    enqueue_count: int = 0
    edge_work: int = 0
    peak_queue: int = 0
    wall_time: float = 0.0

    @property
    def operation_count(self) -> int:
        """Enqueues plus in-neighbour examinations; deterministic."""
        return self.enqueue_count + self.edge_work


@dataclass
class SolveResult:
    system: TransitionSystem
    copswin: bytearray
    capture_time: list[int]
    counter: list[int]
    stats: SolveStats
    order: list[int] | None = field(default=None, repr=False)

    def is_winning(self, s: State) -> bool:
        return bool(self.copswin[self.system.encode(s)])

    def value(self, s: State) -> int:
        return self.capture_time[self.system.encode(s)]

    def rounds(self, s: State) -> int | None:
        """Capture time in full rounds of k+1 piece-moves, rounded up."""
        v = self.value(s)
        if v == ESCAPE:
            return None
        return -(-v // self.system.pieces)


def solve(
    graph: Graph,
    k: int,
    rule: MoveRule | Rule | str | None = None,
    *,
    max_states: int | None = None,
    record_order: bool = False,
) -> SolveResult:
    """Label every state as cop-winning or not, with optimal capture times.

    Capture times count piece-moves: one cop or robber step each.
    """
    if k < 1:
        raise ValueError(f"need at least one cop, got k={k}")
    check_state_cap(graph.n, k, max_states)
    ts = TransitionSystem(graph, k, as_move_rule(graph, rule))
    started = time.perf_counter()
    n, pieces, total = ts.n, ts.pieces, ts.state_count
    npow = [n**j for j in range(pieces)]
    stride = ts.stride
    closed = ts.closed
    zombie = ts.rule.variant is Rule.ZOMBIE
    zpreds = ts.zombie_preds if zombie else None

    win = bytearray(total)
    ct = [ESCAPE] * total
    # one counter per robber-to-move state (tag k), indexed by position code
    counter = [len(c) for c in closed] * npow[k]
    queue: list[int] = []

    for code, cops_rev in enumerate(itertools.product(range(n), repeat=k)):
        # cops_rev = (p_k, ..., p_1); position code = p_0 + n * cop_code
        for p0 in set(cops_rev):
            base = (p0 + n * code) * pieces
            for t in range(pieces):
                win[base + t] = 1
                ct[base + t] = 0
                queue.append(base + t)
    queue.sort()

    head = 0
    peak = len(queue)
    work = 0
    while head < len(queue):
        if len(queue) - head > peak:
            peak = len(queue) - head
        s = queue[head]
        head += 1
        code, t = divmod(s, pieces)
        nt = ct[s] + 1
        if t:
            # cop t moved into s; predecessors are cop-to-move (existential)
            pj = code // npow[t] % n
            step = stride[t]
            base = s - 1 - pj * step
            preds = zpreds[pj][code % n] if zombie else closed[pj]
            work += len(preds)
            for c in preds:
                q = base + c * step
                if not win[q]:
                    win[q] = 1
                    ct[q] = nt
                    queue.append(q)
        else:
            # robber moved into s; predecessors are robber-to-move (universal)
            p0 = code % n
            rbase = code - p0
            preds = closed[p0]
            work += len(preds)
            for c in preds:
                r = rbase + c
                left = counter[r] - 1
                counter[r] = left
                if left == 0:
                    q = r * pieces + k
                    if not win[q]:
                        win[q] = 1
                        ct[q] = nt
                        queue.append(q)

    stats = SolveStats(
        states_total=total,
        states_winning=len(queue),
        enqueue_count=len(queue),
        edge_work=work,
        peak_queue=peak,
        wall_time=time.perf_counter() - started,
    )
    logger.info(
        "solved n=%d k=%d rule=%s: %d/%d winning, %d ops, %.3fs",
        n, k, ts.rule.variant.name, stats.states_winning, total,
        stats.operation_count, stats.wall_time,
    )
    return SolveResult(ts, win, ct, counter, stats, queue if record_order else None)


@dataclass
class Decision:
    copwin: bool
    witness: tuple[int, ...] | None
    capture_time: int | None = None
    result: SolveResult | None = field(default=None, repr=False)

    @property
    def shortcut(self) -> bool:
        """True when decided by k >= n without solving."""
        return self.result is None


def covering_placement(n: int, k: int) -> tuple[int, ...]:
    """Lexicographically least placement with a cop on every vertex (k >= n)."""
    return (0,) * (k - n) + tuple(range(n))


def winning_placement(result: SolveResult) -> tuple[tuple[int, ...], int] | None:
    """Least ``(p_1..p_k)`` winning against every robber start, with the
    capture time against the robber's best start."""
    ts = result.system
    n, k, pieces = ts.n, ts.k, ts.pieces
    win, ct = result.copswin, result.capture_time
    for placement in itertools.product(range(n), repeat=k):
        code = sum(p * n ** (i + 1) for i, p in enumerate(placement))
        idx = [(p0 + code) * pieces for p0 in range(n)]
        if all(win[i] for i in idx):
            return placement, max(ct[i] for i in idx)
    return None


def decide(
    graph: Graph,
    k: int,
    rule: MoveRule | Rule | str | None = None,
    *,
    max_states: int | None = None,
) -> Decision:
    """Whether k pursuers have a winning placement.  ``k >= n`` answers
    immediately with a covering placement and no solve."""
    if k < 1:
        raise ValueError(f"need at least one cop, got k={k}")
    if graph.n < 1:
        raise ValueError("need a non-empty graph")
    if k >= graph.n:
        return Decision(True, covering_placement(graph.n, k), 0)
    result = solve(graph, k, rule, max_states=max_states)
    found = winning_placement(result)
    if found is None:
        return Decision(False, None, None, result)
    return Decision(True, found[0], found[1], result)


# -- strategies ----------------------------------------------------------------


def best_cop_move(result: SolveResult, s: State) -> State:
    """Successor with the least capture time, ties by ascending vertex."""
    ts = result.system
    if ts.next_mover(s) == 0:
        raise ValueError(f"robber to move in {s}")
    if is_capture(s):
        raise ValueError(f"{s} is already a capture")
    if not result.is_winning(s):
        raise ValueError(f"{s} is not cop-winning")
    return min(ts.enumerate_out(s), key=result.value)


def best_robber_move(result: SolveResult, s: State) -> State:
    """Least escaping successor if any, else the one delaying capture longest."""
    ts = result.system
    if ts.next_mover(s) != 0:
        raise ValueError(f"a cop is to move in {s}")
    if is_capture(s):
        raise ValueError(f"{s} is already a capture")
    succ = ts.enumerate_out(s)
    # ESCAPE is the largest value, so maximizing covers both cases;
    # max() keeps the first of equal keys, i.e. the least vertex
    return max(succ, key=result.value)


@dataclass
class Trace:
    placement: tuple[int, ...]
    robber_start: int
    outcome: str  # "CAPTURE" or "ESCAPE"
    states: list[State]
    capture_time: int | None

    @property
    def length(self) -> int:
        """Piece-moves played."""
        return len(self.states) - 1


def trace(
    graph: Graph,
    k: int,
    rule: MoveRule | Rule | str | None = None,
    placement: tuple[int, ...] | None = None,
    robber_start: int | None = None,
    max_steps: int = 1000,
    *,
    max_states: int | None = None,
    result: SolveResult | None = None,
) -> Trace:
    """Play the game out with both sides following the solved strategies.

    A cop-winning start is played to capture, which takes exactly its
    capture time; a robber-winning start is played for ``max_steps``
    piece-moves and reported as an escape.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if result is None:
        result = solve(graph, k, rule, max_states=max_states)
    ts = result.system
    n = ts.n
    if placement is None:
        found = winning_placement(result)
        placement = found[0] if found else (0,) * k
    placement = tuple(placement)
    if len(placement) != k or not all(0 <= p < n for p in placement):
        raise ValueError(f"placement {placement} invalid for k={k}, n={n}")
    if robber_start is None:
        starts = [ts.make_state(p0, placement, 0) for p0 in range(n)]
        robber_start = max(range(n), key=lambda p0: result.value(starts[p0]))
    elif not 0 <= robber_start < n:
        raise ValueError(f"robber start {robber_start} out of range")

    state = ts.make_state(robber_start, placement, 0)
    initial = result.value(state)
    states = [state]
    winning = initial != ESCAPE
    while not is_capture(state):
        if not winning and len(states) > max_steps:
            break
        if ts.next_mover(state) == 0:
            state = best_robber_move(result, state)
        elif winning:
            state = best_cop_move(result, state)
        else:
            # every cop move loses; pick the least destination
            state = ts.enumerate_out(state)[0]
        states.append(state)
    outcome = "CAPTURE" if is_capture(state) else "ESCAPE"
    return Trace(placement, robber_start, outcome, states, None if initial == ESCAPE else initial)
