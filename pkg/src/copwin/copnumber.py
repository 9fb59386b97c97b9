"""Cop number by scanning k upwards with the decision procedure."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from .graph import Graph
from .solver import StateSpaceTooLarge, decide
from .statespace import MoveRule, Rule

logger = logging.getLogger(__name__)

COMPLETE = "COMPLETE"
INCONCLUSIVE = "INCONCLUSIVE"  # a solve hit the state cap
BOUNDED = "BOUNDED"  # every k up to k_max lost


@dataclass
class KDecision:
    k: int
    copwin: bool
    witness: tuple[int, ...] | None
    capture_time: int | None
    states_total: int
    enqueue_count: int
    wall_time: float


@dataclass
class CopNumberReport:
    cop_number: int | None
    status: str
    decisions: list[KDecision] = field(default_factory=list)
    witness: tuple[int, ...] | None = None
    error: str | None = None

    @property
    def proven_false(self) -> list[int]:
        return [d.k for d in self.decisions if not d.copwin]


def _rule_for(rule) -> Rule | str | None:
    # zombie rules carry a distance matrix tied to one graph; rebuild per graph
    if isinstance(rule, MoveRule):
        return rule.variant
    return rule


def cop_number(
    graph: Graph,
    rule: MoveRule | Rule | str | None = None,
    k_max: int | None = None,
    *,
    max_states: int | None = None,
) -> CopNumberReport:
    """Least k for which ``decide`` is true.  k = n always wins, so the scan
    ends by then."""
    n = graph.n
    if n < 1:
        raise ValueError("cop number needs a non-empty graph")
    if k_max is not None and not 1 <= k_max <= n:
        raise ValueError(f"k_max must lie in 1..{n}")
    limit = n if k_max is None else k_max
    if isinstance(rule, MoveRule) and rule.distances is not None and rule.distances.n != n:
        rule = rule.variant
    report = CopNumberReport(None, BOUNDED)
    for k in range(1, limit + 1):
        started = time.perf_counter()
        try:
            d = decide(graph, k, rule, max_states=max_states)
        except StateSpaceTooLarge as exc:
            logger.warning("cop number scan stopped at k=%d: %s", k, exc)
            report.status = INCONCLUSIVE
            report.error = str(exc)
            return report
        stats = d.result.stats if d.result is not None else None
        report.decisions.append(
            KDecision(
                k=k,
                copwin=d.copwin,
                witness=d.witness,
                capture_time=d.capture_time,
                states_total=stats.states_total if stats else 0,
                enqueue_count=stats.enqueue_count if stats else 0,
                wall_time=time.perf_counter() - started,
            )
        )
        if d.copwin:
            report.cop_number = k
            report.status = COMPLETE
            report.witness = d.witness
            return report
    return report


def cop_number_by_components(
    graph: Graph,
    rule: MoveRule | Rule | str | None = None,
    *,
    max_states: int | None = None,
) -> CopNumberReport:
    """Sum of the cop numbers of the connected components.

    The witness concatenates per-component witnesses in original labels and
    the per-k table is left empty, since k refers to different graphs.
    """
    rule = _rule_for(rule)
    total = 0
    witness: list[int] = []
    decisions: list[KDecision] = []
    for comp in graph.components():
        sub = graph.subgraph(comp)
        rep = cop_number(sub, rule, max_states=max_states)
        if rep.status != COMPLETE:
            return CopNumberReport(None, rep.status, decisions, None, rep.error)
        total += rep.cop_number
        witness.extend(comp[v] for v in rep.witness)
    return CopNumberReport(total, COMPLETE, decisions, tuple(sorted(witness)))
