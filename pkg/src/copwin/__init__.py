"""Solver for Cops and Robbers (and deterministic Zombies and Survivors) on graphs."""

from .copnumber import CopNumberReport, cop_number, cop_number_by_components
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    GraphError,
    GraphParseError,
    apsp,
    generate,
    is_dismantlable,
    parse_dimacs,
    parse_edge_list,
)
from .solver import (
    ESCAPE,
    Decision,
    SolveResult,
    StateSpaceTooLarge,
    best_cop_move,
    best_robber_move,
    decide,
    solve,
    trace,
)
from .statespace import MoveRule, Rule, State, TransitionSystem, is_capture

__all__ = [
    "CopNumberReport",
    "Decision",
    "DistanceMatrix",
    "ESCAPE",
    "Graph",
    "GraphError",
    "GraphParseError",
    "MoveRule",
    "Rule",
    "SolveResult",
    "State",
    "StateSpaceTooLarge",
    "TransitionSystem",
    "UNREACHABLE",
    "apsp",
    "best_cop_move",
    "best_robber_move",
    "cop_number",
    "cop_number_by_components",
    "decide",
    "generate",
    "is_capture",
    "is_dismantlable",
    "parse_dimacs",
    "parse_edge_list",
    "solve",
    "trace",
]
