"""Command-line interface.

Exit codes: 0 cops win / cop number found, 1 robber wins, 2 usage error,
3 state cap exceeded, 4 I/O or parse error.  Vertices are 1-based in all
input and output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .copnumber import COMPLETE, INCONCLUSIVE, cop_number, cop_number_by_components
from .dump import dumps
from .graph import Graph, GraphError, GraphParseError, parse_generator_spec, read_graph
from .solver import StateSpaceTooLarge, decide, solve, trace, winning_placement
from .statespace import MoveRule

EXIT_COPS, EXIT_ROBBER, EXIT_USAGE, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

logger = logging.getLogger("copwin")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="graph file (1-based labels)")
    src.add_argument("--gen", metavar="KIND[:params]", help="generated graph, e.g. cycle:6, grid:3x4")
    common.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    common.add_argument("--cops", type=int, metavar="K")
    common.add_argument("--rule", choices=("classic", "zombie"), default="classic")
    common.add_argument("--seed", type=int)
    common.add_argument("--max-steps", type=int, default=1000)
    common.add_argument("--max-states", type=int)
    common.add_argument("--out", choices=("json", "tsv", "human"), default="json")
    common.add_argument("--dump", metavar="FILE", help="write the CWIN1 binary dump here")
    common.add_argument("--timings", action="store_true", help="include wall-clock times in the report")

    parser = argparse.ArgumentParser(prog="copwin", description="Cops and Robbers solver")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("decide", parents=[common], help="decide whether K cops win")
    cn = sub.add_parser("copnumber", parents=[common], help="compute the cop number")
    cn.add_argument("--k-max", type=int)
    cn.add_argument("--by-components", action="store_true")
    tr = sub.add_parser("trace", parents=[common], help="play out optimal strategies")
    tr.add_argument("--placement", help="comma-separated cop vertices")
    tr.add_argument("--robber-start", type=int)
    sub.add_parser("gen", parents=[common], help="print the graph")
    sub.add_parser("dump", parents=[common], help="solve and write a CWIN1 dump")
    return parser


def _load_graph(args) -> Graph:
    if args.graph:
        try:
            return read_graph(args.graph, args.format)
        except GraphParseError as exc:
            raise GraphParseError(f"{args.graph}: {exc}") from None
    try:
        return parse_generator_spec(args.gen, seed=args.seed)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _need_cops(args) -> int:
    if args.cops is None:
        raise UsageError(f"{args.command} needs --cops K")
    if args.cops < 1:
        raise UsageError("--cops must be >= 1")
    return args.cops


def _one_based(vertices) -> list[int] | None:
    return None if vertices is None else [v + 1 for v in vertices]


def _rule(args, graph: Graph, report: dict):
    if args.rule == "classic":
        return MoveRule.classic()
    started = time.perf_counter()
    rule = MoveRule.zombie(graph)
    report["apsp_ops"] = graph.n**3
    if args.timings:
        report["apsp_time"] = round(time.perf_counter() - started, 6)
    return rule


def _stats(report: dict, result, args) -> None:
    st = result.stats
    report.update(
        states_total=st.states_total,
        states_winning=st.states_winning,
        enqueue_count=st.enqueue_count,
        edge_work=st.edge_work,
        peak_queue=st.peak_queue,
    )
    if args.timings:
        report["wall_time"] = round(st.wall_time, 6)


def _write_dump(args, result) -> None:
    with open(args.dump, "wb") as fh:
        fh.write(dumps(result))


def _rounds(pieces: int, value: int | None) -> int | None:
    return None if value is None else -(-value // pieces)


def cmd_decide(args, graph: Graph) -> tuple[int, dict]:
    k = _need_cops(args)
    report = {"command": "decide", "n": graph.n, "edges": graph.edge_count, "k": k, "rule": args.rule}
    rule = _rule(args, graph, report)
    if args.dump:
        result = solve(graph, k, rule, max_states=args.max_states)
        found = winning_placement(result)
        copwin, witness, value = (True, *found) if found else (False, None, None)
        shortcut = False
    else:
        d = decide(graph, k, rule, max_states=args.max_states)
        copwin, witness, value, result = d.copwin, d.witness, d.capture_time, d.result
        shortcut = d.shortcut
    report.update(
        copwin=copwin,
        witness_placement=_one_based(witness),
        capture_time=value,
        capture_rounds=_rounds(k + 1, value),
        shortcut=shortcut,
    )
    if result is not None:
        _stats(report, result, args)
        if args.dump:
            _write_dump(args, result)
    return (EXIT_COPS if copwin else EXIT_ROBBER), report


def cmd_copnumber(args, graph: Graph) -> tuple[int, dict]:
    report = {"command": "copnumber", "n": graph.n, "edges": graph.edge_count, "rule": args.rule}
    if graph.n < 1:
        raise UsageError("graph has no vertices")
    if args.k_max is not None and not 1 <= args.k_max <= graph.n:
        raise UsageError(f"--k-max must lie in 1..{graph.n}")
    rule = _rule(args, graph, report)
    if args.by_components:
        rep = cop_number_by_components(graph, rule, max_states=args.max_states)
    else:
        rep = cop_number(graph, rule, args.k_max, max_states=args.max_states)
    table = []
    for d in rep.decisions:
        row = {
            "k": d.k,
            "copwin": d.copwin,
            "witness_placement": _one_based(d.witness),
            "capture_time": d.capture_time,
            "states_total": d.states_total,
            "enqueue_count": d.enqueue_count,
        }
        if args.timings:
            row["wall_time"] = round(d.wall_time, 6)
        table.append(row)
    report.update(
        cop_number=rep.cop_number,
        status=rep.status,
        witness_placement=_one_based(rep.witness),
        proven_false=rep.proven_false,
        per_k=table,
    )
    if rep.error:
        report["error"] = rep.error
    if rep.status == COMPLETE:
        return EXIT_COPS, report
    return (EXIT_CAP if rep.status == INCONCLUSIVE else EXIT_ROBBER), report


def _parse_placement(text: str | None, k: int, n: int) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        verts = tuple(int(x) - 1 for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --placement {text!r}") from None
    if len(verts) != k or not all(0 <= v < n for v in verts):
        raise UsageError(f"--placement needs {k} vertices in 1..{n}")
    return verts


def cmd_trace(args, graph: Graph) -> tuple[int, dict]:
    k = _need_cops(args)
    if args.max_steps < 1:
        raise UsageError("--max-steps must be >= 1")
    placement = _parse_placement(args.placement, k, graph.n)
    start = None
    if args.robber_start is not None:
        if not 1 <= args.robber_start <= graph.n:
            raise UsageError(f"--robber-start must lie in 1..{graph.n}")
        start = args.robber_start - 1
    report = {"command": "trace", "n": graph.n, "edges": graph.edge_count, "k": k, "rule": args.rule}
    rule = _rule(args, graph, report)
    result = solve(graph, k, rule, max_states=args.max_states)
    tr = trace(graph, k, rule, placement, start, args.max_steps, result=result)
    report.update(
        placement=_one_based(tr.placement),
        robber_start=tr.robber_start + 1,
        outcome=tr.outcome,
        length=tr.length,
        capture_time=tr.capture_time,
        states=[_one_based(s.positions) for s in tr.states],
    )
    _stats(report, result, args)
    if args.dump:
        _write_dump(args, result)
    return (EXIT_COPS if tr.outcome == "CAPTURE" else EXIT_ROBBER), report


def cmd_dump(args, graph: Graph) -> tuple[int, dict]:
    if not args.dump:
        raise UsageError("dump needs --dump FILE")
    return cmd_decide(args, graph)


COMMANDS = {"decide": cmd_decide, "copnumber": cmd_copnumber, "trace": cmd_trace, "dump": cmd_dump}


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    rows = report.pop("per_k", None)
    states = report.pop("states", None)

    def cell(v) -> str:
        if v is None:
            return "-"
        if isinstance(v, list):
            return ",".join(str(x) for x in v)
        return str(v).lower() if isinstance(v, bool) else str(v)

    if fmt == "tsv":
        lines = ["\t".join(report), "\t".join(cell(v) for v in report.values())]
        if rows:
            lines.append("")
            lines.append("\t".join(rows[0]))
            lines.extend("\t".join(cell(v) for v in r.values()) for r in rows)
        if states:
            lines.append("")
            lines.append("step\tpositions")
            lines.extend(f"{i}\t{cell(s)}" for i, s in enumerate(states))
        return "\n".join(lines) + "\n"
    lines = [f"{key}: {cell(v)}" for key, v in report.items()]
    for r in rows or ():
        lines.append("  " + "  ".join(f"{key}={cell(v)}" for key, v in r.items()))
    for i, s in enumerate(states or ()):
        lines.append(f"  {i:4d}  robber {s[0]}  cops {cell(s[1:])}")
    return "\n".join(lines) + "\n"


def _setup_logging() -> None:
    level = os.environ.get("COPWIN_LOG", "error").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.ERROR),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_COPS
    try:
        graph = _load_graph(args)
        if args.command == "gen":
            text = graph.to_dimacs() if args.format == "dimacs" else graph.to_edge_list()
            sys.stdout.write(text)
            return EXIT_COPS
        code, report = COMMANDS[args.command](args, graph)
    except UsageError as exc:
        print(f"copwin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StateSpaceTooLarge as exc:
        print(f"copwin: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphParseError, OSError) as exc:
        print(f"copwin: {exc}", file=sys.stderr)
        return EXIT_IO
    except (GraphError, ValueError) as exc:
        print(f"copwin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(_render(report, args.out))
    return code


if __name__ == "__main__":
    sys.exit(main())
