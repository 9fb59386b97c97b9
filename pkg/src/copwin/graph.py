"""Undirected simple graphs: construction, parsing, generators, distances.

Vertices are ``0..n-1`` internally.  Every textual format read or written
here uses 1-based labels.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

logger = logging.getLogger(__name__)

#: Distance reported between vertices in different components.
UNREACHABLE = 2**31 - 1


class GraphError(ValueError):
    """Invalid graph data or generator parameters."""


class GraphParseError(GraphError):
    """Malformed graph text.  ``line`` is 1-based, or None if not line-specific."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a normalized graph from 0-based edges; duplicates collapse."""
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(n, adjacency, sum(len(a) for a in adjacency) // 2)

    def validate(self) -> None:
        """Raise GraphError if any representation invariant is broken."""
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length differs from n")
        total = 0
        for v, nb in enumerate(self.adjacency):
            if list(nb) != sorted(set(nb)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nb:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge {v}->{u}")
            total += len(nb)
        if total != 2 * self.edge_count:
            raise GraphError("edge_count inconsistent with adjacency")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def average_degree(self) -> float:
        return 2 * self.edge_count / self.n if self.n else 0.0

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        queue.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabeled ``vertices[i] -> i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.edge_count}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {tok!r}", lineno) from None


def _check_edge(u: int, v: int, n: int | None, lineno: int) -> None:
    if u < 1 or v < 1 or (n is not None and (u > n or v > n)):
        bound = f"1..{n}" if n is not None else ">= 1"
        raise VertexRangeError(f"vertex label out of range {bound}: {u} {v}", lineno)
    if u == v:
        raise SelfLoopError(f"self-loop {u} {u} (staying put is always allowed)", lineno)


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse ``u v`` lines (1-based), an optional leading ``n <count>`` header
    and ``#`` comments.  Without a header, n is the largest label seen."""
    lines = text.splitlines() if isinstance(text, str) else text
    n: int | None = None
    seen_edge = False
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if n is not None or seen_edge:
                raise GraphParseError("the 'n' header must come first and only once", lineno)
            if len(toks) != 2:
                raise GraphParseError("header must be 'n <count>'", lineno)
            n = _int_token(toks[1], lineno)
            if n < 0:
                raise GraphParseError("vertex count must be non-negative", lineno)
            continue
        if len(toks) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int_token(toks[0], lineno), _int_token(toks[1], lineno)
        _check_edge(u, v, n, lineno)
        edges.append((u - 1, v - 1))
        seen_edge = True
    if n is None:
        n = max((max(e) + 1 for e in edges), default=0)
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str | Iterable[str]) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` text."""
    lines = text.splitlines() if isinstance(text, str) else text
    n: int | None = None
    m = 0
    edges = []
    for lineno, raw in enumerate(lines, 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise GraphParseError("problem line must be 'p edge <n> <m>'", lineno)
            n, m = _int_token(toks[2], lineno), _int_token(toks[3], lineno)
            if n < 0:
                raise GraphParseError("vertex count must be non-negative", lineno)
        elif toks[0] == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            if len(toks) != 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int_token(toks[1], lineno), _int_token(toks[2], lineno)
            _check_edge(u, v, n, lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"unknown line type {toks[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line 'p edge <n> <m>'")
    g = Graph.from_edges(n, edges)
    if g.edge_count != m:
        logger.warning("DIMACS header declares %d edges, found %d distinct", m, g.edge_count)
    return g


def read_graph(path: str, fmt: str = "edgelist") -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise GraphError(f"unknown graph format {fmt!r}")


# -- generators ----------------------------------------------------------------

GENERATORS = ("path", "cycle", "complete", "star", "grid", "petersen", "random_gnp")


def _need(kind: str, params: tuple, count: int) -> None:
    if len(params) != count:
        raise GraphError(f"{kind} takes {count} parameter(s), got {len(params)}")


def generate(kind: str, *params, seed: int | None = None) -> Graph:
    """Build a graph from a named family.

    ``path n``, ``cycle n`` (n >= 3), ``complete n``, ``star leaves``
    (K_{1,leaves}, center 0), ``grid rows cols``, ``petersen``,
    ``random_gnp n p`` (requires ``seed``).

    ``random_gnp`` draws one ``random.Random(seed).random()`` per vertex pair
    ``(u, v)``, ``u < v``, in lexicographic order, and keeps the edge when the
    draw is below ``p``.
    """
    if kind == "path":
        _need(kind, params, 1)
        n = int(params[0])
        if n < 1:
            raise GraphError("path needs n >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        _need(kind, params, 1)
        n = int(params[0])
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "complete":
        _need(kind, params, 1)
        n = int(params[0])
        if n < 1:
            raise GraphError("complete needs n >= 1")
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if kind == "star":
        _need(kind, params, 1)
        leaves = int(params[0])
        if leaves < 0:
            raise GraphError("star needs leaves >= 0")
        return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
    if kind == "grid":
        _need(kind, params, 2)
        rows, cols = int(params[0]), int(params[1])
        if rows < 1 or cols < 1:
            raise GraphError("grid needs rows, cols >= 1")
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph.from_edges(rows * cols, edges)
    if kind == "petersen":
        _need(kind, params, 0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, 5 + i) for i in range(5)]
        return Graph.from_edges(10, outer + inner + spokes)
    if kind == "random_gnp":
        _need(kind, params, 2)
        n, p = int(params[0]), float(params[1])
        if n < 1 or not 0.0 <= p <= 1.0:
            raise GraphError("random_gnp needs n >= 1 and 0 <= p <= 1")
        if seed is None:
            raise GraphError("random_gnp needs an explicit seed")
        rng = random.Random(seed)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return Graph.from_edges(n, edges)
    raise GraphError(f"unknown graph family {kind!r}; choose from {', '.join(GENERATORS)}")


def parse_generator_spec(spec: str, seed: int | None = None) -> Graph:
    """``KIND[:p1[:p2]]``; grid also accepts ``grid:RxC``."""
    kind, _, rest = spec.partition(":")
    params: list[str] = []
    if rest:
        params = rest.replace("x", ":").split(":") if kind == "grid" else rest.split(":")
    try:
        return generate(kind, *params, seed=seed)
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad generator parameters in {spec!r}: {exc}") from None


# -- distances and dismantling --------------------------------------------------


class DistanceMatrix:
    """Hop distances; ``UNREACHABLE`` across components."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.n = len(self.rows)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]

    def __eq__(self, other) -> bool:
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def diameter(self) -> int:
        """Largest finite distance."""
        return max((d for r in self.rows for d in r if d != UNREACHABLE), default=0)


def apsp(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances by Floyd-Warshall over a dense matrix."""
    n = g.n
    big = np.iinfo(np.int64).max // 4
    d = np.full((n, n), big, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for w in range(n):
        np.minimum(d, d[:, w, None] + d[None, w, :], out=d)
    d[d >= big] = UNREACHABLE
    return DistanceMatrix(d.tolist())


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_dismantlable(g: Graph) -> tuple[bool, list[int] | None]:
    """Greedy dominated-vertex elimination on a connected graph.

    Deleting a dominated vertex never destroys dismantlability, so taking the
    least dominated vertex each round is complete.  Returns the deletion order
    when the graph reduces to a single vertex.
    """
    if g.n < 1:
        raise GraphError("dismantlability needs at least one vertex")
    if not g.is_connected():
        raise GraphError("dismantlability is only defined here for connected graphs")
    alive = set(range(g.n))
    closed = {v: set(g.adjacency[v]) | {v} for v in alive}
    order = []
    while len(alive) > 1:
        for u in sorted(alive):
            nu = closed[u]
            if any(v != u and nu <= closed[v] for v in nu):
                break
        else:
            return False, None
        order.append(u)
        alive.remove(u)
        for v in closed.pop(u):
            if v != u:
                closed[v].discard(u)
    return True, order
