"""Simple undirected graphs, the edge-list text format, and the fixture graphs.

Vertices are dense integers ``0..n-1``. Edges are stored normalized as
``(min, max)`` pairs in sorted order; the edge index fixes the qubit layout
of an edge-coloring register, so the order is part of the contract.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError, GraphParseError

__all__ = [
    "Graph",
    "BUILTIN_GRAPHS",
    "builtin_graph",
    "parse_edge_list",
    "render_edge_list",
    "adjacent_edge_pairs",
    "degrees",
    "max_degree",
]


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise GraphError("num_vertices must be nonnegative")
        normalized = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise GraphError(f"edge ({u}, {v}) out of range for {self.num_vertices} vertices")
            normalized.append((min(u, v), max(u, v)))
        dupes = [e for e, c in Counter(normalized).items() if c > 1]
        if dupes:
            raise GraphError(f"parallel edges are not allowed: {dupes}")
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)


# Edge lists transcribed from the fixture figures (vertex labels as drawn).
_BUILTIN_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "gamma1": (5, [(0, 1), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4)]),
    "gamma2": (7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (2, 6), (2, 4)]),
    "gamma3": (6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 4), (2, 5), (2, 4)]),
    "gamma4": (6, [(3, 1), (3, 2), (0, 3), (0, 4), (1, 5), (1, 4), (3, 4), (2, 4)]),
    "gamma5": (7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 4), (3, 4)]),
    "gamma6": (9, [(0, k) for k in range(1, 9)]),
    "frakG": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
}

BUILTIN_GRAPHS: tuple[str, ...] = tuple(_BUILTIN_EDGES)


def builtin_graph(name: str) -> Graph:
    """Return one of the fixture graphs by identifier."""
    try:
        n, edges = _BUILTIN_EDGES[name]
    except KeyError:
        raise GraphError(
            f"unknown graph {name!r}; valid names: {', '.join(BUILTIN_GRAPHS)}"
        ) from None
    return Graph(n, tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"u v"`` lines, with an optional leading ``"n <count>"`` line.

    Blank lines and ``#`` comments are ignored. Without a declared count the
    vertex count is ``max index + 1``. Duplicate edges (in either
    orientation) are merged.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if first and parts[0] == "n":
            if len(parts) != 2:
                raise GraphParseError("expected 'n <count>'", lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if declared < 0:
                raise GraphParseError("negative vertex count", lineno)
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex index", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise GraphParseError(f"vertex {max(u, v)} exceeds declared count {declared}", lineno)
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            edges.append(key)
    if declared is None:
        declared = 1 + max((max(e) for e in edges), default=-1)
    return Graph(declared, tuple(edges))


def render_edge_list(g: Graph) -> str:
    lines = [f"n {g.num_vertices}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def adjacent_edge_pairs(g: Graph) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, of distinct edges sharing a vertex."""
    pairs = []
    for i, j in combinations(range(g.num_edges), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            pairs.append((i, j))
    return pairs


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.num_vertices
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def max_degree(g: Graph) -> int:
    return max(degrees(g), default=0)
