"""Immutable simple graphs, edge colorings, components, and serialization.

Vertices are dense 0-based integers; isolated vertices are representable
(``vertex_count`` may exceed the number of touched vertices). Adjacency is
precomputed at construction and all operations are pure, so values can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ColorRangeError, GraphFormatError


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{self.vertex_count - 1}")
            normalized.add(_normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(vertex_count, frozenset(_normalize_edge(u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced on ``vertices``.

        Returns the relabeled graph plus the sorted original ids, so local
        vertex ``j`` corresponds to original id ``ids[j]``.
        """
        ids = tuple(sorted(set(vertices)))
        index = {orig: j for j, orig in enumerate(ids)}
        sub = frozenset(
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return Graph(len(ids), sub), ids


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors ``1..color_count`` to a graph's edges."""

    color_count: int
    assignment: Mapping[tuple[int, int], int]

    def __post_init__(self):
        if self.color_count < 1:
            raise ValueError("color_count must be positive")
        normalized = {}
        for (u, v), color in self.assignment.items():
            if not 1 <= color <= self.color_count:
                raise ColorRangeError(
                    f"color {color} on edge ({u}, {v}) outside 1..{self.color_count}"
                )
            normalized[_normalize_edge(u, v)] = color
        object.__setattr__(self, "assignment", normalized)

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[_normalize_edge(u, v)]

    def edges_of_color(self, color: int) -> list[tuple[int, int]]:
        return sorted(e for e, c in self.assignment.items() if c == color)

    def validate_against(self, g: Graph) -> None:
        """Raise unless this coloring covers exactly the edges of ``g``."""
        if set(self.assignment) != set(g.edges):
            missing = set(g.edges) - set(self.assignment)
            extra = set(self.assignment) - set(g.edges)
            raise ValueError(
                f"coloring does not match edge set (missing {sorted(missing)[:3]}, "
                f"extra {sorted(extra)[:3]})"
            )


@dataclass(frozen=True)
class ComponentLabeling:
    """Dense 0-based component ids, numbered by smallest contained vertex."""

    labels: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)

    def component_of(self, v: int) -> int:
        return self.labels[v]

    def vertex_sets(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            sets[c].add(v)
        return tuple(frozenset(s) for s in sets)


def components(g: Graph) -> ComponentLabeling:
    """Connected components of ``g``, discovered in ascending vertex order."""
    labels = [-1] * g.vertex_count
    sizes: list[int] = []
    for start in range(g.vertex_count):
        if labels[start] != -1:
            continue
        cid = len(sizes)
        stack = [start]
        labels[start] = cid
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for u in g.neighbors(v):
                if labels[u] == -1:
                    labels[u] = cid
                    stack.append(u)
        sizes.append(size)
    return ComponentLabeling(tuple(labels), tuple(sizes))


def color_class(g: Graph, coloring: EdgeColoring, color: int) -> Graph:
    """Spanning subgraph of ``g`` keeping exactly the edges of one color."""
    if not 1 <= color <= coloring.color_count:
        raise ColorRangeError(f"color {color} outside 1..{coloring.color_count}")
    kept = frozenset(e for e in g.edges if coloring.assignment.get(e) == color)
    return Graph(g.vertex_count, kept)


# -- construction helpers ----------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices."""
    return Graph.from_edges(leaves + 1, ((0, v) for v in range(1, leaves + 1)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; vertex ids of later graphs are shifted upward."""
    offset = 0
    total = 0
    edges: list[tuple[int, int]] = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
        total = offset
    return Graph.from_edges(total, edges)


# -- text format -------------------------------------------------------------
#
# One record per line:
#   # comment
#   p cm <N> <k>
#   e <u> <v> <color>
#
# Uncolored graphs are written with k=1 and color 1 on every edge.

def parse_graph(text: str) -> tuple[Graph, EdgeColoring]:
    """Parse the edge-list text format.

    Returns the graph together with its coloring; a ``k=1`` coloring stands
    for an uncolored graph. Errors report the offending 1-based line number.
    """
    vertex_count = None
    color_count = None
    assignment: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if vertex_count is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cm":
                raise GraphFormatError(f"bad header {line!r}", lineno)
            try:
                vertex_count, color_count = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"bad header {line!r}", lineno) from None
            if vertex_count < 0 or color_count < 1:
                raise GraphFormatError("header requires N >= 0 and k >= 1", lineno)
        elif parts[0] == "e":
            if vertex_count is None or color_count is None:
                raise GraphFormatError("edge before header", lineno)
            if len(parts) != 4:
                raise GraphFormatError(f"bad edge line {line!r}", lineno)
            try:
                u, v, color = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"bad edge line {line!r}", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError(
                    f"vertex id out of range 0..{vertex_count - 1}", lineno
                )
            if not 1 <= color <= color_count:
                raise GraphFormatError(
                    f"color {color} outside 1..{color_count}", lineno
                )
            key = _normalize_edge(u, v)
            if key in assignment:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
            assignment[key] = color
        else:
            raise GraphFormatError(f"unknown record {parts[0]!r}", lineno)
    if vertex_count is None or color_count is None:
        raise GraphFormatError("missing 'p cm <N> <k>' header", 1)
    g = Graph(vertex_count, frozenset(assignment))
    return g, EdgeColoring(color_count, assignment)


def serialize(g: Graph, coloring: EdgeColoring | None = None) -> str:
    """Canonical text form: header, then edges in ascending order."""
    if coloring is None:
        coloring = EdgeColoring(1, {e: 1 for e in g.edges})
    coloring.validate_against(g)
    lines = [f"p cm {g.vertex_count} {coloring.color_count}"]
    for u, v in g.sorted_edges():
        lines.append(f"e {u} {v} {coloring.color_of(u, v)}")
    return "\n".join(lines) + "\n"


def to_dot(
    g: Graph,
    coloring: EdgeColoring | None = None,
    classes: Mapping[int, str] | None = None,
) -> str:
    """DOT export: one cluster per component, color and class attributes."""
    labeling = components(g)
    out = ["graph g {"]
    for cid, members in enumerate(labeling.vertex_sets()):
        out.append(f"  subgraph cluster_{cid} {{")
        for v in sorted(members):
            if classes and v in classes:
                out.append(f'    {v} [class="{classes[v]}"];')
            else:
                out.append(f"    {v};")
        out.append("  }")
    for u, v in g.sorted_edges():
        if coloring is not None:
            out.append(f"  {u} -- {v} [color={coloring.color_of(u, v)}];")
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
