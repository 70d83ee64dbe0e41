"""Edge-colored undirected multigraph.

Nodes are dense integers ``0..n-1``. Every edge has a strictly positive
length and a color (a transit line). Parallel edges are allowed as long as
their colors differ. Lengths are exact: integers stay ``int``, anything
else becomes a :class:`fractions.Fraction`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import (
    DuplicateColoredEdge,
    NodeOutOfRange,
    NonPositiveLength,
    SelfLoop,
    UnknownNode,
)

Length = Union[int, Fraction]


def as_length(value) -> Length:
    """Convert ``value`` to an exact length (``int`` when integral)."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a length")
    if isinstance(value, int):
        frac = Fraction(value)
    elif isinstance(value, float):
        frac = Fraction(repr(value))
    elif isinstance(value, (str, Fraction)):
        frac = Fraction(value)
    else:
        frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return frac


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    length: Length
    color: int

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable edge-colored multigraph.

    Build instances with :func:`build_graph`, which validates input and
    interns color names. ``color_names[c]`` is the display name of color id
    ``c``.
    """

    n: int
    edges: tuple[Edge, ...]
    color_names: tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, Length, int, int], ...], ...]:
        """Per node: ``(neighbor, length, color, edge_index)`` entries."""
        adj: list[list[tuple[int, Length, int, int]]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            adj[e.u].append((e.v, e.length, e.color, idx))
            adj[e.v].append((e.u, e.length, e.color, idx))
        return tuple(tuple(a) for a in adj)

    def color_id(self, name: str) -> int:
        return self.color_names.index(name)

    def check_node(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownNode(f"node {v!r} not in graph with {self.n} nodes")

    def edge_list(self) -> list[tuple[int, int, Length, str]]:
        """Edges as ``(u, v, length, color_name)``, the input form of :func:`build_graph`."""
        return [(e.u, e.v, e.length, self.color_names[e.color]) for e in self.edges]

    def canonical_form(self) -> tuple:
        """Multiset of edges keyed by color name; equal for isomorphic color renamings."""
        return (
            self.n,
            tuple(sorted(
                (min(e.u, e.v), max(e.u, e.v), e.length, self.color_names[e.color])
                for e in self.edges
            )),
        )


def build_graph(node_count: int, edges: Iterable[Sequence]) -> ColoredGraph:
    """Validate an edge list and return a :class:`ColoredGraph`.

    Each edge is ``(u, v, length, color_name)``. Color ids are assigned in
    order of first appearance.
    """
    if node_count < 1:
        raise NodeOutOfRange(f"node count must be >= 1, got {node_count}")
    names: dict[str, int] = {}
    built: list[Edge] = []
    seen: set[tuple[int, int, int]] = set()
    for raw in edges:
        u, v, length, name = raw
        for x in (u, v):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < node_count:
                raise NodeOutOfRange(f"endpoint {x!r} outside 0..{node_count - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at node {u}")
        length = as_length(length)
        if length <= 0:
            raise NonPositiveLength(f"edge {u}-{v} has length {length}")
        name = str(name)
        color = names.setdefault(name, len(names))
        key = (min(u, v), max(u, v), color)
        if key in seen:
            raise DuplicateColoredEdge(f"edge {u}-{v} with color {name!r} given twice")
        seen.add(key)
        built.append(Edge(u, v, length, color))
    return ColoredGraph(node_count, tuple(built), tuple(names))


def is_connected(g: ColoredGraph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w, _, _, _ in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def line_count(g: ColoredGraph) -> int:
    return len({e.color for e in g.edges})


def total_length(g: ColoredGraph) -> Length:
    return as_length(sum((e.length for e in g.edges), Fraction(0)))


@dataclass(frozen=True)
class PathResult:
    """A node-simple path with its length and color statistics.

    ``nodes`` has one more entry than ``edges``; the empty path at ``s``
    has ``nodes == (s,)``.
    """

    nodes: tuple[int, ...]
    edges: tuple[Edge, ...]
    total_length: Length = field(init=False)
    interchanges: int = field(init=False)
    distinct_colors: int = field(init=False)

    def __post_init__(self):
        if len(self.nodes) != len(self.edges) + 1:
            raise ValueError("nodes must have exactly one more entry than edges")
        for a, b, e in zip(self.nodes, self.nodes[1:], self.edges):
            if {a, b} != {e.u, e.v}:
                raise ValueError(f"edge {e} does not join {a} and {b}")
        colors = [e.color for e in self.edges]
        object.__setattr__(self, "total_length", total_length_of(self.edges))
        object.__setattr__(self, "interchanges", count_interchanges(colors))
        object.__setattr__(self, "distinct_colors", len(set(colors)))

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def target(self) -> int:
        return self.nodes[-1]

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(e.color for e in self.edges)

    def is_simple(self) -> bool:
        return len(set(self.nodes)) == len(self.nodes)

    def describe(self, g: ColoredGraph) -> str:
        if not self.edges:
            return f"{self.source} (empty path)"
        parts = [str(self.nodes[0])]
        for node, e in zip(self.nodes[1:], self.edges):
            parts.append(f"-[{g.color_names[e.color]}]-> {node}")
        return " ".join(parts)


def total_length_of(edges: Iterable[Edge]) -> Length:
    return as_length(sum((e.length for e in edges), Fraction(0)))


def count_interchanges(colors: Sequence[int]) -> int:
    return sum(1 for a, b in zip(colors, colors[1:]) if a != b)


def path_from_edges(source: int, edges: Sequence[Edge]) -> PathResult:
    nodes = [source]
    for e in edges:
        nodes.append(e.other(nodes[-1]))
    return PathResult(tuple(nodes), tuple(edges))
