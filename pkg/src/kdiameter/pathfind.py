"""Interchange-constrained shortest paths.

The search runs over states ``(node, last_color)`` and carries labels
``(length, interchanges)``. Taking an edge whose color differs from the
state's last color costs one interchange, except for the first edge out of
the source (last color ``NO_COLOR``). This is a shortest-path run on the
layered graph whose nodes are ``[x, c]`` pairs, without building it.

Labels are popped in lexicographic ``(length, interchanges, node, color)``
order. A popped label is kept only if it has strictly fewer interchanges
than every label already kept at its state, so each state holds a Pareto
frontier sorted by length ascending and interchanges descending.
"""
from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass

from .core import ColoredGraph, Length, PathResult, as_length
from .errors import InvalidK

NO_COLOR = -1
INF = math.inf


def effective_budget(g: ColoredGraph, k: int) -> int:
    """Validate ``k`` and cap it where larger budgets cannot change any answer.

    A node-simple path has at most ``n - 1`` edges and so at most ``n - 2``
    interchanges; any ``k >= n - 1`` is unconstrained.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidK(f"k must be an integer >= 1, got {k!r}")
    cap = max(1, g.n - 1)
    if k > cap:
        warnings.warn(f"k={k} exceeds {cap}; using k={cap} (no further effect)", stacklevel=3)
        return cap
    return k


def _state(v: int, c: int, ncol: int) -> int:
    return v * (ncol + 1) + c + 1


def interchange_constrained_shortest_path(
    g: ColoredGraph, s: int, t: int, k: int
) -> PathResult | None:
    """Shortest ``s``-``t`` path with at most ``k - 1`` interchanges, or ``None``.

    Among shortest feasible paths the one with fewest interchanges is
    returned; remaining ties go to the smallest node and color ids.
    """
    g.check_node(s)
    g.check_node(t)
    k = effective_budget(g, k)
    if s == t:
        return PathResult((s,), ())
    max_i = k - 1
    ncol = len(g.color_names)
    adj = g.adjacency
    best_i = [max_i + 1] * (g.n * (ncol + 1))
    # settled label (v, c, i) -> (previous label, edge index)
    pred: dict[tuple[int, int, int], tuple[tuple[int, int, int] | None, int]] = {}
    heap = [(0, 0, s, NO_COLOR, -1, -1, -1, -1)]
    while heap:
        length, i, v, c, pv, pc, pi, eidx = heapq.heappop(heap)
        st = _state(v, c, ncol)
        if i >= best_i[st]:
            continue
        best_i[st] = i
        pred[(v, c, i)] = ((pv, pc, pi) if pv >= 0 else None, eidx)
        if v == t:
            return _rebuild(g, (v, c, i), pred)
        for w, elen, ecol, idx in adj[v]:
            ni = i if (c == ecol or c == NO_COLOR) else i + 1
            if ni >= best_i[_state(w, ecol, ncol)]:
                continue
            heapq.heappush(heap, (length + elen, ni, w, ecol, v, c, i, idx))
    return None


def _rebuild(g: ColoredGraph, key, pred) -> PathResult:
    nodes = [key[0]]
    edges = []
    while True:
        prev, eidx = pred[key]
        if prev is None:
            break
        edges.append(g.edges[eidx])
        nodes.append(prev[0])
        key = prev
    nodes.reverse()
    edges.reverse()
    return PathResult(tuple(nodes), tuple(edges))


def pareto_sweep(g: ColoredGraph, s: int, max_interchanges: int | None = None):
    """Settle every Pareto-optimal ``(length, interchanges)`` label from ``s``.

    Returns ``labels[t]``: the labels settled at node ``t`` (over all last
    colors) in settlement order, i.e. nondecreasing length.
    """
    g.check_node(s)
    n = g.n
    ncol = len(g.color_names)
    cap = n if max_interchanges is None else max_interchanges + 1
    adj = g.adjacency
    best_i = [cap] * (n * (ncol + 1))
    stride = ncol + 1
    labels: list[list[tuple[Length, int]]] = [[] for _ in range(n)]
    heap = [(0, 0, s, NO_COLOR)]
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        length, i, v, c = pop(heap)
        st = v * stride + c + 1
        if i >= best_i[st]:
            continue
        best_i[st] = i
        labels[v].append((length, i))
        for w, elen, ecol, _ in adj[v]:
            ni = i if (c == ecol or c == NO_COLOR) else i + 1
            if ni < best_i[w * stride + ecol + 1]:
                push(heap, (length + elen, ni, w, ecol))
    return labels


@dataclass(frozen=True)
class Staircase:
    """Distance as a step function of the budget ``k``.

    ``steps`` lists ``(k, distance)`` at each budget where the distance
    strictly improves, starting at ``k = 1``. A leading ``(1, inf)`` marks
    budgets under which the target is unreachable.
    """

    steps: tuple[tuple[int, Length | float], ...]

    def at(self, k: int) -> Length | float:
        value = INF
        for kk, d in self.steps:
            if kk > k:
                break
            value = d
        return value

    @property
    def saturation(self) -> int:
        """Smallest budget from which the distance no longer changes."""
        return self.steps[-1][0]

    @property
    def final(self) -> Length | float:
        return self.steps[-1][1]


def staircase_from_labels(node_labels) -> Staircase:
    steps = []
    min_i = None
    for length, i in node_labels:
        if min_i is None or i < min_i:
            min_i = i
            steps.append((i + 1, length))
    steps.reverse()
    if not steps:
        return Staircase(((1, INF),))
    if steps[0][0] > 1:
        steps.insert(0, (1, INF))
    return Staircase(tuple(steps))


def all_budget_distances(g: ColoredGraph, s: int) -> dict[int, Staircase]:
    """One Pareto sweep from ``s``; ``result[t].at(k)`` is the ``k``-budget distance."""
    labels = pareto_sweep(g, s)
    return {t: staircase_from_labels(labels[t]) for t in g.nodes}


def budget_distance(g: ColoredGraph, s: int, t: int, k: int) -> Length | float:
    path = interchange_constrained_shortest_path(g, s, t, k)
    return INF if path is None else path.total_length


def lexicographic_sweep(g: ColoredGraph, s: int) -> list[tuple[Length, int] | None]:
    """For every target, the minimum ``(length, interchanges)`` in lexicographic order."""
    g.check_node(s)
    n = g.n
    stride = len(g.color_names) + 1
    adj = g.adjacency
    done = [False] * (n * stride)
    result: list[tuple[Length, int] | None] = [None] * n
    heap = [(0, 0, s, NO_COLOR)]
    while heap:
        length, i, v, c = heapq.heappop(heap)
        st = v * stride + c + 1
        if done[st]:
            continue
        done[st] = True
        if result[v] is None:
            result[v] = (length, i)
        for w, elen, ecol, _ in adj[v]:
            if not done[w * stride + ecol + 1]:
                ni = i if (c == ecol or c == NO_COLOR) else i + 1
                heapq.heappush(heap, (length + elen, ni, w, ecol))
    return result


def min_interchanges_among_shortest_paths(
    g: ColoredGraph, s: int, t: int
) -> tuple[Length, int] | None:
    g.check_node(t)
    return lexicographic_sweep(g, s)[t]


def color_blind_distances(g: ColoredGraph, s: int) -> list[Length | float]:
    """Plain Dijkstra ignoring colors."""
    g.check_node(s)
    dist: list[Length | float] = [INF] * g.n
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for w, elen, _, _ in g.adjacency[v]:
            nd = d + elen
            if nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return [as_length(d) if d != INF else INF for d in dist]
