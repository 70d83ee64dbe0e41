"""Exhaustive reference solvers for small instances.

Everything here enumerates node-simple paths edge by edge, so two parallel
edges give two distinct paths. Restricting to simple paths loses nothing:
cutting a cycle out of a walk shortens it and never adds a color or an
interchange.

Nothing in this module uses :mod:`kdiameter.pathfind`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .cnf import CnfFormula
from .core import ColoredGraph, Length, PathResult, line_count
from .errors import BudgetExceeded, InvalidK

INF = math.inf


@dataclass(frozen=True)
class EnumerationBudget:
    max_nodes: int = 12
    max_paths: int = 10**7

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_paths <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = EnumerationBudget()


def _guard(g: ColoredGraph, budget: EnumerationBudget, force: bool) -> None:
    if g.n > budget.max_nodes and not force:
        raise BudgetExceeded(
            f"{g.n} nodes exceeds oracle budget of {budget.max_nodes}; pass force to override"
        )


def walk_simple_paths(g, s, visit, budget=DEFAULT_BUDGET, prune=None):
    """Call ``visit(nodes, edge_ids, length, interchanges, color_count)`` for
    every node-simple path starting at ``s``, the empty path included.

    ``prune(interchanges, color_count)`` may return True to skip a prefix and
    all its extensions; only use it for constraints that never recover once
    violated.
    """
    adj = g.adjacency
    on_path = [False] * g.n
    nodes = [s]
    eids: list[int] = []
    color_uses = [0] * len(g.color_names)
    counter = [0]
    on_path[s] = True

    def rec(v, length, last, inter, ncolors):
        counter[0] += 1
        if counter[0] > budget.max_paths:
            raise BudgetExceeded(f"more than {budget.max_paths} paths enumerated")
        visit(nodes, eids, length, inter, ncolors)
        for w, elen, c, idx in adj[v]:
            if on_path[w]:
                continue
            ni = inter + (last is not None and c != last)
            nc = ncolors + (color_uses[c] == 0)
            if prune is not None and prune(ni, nc):
                continue
            on_path[w] = True
            nodes.append(w)
            eids.append(idx)
            color_uses[c] += 1
            rec(w, length + elen, c, ni, nc)
            color_uses[c] -= 1
            eids.pop()
            nodes.pop()
            on_path[w] = False

    rec(s, 0, None, 0, 0)
    return counter[0]


def _best_path(g, s, t, feasible, budget, force, prune=None) -> PathResult | None:
    _guard(g, budget, force)
    g.check_node(s)
    g.check_node(t)
    best = [None]

    def visit(nodes, eids, length, inter, ncolors):
        if nodes[-1] != t or not feasible(inter, ncolors):
            return
        key = (length, inter, tuple(nodes), tuple(eids))
        if best[0] is None or key < best[0]:
            best[0] = key

    walk_simple_paths(g, s, visit, budget, prune)
    if best[0] is None:
        return None
    _, _, nodes, eids = best[0]
    return PathResult(nodes, tuple(g.edges[i] for i in eids))


def brute_interchange_constrained(
    g: ColoredGraph, s: int, t: int, k: int, budget=DEFAULT_BUDGET, force=False
) -> PathResult | None:
    """Shortest path with at most ``k - 1`` interchanges, by full enumeration."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    return _best_path(g, s, t, lambda i, c: i <= k - 1, budget, force)


def brute_color_constrained(
    g: ColoredGraph, s: int, t: int, k: int, budget=DEFAULT_BUDGET, force=False
) -> PathResult | None:
    """Shortest path using at most ``k`` distinct colors, by full enumeration."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    # the color count of a prefix never decreases, so over-budget prefixes are dead
    return _best_path(
        g, s, t, lambda i, c: c <= k, budget, force, prune=lambda i, c: c > k
    )


@dataclass(frozen=True)
class PairTable:
    """Per target: best length by exact interchange count and by exact color count."""

    by_interchanges: dict[int, Length]
    by_colors: dict[int, Length]

    def interchange_constrained(self, k: int) -> Length | float:
        return min((l for i, l in self.by_interchanges.items() if i <= k - 1), default=INF)

    def color_constrained(self, k: int) -> Length | float:
        return min((l for c, l in self.by_colors.items() if c <= k), default=INF)


def brute_source_tables(
    g: ColoredGraph, s: int, budget=DEFAULT_BUDGET, force=False
) -> list[PairTable]:
    """Enumerate all simple paths from ``s`` once and tabulate both constraints."""
    _guard(g, budget, force)
    g.check_node(s)
    by_i: list[dict[int, Length]] = [{} for _ in range(g.n)]
    by_c: list[dict[int, Length]] = [{} for _ in range(g.n)]

    def visit(nodes, eids, length, inter, ncolors):
        t = nodes[-1]
        row = by_i[t]
        if length < row.get(inter, INF):
            row[inter] = length
        row = by_c[t]
        if length < row.get(ncolors, INF):
            row[ncolors] = length

    walk_simple_paths(g, s, visit, budget)
    return [PairTable(a, b) for a, b in zip(by_i, by_c)]


def interchange_budget_range(g: ColoredGraph) -> range:
    """Budgets ``1..max(1, n-1)``; beyond ``n - 1`` nothing changes."""
    return range(1, max(1, g.n - 1) + 1)


def brute_diameter_sequences(
    g: ColoredGraph, budget=DEFAULT_BUDGET, force=False
) -> tuple[list[Length | None], list[Length | None]]:
    """Exact ``(di_k for k in 1..max(1, n-1), dc_k for k in 1..|C|)``.

    Each value is the maximum finite constrained distance over ordered
    pairs of distinct nodes; ``None`` when no pair is connected under ``k``.
    """
    _guard(g, budget, force)
    ks_i = interchange_budget_range(g)
    ks_c = range(1, max(1, line_count(g)) + 1)
    di: list[Length | None] = [None] * len(ks_i)
    dc: list[Length | None] = [None] * len(ks_c)
    for s in g.nodes:
        tables = brute_source_tables(g, s, budget, force)
        for t, table in enumerate(tables):
            if t == s:
                continue
            for j, k in enumerate(ks_i):
                d = table.interchange_constrained(k)
                if d != INF and (di[j] is None or d > di[j]):
                    di[j] = d
            for j, k in enumerate(ks_c):
                d = table.color_constrained(k)
                if d != INF and (dc[j] is None or d > dc[j]):
                    dc[j] = d
    return di, dc


def brute_sat(f: CnfFormula, max_variables: int = 20) -> dict[int, bool] | None:
    """First satisfying assignment in the order all-false, ..., all-true."""
    n = f.variable_count
    if n > max_variables:
        raise BudgetExceeded(f"{n} variables exceeds brute-force limit {max_variables}")
    for bits in itertools.product((False, True), repeat=n):
        assignment = {i + 1: b for i, b in enumerate(bits)}
        if f.satisfied_by(assignment):
            return assignment
    return None

