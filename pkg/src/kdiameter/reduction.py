"""SAT to color-constrained paths.

For a formula over ``x1..xn`` with clauses ``C1..Cm`` the gadget has nodes
``s, x1..xn, C1..Cm`` (ids ``0``, ``1..n``, ``n+1..n+m``) laid out as a
chain. Consecutive variable nodes are joined by two parallel edges colored
``xi`` and ``¬xi``; consecutive clause nodes (starting from ``xn``) by one
edge per literal of the clause, colored with that literal. The formula is
satisfiable iff some ``s``-``Cm`` path uses at most ``n`` colors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cnf import CnfFormula, literal_name
from .core import ColoredGraph, PathResult, build_graph
from .errors import InfeasiblePathWitness
from .oracle import DEFAULT_BUDGET, EnumerationBudget, brute_color_constrained


@dataclass(frozen=True)
class ReductionInstance:
    formula: CnfFormula
    graph: ColoredGraph
    source: int
    target: int
    budget_k: int
    literal_of_color: dict[int, int]


def cnf_to_graph(f: CnfFormula) -> ReductionInstance:
    n, m = f.variable_count, f.clause_count
    if n < 1 or m < 1:
        raise ValueError("the gadget needs at least one variable and one clause")
    edges = []
    for i in range(1, n + 1):
        edges.append((i - 1, i, 1, literal_name(i)))
        edges.append((i - 1, i, 1, literal_name(-i)))
    for j, clause in enumerate(f.clauses, start=1):
        left, right = n + j - 1, n + j
        for lit in clause:
            edges.append((left, right, 1, literal_name(lit)))
    g = build_graph(n + m + 1, edges)
    literal_of_color = {}
    for i in range(1, n + 1):
        for lit in (i, -i):
            literal_of_color[g.color_id(literal_name(lit))] = lit
    return ReductionInstance(f, g, 0, n + m, n, literal_of_color)


def _gadget_budget(inst: ReductionInstance) -> EnumerationBudget:
    return EnumerationBudget(max(DEFAULT_BUDGET.max_nodes, inst.graph.n), DEFAULT_BUDGET.max_paths)


def witness_path(inst: ReductionInstance, budget=None) -> PathResult | None:
    """A shortest ``s``-``Cm`` path using at most ``n`` colors, if any."""
    budget = budget or _gadget_budget(inst)
    return brute_color_constrained(inst.graph, inst.source, inst.target, inst.budget_k, budget)


def decide_via_gadget(inst: ReductionInstance, budget=None) -> bool:
    return witness_path(inst, budget) is not None


def extract_assignment(inst: ReductionInstance, path: PathResult) -> dict[int, bool]:
    """Read the truth assignment off the variable-chain half of a witness path."""
    n = inst.formula.variable_count
    if path.source != inst.source or path.target != inst.target:
        raise ValueError("path does not run from s to the last clause node")
    assignment = {}
    for e in path.edges[:n]:
        lit = inst.literal_of_color[e.color]
        assignment[abs(lit)] = lit > 0
    if len(assignment) != n or not inst.formula.satisfied_by(assignment):
        raise InfeasiblePathWitness(f"path decodes to non-satisfying assignment {assignment}")
    return assignment
