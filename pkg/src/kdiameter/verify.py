"""Seeded corpora and cross-checks of the polynomial search against the oracle."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cnf import CnfFormula
from .core import ColoredGraph
from .oracle import INF, brute_sat, brute_source_tables, interchange_budget_range
from .pathfind import all_budget_distances, interchange_constrained_shortest_path
from .netgen import random_colored_graph, random_line_network
from .reduction import cnf_to_graph, extract_assignment, witness_path


def corpus_graph(seed: int, max_nodes: int = 10, max_colors: int = 4) -> ColoredGraph:
    """Graph number ``seed`` of the test corpus.

    Even seeds give line networks, odd seeds general colored multigraphs.
    """
    rng = random.Random(seed)
    if seed % 2 == 0:
        while True:
            lines = rng.randint(1, max_colors)
            per_line = rng.randint(2, 4)
            g = random_line_network(lines, per_line, rng.randrange(2**31), transfer_prob=0.35)
            if g.n <= max_nodes:
                return g
    n = rng.randint(2, max_nodes)
    extra = rng.randint(0, n // 2 + 1)
    colors = rng.randint(1, max_colors)
    return random_colored_graph(n, n - 1 + extra, colors, rng.randrange(2**31))


@dataclass
class EquivalenceResult:
    graphs: int = 0
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_graph(g: ColoredGraph, label: str = "", result: EquivalenceResult | None = None,
                per_query: bool = True) -> EquivalenceResult:
    """Compare the search with exhaustive enumeration on every ``(s, t, k)``."""
    result = result or EquivalenceResult()
    result.graphs += 1
    ks = interchange_budget_range(g)
    for s in g.nodes:
        tables = brute_source_tables(g, s)
        sweep = all_budget_distances(g, s)
        for t in g.nodes:
            for k in ks:
                want = tables[t].interchange_constrained(k)
                got_sweep = sweep[t].at(k)
                result.checks += 1
                if got_sweep != want:
                    result.mismatches.append(f"{label} sweep s={s} t={t} k={k}: {got_sweep} != {want}")
                if not per_query:
                    continue
                path = interchange_constrained_shortest_path(g, s, t, k)
                got = INF if path is None else path.total_length
                if got != want:
                    result.mismatches.append(f"{label} path s={s} t={t} k={k}: {got} != {want}")
                elif path is not None and (
                    not path.is_simple() or path.interchanges > k - 1
                    or path.source != s or path.target != t
                ):
                    result.mismatches.append(f"{label} path s={s} t={t} k={k}: bad witness")
    return result


def oracle_equivalence(seeds: int, start: int = 0, per_query: bool = True) -> EquivalenceResult:
    result = EquivalenceResult()
    for seed in range(start, start + seeds):
        check_graph(corpus_graph(seed), f"seed {seed}", result, per_query)
    return result


def random_cnf(seed: int, max_vars: int = 6, max_clauses: int = 8, width: int = 3) -> CnfFormula:
    rng = random.Random(seed)
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_clauses)
    clauses = []
    for _ in range(m):
        size = rng.randint(1, min(width, n))
        chosen = rng.sample(range(1, n + 1), size)
        clauses.append([v if rng.random() < 0.5 else -v for v in chosen])
    return CnfFormula(n, clauses)


@dataclass
class ReductionResult:
    formulas: int = 0
    satisfiable: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def reduction_equivalence(count: int, start: int = 0) -> ReductionResult:
    result = ReductionResult()
    for seed in range(start, start + count):
        f = random_cnf(seed)
        inst = cnf_to_graph(f)
        path = witness_path(inst)
        expected = brute_sat(f) is not None
        result.formulas += 1
        result.satisfiable += expected
        if (path is not None) != expected:
            result.mismatches.append(f"seed {seed}: gadget says {path is not None}, brute force {expected}")
            continue
        if path is None:
            continue
        n, m = f.variable_count, f.clause_count
        if path.total_length != n + m:
            result.mismatches.append(f"seed {seed}: witness length {path.total_length} != {n + m}")
        assignment = extract_assignment(inst, path)
        if not f.satisfied_by(assignment):
            result.mismatches.append(f"seed {seed}: assignment {assignment} fails")
    return result
