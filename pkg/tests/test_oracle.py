import math

import pytest
from hypothesis import given

from kdiameter.cnf import CnfFormula
from kdiameter.core import build_graph
from kdiameter.errors import BudgetExceeded, InvalidK
from kdiameter.netgen import paper_network
from kdiameter.oracle import (
    EnumerationBudget,
    brute_color_constrained,
    brute_diameter_sequences,
    brute_interchange_constrained,
    brute_sat,
    brute_source_tables,
    walk_simple_paths,
)
from kdiameter.reduction import cnf_to_graph

from .conftest import colored_graphs


def alternating_chain():
    return build_graph(5, [(0, 1, 1, "red"), (1, 2, 1, "black"), (2, 3, 1, "red"), (3, 4, 1, "black")])


def test_red_black_red_black_is_two_color_but_not_two_interchange():
    g = alternating_chain()
    p = brute_color_constrained(g, 0, 4, 2)
    assert (p.total_length, p.distinct_colors, p.interchanges) == (4, 2, 3)
    assert brute_interchange_constrained(g, 0, 4, 2) is None
    assert brute_interchange_constrained(g, 0, 4, 4).total_length == 4


def test_network2_endpoints():
    assert brute_interchange_constrained(paper_network(2), 0, 5, 2) is None
    # the largest k=2 distance in network (2) is 4
    assert brute_interchange_constrained(paper_network(2), 0, 4, 2).total_length == 4


def test_same_node():
    p = brute_interchange_constrained(paper_network(3), 4, 4, 1)
    assert p.total_length == 0 and p.edges == ()
    assert brute_color_constrained(paper_network(3), 4, 4, 1).total_length == 0


def test_monochromatic_color_constrained_is_plain_shortest_path():
    g = build_graph(4, [(0, 1, 1, "r"), (1, 2, 1, "r"), (2, 3, 1, "r"), (0, 3, 5, "r")])
    assert brute_color_constrained(g, 0, 3, 1).total_length == 3


def test_gadget_color_constrained_path():
    inst = cnf_to_graph(CnfFormula(2, [[1, 2], [-1]]))
    p = brute_color_constrained(inst.graph, inst.source, inst.target, 2)
    assert {inst.graph.color_names[c] for c in p.colors} == {"¬x1", "x2"}


def test_parallel_edges_are_distinct_paths():
    g = build_graph(3, [(0, 1, 1, "a"), (0, 1, 1, "b"), (1, 2, 1, "a"), (1, 2, 1, "b")])
    ends = []
    walk_simple_paths(g, 0, lambda nodes, eids, *_: ends.append(tuple(eids)) if nodes[-1] == 2 else None)
    assert len(ends) == 4


def test_diameter_sequences():
    di, dc = brute_diameter_sequences(paper_network(3))
    assert di[:3] == [4, 5, 5]
    single = build_graph(2, [(0, 1, 1, "r")])
    assert brute_diameter_sequences(single) == ([1], [1])
    di1, dc1 = brute_diameter_sequences(paper_network(1))
    assert (dc1[0], dc1[2]) == (4, 11)
    assert di1[:3] == dc1


def test_budget_guards():
    big = build_graph(13, [(i, i + 1, 1, "r") for i in range(12)])
    with pytest.raises(BudgetExceeded):
        brute_interchange_constrained(big, 0, 12, 1)
    assert brute_interchange_constrained(big, 0, 12, 1, force=True).total_length == 12
    with pytest.raises(BudgetExceeded):
        brute_source_tables(paper_network(3), 0, EnumerationBudget(max_paths=5))
    with pytest.raises(ValueError):
        EnumerationBudget(max_nodes=0)
    with pytest.raises(InvalidK):
        brute_color_constrained(paper_network(3), 0, 1, 0)


def test_brute_sat():
    assert brute_sat(CnfFormula(1, [[1], [-1]])) is None
    assert brute_sat(CnfFormula(2, [[1, 2], [-1]])) == {1: False, 2: True}
    assert brute_sat(CnfFormula(3, [])) == {1: False, 2: False, 3: False}
    with pytest.raises(BudgetExceeded):
        brute_sat(CnfFormula(21, [[1]]))


@given(colored_graphs(max_nodes=6))
def test_feasible_set_inclusion_and_monotonicity(g):
    for s in g.nodes:
        tables = brute_source_tables(g, s)
        for t in g.nodes:
            pi = [tables[t].interchange_constrained(k) for k in range(1, g.n + 1)]
            pc = [tables[t].color_constrained(k) for k in range(1, g.n + 1)]
            assert pi == sorted(pi, reverse=True)
            assert pc == sorted(pc, reverse=True)
            for a, b in zip(pc, pi):
                assert a <= b


@given(colored_graphs(max_nodes=5))
def test_single_query_solvers_agree_with_tables(g):
    tables = brute_source_tables(g, 0)
    for t in g.nodes:
        for k in (1, 2, 3):
            p = brute_interchange_constrained(g, 0, t, k)
            q = brute_color_constrained(g, 0, t, k)
            assert (math.inf if p is None else p.total_length) == tables[t].interchange_constrained(k)
            assert (math.inf if q is None else q.total_length) == tables[t].color_constrained(k)
            if q is not None:
                assert q.distinct_colors <= k
