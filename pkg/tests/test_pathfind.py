import math
import warnings

import pytest
from hypothesis import given

from kdiameter.core import build_graph
from kdiameter.errors import InvalidK, UnknownNode
from kdiameter.netgen import paper_network
from kdiameter.oracle import brute_interchange_constrained, brute_source_tables
from kdiameter.pathfind import (
    all_budget_distances,
    color_blind_distances,
    effective_budget,
    interchange_constrained_shortest_path,
    lexicographic_sweep,
    min_interchanges_among_shortest_paths,
    pareto_sweep,
)

from .conftest import colored_graphs

A0, C2 = 0, 11  # network (3)
A, D = 0, 3  # networks (4) and (5)


def test_network1_end_to_end():
    g = paper_network(1)
    assert interchange_constrained_shortest_path(g, 0, 11, 3).total_length == 11
    # three line segments; one line cannot cover the chain (brute force agrees)
    assert interchange_constrained_shortest_path(g, 0, 11, 1) is None
    assert brute_interchange_constrained(g, 0, 11, 1) is None


def test_network5_single_line_covers_diameter():
    p = interchange_constrained_shortest_path(paper_network(5), A, D, 1)
    assert (p.total_length, p.interchanges, p.distinct_colors) == (3, 0, 1)


@pytest.mark.filterwarnings("ignore:k=")
@given(colored_graphs())
def test_same_node_is_empty_path(g):
    for k in (1, 2, 5):
        p = interchange_constrained_shortest_path(g, 0, 0, k)
        assert (p.total_length, p.interchanges, p.edges) == (0, 0, ())


def test_argument_errors():
    g = paper_network(4)
    with pytest.raises(InvalidK):
        interchange_constrained_shortest_path(g, 0, 1, 0)
    with pytest.raises(UnknownNode):
        interchange_constrained_shortest_path(g, 0, 99, 1)
    with pytest.raises(UnknownNode):
        all_budget_distances(g, -1)
    with pytest.raises(UnknownNode):
        min_interchanges_among_shortest_paths(g, 0, 6)


def test_large_k_is_capped_with_warning():
    g = paper_network(4)
    with pytest.warns(UserWarning):
        assert effective_budget(g, 50) == 5
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert effective_budget(g, 5) == 5
    with pytest.warns(UserWarning):
        p = interchange_constrained_shortest_path(g, A, D, 50)
    assert p.total_length == 3


def test_first_edge_is_not_an_interchange():
    g = build_graph(2, [(0, 1, 1, "red")])
    assert interchange_constrained_shortest_path(g, 0, 1, 1).interchanges == 0


def test_prefers_longer_single_line_under_tight_budget():
    # length 2 needs one change (0-3-2); the all-red route 0-4-5-2 has length 3
    g = build_graph(6, [
        (0, 1, 1, "red"), (1, 2, 5, "blue"), (0, 3, 1, "blue"), (3, 2, 1, "green"),
        (0, 4, 1, "red"), (4, 5, 1, "red"), (5, 2, 1, "red"),
    ])
    assert interchange_constrained_shortest_path(g, 0, 2, 2).total_length == 2
    p = interchange_constrained_shortest_path(g, 0, 2, 1)
    assert (p.total_length, p.nodes) == (3, (0, 4, 5, 2))


def test_staircase_network3():
    stairs = all_budget_distances(paper_network(3), A0)
    assert stairs[C2].at(1) == math.inf
    assert stairs[C2].at(2) == math.inf
    assert stairs[C2].at(3) == 5
    assert stairs[C2].steps == ((1, math.inf), (3, 5))
    assert stairs[A0].steps == ((1, 0),)


def test_single_color_staircase_is_flat():
    g = build_graph(5, [(i, i + 1, 1, "only") for i in range(4)])
    for s in g.nodes:
        for t, stairs in all_budget_distances(g, s).items():
            assert len(stairs.steps) == 1
            assert stairs.at(1) == abs(s - t)


def test_network2_staircase_matches_enumeration():
    g = paper_network(2)
    stairs = all_budget_distances(g, 0)
    # frozen from exhaustive enumeration of simple paths
    expected = [[0, 0, 0, 0], [1, 1, 1, 1], [2, 2, 2, 2],
                [math.inf, 3, 3, 3], [math.inf, 4, 4, 4], [math.inf, math.inf, 5, 5]]
    assert [[stairs[t].at(k) for k in (1, 2, 3, 4)] for t in g.nodes] == expected
    tables = brute_source_tables(g, 0)
    assert [[tables[t].interchange_constrained(k) for k in (1, 2, 3, 4)] for t in g.nodes] == expected


def test_min_interchanges_among_shortest_paths():
    assert min_interchanges_among_shortest_paths(paper_network(4), A, D) == (3, 2)
    assert min_interchanges_among_shortest_paths(paper_network(5), A, D) == (3, 0)
    assert min_interchanges_among_shortest_paths(paper_network(5), 2, 2) == (0, 0)
    g = build_graph(3, [(0, 1, 1, "r")])
    assert min_interchanges_among_shortest_paths(g, 0, 2) is None


@given(colored_graphs())
def test_labels_form_pareto_frontiers(g):
    labels = pareto_sweep(g, 0)
    for node_labels in labels:
        lengths = [l for l, _ in node_labels]
        assert lengths == sorted(lengths)


@given(colored_graphs())
def test_search_matches_enumeration(g):
    for s in g.nodes:
        tables = brute_source_tables(g, s)
        stairs = all_budget_distances(g, s)
        for t in g.nodes:
            for k in range(1, g.n + 1):
                want = tables[t].interchange_constrained(k)
                assert stairs[t].at(k) == want
                if k == g.n:
                    continue
                p = interchange_constrained_shortest_path(g, s, t, k)
                assert (math.inf if p is None else p.total_length) == want
                if p is not None:
                    assert p.is_simple()
                    assert p.interchanges <= k - 1
                    assert p.interchanges >= p.distinct_colors - 1


@given(colored_graphs())
def test_monotone_and_symmetric(g):
    stairs = {s: all_budget_distances(g, s) for s in g.nodes}
    for s in g.nodes:
        for t in g.nodes:
            values = [stairs[s][t].at(k) for k in range(1, g.n + 1)]
            assert values == sorted(values, reverse=True)
            assert values == [stairs[t][s].at(k) for k in range(1, g.n + 1)]


@given(colored_graphs())
def test_budget_n_minus_1_is_unconstrained(g):
    for s in g.nodes:
        blind = color_blind_distances(g, s)
        stairs = all_budget_distances(g, s)
        lex = lexicographic_sweep(g, s)
        for t in g.nodes:
            assert stairs[t].at(max(1, g.n - 1)) == blind[t]
            assert (math.inf if lex[t] is None else lex[t][0]) == blind[t]


@given(colored_graphs())
def test_lexicographic_optimum_matches_enumeration(g):
    from kdiameter.oracle import walk_simple_paths

    best = {}

    def visit(nodes, eids, length, inter, ncolors):
        key = (length, inter)
        if nodes[-1] not in best or key < best[nodes[-1]]:
            best[nodes[-1]] = key

    walk_simple_paths(g, 0, visit)
    lex = lexicographic_sweep(g, 0)
    assert {t: v for t, v in enumerate(lex) if v is not None} == best
