import random

import pytest

from cayleycolor.chromatic import (
    BudgetExhausted,
    SolveBudget,
    VertexColoring,
    chi_min_bruteforce,
    chi_min_classify,
    chromatic_number,
    clique_number,
    dsatur,
    is_k_colorable,
    max_clique,
    verify_vertex_coloring,
)
from cayleycolor.graphs import Graph, cayley_graph, complete_bipartite, complete_graph, cycle_graph, group_element_list
from cayleycolor.groups import GuardExceeded, make_group
from oracles import chromatic_bruteforce, clique_bruteforce


def random_graph(seed, n, p):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_clique_examples():
    assert len(max_clique(complete_graph(4))) == 4
    assert len(max_clique(cycle_graph(5))) == 2
    assert clique_number(cayley_graph(make_group("cyclic:4"), [2, 1])) == 4
    assert max_clique(Graph(0)) == []


def test_clique_guard():
    with pytest.raises(GuardExceeded):
        max_clique(Graph(257))


def test_k_colorable_examples():
    c5 = cycle_graph(5)
    assert is_k_colorable(c5, 2) is None
    col = is_k_colorable(c5, 3)
    assert col is not None and verify_vertex_coloring(c5, col)[0]
    with pytest.raises(ValueError):
        is_k_colorable(c5, 0)


def test_chromatic_examples():
    G = make_group("sdp:7,3,2")
    g = cayley_graph(G, group_element_list(G, "(1,0),(0,1)"))
    chi, col = chromatic_number(g)
    assert chi == 4 and col.num_colors == 4 and verify_vertex_coloring(g, col)[0]
    assert chromatic_number(complete_graph(4))[0] == 4
    assert chromatic_number(Graph(0))[0] == 0
    assert chromatic_number(Graph(3))[0] == 1


def test_disconnected_components_solved_separately():
    g = Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    chi, col = chromatic_number(g)
    assert chi == 3 and verify_vertex_coloring(g, col)[0]


@pytest.mark.parametrize("seed", range(25))
def test_chromatic_against_bruteforce(seed):
    g = random_graph(seed, 8, 0.3 + 0.02 * seed)
    chi, col = chromatic_number(g)
    assert chi == chromatic_bruteforce(g.n, g.edges)
    assert verify_vertex_coloring(g, col)[0] and col.num_colors == chi
    w = clique_number(g)
    assert w == clique_bruteforce(g.n, g.edges)
    assert w <= chi <= max(dsatur(g)) + 1


def test_verify_examples():
    assert verify_vertex_coloring(cycle_graph(4), [0, 1, 0, 1]) == (True, None)
    assert verify_vertex_coloring(complete_graph(3), [0, 0, 1]) == (False, (0, 1))
    with pytest.raises(ValueError):
        verify_vertex_coloring(cycle_graph(4), [0, 1, 0])


def test_vertex_coloring_closes_gaps():
    col = VertexColoring([0, 5, 2, 5])
    assert col.colors == [0, 2, 1, 2] and col.num_colors == 3


def test_budget_exhaustion_is_not_a_no():
    Q = make_group("dicyclic:32")
    g = cayley_graph(Q, group_element_list(Q, "b^2,a^4,a^5b,a^3b,a^6b"))
    with pytest.raises(BudgetExhausted):
        is_k_colorable(g, 6, SolveBudget(node_limit=1000))
    with pytest.raises(BudgetExhausted) as err:
        chromatic_number(g, SolveBudget(node_limit=1000))
    assert err.value.lower == 4 and err.value.upper >= 7
    assert verify_vertex_coloring(g, err.value.coloring)[0]


def test_budget_validation():
    with pytest.raises(ValueError):
        SolveBudget(time_limit=0)


def test_determinism():
    G = make_group("sdp:7,3,2")
    g = cayley_graph(G, group_element_list(G, "(1,0),(0,1)"))
    runs = {tuple(chromatic_number(g)[1].colors) for _ in range(3)}
    assert len(runs) == 1


def test_chi_min_examples():
    assert chi_min_classify(make_group("cyclic:1")) == 1
    assert chi_min_classify(make_group("sym:3")) == 2
    assert chi_min_classify(make_group("cyclic:5")) == 3
    assert chi_min_bruteforce(make_group("cyclic:5")) == 3
    assert chi_min_bruteforce(make_group("cyclic:4")) == 2
    assert chi_min_bruteforce(make_group("prod:(cyclic:2)x(cyclic:2)")) == 2
    with pytest.raises(GuardExceeded):
        chi_min_bruteforce(make_group("cyclic:17"))


def test_bipartite_graphs():
    assert chromatic_number(complete_bipartite(3, 4))[0] == 2
