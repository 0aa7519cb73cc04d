import itertools
import random

import pytest

from cayleycolor.chromatic import SolveBudget, chromatic_number
from cayleycolor.cycles import CycleCeilingExceeded, cycle_edges
from cayleycolor.graphs import (EdgeColoring, Graph, GraphError, complete_bipartite, complete_graph, cycle_graph,
                               group_element_list, natural_edge_coloring)
from cayleycolor.groups import make_group
from cayleycolor.popular import (
    DescartesGraph,
    SearchStatus,
    cycle_ok,
    degree_violation,
    descartes_graph,
    is_two_pentagon_decomposition,
    iter_edge_colorings,
    natural_coloring_check,
    search_edge_coloring,
    verify_descartes,
    verify_edge_coloring,
)
from oracles import simple_cycles_bruteforce


def colored(graph, colors):
    return EdgeColoring(graph, dict(zip(graph.edges, colors)))


def pentagons():
    k5 = complete_graph(5)
    outer = {tuple(sorted((i, (i + 1) % 5))) for i in range(5)}
    return k5, EdgeColoring(k5, {e: 0 if e in outer else 1 for e in k5.edges})


# ---------------------------------------------------------------- verifier


def test_cycle_ok():
    assert cycle_ok([0, 1, 0, 1], "no-lonely") and cycle_ok([0, 1, 0, 1], "one-popular")
    assert not cycle_ok([0, 0, 1], "no-lonely") and cycle_ok([0, 0, 1], "one-popular")
    assert not cycle_ok([0, 1, 2], "one-popular")
    with pytest.raises(ValueError):
        cycle_ok([0], "lonely")


def test_c4_alternating_passes():
    c4 = cycle_graph(4)
    ec = EdgeColoring(c4, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1})
    for prop in ["no-lonely", "one-popular"]:
        rep = verify_edge_coloring(c4, ec, prop)
        assert rep.passed and rep.mode == "exhaustive" and rep.sufficient


def test_k5_two_pentagons_passes():
    k5, ec = pentagons()
    rep = verify_edge_coloring(k5, ec, "one-popular", "exhaustive", prune=False)
    assert rep.passed and rep.cycles_checked == 37
    assert verify_edge_coloring(k5, ec, "one-popular").passed
    assert is_two_pentagon_decomposition(ec)


def test_rainbow_triangle_fails():
    k3 = complete_graph(3)
    rep = verify_edge_coloring(k3, colored(k3, [0, 1, 2]), "one-popular")
    assert not rep.passed and sorted(rep.violating_cycle) == [0, 1, 2]
    assert "FAIL" in rep.summary()


def test_degree_condition():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    ec = colored(star, [5, 5, 5])
    assert degree_violation(ec) == (0, 5)
    rep = verify_edge_coloring(star, ec, "no-lonely")
    assert not rep.passed and rep.violating_vertex == (0, 5)


def test_modes_and_sufficiency():
    k5, ec = pentagons()
    rep = verify_edge_coloring(k5, ec, "one-popular", "bounded", 4)
    assert rep.passed and rep.mode == "bounded(4)" and not rep.sufficient
    assert "necessary" in rep.summary()
    rep = verify_edge_coloring(k5, ec, "one-popular", "triangles")
    assert rep.passed and rep.mode == "triangles" and rep.cycles_checked == 10
    with pytest.raises(ValueError):
        verify_edge_coloring(k5, ec, "one-popular", "bounded", 2)
    with pytest.raises(ValueError):
        verify_edge_coloring(k5, ec, "one-popular", "sideways")
    with pytest.raises(ValueError):
        verify_edge_coloring(k5, ec, "popular")


def test_bounded_misses_long_violation():
    # C6 with a lonely colour: only the 6-cycle exposes it
    c6 = cycle_graph(6)
    ec = colored(c6, [0, 0, 1, 1, 2, 3])
    assert verify_edge_coloring(c6, ec, "no-lonely", "bounded", 5).passed
    assert not verify_edge_coloring(c6, ec, "no-lonely").passed


def test_coloring_must_match_graph():
    with pytest.raises(GraphError):
        verify_edge_coloring(cycle_graph(4), colored(cycle_graph(5), [0, 1, 0, 1, 2]), "one-popular")


def test_exhaustive_ceiling():
    k5, ec = pentagons()
    with pytest.raises(CycleCeilingExceeded):
        verify_edge_coloring(k5, ec, "one-popular", ceiling=10, prune=False)


def bruteforce_verdict(graph, ec, prop):
    if degree_violation(ec) is not None:
        return False
    for cyc in simple_cycles_bruteforce(graph.n, graph.edges):
        if not cycle_ok([ec[e] for e in cyc], prop):
            return False
    return True


@pytest.mark.parametrize("seed", range(20))
def test_verifier_matches_bruteforce(seed):
    rng = random.Random(seed)
    n = 6 + seed % 2
    g = Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    ec = colored(g, [rng.randrange(4) for _ in g.edges])
    for prop in ["no-lonely", "one-popular"]:
        expect = bruteforce_verdict(g, ec, prop)
        assert verify_edge_coloring(g, ec, prop).passed == expect
        assert verify_edge_coloring(g, ec, prop, prune=False).passed == expect


def test_violating_cycle_really_violates():
    rng = random.Random(7)
    for _ in range(30):
        g = Graph(7, [(u, v) for u, v in itertools.combinations(range(7), 2) if rng.random() < 0.4])
        ec = colored(g, [rng.randrange(6) for _ in g.edges])
        for prop in ["no-lonely", "one-popular"]:
            rep = verify_edge_coloring(g, ec, prop)
            if rep.violating_cycle is not None:
                assert not cycle_ok([ec[e] for e in cycle_edges(rep.violating_cycle)], prop)


# ---------------------------------------------------------------- natural colourings


def test_natural_examples():
    Z4 = make_group("cyclic:4")
    rep = natural_coloring_check(Z4, [2, 1], "one-popular", "exhaustive")
    assert rep.passed and rep.sufficient
    G = make_group("sdp:7,3,2")
    rep = natural_coloring_check(G, group_element_list(G, "(1,0),(0,1)"), "no-lonely")
    assert rep.passed and rep.mode == "bounded(10)"
    Q = make_group("dicyclic:32")
    rep = natural_coloring_check(Q, group_element_list(Q, "b^2,a^4,a^5b,a^3b,a^6b"))
    assert rep.property == "one-popular" and rep.passed


def test_natural_preconditions():
    Z4 = make_group("cyclic:4")
    with pytest.raises(ValueError):
        natural_coloring_check(Z4, [2, 1], "no-lonely")
    with pytest.raises(ValueError):
        natural_coloring_check(Z4, [1, 2], "one-popular")
    assert natural_coloring_check(Z4, [1]).property == "no-lonely"


def test_non_minimal_natural_coloring_can_fail():
    # Z6 with {1,2,3} is not semiminimal in any order; its natural colouring has a rainbow triangle
    Z6 = make_group("cyclic:6")
    ec = natural_edge_coloring(Z6, [1, 2, 3])
    assert not verify_edge_coloring(ec.graph, ec, "one-popular").passed


# ---------------------------------------------------------------- construction


def test_descartes_small_levels():
    d1 = descartes_graph(1)
    assert (d1.graph.n, d1.graph.num_edges) == (1, 0)
    d2 = descartes_graph(2)
    assert d2.graph == cycle_graph(4) and d2.coloring.num_colors == 2
    assert chromatic_number(d2.graph)[0] == 2
    assert verify_edge_coloring(d2.graph, d2.coloring, "one-popular").passed


def test_descartes_level_three_shape():
    d3 = descartes_graph(3)
    assert isinstance(d3, DescartesGraph)
    assert (d3.graph.n, d3.graph.num_edges, d3.coloring.num_colors) == (147, 280, 37)
    assert len(d3.x_set) == 7 and len(d3.copies) == 35
    xs = set(d3.x_set)
    assert all(not (d3.graph.adj[x] & xs) for x in xs)
    for j, (verts, matching) in enumerate(d3.copies):
        assert {d3.coloring[e] for e in matching} == {2 + j}
        assert sorted(d3.coloring.color_class(2 + j)) == sorted(matching)
        assert sorted(a for a, _ in matching) == sorted({a for a, _ in matching})
        assert {b for _, b in matching} == set(verts)
        # canonical: i-th smallest of Y goes to copy vertex i
        assert [b for _, b in sorted(matching)] == list(verts)
    assert degree_violation(d3.coloring) is None
    assert chromatic_number(d3.graph)[0] >= 3


def test_descartes_guard():
    with pytest.raises(ValueError):
        descartes_graph(4)
    with pytest.raises(ValueError):
        descartes_graph(0)


def test_descartes_level_three_evidence():
    rep = verify_descartes(descartes_graph(3), max_len=8)
    assert rep.structure_ok and rep.copies_ok and rep.bounded.passed
    assert rep.rainbow_search.passed and rep.passed
    assert not rep.bounded.pruned


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_descartes_seeded_matchings(seed):
    d = descartes_graph(3, seed=seed)
    assert (d.graph.n, d.graph.num_edges) == (147, 280)
    rep = verify_descartes(d, max_len=6)
    assert rep.passed


def test_descartes_detects_broken_structure():
    d = descartes_graph(3)
    col = dict(d.coloring.color_of)
    verts, matching = d.copies[0]
    col[tuple(sorted(matching[0]))] = col[tuple(sorted(d.copies[1][1][0]))]
    broken = DescartesGraph(d.graph, EdgeColoring(d.graph, col), 3, d.x_set, d.copies, d.prev_order)
    rep = verify_descartes(broken, max_len=4, full_search=False)
    assert not rep.structure_ok and not rep.passed


# ---------------------------------------------------------------- search


def test_k4_minus_edge_not_no_lonely():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert search_edge_coloring(g, "no-lonely", "all").status == SearchStatus.UNSAT


def test_k6_triangles_unsat():
    res = search_edge_coloring(complete_graph(6), "one-popular", "triangles", max_colors=15)
    assert res.status == SearchStatus.UNSAT


def test_k5_two_colours_sat():
    res = search_edge_coloring(complete_graph(5), "one-popular", "all", max_colors=2)
    assert res.status == SearchStatus.SAT
    assert is_two_pentagon_decomposition(res.coloring)
    assert verify_edge_coloring(res.coloring.graph, res.coloring, "one-popular").passed


def test_k5_only_pentagon_pairs():
    sols = list(iter_edge_colorings(complete_graph(5), "one-popular", "all"))
    # the 12 pentagons of K5 pair up with their complements, giving 6 decompositions
    assert len(sols) == 6
    assert all(is_two_pentagon_decomposition(s) for s in sols)


def test_search_results_are_valid():
    for g in [cycle_graph(5), complete_bipartite(2, 3), complete_graph(4)]:
        for prop in ["no-lonely", "one-popular"]:
            res = search_edge_coloring(g, prop)
            if res.status == SearchStatus.SAT:
                assert verify_edge_coloring(g, res.coloring, prop).passed


def test_search_agrees_with_bruteforce_small():
    g = complete_graph(4)
    for prop in ["no-lonely", "one-popular"]:
        found = search_edge_coloring(g, prop).status == SearchStatus.SAT
        exists = any(bruteforce_verdict(g, colored(g, cols), prop)
                     for cols in itertools.product(range(3), repeat=g.num_edges))
        assert found == exists


def test_four_cycle_scope_relaxes():
    assert search_edge_coloring(complete_graph(4), "one-popular", "four_cycles").status == SearchStatus.SAT


def test_search_guards_and_budget():
    with pytest.raises(GraphError):
        search_edge_coloring(complete_graph(7), "one-popular", "all")
    with pytest.raises(ValueError):
        search_edge_coloring(complete_graph(4), "one-popular", "pentagons")
    res = search_edge_coloring(complete_graph(6), "one-popular", "triangles", budget=SolveBudget(node_limit=10))
    assert res.status == SearchStatus.BUDGET
