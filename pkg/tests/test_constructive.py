import pytest

from cayleycolor.chromatic import chromatic_number, verify_vertex_coloring
from cayleycolor.constructive import (
    DihedralContext,
    InconsistentInput,
    _walk_cycle,
    cycle_colors,
    dedekind_three_coloring,
    frattini_three_coloring,
    generalized_dihedral_three_coloring,
    lift_coloring,
    lifted_connection_set,
    schreier_factors,
    schreier_product_coloring,
    sum_mod_coloring,
)
from cayleycolor.corpus import catalogue, group
from cayleycolor.genset import enumerate_minimal_generating_sets
from cayleycolor.graphs import cayley_graph, complete_graph, group_element_list
from cayleycolor.groups import GroupError, classify_group, coset_index, frattini_subgroup, make_group, quotient, subgroup_closure


def proper(G, C, col):
    return verify_vertex_coloring(cayley_graph(G, C), col)[0]


# ---------------------------------------------------------------- lift


def test_lift_trivial_subgroup_returns_same_coloring():
    G = make_group("cyclic:6")
    N = subgroup_closure(G, [])
    col = lift_coloring(G, N, [1], [0, 1, 0, 1, 0, 1])
    assert col.colors == [0, 1, 0, 1, 0, 1]


def test_lift_z4_parity():
    Z4 = make_group("cyclic:4")
    N = subgroup_closure(Z4, [2])
    col = lift_coloring(Z4, N, [1], [0, 1])
    assert col.colors == [0, 1, 0, 1]
    assert proper(Z4, [1, 3], col)
    assert lifted_connection_set(Z4, N, [1]) == [1, 3]


def test_lift_q32_frattini():
    Q = make_group("dicyclic:32")
    Phi = frattini_subgroup(Q)
    q = quotient(Q, Phi)
    assert q.group.order == 4
    qcol = chromatic_number(cayley_graph(q.group, [1, 2]))[1]
    assert qcol.num_colors == 2
    col = lift_coloring(Q, Phi, [1, 2], qcol)
    CN = lifted_connection_set(Q, Phi, [1, 2])
    assert len(CN) == 2 * len(Phi)
    assert proper(Q, CN, col)
    ab = group_element_list(Q, "a,b")
    assert set(ab) <= set(CN) and proper(Q, ab, col)
    # constant on cosets
    for block in q.cosets:
        assert len({col[x] for x in block}) == 1


def test_lift_errors():
    S3 = make_group("sym:3")
    with pytest.raises(GroupError):
        lift_coloring(S3, subgroup_closure(S3, group_element_list(S3, "(1 2)")), [1], [0, 1])
    Z4 = make_group("cyclic:4")
    with pytest.raises(GroupError):
        lift_coloring(Z4, subgroup_closure(Z4, [2]), [1], [0, 0])


# ---------------------------------------------------------------- Schreier product


def test_schreier_examples():
    V = make_group("prod:(cyclic:2)x(cyclic:2)")
    C = group_element_list(V, "(1,0),(0,1)")
    col = schreier_product_coloring(V, C)
    assert col.num_colors == 2 and proper(V, C, col)
    Z9 = make_group("cyclic:9")
    col = schreier_product_coloring(Z9, [1])
    assert col.num_colors == 3 and proper(Z9, [1], col)


def test_schreier_order_21():
    G = make_group("sdp:7,3,2")
    C = group_element_list(G, "(1,0),(0,1)")
    factors = schreier_factors(G, C)
    chis = [chromatic_number(f.graph)[0] for f in factors]
    col = schreier_product_coloring(G, C)
    assert proper(G, C, col) and col.num_colors <= max(chis)


def test_schreier_requires_minimal():
    with pytest.raises(GroupError):
        schreier_product_coloring(make_group("cyclic:4"), [2, 1])


def test_star_factors_are_complete():
    S4 = make_group("sym:4")
    C = group_element_list(S4, "(1 2),(1 3),(1 4)")
    assert all(f.graph == complete_graph(4) for f in schreier_factors(S4, C))
    col = schreier_product_coloring(S4, C)
    assert col.num_colors <= 4 and proper(S4, C, col)


def test_sum_mod_lemma_on_grid():
    # C3 x C5 grid: proper factor colourings combine into a proper colouring
    f1, f2 = [0, 1, 2], [0, 1, 0, 1, 2]
    coords = [[x // 5 for x in range(15)], [x % 5 for x in range(15)]]
    colors = sum_mod_coloring([f1, f2], coords, 3)
    for x in range(15):
        a, b = divmod(x, 5)
        for y in [((a + 1) % 3) * 5 + b, a * 5 + (b + 1) % 5]:
            assert colors[x] != colors[y]


# ---------------------------------------------------------------- Dedekind


def test_cycle_colors():
    assert cycle_colors(1) == [0]
    assert cycle_colors(2) == [0, 1]
    assert cycle_colors(4) == [0, 1, 0, 1]
    assert cycle_colors(5) == [0, 1, 0, 1, 2]
    assert cycle_colors(5, 2) == [0, 1, 2, 0, 1]
    for m in range(3, 12):
        for j in range(m):
            c = cycle_colors(m, j)
            assert all(c[p] != c[(p + 1) % m] for p in range(m))
            assert max(c) <= 2


def test_dedekind_examples():
    V = make_group("prod:(cyclic:2)x(cyclic:2)")
    C = group_element_list(V, "(1,0),(0,1)")
    col = dedekind_three_coloring(V, C)
    assert col.num_colors == 2 and proper(V, C, col)
    Z9 = make_group("cyclic:9")
    col = dedekind_three_coloring(Z9, [1])
    assert col.num_colors == 3 and proper(Z9, [1], col)
    W = make_group("prod:(cyclic:3)x(cyclic:3)")
    C = group_element_list(W, "(1,0),(0,1)")
    col = dedekind_three_coloring(W, C)
    assert col.num_colors <= 3 and proper(W, C, col)


def test_dedekind_odd_cycle_puts_two_on_largest_coset():
    Z5 = make_group("cyclic:5")
    col = dedekind_three_coloring(Z5, [2])
    assert col.colors[4] == 2


def test_dedekind_errors():
    with pytest.raises(GroupError):
        dedekind_three_coloring(make_group("sym:3"), [1, 2])
    with pytest.raises(GroupError):
        dedekind_three_coloring(make_group("cyclic:4"), [2, 1])


@pytest.mark.parametrize("spec", ["dicyclic:8", "prod:(dicyclic:8)x(cyclic:2)", "prod:(dicyclic:8)x(cyclic:3)"])
def test_dedekind_nonabelian(spec):
    G = group(spec)
    assert classify_group(G).dedekind and not G.is_abelian()
    for C in enumerate_minimal_generating_sets(G):
        col = dedekind_three_coloring(G, C)
        assert col.num_colors <= 3 and proper(G, C, col)


def test_dedekind_factors_are_cycles():
    for entry in catalogue(32):
        if entry.order > 24 and entry.abelian:
            continue  # the big abelian families run in the acceptance suite
        G = group(entry.spec)
        if not classify_group(G).dedekind or G.order == 1:
            continue
        for C in enumerate_minimal_generating_sets(G):
            for f in schreier_factors(G, C):
                m = f.graph.n
                assert f.graph.num_edges == (m if m >= 3 else m - 1)
                assert all(len(f.graph.adj[v]) == min(2, m - 1) for v in range(m))
                _walk_cycle(G, f.generator, coset_index(G, f.subgroup), m)


# ---------------------------------------------------------------- generalized dihedral


def test_gdih_examples():
    D5 = make_group("gdih:(cyclic:5)")
    for text in ["(1,0),(0,1)", "(0,1),(1,1)"]:
        C = group_element_list(D5, text)
        ctx = DihedralContext.build(D5, C)
        col = generalized_dihedral_three_coloring(ctx)
        assert col.num_colors <= 3 and proper(D5, C, col)
    ctx = DihedralContext.build(D5, group_element_list(D5, "(0,1),(1,1)"))
    assert ctx.H.order == 5 and ctx.C0 == () and ctx.y == 0
    D3 = make_group("gdih:(cyclic:3)")
    C = group_element_list(D3, "(1,0),(0,1)")
    col = generalized_dihedral_three_coloring(DihedralContext.build(D3, C))
    assert col.num_colors <= 3 and proper(D3, C, col)
    assert chromatic_number(cayley_graph(D3, C))[0] == 3


def test_gdih_formula():
    D = make_group("gdih:(cyclic:6)")
    C = group_element_list(D, "(1,0),(0,1)")
    ctx = DihedralContext.build(D, C)
    col = generalized_dihedral_three_coloring(ctx).colors
    n = 6
    for g in range(n):
        assert (col[g] + 1) % 3 == col[n + (g + ctx.y) % n] or len(set(col)) < 3


def test_gdih_errors():
    D5 = make_group("gdih:(cyclic:5)")
    with pytest.raises(GroupError):
        DihedralContext.build(D5, [1])
    with pytest.raises(GroupError):
        DihedralContext.build(make_group("sym:3"), [1, 2])
    with pytest.raises(GroupError):
        generalized_dihedral_three_coloring(DihedralContext.build(D5, [1, 2, 5]))


def test_gdih_noncyclic_base():
    D = make_group("gdih:(prod:(cyclic:2)x(cyclic:4))")
    for C in enumerate_minimal_generating_sets(D):
        col = generalized_dihedral_three_coloring(DihedralContext.build(D, C))
        assert col.num_colors <= 3 and proper(D, C, col)


# ---------------------------------------------------------------- Frattini


def test_frattini_examples():
    Q = make_group("dicyclic:32")
    C = group_element_list(Q, "a,b")
    col = frattini_three_coloring(Q, C)
    assert col.num_colors <= 3 and proper(Q, C, col)
    Z8 = make_group("cyclic:8")
    col = frattini_three_coloring(Z8, [1])
    assert col.num_colors <= 3 and proper(Z8, [1], col)
    Q8 = make_group("dicyclic:8")
    C = group_element_list(Q8, "a,b")
    col = frattini_three_coloring(Q8, C)
    assert col.num_colors <= 3 and proper(Q8, C, col)


@pytest.mark.parametrize("spec", ["gdih:(cyclic:4)", "dicyclic:16", "prod:(gdih:(cyclic:4))x(cyclic:2)", "sdp:9,3,4"])
def test_frattini_nilpotent_catalogue(spec):
    G = group(spec)
    for C in enumerate_minimal_generating_sets(G):
        col = frattini_three_coloring(G, C)
        assert col.num_colors <= 3 and proper(G, C, col)


def test_frattini_errors():
    with pytest.raises(GroupError):
        frattini_three_coloring(make_group("sym:3"), [1, 2])
    with pytest.raises(GroupError):
        frattini_three_coloring(make_group("cyclic:4"), [2, 1])


def test_inconsistent_input_is_a_group_error():
    assert issubclass(InconsistentInput, GroupError)
