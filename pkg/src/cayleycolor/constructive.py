"""Constructive colourings of minimal Cayley graphs.

* ``lift_coloring``: pull a colouring of ``Cay(G/N, C)`` back along ``G -> G/N``.
* ``schreier_product_coloring``: colour each coset graph ``Cay(G/<C-c>, {c})``
  exactly and add the factor colours mod ``k``.
* ``dedekind_three_coloring``: the same, where every factor is a cycle.
* ``generalized_dihedral_three_coloring`` and ``frattini_three_coloring``:
  reduce to the abelian case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chromatic import SolveBudget, VertexColoring, chromatic_number, verify_vertex_coloring
from .genset import analyze_genset
from .graphs import Graph, cayley_graph, schreier_graph
from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    classify_group,
    closure_set,
    commutator_subgroup,
    coset_index,
    frattini_subgroup,
    is_normal,
    quotient,
    subgroup_closure,
)


class InconsistentInput(GroupError):
    """A fact implied by minimality failed to hold; the input is not what it claims."""


def _require_minimal(G: FiniteGroup, C: Sequence[int]) -> None:
    if not analyze_genset(G, C).minimal:
        raise GroupError("connection set is not a minimal generating set")


def _finish(G: FiniteGroup, C: Sequence[int], colors: list[int]) -> VertexColoring:
    """Check properness on ``Cay(G, C)`` straight from the table."""
    rows = G.rows
    for x in range(G.order):
        row, cx = rows[x], colors[x]
        for c in C:
            if colors[row[c]] == cx:
                raise InconsistentInput(f"constructed coloring is improper on edge ({x},{row[c]})")
    return VertexColoring(colors)


def sum_mod_coloring(factor_colors: Sequence[Sequence[int]], coordinates: Sequence[Sequence[int]], k: int) -> list[int]:
    """Colour vertex ``x`` by ``sum_i factor_colors[i][coordinates[i][x]] mod k``.

    If moving along an edge changes exactly one coordinate, and each factor
    colouring is proper with values in ``0..k-1``, the result is proper."""
    n = len(coordinates[0]) if coordinates else 0
    out = [0] * n
    for cols, coord in zip(factor_colors, coordinates):
        for x in range(n):
            out[x] += cols[coord[x]]
    return [c % k for c in out]


# ---------------------------------------------------------------- lift


def lifted_connection_set(G: FiniteGroup, N: Subgroup, C_quot: Sequence[int]) -> list[int]:
    """``C·N``: every element whose coset lies in ``C_quot``."""
    q = quotient(G, N)
    want = set(C_quot)
    return [x for x in range(G.order) if q.projection[x] in want]


def lift_coloring(G: FiniteGroup, N: Subgroup, C_quot: Sequence[int], col_quot: Sequence[int] | VertexColoring) -> VertexColoring:
    """``g -> col_quot(gN)``; proper on ``Cay(G, C·N)`` and any subgraph of it."""
    if not is_normal(G, N):
        raise GroupError("lift_coloring needs a normal subgroup")
    q = quotient(G, N)
    cq = col_quot.colors if isinstance(col_quot, VertexColoring) else list(col_quot)
    ok, bad = verify_vertex_coloring(cayley_graph(q.group, list(C_quot)), cq)
    if not ok:
        raise GroupError(f"quotient coloring is improper on edge {bad}")
    return VertexColoring([cq[q.projection[g]] for g in range(G.order)])


# ---------------------------------------------------------------- Schreier factors


@dataclass(frozen=True)
class SchreierFactor:
    generator: int
    subgroup: Subgroup
    graph: Graph
    coset_of: tuple[int, ...]


def schreier_factors(G: FiniteGroup, C: Sequence[int]) -> list[SchreierFactor]:
    """For each ``c`` the coset graph ``Cay(G/<C-c>, {c})``."""
    out = []
    C = list(C)
    for i, c in enumerate(C):
        K = subgroup_closure(G, C[:i] + C[i + 1:])
        out.append(SchreierFactor(c, K, schreier_graph(G, K, c), tuple(coset_index(G, K))))
    return out


def schreier_product_coloring(G: FiniteGroup, C: Sequence[int], budget: SolveBudget | None = None) -> VertexColoring:
    C = list(C)
    _require_minimal(G, C)
    factors = schreier_factors(G, C)
    solved = [chromatic_number(f.graph, budget) for f in factors]
    k = max(chi for chi, _ in solved)
    colors = sum_mod_coloring([col.colors for _, col in solved], [f.coset_of for f in factors], k)
    return _finish(G, C, colors)


def _walk_cycle(G: FiniteGroup, c: int, coset_of: Sequence[int], m: int) -> list[int]:
    """Position of each coset in the walk ``K, cK, c^2K, ...``; checks that the
    coset graph is exactly that cycle (or a single edge)."""
    rows = G.rows
    pos = [-1] * m
    x, j = 0, 0
    while pos[coset_of[x]] < 0:
        pos[coset_of[x]] = j
        x = rows[x][c]
        j += 1
    if j != m:
        raise InconsistentInput(f"coset graph for generator {G.names[c]} is not a single cycle")
    for x in range(G.order):
        step = pos[coset_of[rows[x][c]]] - pos[coset_of[x]]
        if step % m not in (1, m - 1):
            raise InconsistentInput(f"coset graph for generator {G.names[c]} is not a cycle")
    return pos


def cycle_colors(m: int, special: int | None = None) -> list[int]:
    """Colours for positions ``0..m-1`` of an m-cycle.

    Even ``m`` alternates 0/1 from position 0.  Odd ``m`` puts colour 2 on
    position ``special`` (default the last) and alternates 0/1 around the
    rest, starting just after it."""
    if m == 1:
        return [0]
    if m % 2 == 0:
        return [p % 2 for p in range(m)]
    j = m - 1 if special is None else special
    return [2 if p == j else ((p - j - 1) % m) % 2 for p in range(m)]


def cycle_factor_coloring(G: FiniteGroup, factor: SchreierFactor) -> list[int]:
    """3-colour a coset graph that must be a cycle (or an edge), indexed by coset id."""
    m = factor.graph.n
    pos = _walk_cycle(G, factor.generator, factor.coset_of, m)
    if m > 2 and factor.graph.num_edges != m:
        raise InconsistentInput(f"coset graph for generator {G.names[factor.generator]} is not a cycle")
    by_pos = cycle_colors(m, pos[m - 1])
    return [by_pos[p] for p in pos]


def dedekind_three_coloring(G: FiniteGroup, C: Sequence[int]) -> VertexColoring:
    C = list(C)
    if not classify_group(G).dedekind:
        raise GroupError(f"{G!r} is not a Dedekind group")
    if len(set(C)) != len(C) or 0 in C:
        raise GroupError("connection set must be duplicate-free and avoid the identity")
    drop_one = [subgroup_closure(G, C[:i] + C[i + 1:]) for i in range(len(C))]
    if len(closure_set(G, C)) != G.order or any(len(K) == G.order for K in drop_one):
        raise GroupError("connection set is not a minimal generating set")
    if G.order == 1:
        return VertexColoring([0])
    factor_colors, coords = [], []
    for c, K in zip(C, drop_one):
        coset_of = coset_index(G, K)
        m = G.order // len(K)
        pos = _walk_cycle(G, c, coset_of, m)
        # on odd cycles colour 2 goes to the coset with the largest id
        by_pos = cycle_colors(m, pos[m - 1])
        factor_colors.append([by_pos[p] for p in pos])
        coords.append(coset_of)
    # all-even factors combine mod 2, so bipartite cases keep 2 colours
    k = max(max(f) for f in factor_colors) + 1
    colors = sum_mod_coloring(factor_colors, coords, k)
    return _finish(G, C, colors)


# ---------------------------------------------------------------- generalized dihedral


@dataclass(frozen=True)
class DihedralContext:
    """Dih(A) with ``C`` split by second coordinate and ``H = (A x 0) ∩ <C1>``.

    Element ``(g, t)`` of ``group`` has id ``g + |A| t``."""

    base: FiniteGroup
    group: FiniteGroup
    C: tuple[int, ...]
    C0: tuple[int, ...]
    C1: tuple[int, ...]
    H: Subgroup
    y: int

    @classmethod
    def build(cls, group: FiniteGroup, C: Sequence[int]) -> "DihedralContext":
        base = getattr(group, "dih_base", None)
        if base is None:
            raise GroupError(f"{group!r} was not built as a generalized dihedral group")
        n = base.order
        C = tuple(C)
        C0 = tuple(c for c in C if c < n)
        C1 = tuple(c for c in C if c >= n)
        if not C1:
            raise GroupError("C contains no element of the form (y,1); it cannot generate Dih(A)")
        H = Subgroup(base, tuple(sorted(x for x in closure_set(group, C1) if x < n)))
        return cls(base, group, C, C0, C1, H, min(C1) - n)


def generalized_dihedral_three_coloring(ctx: DihedralContext) -> VertexColoring:
    D, A = ctx.group, ctx.base
    n = A.order
    _require_minimal(D, ctx.C)
    rows = D.rows
    # (a) H is independent in the Cayley graph
    for h in ctx.H.elements:
        for c in ctx.C:
            if rows[h][c] in ctx.H:
                raise InconsistentInput(f"H is not independent: {D.names[h]} ~ {D.names[rows[h][c]]}")
    # (b) the images of C0 minimally generate (A x 0)/H
    q = quotient(A, ctx.H)
    images = [q.projection[c] for c in ctx.C0]
    if 0 in images or len(set(images)) != len(images):
        raise InconsistentInput("C0 does not map injectively into the non-identity cosets of H")
    if not analyze_genset(q.group, images).minimal:
        raise InconsistentInput("the cosets of C0 do not minimally generate (A x 0)/H")
    if q.group.order == 1:
        f_quot = [0]
    else:
        f_quot = dedekind_three_coloring(q.group, images).colors
    f = [f_quot[q.projection[g]] for g in range(n)]
    inv_y = A.inv[ctx.y]
    colors = f + [(f[A.rows[g][inv_y]] + 1) % 3 for g in range(n)]
    return _finish(D, ctx.C, colors)


# ---------------------------------------------------------------- Frattini


def frattini_three_coloring(G: FiniteGroup, C: Sequence[int]) -> VertexColoring:
    C = list(C)
    Phi = frattini_subgroup(G)
    if not commutator_subgroup(G).issubset(Phi):
        raise GroupError(f"the commutator subgroup of {G!r} is not inside its Frattini subgroup")
    _require_minimal(G, C)
    if any(c in Phi for c in C):
        raise InconsistentInput("a generator lies in the Frattini subgroup")
    q = quotient(G, Phi)
    images = [q.projection[c] for c in C]
    if len(set(images)) != len(images) or not analyze_genset(q.group, images).minimal:
        raise InconsistentInput("generator images do not minimally generate G/Phi(G)")
    col = dedekind_three_coloring(q.group, images)
    lifted = lift_coloring(G, Phi, images, col)
    return _finish(G, C, lifted.colors)
