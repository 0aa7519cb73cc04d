"""Edge colourings with the "no lonely color" and "one popular color" properties.

Both properties require every vertex to meet at most two edges of each colour.
On top of that, *no-lonely* asks that no cycle contains some colour exactly
once, and *one-popular* asks that every cycle contains some colour at least
twice.  Cycles are read as simple cycles throughout.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Literal, Sequence

from .chromatic import BudgetExhausted, SolveBudget
from .cycles import DEFAULT_CEILING, cycle_edges, enumerate_cycles, rainbow_cycles, triangles
from .genset import analyze_genset
from .graphs import Edge, EdgeColoring, Graph, GraphError, natural_edge_coloring
from .groups import FiniteGroup

Property = Literal["no-lonely", "one-popular"]
PROPERTIES = ("no-lonely", "one-popular")
CYCLE_READING = "simple cycle"


@dataclass
class PropertyReport:
    property: str
    mode: str
    passed: bool
    violating_cycle: tuple[int, ...] | None = None
    violating_vertex: tuple[int, int] | None = None  # (vertex, colour) seen on 3+ edges
    cycles_checked: int = 0
    sufficient: bool = True
    pruned: bool = False
    reading: str = CYCLE_READING
    evidence: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        parts = [f"{self.property} [{self.mode}]: {verdict}", f"{self.cycles_checked} {'rainbow ' if self.pruned else ''}cycles inspected"]
        if self.violating_vertex is not None:
            parts.append(f"vertex {self.violating_vertex[0]} sees colour {self.violating_vertex[1]} 3+ times")
        if self.violating_cycle is not None:
            parts.append(f"violating cycle {self.violating_cycle}")
        if self.passed and not self.sufficient:
            parts.append("necessary check only (not all cycles examined)")
        return "; ".join(parts)


def cycle_ok(colors: Sequence[int], prop: str) -> bool:
    counts = Counter(colors)
    if prop == "no-lonely":
        return all(v != 1 for v in counts.values())
    if prop == "one-popular":
        return any(v >= 2 for v in counts.values())
    raise ValueError(f"unknown property {prop!r}")


def degree_violation(coloring: EdgeColoring) -> tuple[int, int] | None:
    seen: Counter[tuple[int, int]] = Counter()
    for (u, v), c in coloring.color_of.items():
        seen[(u, c)] += 1
        seen[(v, c)] += 1
    bad = sorted(k for k, cnt in seen.items() if cnt > 2)
    return bad[0] if bad else None


def _parse_mode(mode: str, max_len: int | None) -> tuple[str, int | None]:
    if mode == "exhaustive":
        return "exhaustive", None
    if mode == "triangles":
        return "triangles", 3
    if mode == "bounded":
        if max_len is None or max_len < 3:
            raise ValueError("bounded mode needs max_len >= 3")
        return f"bounded({max_len})", max_len
    raise ValueError(f"unknown mode {mode!r}")


def verify_edge_coloring(graph: Graph, coloring: EdgeColoring, prop: str, mode: str = "exhaustive",
                         max_len: int | None = None, ceiling: int = DEFAULT_CEILING,
                         prune: bool = True) -> PropertyReport:
    """Check the degree condition and the cycle condition over the cycles selected by ``mode``.

    For one-popular with ``prune`` the search never extends a path that
    already repeats a colour, since every cycle through such a path is fine;
    only rainbow cycles are then inspected and counted."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    if coloring.graph is not graph and coloring.graph != graph:
        raise GraphError("coloring belongs to a different graph")
    label, bound = _parse_mode(mode, max_len)
    report = PropertyReport(prop, label, True, sufficient=(mode == "exhaustive"))
    bad = degree_violation(coloring)
    if bad is not None:
        report.passed = False
        report.violating_vertex = bad
        return report
    colors = coloring.color_of
    if prop == "one-popular" and prune:
        report.pruned = True
        source = triangles(graph) if mode == "triangles" else rainbow_cycles(graph, colors, bound, ceiling)
    else:
        source = triangles(graph) if mode == "triangles" else enumerate_cycles(graph, bound, ceiling)
    for cyc in source:
        report.cycles_checked += 1
        if not cycle_ok([colors[e] for e in cycle_edges(cyc)], prop):
            report.passed = False
            report.violating_cycle = tuple(cyc)
            return report
    return report


def natural_coloring_check(G: FiniteGroup, C: Sequence[int], prop: str | None = None,
                           mode: str = "bounded", max_len: int | None = 10,
                           ceiling: int = DEFAULT_CEILING) -> PropertyReport:
    """Verify the colouring of ``Cay(G, C)`` by generator index.

    no-lonely needs ``C`` minimal; one-popular needs ``C`` semiminimal in the given order.
    With ``prop=None`` the strongest applicable property is chosen."""
    rep = analyze_genset(G, C)
    if prop is None:
        prop = "no-lonely" if rep.minimal else "one-popular"
    if prop == "no-lonely" and not rep.minimal:
        raise ValueError("no-lonely check requires a minimal generating set")
    if prop == "one-popular" and not rep.semiminimal_in_given_order:
        raise ValueError("one-popular check requires C to be semiminimal in the given order")
    ec = natural_edge_coloring(G, C)
    return verify_edge_coloring(ec.graph, ec, prop, mode, max_len if mode == "bounded" else None, ceiling)


# ---------------------------------------------------------------- construction


@dataclass
class DescartesGraph:
    graph: Graph
    coloring: EdgeColoring
    k: int
    x_set: tuple[int, ...]
    copies: list[tuple[tuple[int, ...], tuple[Edge, ...]]]  # (copy vertices, matching edges)
    prev_order: int


def _c4() -> tuple[Graph, dict[Edge, int]]:
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    return g, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1}


def descartes_graph(k: int, seed: int | None = None) -> DescartesGraph:
    """The level-``k`` graph of the Descartes-style construction, ``k <= 3``.

    Level 1 is a single vertex and level 2 an alternately 2-coloured C4.  Level
    3 adds an independent set X of ``(k-1)(n-1)+1`` vertices; for every
    n-subset Y of X a fresh copy of the previous level is joined to Y by a
    matching in a private colour.  The canonical matching sends the i-th
    smallest vertex of Y to copy vertex i; ``seed`` shuffles it instead."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 3:
        raise ValueError("k >= 4 needs C(439,147) copies; only k <= 3 is built")
    if k == 1:
        g = Graph(1)
        return DescartesGraph(g, EdgeColoring(g, {}), 1, (0,), [], 0)
    if k == 2:
        g, col = _c4()
        return DescartesGraph(g, EdgeColoring(g, col), 2, (), [], 1)
    prev = descartes_graph(k - 1)
    pg, pcol = prev.graph, prev.coloring.color_of
    n = pg.n
    x_size = (k - 1) * (n - 1) + 1
    base_colors = max(pcol.values()) + 1
    rng = random.Random(seed) if seed is not None else None
    edges: list[Edge] = []
    colors: dict[Edge, int] = {}
    copies = []
    nxt = x_size
    for j, Y in enumerate(itertools.combinations(range(x_size), n)):
        verts = tuple(range(nxt, nxt + n))
        nxt += n
        for (u, v), c in pcol.items():
            e = (verts[u], verts[v])
            edges.append(e)
            colors[e] = c
        targets = list(verts)
        if rng is not None:
            rng.shuffle(targets)
        matching = tuple((y, t) for y, t in zip(Y, targets))
        for e in matching:
            edges.append(e)
            colors[e] = base_colors + j
        copies.append((verts, matching))
    g = Graph(nxt, edges)
    return DescartesGraph(g, EdgeColoring(g, colors), k, tuple(range(x_size)), copies, n)


@dataclass
class DescartesReport:
    structure_ok: bool
    copies_ok: bool
    bounded: PropertyReport
    rainbow_search: PropertyReport | None
    notes: list[str]

    @property
    def passed(self) -> bool:
        ok = self.structure_ok and self.copies_ok and self.bounded.passed
        return ok and (self.rainbow_search is None or self.rainbow_search.passed)


def verify_descartes(dg: DescartesGraph, max_len: int = 12, full_search: bool = True) -> DescartesReport:
    """One-popular evidence for a constructed graph.

    * structure: X independent, copies vertex-disjoint and joined to the rest
      only through their own private matching, so any cycle leaving a copy
      uses two edges of one matching;
    * every copy passes the exhaustive check on its own;
    * every cycle up to ``max_len`` is enumerated and passes;
    * optionally, the pruned search for rainbow cycles over all lengths."""
    g, col = dg.graph, dg.coloring
    notes = []
    structure = degree_violation(col) is None
    xs = set(dg.x_set)
    if any(g.adj[x] & xs for x in xs):
        structure = False
        notes.append("X is not independent")
    owner: dict[int, int] = {}
    for j, (verts, matching) in enumerate(dg.copies):
        for v in verts:
            if v in owner:
                structure = False
                notes.append(f"copies {owner[v]} and {j} share vertex {v}")
            owner[v] = j
        mcolors = {col[e] for e in matching}
        if len(mcolors) != 1 or len(matching) != dg.prev_order:
            structure = False
            notes.append(f"copy {j} does not have a single private matching of size {dg.prev_order}")
        c = mcolors.pop() if mcolors else None
        if col.color_class(c) != sorted((min(e), max(e)) for e in matching):
            structure = False
            notes.append(f"matching colour of copy {j} is not private")
        if sorted(a for a, _ in matching) != sorted(set(a for a, _ in matching)) or any(a not in xs for a, _ in matching):
            structure = False
            notes.append(f"matching of copy {j} is not a matching into X")
    for u, v in g.edges:
        if u not in xs and v not in xs and owner.get(u) != owner.get(v):
            structure = False
            notes.append(f"edge ({u},{v}) joins two copies")
    copies_ok = True
    for j, (verts, _) in enumerate(dg.copies):
        sub = g.induced_subgraph(list(verts))
        sub_col = EdgeColoring(sub, {(a, b): col[(verts[a], verts[b])] for a, b in sub.edges})
        if not verify_edge_coloring(sub, sub_col, "one-popular", "exhaustive").passed:
            copies_ok = False
            notes.append(f"copy {j} fails the exhaustive check")
    if dg.copies:
        notes.append(f"{len(dg.copies)} copies checked exhaustively")
    bounded = verify_edge_coloring(g, col, "one-popular", "bounded", max_len, prune=False)
    full = verify_edge_coloring(g, col, "one-popular", "exhaustive") if full_search else None
    return DescartesReport(structure, copies_ok, bounded, full, notes)


# ---------------------------------------------------------------- search


class SearchStatus(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    BUDGET = "budget-exhausted"


@dataclass
class SearchResult:
    status: SearchStatus
    coloring: EdgeColoring | None = None
    nodes: int = 0


SCOPE_GUARDS = {"all": 20, "triangles": 15, "four_cycles": 15}


def _scope_cycles(graph: Graph, scope: str) -> list[tuple[int, ...]]:
    if scope == "all":
        return list(enumerate_cycles(graph))
    if scope == "triangles":
        return list(triangles(graph))
    if scope == "four_cycles":
        return list(enumerate_cycles(graph, 4))
    raise ValueError(f"unknown cycle scope {scope!r}")


def iter_edge_colorings(graph: Graph, prop: str, cycle_scope: str = "all", max_colors: int | None = None,
                        budget: SolveBudget | None = None) -> Iterator[EdgeColoring]:
    """Every valid colouring up to renaming of colours, in canonical order.

    Colours are opened in order (an edge may use any colour already used or
    the next new one), which removes the colour-permutation symmetry.  The
    cycle condition is only imposed on cycles in ``cycle_scope``; a smaller
    scope relaxes the problem, so an empty result for it is conclusive for
    all cycles too."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    guard = SCOPE_GUARDS.get(cycle_scope)
    if guard is None:
        raise ValueError(f"unknown cycle scope {cycle_scope!r}")
    m = graph.num_edges
    if m > guard:
        raise GraphError(f"edge-colouring search with scope {cycle_scope} limited to {guard} edges")
    budget = budget or SolveBudget()
    max_colors = m if max_colors is None else max_colors
    edges = graph.edges
    eidx = graph.edge_index
    # a cycle is checked when its last edge (in edge order) gets a colour
    closing: list[list[list[int]]] = [[] for _ in range(m)]
    for cyc in _scope_cycles(graph, cycle_scope):
        ids = sorted(eidx[e] for e in cycle_edges(cyc))
        closing[ids[-1]].append(ids)
    assign = [-1] * m
    load = [[0] * max_colors for _ in range(graph.n)]
    deadline = time.monotonic() + budget.time_limit
    nodes = 0

    def rec(i: int, used: int) -> Iterator[list[int]]:
        nonlocal nodes
        if i == m:
            yield list(assign)
            return
        nodes += 1
        if nodes > budget.node_limit or (nodes & 1023 == 0 and time.monotonic() > deadline):
            raise BudgetExhausted(f"edge-colouring search exhausted its budget after {nodes} nodes")
        u, v = edges[i]
        for c in range(min(used + 1, max_colors)):
            if load[u][c] >= 2 or load[v][c] >= 2:
                continue
            assign[i] = c
            if all(cycle_ok([assign[j] for j in ids], prop) for ids in closing[i]):
                load[u][c] += 1
                load[v][c] += 1
                yield from rec(i + 1, max(used, c + 1))
                load[u][c] -= 1
                load[v][c] -= 1
        assign[i] = -1

    for sol in rec(0, 0):
        yield EdgeColoring(graph, {edges[i]: c for i, c in enumerate(sol)})


def search_edge_coloring(graph: Graph, prop: str, cycle_scope: str = "all", max_colors: int | None = None,
                         budget: SolveBudget | None = None) -> SearchResult:
    """First valid colouring in canonical order, or UNSAT, or budget-exhausted."""
    try:
        for col in iter_edge_colorings(graph, prop, cycle_scope, max_colors, budget):
            return SearchResult(SearchStatus.SAT, col)
    except BudgetExhausted:
        return SearchResult(SearchStatus.BUDGET)
    return SearchResult(SearchStatus.UNSAT)


def is_two_pentagon_decomposition(coloring: EdgeColoring) -> bool:
    """True iff the colouring has exactly two classes, each a 5-cycle."""
    if coloring.num_colors != 2:
        return False
    for c in coloring.colors:
        cls = coloring.color_class(c)
        verts = {x for e in cls for x in e}
        sub = Graph(coloring.graph.n, cls)
        if len(cls) != 5 or len(verts) != 5 or any(sub.degree(v) != 2 for v in verts):
            return False
        if len(sub.components()) - (coloring.graph.n - len(verts)) != 1:
            return False
    return True
