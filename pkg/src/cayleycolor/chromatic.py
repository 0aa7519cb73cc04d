"""Exact clique and chromatic numbers by branch and bound.

Everything here is deterministic: vertices are chosen by saturation with the
lowest id breaking ties, and colours are tried lowest first.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Graph, cayley_graph
from .groups import FiniteGroup, GuardExceeded, closure_set, has_index_two_subgroup

CLIQUE_GUARD = 256
BRUTEFORCE_GUARD = 16


@dataclass(frozen=True)
class SolveBudget:
    time_limit: float = 300.0
    node_limit: int = 10**9

    def __post_init__(self):
        if self.time_limit <= 0 or self.node_limit <= 0:
            raise ValueError("budget limits must be positive")


class BudgetExhausted(RuntimeError):
    """The search ran out of time or nodes before reaching a definitive answer.

    ``lower``/``upper`` carry the best known bounds when raised by
    :func:`chromatic_number`."""

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None,
                 coloring: "VertexColoring | None" = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.coloring = coloring


@dataclass
class VertexColoring:
    colors: list[int]
    num_colors: int = field(init=False)

    def __post_init__(self):
        used = sorted(set(self.colors))
        if used and used[0] < 0:
            raise ValueError("color ids must be non-negative")
        if used != list(range(len(used))):
            # close gaps, keeping the relative order of colour ids
            remap = {c: i for i, c in enumerate(used)}
            self.colors = [remap[c] for c in self.colors]
        else:
            self.colors = list(self.colors)
        self.num_colors = len(used)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


def normalize_colors(colors: Sequence[int]) -> list[int]:
    """Renumber colours in order of first appearance."""
    remap: dict[int, int] = {}
    return [remap.setdefault(c, len(remap)) for c in colors]


def verify_vertex_coloring(graph: Graph, colors: Sequence[int] | VertexColoring):
    """Return ``(True, None)`` for a proper colouring, else ``(False, first bad edge)``."""
    cols = colors.colors if isinstance(colors, VertexColoring) else list(colors)
    if len(cols) != graph.n or any(c is None or c < 0 for c in cols):
        raise ValueError("coloring must assign a color to every vertex")
    for u, v in graph.edges:
        if cols[u] == cols[v]:
            return False, (u, v)
    return True, None


# ---------------------------------------------------------------- clique


def max_clique(graph: Graph) -> list[int]:
    """A maximum clique (sorted), by branch and bound with a greedy colouring bound."""
    if graph.n > CLIQUE_GUARD:
        raise GuardExceeded(f"max_clique limited to {CLIQUE_GUARD} vertices")
    bits = graph.bits
    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring of the candidate set; returns (vertex, colour) in colour order
        out = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~bits[v] & ~low
                rest &= ~low
                out.append((v, color))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            new = cand & bits[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if graph.n:
        expand([], (1 << graph.n) - 1)
    return sorted(best)


def clique_number(graph: Graph) -> int:
    return len(max_clique(graph))


# ---------------------------------------------------------------- colouring


def dsatur(graph: Graph) -> list[int]:
    """Greedy DSATUR colouring (lowest id among most saturated vertices)."""
    n = graph.n
    colors = [-1] * n
    forb = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (forb[u].bit_count(), -u))
        c = 0
        while forb[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in graph.adj[v]:
            forb[u] |= 1 << c
    return colors


class _Search:
    def __init__(self, graph: Graph, k: int, budget: SolveBudget, deadline: float | None = None):
        self.graph = graph
        self.k = k
        self.budget = budget
        self.deadline = deadline if deadline is not None else time.monotonic() + budget.time_limit
        self.nodes = 0

    def run(self, precolor: Sequence[int]) -> list[int] | None:
        g, k = self.graph, self.k
        n = g.n
        adj = [tuple(g.adj[v]) for v in range(n)]
        colors = [-1] * n
        forb = [0] * n
        full = (1 << k) - 1
        for c, v in enumerate(precolor):
            colors[v] = c
            for u in adj[v]:
                forb[u] |= 1 << c
        uncolored = [v for v in range(n) if colors[v] < 0]
        if any(forb[v] & full == full for v in uncolored):
            return None
        budget, deadline = self.budget, self.deadline

        def rec(uncolored: list[int], used: int) -> bool:
            if not uncolored:
                return True
            self.nodes += 1
            if self.nodes > budget.node_limit or (self.nodes & 1023 == 0 and time.monotonic() > deadline):
                raise BudgetExhausted(f"k={k} search exhausted its budget after {self.nodes} nodes")
            best, bsat = -1, -1
            for u in uncolored:
                s = forb[u].bit_count()
                if s > bsat:
                    best, bsat = u, s
            v = best
            rest = [u for u in uncolored if u != v]
            fv = forb[v]
            top = used + 1 if used < k else k
            for c in range(top):
                bit = 1 << c
                if fv & bit:
                    continue
                colors[v] = c
                changed = []
                dead = False
                for u in adj[v]:
                    if colors[u] < 0 and not forb[u] & bit:
                        forb[u] |= bit
                        changed.append(u)
                        if forb[u] & full == full:
                            dead = True
                if not dead and rec(rest, max(used, c + 1)):
                    return True
                for u in changed:
                    forb[u] &= ~bit
                colors[v] = -1
            return False

        if rec(uncolored, len(precolor)):
            return colors
        return None


def is_k_colorable(graph: Graph, k: int, budget: SolveBudget | None = None,
                   clique: Sequence[int] | None = None, _deadline: float | None = None) -> VertexColoring | None:
    """A proper colouring with at most ``k`` colours, or None if there is none.

    Raises :class:`BudgetExhausted` instead of guessing.  The vertices of
    ``clique`` (a maximum clique by default) are pre-coloured ``0, 1, ...``
    and new colours are only opened in increasing order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or SolveBudget()
    if graph.n == 0:
        return VertexColoring([])
    if clique is None:
        clique = max_clique(graph)
    if len(clique) > k:
        return None
    if graph.num_edges == 0:
        return VertexColoring([0] * graph.n)
    cols = _Search(graph, k, budget, _deadline).run(list(clique))
    if cols is None:
        return None
    return VertexColoring(normalize_colors(cols))


def chromatic_number(graph: Graph, budget: SolveBudget | None = None) -> tuple[int, VertexColoring]:
    """Exact chromatic number and a witness colouring; components are solved separately."""
    budget = budget or SolveBudget()
    deadline = time.monotonic() + budget.time_limit
    if graph.n == 0:
        return 0, VertexColoring([])
    comps = graph.components()
    if len(comps) > 1:
        colors = [0] * graph.n
        chi = 0
        for comp in comps:
            sub = graph.induced_subgraph(comp)
            k, col = _chromatic_connected(sub, budget, deadline)
            chi = max(chi, k)
            for i, v in enumerate(comp):
                colors[v] = col[i]
        return chi, VertexColoring(colors)
    return _chromatic_connected(graph, budget, deadline)


def _chromatic_connected(graph: Graph, budget: SolveBudget, deadline: float) -> tuple[int, VertexColoring]:
    clique = max_clique(graph)
    lower = len(clique)
    best = normalize_colors(dsatur(graph))
    upper = max(best) + 1
    while upper > lower:
        try:
            col = is_k_colorable(graph, upper - 1, budget, clique, deadline)
        except BudgetExhausted as exc:
            raise BudgetExhausted(f"chromatic number in [{lower}, {upper}]", lower, upper,
                                  VertexColoring(best)) from exc
        if col is None:
            break
        best = col.colors
        upper = col.num_colors
    return upper, VertexColoring(best)


# ---------------------------------------------------------------- chi_min


def chi_min_classify(G: FiniteGroup) -> int:
    """1 for the trivial group, 2 with an index-2 subgroup, otherwise 3."""
    if G.order == 1:
        return 1
    return 2 if has_index_two_subgroup(G) else 3


def chi_min_bruteforce(G: FiniteGroup, budget: SolveBudget | None = None) -> int:
    """Minimum chromatic number over every generating set, by enumeration.

    Only the trivial lower bounds are used to stop early (1 vertex, or any
    edge forcing 2), so this stays independent of the classification."""
    if G.order > BRUTEFORCE_GUARD:
        raise GuardExceeded(f"chi_min_bruteforce limited to order <= {BRUTEFORCE_GUARD}")
    if G.order == 1:
        return 1
    budget = budget or SolveBudget()
    best = None
    others = list(range(1, G.order))
    for size in range(1, len(others) + 1):
        for C in itertools.combinations(others, size):
            if len(closure_set(G, C)) != G.order:
                continue
            graph = cayley_graph(G, C)
            if best is None:
                best, _ = chromatic_number(graph, budget)
            elif is_k_colorable(graph, best - 1, budget) is not None:
                best, _ = chromatic_number(graph, budget)
            if best == 2:
                return 2
    assert best is not None
    return best
