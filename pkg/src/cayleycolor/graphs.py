"""Simple undirected graphs and the graphs built from groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .groups import FiniteGroup, GroupError, Subgroup, left_cosets


class GraphError(ValueError):
    pass


Edge = tuple[int, int]


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label count does not match vertex count")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @cached_property
    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def bits(self) -> list[int]:
        """Adjacency rows as integer bitmasks."""
        out = []
        for a in self.adj:
            b = 0
            for v in a:
                b |= 1 << v
            out.append(b)
        return out

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph on ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        edges = [(pos[u], pos[v]) for u in vertices for v in self.adj[u] if v in pos and pos[u] < pos[v]]
        labels = [self.labels[v] for v in vertices] if self.labels else None
        return Graph(len(vertices), edges, labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


@dataclass
class EdgeColoring:
    """Total map from the edges of ``graph`` to color ids."""

    graph: Graph
    color_of: dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        normalized = {_key(u, v): c for (u, v), c in self.color_of.items()}
        if set(normalized) != set(self.graph.edges):
            raise GraphError("edge coloring domain must equal the edge set")
        self.color_of = normalized

    def __getitem__(self, e: Edge) -> int:
        return self.color_of[_key(*e)]

    @property
    def colors(self) -> list[int]:
        return sorted(set(self.color_of.values()))

    @property
    def num_colors(self) -> int:
        return len(set(self.color_of.values()))

    def color_class(self, c: int) -> list[Edge]:
        return sorted(e for e, k in self.color_of.items() if k == c)

    def as_list(self) -> list[int]:
        """Colors in the order of ``graph.edges``."""
        return [self.color_of[e] for e in self.graph.edges]


# ---------------------------------------------------------------- group graphs


def _check_genset(G: FiniteGroup, C: Sequence[int]) -> None:
    if len(set(C)) != len(C):
        raise GraphError("connection set contains duplicates")
    for c in C:
        if not 0 <= c < G.order:
            raise GraphError(f"element {c} not in group of order {G.order}")
        if c == 0:
            raise GraphError("connection set contains the identity")


def cayley_graph(G: FiniteGroup, C: Sequence[int]) -> Graph:
    """Undirected right Cayley graph: ``x ~ x·c`` for each ``c`` in ``C``."""
    C = list(C)
    _check_genset(G, C)
    rows = G.rows
    edges = {_key(x, rows[x][c]) for x in range(G.order) for c in C}
    return Graph(G.order, sorted(edges), labels=list(G.names))


def natural_edge_coloring(G: FiniteGroup, C: Sequence[int]) -> EdgeColoring:
    """Color edge ``{x, x·c}`` by the first index ``i`` with ``C[i]`` in ``{c, c⁻¹}``."""
    C = list(C)
    graph = cayley_graph(G, C)
    rows, inv = G.rows, G.inv
    first: dict[int, int] = {}
    for i, c in enumerate(C):
        first.setdefault(c, i)
        first.setdefault(inv[c], i)
    colors: dict[Edge, int] = {}
    for x in range(G.order):
        for c in C:
            e = _key(x, rows[x][c])
            colors[e] = min(colors.get(e, first[c]), first[c])
    return EdgeColoring(graph, colors)


def schreier_graph(G: FiniteGroup, H: Subgroup, c: int) -> Graph:
    """Graph on the left cosets of ``H`` with an edge ``{xH, xcH}`` for every ``x``."""
    if c in H:
        raise GraphError("generator lies in the subgroup; every edge would be a loop")
    cosets = left_cosets(G, H)
    idx = [0] * G.order
    for i, block in enumerate(cosets):
        for x in block:
            idx[x] = i
    rows = G.rows
    edges = {_key(idx[x], idx[rows[x][c]]) for x in range(G.order)}
    return Graph(len(cosets), sorted(edges), labels=[G.names[b[0]] + "H" for b in cosets])


def graph_product(G1: Graph, G2: Graph, kind: Literal["cartesian", "strong"] = "cartesian") -> Graph:
    """Cartesian or strong product; vertex ``(u, v)`` has id ``u·n2 + v``."""
    if kind not in ("cartesian", "strong"):
        raise GraphError(f"unknown product kind {kind!r}")
    n2 = G2.n
    edges = set()
    for u in range(G1.n):
        for v, w in G2.edges:
            edges.add((u * n2 + v, u * n2 + w))
    for u, u2 in G1.edges:
        for v in range(n2):
            edges.add((u * n2 + v, u2 * n2 + v))
        if kind == "strong":
            for v, w in G2.edges:
                edges.add(_key(u * n2 + v, u2 * n2 + w))
                edges.add(_key(u * n2 + w, u2 * n2 + v))
    return Graph(G1.n * n2, sorted(edges))


def contract_pairs(graph: Graph, partner: Sequence[int]) -> tuple[Graph, list[int]]:
    """Identify each vertex with ``partner[v]`` (an involution); returns the
    contracted graph and the vertex -> block map.  Loops are dropped."""
    block = [-1] * graph.n
    count = 0
    for v in range(graph.n):
        if block[v] < 0:
            if partner[partner[v]] != v:
                raise GraphError("pairing is not an involution")
            block[v] = block[partner[v]] = count
            count += 1
    edges = {_key(block[u], block[v]) for u, v in graph.edges if block[u] != block[v]}
    return Graph(count, sorted(edges)), block


def group_element_list(G: FiniteGroup, text: str) -> list[int]:
    """Parse a comma separated generator list; commas inside parentheses stay with their token."""
    tokens, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        tokens.append(cur)
    if depth != 0:
        raise GroupError(f"unbalanced parentheses in generator list {text!r}")
    return [G.parse_element(t) for t in tokens if t.strip()]
