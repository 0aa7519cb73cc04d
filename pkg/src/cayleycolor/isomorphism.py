"""Graph isomorphism for small graphs: colour refinement, then backtracking."""

from __future__ import annotations

from .graphs import Graph, GraphError

MAX_VERTICES = 128


def refine(graph: Graph, colors: list[int]) -> list[int]:
    """Iterate ``color -> (color, sorted neighbour colors)`` to a fixpoint.

    New colour ids are assigned by sorting the signatures, so two graphs
    refined together (as a disjoint union) get comparable colours."""
    colors = list(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in graph.adj[v]))) for v in range(graph.n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def _disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    return Graph(n1 + g2.n, list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges])


def are_isomorphic(g1: Graph, g2: Graph) -> list[int] | None:
    """Return ``phi`` with ``u~v  <=>  phi[u]~phi[v]``, or None if no bijection exists."""
    if g1.n > MAX_VERTICES or g2.n > MAX_VERTICES:
        raise GraphError(f"isomorphism test limited to {MAX_VERTICES} vertices")
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return []
    union = _disjoint_union(g1, g2)
    col = refine(union, [0] * union.n)
    c1, c2 = col[:n], col[n:]
    if sorted(c1) != sorted(c2):
        return None

    # order G1's vertices so that each one has as many placed neighbours as possible
    class_size = {c: c1.count(c) for c in set(c1)}
    order: list[int] = []
    placed = [False] * n
    links = [0] * n
    while len(order) < n:
        best = max((v for v in range(n) if not placed[v]),
                   key=lambda v: (links[v], -class_size[c1[v]], -v))
        placed[best] = True
        order.append(best)
        for u in g1.adj[best]:
            links[u] += 1

    b2 = g2.bits
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(c2[w], []).append(w)
    phi = [-1] * n
    used = [False] * n

    def extend(i: int, image_mask: int) -> bool:
        if i == n:
            return True
        v = order[i]
        expected = 0
        for u in g1.adj[v]:
            if phi[u] >= 0:
                expected |= 1 << phi[u]
        for w in by_color[c1[v]]:
            if used[w] or (b2[w] & image_mask) != expected:
                continue
            phi[v] = w
            used[w] = True
            if extend(i + 1, image_mask | (1 << w)):
                return True
            phi[v] = -1
            used[w] = False
        return False

    if not extend(0, 0):
        return None
    for u, v in g1.edges:
        assert g2.has_edge(phi[u], phi[v])
    return phi
