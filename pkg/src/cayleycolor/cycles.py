"""Simple cycle enumeration.

Each cycle is rooted at its smallest vertex and walked in the direction whose
second vertex is smaller than its last, which makes the emitted tuple the
lexicographically least rotation/reflection.  The search from root ``r`` only
visits vertices above ``r`` and cuts any path that cannot get back to ``r``
within the length bound (BFS distance in the subgraph above ``r``).
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Mapping

from .graphs import Edge, Graph

DEFAULT_CEILING = 10**7


class CycleCeilingExceeded(RuntimeError):
    def __init__(self, ceiling: int):
        self.ceiling = ceiling
        super().__init__(f"more than {ceiling} cycles; raise the ceiling or bound the length")


def canonical_cycle(vertices) -> tuple[int, ...]:
    vs = list(vertices)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[1] > vs[-1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def _dist_above(graph: Graph, root: int, limit: int) -> list[int]:
    inf = limit + 1
    dist = [inf] * graph.n
    dist[root] = 0
    q = deque([root])
    adj = graph.adj
    while q:
        x = q.popleft()
        d = dist[x] + 1
        if d > limit:
            continue
        for y in adj[x]:
            if y > root and dist[y] > d:
                dist[y] = d
                q.append(y)
    return dist


def _search(graph: Graph, max_len: int | None, labels: Mapping[Edge, int] | None) -> Iterator[tuple[int, ...]]:
    n = graph.n
    L = n if max_len is None else min(max_len, n)
    if L < 3:
        return
    adj = [sorted(a) for a in graph.adj]
    for r in range(n):
        dist = _dist_above(graph, r, L)
        on_path = [False] * n
        on_path[r] = True
        path = [r]
        used: set[int] = set()
        used_stack: list[int | None] = []
        stack = [iter(adj[r])]
        while stack:
            v = path[-1]
            advanced = False
            for w in stack[-1]:
                if w == r:
                    if len(path) >= 3 and path[1] < v:
                        if labels is not None:
                            lab = labels[(r, v)]
                            if lab in used:
                                continue
                        yield tuple(path)
                    continue
                if w < r or on_path[w] or len(path) + dist[w] > L:
                    continue
                lab = None
                if labels is not None:
                    lab = labels[(v, w) if v < w else (w, v)]
                    if lab in used:
                        continue
                    used.add(lab)
                used_stack.append(lab)
                on_path[w] = True
                path.append(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                w = path.pop()
                if w != r:
                    on_path[w] = False
                    lab = used_stack.pop()
                    if lab is not None:
                        used.discard(lab)


def enumerate_cycles(graph: Graph, max_len: int | None = None, ceiling: int = DEFAULT_CEILING) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle of length <= ``max_len`` (all lengths if None) once,
    in canonical form.  Raises :class:`CycleCeilingExceeded` past ``ceiling`` cycles."""
    count = 0
    for cyc in _search(graph, max_len, None):
        count += 1
        if count > ceiling:
            raise CycleCeilingExceeded(ceiling)
        yield cyc


def rainbow_cycles(graph: Graph, labels: Mapping[Edge, int], max_len: int | None = None,
                   ceiling: int = DEFAULT_CEILING) -> Iterator[tuple[int, ...]]:
    """Cycles whose edges carry pairwise distinct labels.

    Paths that already repeat a label are never extended, so this is far
    cheaper than filtering :func:`enumerate_cycles`."""
    count = 0
    for cyc in _search(graph, max_len, labels):
        count += 1
        if count > ceiling:
            raise CycleCeilingExceeded(ceiling)
        yield cyc


def triangles(graph: Graph) -> Iterator[tuple[int, int, int]]:
    adj = graph.adj
    for u in range(graph.n):
        for v in sorted(adj[u]):
            if v <= u:
                continue
            for w in sorted(adj[u] & adj[v]):
                if w > v:
                    yield (u, v, w)


def cycle_edges(cycle: tuple[int, ...]) -> list[Edge]:
    k = len(cycle)
    out = []
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        out.append((u, v) if u < v else (v, u))
    return out


def count_cycles(graph: Graph, max_len: int | None = None, ceiling: int = DEFAULT_CEILING) -> int:
    return sum(1 for _ in enumerate_cycles(graph, max_len, ceiling))
