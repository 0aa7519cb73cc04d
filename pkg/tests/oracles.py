"""Brute-force reference implementations used to cross-check the package.

Nothing here imports the search code it checks; each function works from
first principles on small inputs.
"""

from __future__ import annotations

import itertools
import math


def is_group_table(rows) -> bool:
    n = len(rows)
    rng = set(range(n))
    if any(set(r) != rng for r in rows) or any({rows[i][j] for i in range(n)} != rng for j in range(n)):
        return False
    if any(rows[0][x] != x or rows[x][0] != x for x in range(n)):
        return False
    return all(rows[rows[a][b]][c] == rows[a][rows[b][c]] for a in range(n) for b in range(n) for c in range(n))


def span(rows, gens) -> set[int]:
    """Naive closure: multiply everything by everything until nothing new appears."""
    S = {0} | set(gens)
    while True:
        new = {rows[a][b] for a in S for b in S} | S
        if new == S:
            return S
        S = new


def all_subgroups_bruteforce(rows) -> set[frozenset[int]]:
    """Every subset containing 0 that is closed under multiplication (order <= 12)."""
    n = len(rows)
    assert n <= 12
    out = set()
    for mask in range(1 << (n - 1)):
        S = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        if all(rows[a][b] in S for a in S for b in S):
            out.add(frozenset(S))
    return out


def edges_of(n, adj_pairs) -> set[tuple[int, int]]:
    return {(min(u, v), max(u, v)) for u, v in adj_pairs}


def chromatic_bruteforce(n: int, edges) -> int:
    """Smallest k with a proper k-colouring, by trying every assignment (n <= 10)."""
    assert n <= 10
    if n == 0:
        return 0
    edges = list(edges)
    for k in range(1, n + 1):
        for assign in itertools.product(range(k), repeat=n - 1):
            col = (0,) + assign
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def clique_bruteforce(n: int, edges) -> int:
    E = set(edges)
    best = 1 if n else 0
    for size in range(2, n + 1):
        if any(all((a, b) in E for a, b in itertools.combinations(S, 2)) for S in itertools.combinations(range(n), size)):
            best = size
        else:
            break
    return best


def simple_cycles_bruteforce(n: int, edges) -> set[frozenset[tuple[int, int]]]:
    """Every simple cycle as its edge set, by trying every vertex sequence (n <= 7)."""
    assert n <= 7
    E = set(edges)
    out = set()
    for k in range(3, n + 1):
        for seq in itertools.permutations(range(n), k):
            es = [(min(seq[i], seq[(i + 1) % k]), max(seq[i], seq[(i + 1) % k])) for i in range(k)]
            if all(e in E for e in es):
                out.add(frozenset(es))
    return out


def kn_cycle_count(n: int) -> int:
    return sum(math.comb(n, k) * math.factorial(k - 1) // 2 for k in range(3, n + 1))


def isomorphic_bruteforce(n: int, e1, e2) -> bool:
    E1, E2 = set(e1), set(e2)
    if len(E1) != len(E2):
        return False
    for p in itertools.permutations(range(n)):
        if {(min(p[u], p[v]), max(p[u], p[v])) for u, v in E1} == E2:
            return True
    return False


def lambert_wb_scipy(n: float) -> float:
    """W_b(n) = W0(n ln 2) / ln 2, using scipy's principal branch."""
    from scipy.special import lambertw

    return float(lambertw(n * math.log(2)).real) / math.log(2)


def minimal_gensets_bruteforce(rows) -> set[frozenset[int]]:
    """Inclusion-minimal generating sets by checking every subset (order <= 12)."""
    n = len(rows)
    assert n <= 12
    gen = []
    for mask in range(1, 1 << (n - 1)):
        S = frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)
        if len(span(rows, S)) == n:
            gen.append(S)
    gens = set(gen)
    return {S for S in gens if not any((S - {x}) in gens for x in S)} | ({frozenset()} if n == 1 else set())
