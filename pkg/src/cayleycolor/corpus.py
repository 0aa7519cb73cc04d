"""The catalogue of small groups and the corpus of Cayley graphs used by the checks."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .genset import analyze_genset, enumerate_minimal_generating_sets
from .graphs import group_element_list
from .groups import FiniteGroup, closure_set, make_group

Q32_FIVE_GENS = "b^2,a^4,a^5b,a^3b,a^6b"


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factor_lists(n: int) -> list[tuple[int, ...]]:
    """Every abelian group of order ``n`` as invariant factors ``d1 | d2 | ...``."""
    if n == 1:
        return [(1,)]
    per_prime = []
    for p, e in sorted(_factorize(n).items()):
        per_prime.append([[p**a for a in part] for part in _partitions(e)])
    out = []
    for choice in itertools.product(*per_prime):
        width = max(len(c) for c in choice)
        factors = [1] * width
        for powers in choice:
            for i, q in enumerate(powers):
                factors[width - 1 - i] *= q
        out.append(tuple(f for f in factors if f > 1))
    return sorted(out)


def abelian_spec(factors: tuple[int, ...]) -> str:
    spec = f"cyclic:{factors[0]}"
    for f in factors[1:]:
        spec = f"prod:({spec})x(cyclic:{f})"
    return spec


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    spec: str
    order: int
    abelian: bool


NONABELIAN = [
    ("S3", "sym:3", 6),
    ("D4", "gdih:(cyclic:4)", 8),
    ("Q8", "dicyclic:8", 8),
    ("Dih(Z5)", "gdih:(cyclic:5)", 10),
    ("Dic12", "dicyclic:12", 12),
    ("Dih(Z6)", "gdih:(cyclic:6)", 12),
    ("Dih(Z7)", "gdih:(cyclic:7)", 14),
    ("D8", "gdih:(cyclic:8)", 16),
    ("Q16", "dicyclic:16", 16),
    ("D4xZ2", "prod:(gdih:(cyclic:4))x(cyclic:2)", 16),
    ("Q8xZ2", "prod:(dicyclic:8)x(cyclic:2)", 16),
    ("Z5:Z4", "sdp:5,4,2", 20),
    ("Z7:Z3", "sdp:7,3,2", 21),
    ("S4", "sym:4", 24),
    ("Q8xZ3", "prod:(dicyclic:8)x(cyclic:3)", 24),
    ("Z9:Z3", "sdp:9,3,4", 27),
    ("Q32", "dicyclic:32", 32),
]


def catalogue(max_order: int = 32) -> list[CatalogueEntry]:
    """All abelian groups of order <= ``max_order`` (one per isomorphism type)
    followed by a fixed list of non-abelian groups."""
    out = []
    for n in range(1, max_order + 1):
        for factors in invariant_factor_lists(n):
            name = "x".join(f"Z{f}" for f in factors)
            out.append(CatalogueEntry(name, abelian_spec(factors), n, True))
    for name, spec, n in NONABELIAN:
        if n <= max_order:
            out.append(CatalogueEntry(name, spec, n, False))
    return out


@lru_cache(maxsize=None)
def group(spec: str) -> FiniteGroup:
    """Cached ``make_group``."""
    return make_group(spec)


# ---------------------------------------------------------------- Cayley graph corpus


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: str
    gens: tuple[int, ...]  # in a semiminimal order
    kind: str  # "minimal" or "semiminimal"

    @property
    def group(self) -> FiniteGroup:
        return group(self.spec)


def semiminimal_sets(G: FiniteGroup, max_size: int | None = None) -> list[tuple[int, ...]]:
    """Generating sets that are semiminimal in some order, each listed once in
    such an order.  Every element at least doubles the span, so sizes stay
    below ``log2 |G|``."""
    if G.order == 1:
        return [()]
    cap = int(math.floor(math.log2(G.order)))
    max_size = cap if max_size is None else min(cap, max_size)
    seen: set[frozenset[int]] = set()
    out = []

    def dfs(seq: tuple[int, ...], span: frozenset[int]) -> None:
        if len(span) == G.order:
            key = frozenset(seq)
            if key not in seen:
                seen.add(key)
                out.append(seq)
            return
        if len(seq) == max_size:
            return
        for e in range(1, G.order):
            if e not in span and e not in seq:
                dfs(seq + (e,), closure_set(G, seq + (e,)))

    dfs((), frozenset([0]))
    return out


def named_instances() -> list[CorpusEntry]:
    G21 = group("sdp:7,3,2")
    Q = group("dicyclic:32")
    S4 = group("sym:4")
    return [
        CorpusEntry("Z7:Z3 pair", "sdp:7,3,2", tuple(group_element_list(G21, "(1,0),(0,1)")), "minimal"),
        CorpusEntry("Q32 {a,b}", "dicyclic:32", tuple(group_element_list(Q, "a,b")), "minimal"),
        CorpusEntry("S4 star", "sym:4", tuple(group_element_list(S4, "(1 2),(1 3),(1 4)")), "minimal"),
        CorpusEntry("Q32 five", "dicyclic:32", tuple(group_element_list(Q, Q32_FIVE_GENS)), "semiminimal"),
        CorpusEntry("Z4 (2,1)", "cyclic:4", (2, 1), "semiminimal"),
    ]


def cayley_corpus(minimal_order: int = 24, semiminimal_order: int = 16) -> list[CorpusEntry]:
    """Every minimal generating set of every catalogue group up to
    ``minimal_order``, every non-minimal semiminimal set up to
    ``semiminimal_order``, and the named instances."""
    out = named_instances()
    for entry in catalogue(max(minimal_order, semiminimal_order)):
        G = group(entry.spec)
        if entry.order <= minimal_order:
            for C in enumerate_minimal_generating_sets(G):
                out.append(CorpusEntry(entry.name, entry.spec, C, "minimal"))
        if entry.order <= semiminimal_order:
            for C in semiminimal_sets(G):
                if not analyze_genset(G, C).minimal:
                    out.append(CorpusEntry(entry.name, entry.spec, C, "semiminimal"))
    return out
