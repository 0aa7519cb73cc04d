"""Generating-set analysis: generation, minimality, semiminimality, and the
degree/Schreier based chromatic bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .groups import FiniteGroup, GroupError, GuardExceeded, closure_set

PERMUTATION_GUARD = 10
ENUMERATION_GUARD = 64


@dataclass(frozen=True)
class GenSetReport:
    generates: bool
    minimal: bool
    semiminimal_in_given_order: bool
    semiminimal_some_order: bool
    witness_order: tuple[int, ...] | None


def _check(G: FiniteGroup, C: Sequence[int]) -> list[int]:
    C = list(C)
    if len(set(C)) != len(C):
        raise GroupError("generating set contains duplicates")
    if any(c == 0 for c in C):
        raise GroupError("generating set contains the identity")
    if any(not 0 <= c < G.order for c in C):
        raise GroupError("generating set names an element outside the group")
    return C


def generates(G: FiniteGroup, C: Sequence[int]) -> bool:
    return len(closure_set(G, C)) == G.order


def is_minimal(G: FiniteGroup, C: Sequence[int]) -> bool:
    C = list(C)
    if not generates(G, C):
        return False
    return all(len(closure_set(G, C[:i] + C[i + 1:])) < G.order for i in range(len(C)))


def is_semiminimal_in_order(G: FiniteGroup, C: Sequence[int]) -> bool:
    for i, c in enumerate(C):
        if c in closure_set(G, C[:i]):
            return False
    return True


def semiminimal_order(G: FiniteGroup, C: Sequence[int]) -> tuple[int, ...] | None:
    """An ordering (as indices into ``C``) with no element generated by its
    predecessors, or None.  Exact search over subsets of used indices."""
    C = list(C)
    if len(C) > PERMUTATION_GUARD:
        raise GuardExceeded(f"order search limited to {PERMUTATION_GUARD} elements")
    k = len(C)
    closures: dict[int, frozenset[int]] = {}
    dead: set[int] = set()

    def closure(mask: int) -> frozenset[int]:
        if mask not in closures:
            closures[mask] = closure_set(G, [C[i] for i in range(k) if mask >> i & 1])
        return closures[mask]

    def search(mask: int, order: list[int]) -> list[int] | None:
        if len(order) == k:
            return order
        if mask in dead:
            return None
        H = closure(mask)
        for i in range(k):
            if not mask >> i & 1 and C[i] not in H:
                found = search(mask | 1 << i, order + [i])
                if found is not None:
                    return found
        dead.add(mask)
        return None

    found = search(0, [])
    return tuple(found) if found is not None else None


def analyze_genset(G: FiniteGroup, C: Sequence[int]) -> GenSetReport:
    C = _check(G, C)
    gen = generates(G, C)
    minimal = gen and is_minimal(G, C)
    in_order = is_semiminimal_in_order(G, C)
    if in_order:
        witness = tuple(range(len(C)))
    else:
        witness = semiminimal_order(G, C)
    return GenSetReport(gen, minimal, in_order, witness is not None, witness)


def enumerate_minimal_generating_sets(G: FiniteGroup, max_size: int | None = None) -> list[tuple[int, ...]]:
    """All inclusion-minimal generating sets with at most ``max_size`` elements, as sorted tuples.

    Walks irredundant sets (no element generated by the others) in increasing
    id order; irredundance is inherited by subsets, so pruning is exact."""
    if G.order > ENUMERATION_GUARD:
        raise GuardExceeded(f"generating-set enumeration limited to order <= {ENUMERATION_GUARD}")
    cap = int(math.floor(math.log2(G.order))) if G.order > 1 else 0
    if max_size is None:
        max_size = cap
    if max_size > cap:
        raise GuardExceeded(f"max_size {max_size} exceeds log2|G| = {cap}")
    if G.order == 1:
        return [()]
    out: list[tuple[int, ...]] = []
    cache: dict[tuple[int, ...], frozenset[int]] = {(): frozenset([0])}

    def cl(S: tuple[int, ...]) -> frozenset[int]:
        r = cache.get(S)
        if r is None:
            r = cache[S] = closure_set(G, S)
        return r

    def dfs(S: tuple[int, ...], span: frozenset[int]) -> None:
        if len(span) == G.order:
            out.append(S)
            return
        if len(S) == max_size:
            return
        start = S[-1] + 1 if S else 1
        for e in range(start, G.order):
            if e in span:
                continue
            T = S + (e,)
            if all(S[i] not in cl(T[:i] + T[i + 1:]) for i in range(len(S))):
                dfs(T, cl(T))

    dfs((), cl(()))
    return out


# ---------------------------------------------------------------- bounds


def binary_lambert_w(n: float, tol: float = 1e-12) -> float:
    """The unique ``w > 0`` with ``w * 2**w == n`` (bisection)."""
    if n < 2:
        raise ValueError("binary Lambert W is only used for n >= 2")
    lo, hi = 0.0, max(1.0, math.log2(n))
    while hi * 2.0**hi < n:
        hi *= 2
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid * 2.0**mid < n:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambert_w_upper(n: float) -> float:
    """``log2 n - log2 log2(n / log2 n)``, defined for n > 2."""
    if n <= 2:
        raise ValueError("upper estimate needs n > 2")
    return math.log2(n) - math.log2(math.log2(n / math.log2(n)))


@dataclass(frozen=True)
class ChromaticBound:
    value: float
    kind: str  # "minimal", "semiminimal", "not-semiminimal" or "trivial"


def chromatic_bound(G: FiniteGroup, C: Sequence[int]) -> ChromaticBound:
    """Upper bound on χ(Cay(G, C)): ``2 W_b(n)`` for minimal sets, ``2 log2 n``
    for semiminimal ones, ``inf`` otherwise."""
    rep = analyze_genset(G, C)
    if not rep.generates:
        raise GroupError("connection set does not generate the group")
    n = G.order
    if n == 1:
        return ChromaticBound(1.0, "trivial")
    if rep.minimal:
        return ChromaticBound(2 * binary_lambert_w(n), "minimal")
    if rep.semiminimal_some_order:
        return ChromaticBound(2 * math.log2(n), "semiminimal")
    return ChromaticBound(math.inf, "not-semiminimal")
