"""Reproduction checks, shared by ``cayleycolor repro`` and the acceptance tests.

Each check returns a :class:`CriterionResult`; wall-clock ceilings are part
of the verdict.  ``REPRO_TIME_LIMIT`` (seconds) sets the solver budget.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .chromatic import (
    BudgetExhausted,
    SolveBudget,
    chi_min_bruteforce,
    chi_min_classify,
    chromatic_number,
    clique_number,
    is_k_colorable,
    verify_vertex_coloring,
)
from .constructive import (
    DihedralContext,
    dedekind_three_coloring,
    generalized_dihedral_three_coloring,
    schreier_factors,
)
from .corpus import Q32_FIVE_GENS, catalogue, cayley_corpus, group
from .genset import analyze_genset, binary_lambert_w, chromatic_bound, enumerate_minimal_generating_sets, lambert_w_upper
from .graphs import Graph, cayley_graph, complete_graph, contract_pairs, graph_product, group_element_list
from .isomorphism import are_isomorphic
from .popular import descartes_graph, is_two_pentagon_decomposition, iter_edge_colorings, search_edge_coloring, verify_descartes

DEFAULT_TIME_LIMIT = 300.0


def solver_budget() -> SolveBudget:
    raw = os.environ.get("REPRO_TIME_LIMIT")
    return SolveBudget(time_limit=float(raw) if raw else DEFAULT_TIME_LIMIT)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    facts: dict = field(default_factory=dict)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] {self.number:2d}. {self.title} ({self.seconds:.1f}s): {self.detail}"


def _cayley(spec: str, gens: str) -> tuple:
    G = group(spec)
    C = group_element_list(G, gens)
    return G, C, cayley_graph(G, C)


@lru_cache(maxsize=None)
def _q32_chromatic() -> tuple[int, tuple[int, ...], float]:
    _, _, g = _cayley("dicyclic:32", Q32_FIVE_GENS)
    t = time.monotonic()
    chi, col = chromatic_number(g, solver_budget())
    return chi, tuple(col.colors), time.monotonic() - t


def criterion_1() -> CriterionResult:
    t = time.monotonic()
    _, _, g = _cayley("sdp:7,3,2", "(1,0),(0,1)")
    chi, col = chromatic_number(g, solver_budget())
    proper, _ = verify_vertex_coloring(g, col)
    below = is_k_colorable(g, chi - 1, solver_budget())
    dt = time.monotonic() - t
    ok = chi == 4 and proper and col.num_colors == 4 and below is None and dt < 10
    return CriterionResult(1, "chi(Cay(Z7:Z3, {(1,0),(0,1)})) = 4", ok,
                           f"chi={chi}, witness proper={proper}, 3-colourable={below is not None}", dt)


def criterion_2() -> CriterionResult:
    t = time.monotonic()
    _, _, g = _cayley("dicyclic:32", Q32_FIVE_GENS)
    try:
        chi, colors, _ = _q32_chromatic()
    except BudgetExhausted as exc:
        return CriterionResult(2, "chi(Cay(Q32, five gens)) = 7", False,
                               f"budget exhausted with chi in [{exc.lower}, {exc.upper}]", time.monotonic() - t)
    proper, _ = verify_vertex_coloring(g, list(colors))
    dt = time.monotonic() - t
    ok = chi == 7 and proper and len(set(colors)) == 7 and dt < 300
    return CriterionResult(2, "chi(Cay(Q32, five gens)) = 7", ok,
                           f"chi={chi} (6 colours refuted), witness proper={proper}", dt)


def criterion_3() -> CriterionResult:
    t = time.monotonic()
    G21, C21, _ = _cayley("sdp:7,3,2", "(1,0),(0,1)")
    Q, CQ, _ = _cayley("dicyclic:32", Q32_FIVE_GENS)
    r21 = analyze_genset(G21, C21)
    rq = analyze_genset(Q, CQ)
    r4 = analyze_genset(group("cyclic:4"), [2, 1])
    ok = (r21.minimal and rq.semiminimal_in_given_order and not rq.minimal
          and r4.semiminimal_in_given_order and not r4.minimal)
    detail = (f"order-21 minimal={r21.minimal}; Q32 in-order={rq.semiminimal_in_given_order} minimal={rq.minimal}; "
              f"Z4 (2,1) in-order={r4.semiminimal_in_given_order} minimal={r4.minimal}")
    return CriterionResult(3, "generating-set analysis", ok, detail, time.monotonic() - t)


def criterion_4() -> CriterionResult:
    t = time.monotonic()
    count, bad = 0, []
    for entry in catalogue(32):
        if not entry.abelian:
            continue
        G = group(entry.spec)
        for C in enumerate_minimal_generating_sets(G):
            count += 1
            col = dedekind_three_coloring(G, C)
            if col.num_colors > 3 or not verify_vertex_coloring(cayley_graph(G, C), col)[0]:
                bad.append((entry.name, C))
    dt = time.monotonic() - t
    return CriterionResult(4, "Dedekind 3-colouring on abelian groups of order <= 32", not bad and dt < 60,
                           f"{count} minimal sets, {len(bad)} failures", dt, {"count": count})


def criterion_5() -> CriterionResult:
    t = time.monotonic()
    count, bad = 0, []
    for n in range(3, 13):
        D = group(f"gdih:(cyclic:{n})")
        for C in enumerate_minimal_generating_sets(D, min(4, int(math.log2(D.order)))):
            count += 1
            col = generalized_dihedral_three_coloring(DihedralContext.build(D, C))
            if col.num_colors > 3 or not verify_vertex_coloring(cayley_graph(D, C), col)[0]:
                bad.append((n, C))
    return CriterionResult(5, "generalized dihedral 3-colouring, Dih(Z_n), 3 <= n <= 12", not bad,
                           f"{count} minimal sets, {len(bad)} failures", time.monotonic() - t)


def criterion_6() -> CriterionResult:
    t = time.monotonic()
    rows, bad = [], []
    for entry in catalogue(16):
        G = group(entry.spec)
        a, b = chi_min_classify(G), chi_min_bruteforce(G, solver_budget())
        rows.append((entry.name, a))
        if a != b:
            bad.append((entry.name, a, b))
    return CriterionResult(6, "chi_min classification = brute force, order <= 16", not bad,
                           f"{len(rows)} groups, mismatches {bad}", time.monotonic() - t)


def criterion_7() -> CriterionResult:
    t = time.monotonic()
    k4e = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    t0 = time.monotonic()
    r1 = search_edge_coloring(k4e, "no-lonely", "all")
    d1 = time.monotonic() - t0
    t0 = time.monotonic()
    r2 = search_edge_coloring(complete_graph(6), "one-popular", "triangles", 15, solver_budget())
    d2 = time.monotonic() - t0
    sols = list(iter_edge_colorings(complete_graph(5), "one-popular", "all"))
    pent = all(is_two_pentagon_decomposition(s) for s in sols)
    ok = (r1.status.value == "UNSAT" and d1 < 1 and r2.status.value == "UNSAT" and d2 < 300 and sols and pent)
    detail = (f"K4-e {r1.status.value} ({d1:.3f}s); K6 triangles {r2.status.value} ({d2:.2f}s); "
              f"K5: {len(sols)} colourings, all two-pentagon={pent}")
    return CriterionResult(7, "edge-colouring searches", ok, detail, time.monotonic() - t)


def criterion_8() -> CriterionResult:
    t = time.monotonic()
    dg = descartes_graph(3)
    g = dg.graph
    counts = (g.n, g.num_edges, dg.coloring.num_colors)
    rep = verify_descartes(dg, max_len=12)
    chi, col = chromatic_number(g, solver_budget())
    dt = time.monotonic() - t
    ok = (counts == (147, 280, 37) and rep.passed
          and verify_vertex_coloring(g, col)[0] and chi >= 3 and dt < 600)
    detail = (f"|V|,|E|,colours={counts}; structure={rep.structure_ok}; copies={rep.copies_ok}; "
              f"L=12: {rep.bounded.cycles_checked} cycles pass={rep.bounded.passed}; chi={chi}")
    return CriterionResult(8, "Descartes-style G_3", ok, detail, dt, {"chi": chi})


def bound_violations(entries=None) -> tuple[int, list[tuple[str, tuple[int, ...], int, float]]]:
    """Corpus graphs whose exact chi exceeds the bound for their kind."""
    entries = cayley_corpus() if entries is None else entries
    q_gens = tuple(group_element_list(group("dicyclic:32"), Q32_FIVE_GENS))
    bad = []
    for e in entries:
        G = e.group
        if e.spec == "dicyclic:32" and e.gens == q_gens:
            chi = _q32_chromatic()[0]
        else:
            chi = chromatic_number(cayley_graph(G, e.gens), solver_budget())[0]
        b = chromatic_bound(G, e.gens)
        if chi > b.value + 1e-9:
            bad.append((e.name, e.gens, chi, b.value))
    return len(entries), bad


def criterion_9() -> CriterionResult:
    t = time.monotonic()
    total, bad = bound_violations()
    numeric = all(binary_lambert_w(n) < lambert_w_upper(n) for n in (2**j for j in range(3, 13)))
    ok = not bad and numeric
    shown = ", ".join(f"{name} {gens}: chi={chi} > {b:.3f}" for name, gens, chi, b in bad)
    detail = f"{total} corpus graphs, {len(bad)} above the bound" + (f" [{shown}]" if bad else "")
    detail += f"; W_b inequality for n=8..4096: {numeric}"
    return CriterionResult(9, "chromatic upper bounds", ok, detail, time.monotonic() - t, {"violations": bad})


def criterion_10() -> CriterionResult:
    t = time.monotonic()
    Q, _, g = _cayley("dicyclic:32", Q32_FIVE_GENS)
    z = Q.parse_element("b^2")
    h, _ = contract_pairs(g, [Q.rows[x][z] for x in range(Q.order)])
    phi = are_isomorphic(g, graph_product(h, complete_graph(2), "strong"))
    dt = time.monotonic() - t
    return CriterionResult(10, "Cay(Q32, five gens) = H strong-times K2", phi is not None and dt < 30,
                           f"H has {h.n} vertices, {h.num_edges} edges; isomorphism found={phi is not None}", dt)


def criterion_11() -> CriterionResult:
    t = time.monotonic()
    S4, C, g = _cayley("sym:4", "(1 2),(1 3),(1 4)")
    bip = is_k_colorable(g, 2) is not None
    factors = schreier_factors(S4, C)
    k4 = all(f.graph == complete_graph(4) for f in factors)
    return CriterionResult(11, "S4 star graph", bip and k4,
                           f"bipartite={bip}; factors={[f.graph.n for f in factors]} all K4={k4}", time.monotonic() - t)


def criterion_12() -> CriterionResult:
    t = time.monotonic()
    entries = cayley_corpus()
    worst = {"minimal": 0, "semiminimal": 0}
    for e in entries:
        worst[e.kind] = max(worst[e.kind], clique_number(cayley_graph(e.group, e.gens)))
    tight = clique_number(cayley_graph(group("cyclic:4"), [2, 1]))
    ok = worst["minimal"] <= 3 and worst["semiminimal"] <= 4 and tight == 4
    return CriterionResult(12, "clique ceilings", ok,
                           f"{len(entries)} graphs; max omega minimal={worst['minimal']}, "
                           f"semiminimal={worst['semiminimal']}; omega(Cay(Z4,(2,1)))={tight}", time.monotonic() - t)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
}


def run_criterion(number: int) -> CriterionResult:
    t = time.monotonic()
    try:
        res = CRITERIA[number]()
    except BudgetExhausted as exc:
        res = CriterionResult(number, f"criterion {number}", False, f"budget exhausted: {exc}")
    res.seconds = res.seconds or time.monotonic() - t
    return res


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(n) for n in (numbers or sorted(CRITERIA))]
