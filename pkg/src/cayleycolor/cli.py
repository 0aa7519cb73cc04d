"""Command-line interface.

Exit codes: 0 success, 1 a checked property failed (or UNSAT), 2 usage or
parse error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .chromatic import BudgetExhausted, SolveBudget, chi_min_classify, chromatic_number, max_clique, verify_vertex_coloring
from .constructive import (
    DihedralContext,
    InconsistentInput,
    dedekind_three_coloring,
    frattini_three_coloring,
    generalized_dihedral_three_coloring,
    lift_coloring,
    schreier_product_coloring,
)
from .cycles import DEFAULT_CEILING, CycleCeilingExceeded
from .genset import analyze_genset, chromatic_bound
from .graph_io import decode, encode, to_dot
from .graphs import Graph, GraphError, cayley_graph, group_element_list, natural_edge_coloring
from .groups import GroupError, classify_group, make_group, quotient, subgroup_closure
from .popular import descartes_graph, search_edge_coloring, verify_descartes, verify_edge_coloring

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class CliConfig:
    time_limit: float = 300.0
    cycle_ceiling: int = DEFAULT_CEILING
    output_format: str = "text"
    seed: int | None = None

    def __post_init__(self):
        if self.time_limit <= 0 or self.cycle_ceiling <= 0:
            raise ValueError("limits must be positive")

    @property
    def budget(self) -> SolveBudget:
        return SolveBudget(time_limit=self.time_limit)


class UsageError(Exception):
    pass


def _emit(cfg: CliConfig, text: str, data: dict) -> None:
    if cfg.output_format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _group_and_gens(args) -> tuple:
    G = make_group(args.spec)
    if not args.gens:
        raise UsageError("--gens is required with a group spec")
    return G, group_element_list(G, args.gens)


def _load_graph(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return decode(text)


def _target_graph(args) -> Graph:
    if args.graph:
        return _load_graph(args.graph)[0]
    if not args.spec:
        raise UsageError("give a group spec with --gens, or --graph FILE")
    G, C = _group_and_gens(args)
    return cayley_graph(G, C)


# ---------------------------------------------------------------- commands


def cmd_group_info(args, cfg: CliConfig) -> int:
    G = make_group(args.spec)
    cls = classify_group(G)
    data = {"spec": args.spec, "order": G.order, **asdict(cls), "chi_min": chi_min_classify(G)}
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(cfg, text, data)
    return EXIT_OK


def cmd_cayley(args, cfg: CliConfig) -> int:
    G, C = _group_and_gens(args)
    ec = natural_edge_coloring(G, C)
    fmt = args.out or cfg.output_format
    if fmt == "json":
        print(encode(ec.graph, ec, indent=None))
    elif fmt == "dot":
        print(to_dot(ec.graph, ec, name="Cay"), end="")
    else:
        g = ec.graph
        print(f"Cay({args.spec}, {[G.names[c] for c in C]}): {g.n} vertices, {g.num_edges} edges, "
              f"degrees {sorted(set(g.degrees()))}")
    return EXIT_OK


def cmd_chromatic(args, cfg: CliConfig) -> int:
    g = _target_graph(args)
    chi, col = chromatic_number(g, cfg.budget)
    ok, _ = verify_vertex_coloring(g, col)
    if cfg.output_format == "json":
        print(json.dumps({"chi": chi, "coloring": col.colors, "verified": ok}))
    else:
        print(chi)
        print("witness:", " ".join(map(str, col.colors)))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_clique(args, cfg: CliConfig) -> int:
    g = _target_graph(args)
    K = max_clique(g)
    if cfg.output_format == "json":
        print(json.dumps({"omega": len(K), "clique": K}))
    else:
        print(len(K))
        print("clique:", " ".join(map(str, K)))
    return EXIT_OK


def cmd_genset(args, cfg: CliConfig) -> int:
    G, C = _group_and_gens(args)
    rep = analyze_genset(G, C)
    data = asdict(rep)
    if rep.generates:
        b = chromatic_bound(G, C)
        data["bound"] = {"value": b.value, "kind": b.kind}
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    _emit(cfg, text, data)
    return EXIT_OK


def cmd_color(args, cfg: CliConfig) -> int:
    G, C = _group_and_gens(args)
    if args.algo == "lift":
        if not args.normal:
            raise UsageError("lift needs --normal with generators of the normal subgroup")
        N = subgroup_closure(G, group_element_list(G, args.normal))
        q = quotient(G, N)
        images = sorted({q.projection[c] for c in C})
        if 0 in images:
            raise UsageError("a generator lies in the normal subgroup")
        _, qcol = chromatic_number(cayley_graph(q.group, images), cfg.budget)
        col = lift_coloring(G, N, images, qcol)
    elif args.algo == "schreier":
        col = schreier_product_coloring(G, C, cfg.budget)
    elif args.algo == "dedekind":
        col = dedekind_three_coloring(G, C)
    elif args.algo == "gdih":
        col = generalized_dihedral_three_coloring(DihedralContext.build(G, C))
    else:
        col = frattini_three_coloring(G, C)
    ok, bad = verify_vertex_coloring(cayley_graph(G, C), col)
    data = {"algorithm": args.algo, "colors_used": col.num_colors, "coloring": col.colors,
            "verified": ok, "bad_edge": bad}
    _emit(cfg, f"{args.algo}: {col.num_colors} colours, verified proper: {ok}\n"
               f"coloring: {' '.join(map(str, col.colors))}", data)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_descartes(args, cfg: CliConfig) -> int:
    dg = descartes_graph(args.k, seed=cfg.seed)
    g, ec = dg.graph, dg.coloring
    if args.out == "json":
        print(encode(g, ec))
        return EXIT_OK
    if args.out == "dot":
        print(to_dot(g, ec, name=f"G{args.k}"), end="")
        return EXIT_OK
    if dg.copies:
        rep = verify_descartes(dg, max_len=args.max_len)
        passed = rep.passed
        lines = [f"structure certificate: {rep.structure_ok}", f"per-copy exhaustive: {rep.copies_ok}",
                 rep.bounded.summary()]
        if rep.rainbow_search is not None:
            lines.append(rep.rainbow_search.summary())
        lines += rep.notes
    else:
        r = verify_edge_coloring(g, ec, "one-popular", "exhaustive", ceiling=cfg.cycle_ceiling)
        passed, lines = r.passed, [r.summary()]
    print(f"G_{args.k}: {g.n} vertices, {g.num_edges} edges, {ec.num_colors} colours, |X|={len(dg.x_set)}")
    print("\n".join(lines))
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify_ec(args, cfg: CliConfig) -> int:
    g, ec = _load_graph(args.graph)
    if ec is None:
        raise UsageError("graph file has no edge_colors")
    rep = verify_edge_coloring(g, ec, args.property, args.mode, args.max_len, cfg.cycle_ceiling)
    data = asdict(rep)
    _emit(cfg, rep.summary(), data)
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_search_ec(args, cfg: CliConfig) -> int:
    g, _ = _load_graph(args.graph)
    res = search_edge_coloring(g, args.property, args.scope, args.max_colors, cfg.budget)
    if res.status.value == "SAT":
        if cfg.output_format == "json":
            print(encode(g, res.coloring))
        else:
            print("SAT")
            print("colours:", " ".join(map(str, res.coloring.as_list())))
        return EXIT_OK
    print(res.status.value)
    return EXIT_FAILED if res.status.value == "UNSAT" else EXIT_BUDGET


def cmd_repro(args, cfg: CliConfig) -> int:
    from .acceptance import CRITERIA, run_criterion

    os.environ.setdefault("REPRO_TIME_LIMIT", str(cfg.time_limit))
    numbers = sorted(CRITERIA)
    if args.only:
        try:
            numbers = [int(x) for x in args.only.split(",")]
        except ValueError:
            raise UsageError("--only takes comma separated criterion numbers") from None
        if any(n not in CRITERIA for n in numbers):
            raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    failed = 0
    for n in numbers:
        res = run_criterion(n)
        print(res.line(), flush=True)
        failed += not res.passed
    print(f"{len(numbers) - failed}/{len(numbers)} criteria passed")
    return EXIT_OK if not failed else EXIT_FAILED


# ---------------------------------------------------------------- parser


def _add_target(p: argparse.ArgumentParser, graph_ok: bool = False) -> None:
    p.add_argument("spec", nargs="?" if graph_ok else None, help="group spec, e.g. sdp:7,3,2")
    p.add_argument("--gens", help='generators, e.g. "(1,0),(0,1)" or "a,b" or "1,2"')
    if graph_ok:
        p.add_argument("--graph", help="graph JSON file instead of a group")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cayleycolor", description="Colourings of small Cayley graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--time-limit", type=float, default=None, help="solver budget in seconds (default 300)")
    p.add_argument("--cycle-ceiling", type=int, default=DEFAULT_CEILING)
    p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized matchings")
    sub = p.add_subparsers(dest="command", required=True)

    grp = sub.add_parser("group", help="group information")
    gsub = grp.add_subparsers(dest="group_command", required=True)
    info = gsub.add_parser("info", help="order and classification flags")
    info.add_argument("spec")
    info.set_defaults(func=cmd_group_info)

    c = sub.add_parser("cayley", help="build and export a Cayley graph")
    _add_target(c)
    c.add_argument("--out", choices=("json", "dot", "text"))
    c.set_defaults(func=cmd_cayley)

    c = sub.add_parser("chromatic", help="exact chromatic number with a witness")
    _add_target(c, graph_ok=True)
    c.set_defaults(func=cmd_chromatic)

    c = sub.add_parser("clique", help="clique number")
    _add_target(c, graph_ok=True)
    c.set_defaults(func=cmd_clique)

    c = sub.add_parser("genset", help="minimality report and chromatic bound")
    _add_target(c)
    c.set_defaults(func=cmd_genset)

    c = sub.add_parser("color", help="constructive colourings")
    c.add_argument("algo", choices=("lift", "schreier", "dedekind", "gdih", "frattini"))
    _add_target(c)
    c.add_argument("--normal", help="generators of the normal subgroup (lift only)")
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("descartes", help="the level-k construction")
    c.add_argument("k", type=int)
    c.add_argument("--out", choices=("json", "dot", "text"), default="text")
    c.add_argument("--max-len", type=int, default=12)
    c.set_defaults(func=cmd_descartes)

    c = sub.add_parser("verify-ec", help="check an edge colouring")
    c.add_argument("graph")
    c.add_argument("--property", required=True, choices=("no-lonely", "one-popular"))
    c.add_argument("--mode", default="exhaustive", choices=("exhaustive", "bounded", "triangles"))
    c.add_argument("--max-len", type=int, default=10)
    c.set_defaults(func=cmd_verify_ec)

    c = sub.add_parser("search-ec", help="search for an edge colouring")
    c.add_argument("graph")
    c.add_argument("--property", required=True, choices=("no-lonely", "one-popular"))
    c.add_argument("--scope", default="all", choices=("all", "triangles", "four_cycles"))
    c.add_argument("--max-colors", type=int, default=None)
    c.set_defaults(func=cmd_search_ec)

    c = sub.add_parser("repro", help="run the acceptance checks")
    c.add_argument("--only", help="comma separated criterion numbers")
    c.set_defaults(func=cmd_repro)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    time_limit = args.time_limit
    if time_limit is None:
        time_limit = float(os.environ.get("REPRO_TIME_LIMIT", 300.0))
    try:
        cfg = CliConfig(time_limit, args.cycle_ceiling, args.output_format, args.seed)
        return args.func(args, cfg)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CycleCeilingExceeded as exc:
        print(f"cycle ceiling exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InconsistentInput as exc:
        print(f"inconsistent input: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, GroupError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
