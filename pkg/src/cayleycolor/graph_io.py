"""JSON round-trip and DOT export for graphs and edge colorings.

JSON layout::

    {"n": 4, "edges": [[0, 1], ...], "edge_colors": [[0, 1, 0], ...], "labels": ["e", ...]}

``edge_colors`` and ``labels`` are optional.  Every pair must satisfy ``u < v``.
"""

from __future__ import annotations

import json
from typing import Any

from .graphs import EdgeColoring, Graph, GraphError

PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#b5cf6b",
]


class GraphFormatError(GraphError):
    """Malformed graph JSON; ``pos`` is the character offset when known."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (at char {pos})")


def to_dict(graph: Graph, coloring: EdgeColoring | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {"n": graph.n, "edges": [list(e) for e in graph.edges]}
    if coloring is not None:
        out["edge_colors"] = [[u, v, coloring[(u, v)]] for u, v in graph.edges]
    if graph.labels is not None:
        out["labels"] = list(graph.labels)
    return out


def encode(graph: Graph, coloring: EdgeColoring | None = None, indent: int | None = None) -> str:
    return json.dumps(to_dict(graph, coloring), indent=indent)


def decode(text: str) -> tuple[Graph, EdgeColoring | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", exc.pos) from None
    return from_dict(data)


def from_dict(data: Any) -> tuple[Graph, EdgeColoring | None]:
    if not isinstance(data, dict):
        raise GraphFormatError("top level must be an object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError("'n' must be a non-negative integer")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"edges[{i}] must be a pair of integers")
        u, v = e
        if not u < v:
            raise GraphFormatError(f"edges[{i}] must satisfy u < v, got {e}")
        if v >= n or u < 0:
            raise GraphFormatError(f"edges[{i}] out of range for n={n}")
        pairs.append((u, v))
    if len(set(pairs)) != len(pairs):
        raise GraphFormatError("duplicate edge")
    labels = data.get("labels")
    if labels is not None and not (isinstance(labels, list) and len(labels) == n):
        raise GraphFormatError("'labels' must be a list of n strings")
    graph = Graph(n, pairs, [str(s) for s in labels] if labels is not None else None)
    coloring = None
    if "edge_colors" in data:
        colors = {}
        for i, t in enumerate(data["edge_colors"]):
            if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, int) for x in t)):
                raise GraphFormatError(f"edge_colors[{i}] must be [u, v, color]")
            u, v, c = t
            if not u < v:
                raise GraphFormatError(f"edge_colors[{i}] must satisfy u < v")
            if (u, v) not in graph.edge_index:
                raise GraphFormatError(f"edge_colors[{i}] names a non-edge ({u},{v})")
            colors[(u, v)] = c
        if len(colors) != graph.num_edges:
            raise GraphFormatError("edge_colors must cover every edge exactly once")
        coloring = EdgeColoring(graph, colors)
    return graph, coloring


def to_dot(graph: Graph, coloring: EdgeColoring | None = None, name: str = "G",
           vertex_colors: list[int] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        attrs = []
        if graph.labels is not None:
            attrs.append(f'label="{graph.labels[v]}"')
        if vertex_colors is not None:
            attrs.append(f'style=filled fillcolor="{PALETTE[vertex_colors[v] % len(PALETTE)]}"')
        lines.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in graph.edges:
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring[(u, v)]
            lines.append(f'  {u} -- {v} [color="{PALETTE[c % len(PALETTE)]}" label="c{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
