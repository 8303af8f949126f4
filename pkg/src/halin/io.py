"""File formats: the JSON graph format, certificate JSON, and DOT export.

Graph JSON is an object with fields "n" (vertex count), "edges"
(array of [u, v] pairs) and an optional "outer" (array of outer-cycle
vertex ids). Unknown fields are rejected. Serialization is canonical
(sorted edges, fixed key order) so equal graphs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import IO, Any

from .graph import Graph

_GRAPH_FIELDS = {"n", "edges", "outer"}


class GraphFormatError(ValueError):
    """Raised when a graph or certificate document is malformed."""


def graph_to_dict(g: Graph, outer: set[int] | None = None) -> dict[str, Any]:
    if g.n != g.id_bound:
        raise ValueError("graph has deleted vertices; ids are not dense")
    obj: dict[str, Any] = {
        "n": g.n,
        "edges": [[u, v] for u, v in sorted(g.edges())],
    }
    if outer is not None:
        obj["outer"] = sorted(outer)
    return obj


def graph_from_dict(obj: Any) -> tuple[Graph, set[int] | None]:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph document must be a JSON object")
    unknown = set(obj) - _GRAPH_FIELDS
    if unknown:
        raise GraphFormatError(f"unknown fields: {sorted(unknown)}")
    if "n" not in obj or "edges" not in obj:
        raise GraphFormatError('fields "n" and "edges" are required')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError('"n" must be a non-negative integer')
    g = Graph(n)
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be an array of [u, v] pairs')
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"bad edge entry: {e!r}")
        try:
            g.add_edge(e[0], e[1])
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from None
    outer: set[int] | None = None
    if "outer" in obj:
        raw = obj["outer"]
        if not isinstance(raw, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in raw
        ):
            raise GraphFormatError('"outer" must be an array of vertex ids')
        outer = set(raw)
        if len(outer) != len(raw):
            raise GraphFormatError('"outer" contains duplicate ids')
        for v in outer:
            if not g.has_vertex(v):
                raise GraphFormatError(f"outer vertex {v} is out of range")
    return g, outer


def dumps_graph(g: Graph, outer: set[int] | None = None) -> str:
    return json.dumps(graph_to_dict(g, outer), separators=(", ", ": ")) + "\n"


def save_graph(path: str, g: Graph, outer: set[int] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_graph(g, outer))


def load_graph(path: str) -> tuple[Graph, set[int] | None]:
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
    return graph_from_dict(obj)


def certificate_to_dict(cert: Any) -> dict[str, Any]:
    return {
        "outer": sorted(cert.outer),
        "cycle_order": list(cert.cycle_order),
        "root": cert.root,
        "parent": {str(v): p for v, p in sorted(cert.parent.items())},
    }


def certificate_from_dict(obj: Any) -> Any:
    from .recognition import HalinCertificate

    if not isinstance(obj, dict):
        raise GraphFormatError("certificate document must be a JSON object")
    unknown = set(obj) - {"outer", "cycle_order", "root", "parent"}
    if unknown:
        raise GraphFormatError(f"unknown fields: {sorted(unknown)}")
    try:
        outer = frozenset(int(v) for v in obj["outer"])
        cycle_order = tuple(int(v) for v in obj["cycle_order"])
        root = int(obj["root"])
        parent = {int(v): int(p) for v, p in obj["parent"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad certificate: {exc}") from None
    return HalinCertificate(outer, cycle_order, parent, root)


def load_certificate(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
    return certificate_from_dict(obj)


def save_certificate(path: str, cert: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(certificate_to_dict(cert), separators=(", ", ": ")) + "\n")


# One fill color per color index c1..c4.
_PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3")


def write_dot(
    f: IO[str],
    g: Graph,
    colors: dict[int, int] | None = None,
    outer: set[int] | None = None,
) -> None:
    """Write a DOT rendering; cycle edges are drawn bold, tree edges thin."""
    f.write("graph halin {\n")
    f.write('  node [shape=circle, style=filled, fillcolor="#eeeeee"];\n')
    for v in sorted(g.vertices()):
        if colors is not None and v in colors:
            f.write(f'  {v} [fillcolor="{_PALETTE[colors[v] % 4]}"];\n')
        else:
            f.write(f"  {v};\n")
    for u, v in sorted(g.edges()):
        if outer is not None and u in outer and v in outer:
            f.write(f"  {u} -- {v} [penwidth=2.5];\n")
        else:
            f.write(f"  {u} -- {v};\n")
    f.write("}\n")
