"""On-disk formats: line-oriented graph files and JSON representation files."""

from __future__ import annotations

import json

from .contact import CpgRepresentation, LabeledGraph, VertexId
from .grid import PathError, make_path

GRAPH_HEADER = "cpg-graph v1"


class FormatError(ValueError):
    pass


def dump_graph(g: LabeledGraph) -> str:
    lines = [GRAPH_HEADER]
    lines += [f"v {v}" for v in g.sorted_vertices()]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> LabeledGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != GRAPH_HEADER:
        raise FormatError(f"missing header {GRAPH_HEADER!r}")
    vertices: list[VertexId] = []
    edges: list[tuple[VertexId, VertexId]] = []
    for n, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        try:
            if parts[0] == "v" and len(parts) == 2:
                vertices.append(VertexId.parse(parts[1]))
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((VertexId.parse(parts[1]), VertexId.parse(parts[2])))
            else:
                raise FormatError(f"line {n}: cannot parse {ln!r}")
        except ValueError as exc:
            raise FormatError(f"line {n}: {exc}") from None
    if len(set(vertices)) != len(vertices):
        raise FormatError("duplicate vertex declaration")
    try:
        return LabeledGraph.from_edges(vertices, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dump_rep(rep: CpgRepresentation) -> str:
    w, h = rep.bounds
    items = sorted(((str(v), p) for v, p in rep.paths.items()), key=lambda t: t[0])
    body = ",".join(
        json.dumps(name) + ":" + json.dumps([[c.x, c.y] for c in p.corners], separators=(",", ":"))
        for name, p in items
    )
    return f'{{"version":1,"grid":{{"w":{w},"h":{h}}},"paths":{{{body}}}}}\n'


def _reject_duplicates(pairs):
    keys = [k for k, _ in pairs]
    if len(set(keys)) != len(keys):
        dup = sorted({k for k in keys if keys.count(k) > 1})
        raise FormatError(f"duplicate keys: {', '.join(dup)}")
    return dict(pairs)


def load_rep(text: str) -> CpgRepresentation:
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("version") != 1:
        raise FormatError("expected a version 1 representation document")
    grid, paths = doc.get("grid"), doc.get("paths")
    if not isinstance(grid, dict) or not isinstance(paths, dict):
        raise FormatError("document needs 'grid' and 'paths' objects")
    try:
        w, h = int(grid["w"]), int(grid["h"])
    except (KeyError, TypeError, ValueError):
        raise FormatError("grid needs integer 'w' and 'h'") from None
    out = {}
    for name, corners in paths.items():
        try:
            v = VertexId.parse(name)
            if not isinstance(corners, list) or not all(
                isinstance(c, list) and len(c) == 2 and all(type(t) is int for t in c) for c in corners
            ):
                raise FormatError(f"{name}: corners must be [[x,y],...] integer pairs")
            out[v] = make_path(corners)
        except PathError as exc:
            raise FormatError(f"{name}: {type(exc).__name__}: {exc}") from None
        except FormatError:
            raise
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return CpgRepresentation(out, (w, h))
