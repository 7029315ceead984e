"""JSON interchange format for colored graphs and extremal-family manifests.

A colored-graph document looks like::

    {"partite_sizes": [2, 1, 1],
     "edges": [[0, 2, 0], [0, 3, 1], ...],
     "seed_name": "normal"}

``partite_sizes`` lists parts in vertex order (part ``i`` is a consecutive block
of vertex ids).  For a host that is not complete multipartite it is ``null`` and
``vertex_count`` must be given instead.  ``edges`` holds ``[u, v, color]``
triples with 0-based vertices and dense 0-based color ids.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import ColoredGraph, Graph, host_from_sizes
from .errors import ValidationError


def _int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{where}: expected an integer, got {value!r}")
    return value


def to_document(cg: ColoredGraph, seed_name: str | None = None) -> dict:
    g = cg.graph
    doc: dict[str, Any] = {"partite_sizes": list(g.part_sizes) if g.part_sizes else None}
    if g.part_sizes is None:
        doc["vertex_count"] = g.vertex_count
    doc["edges"] = [[u, v, c] for (u, v), c in zip(g.edges, cg.colors)]
    name = seed_name or cg.name
    if name:
        doc["seed_name"] = name
    return doc


def from_document(doc: Any) -> ColoredGraph:
    if not isinstance(doc, dict):
        raise ValidationError("document root must be an object")
    if "edges" not in doc:
        raise ValidationError("missing field 'edges'")
    if "partite_sizes" not in doc:
        raise ValidationError("missing field 'partite_sizes'")
    sizes = doc["partite_sizes"]
    if sizes is None:
        n = _int(doc.get("vertex_count"), "vertex_count")
        host = None
    else:
        if not isinstance(sizes, list) or len(sizes) < 2:
            raise ValidationError("partite_sizes: expected a list of at least 2 integers")
        for i, s in enumerate(sizes):
            if _int(s, f"partite_sizes[{i}]") < 1:
                raise ValidationError(f"partite_sizes[{i}]: sizes must be positive")
        host = host_from_sizes(sizes)
        n = host.vertex_count
    raw = doc["edges"]
    if not isinstance(raw, list):
        raise ValidationError("edges: expected a list of [u, v, color] triples")
    labels: dict[tuple[int, int], int] = {}
    for i, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 3:
            raise ValidationError(f"edges[{i}]: expected [u, v, color]")
        u, v, c = (_int(x, f"edges[{i}]") for x in item)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValidationError(f"edges[{i}]: bad endpoints ({u}, {v}) for {n} vertices")
        if c < 0:
            raise ValidationError(f"edges[{i}]: negative color id {c}")
        key = (min(u, v), max(u, v))
        if key in labels:
            raise ValidationError(f"edges[{i}]: duplicate edge {key}")
        labels[key] = c
    if host is None:
        host = Graph(n, tuple(labels))
    elif set(labels) != set(host.edges):
        missing = sorted(set(host.edges) - set(labels))
        extra = sorted(set(labels) - set(host.edges))
        raise ValidationError(
            f"edges do not match the complete multipartite host: missing {missing[:5]}, unexpected {extra[:5]}"
        )
    colors = tuple(labels[e] for e in host.edges)
    gaps = sorted(set(range(max(colors, default=-1) + 1)) - set(colors))
    if gaps:
        raise ValidationError(f"edges: color ids must be dense 0..c-1, missing {gaps[:5]}")
    return ColoredGraph(host, colors, doc.get("seed_name"))


def dumps(cg: ColoredGraph, seed_name: str | None = None) -> str:
    return json.dumps(to_document(cg, seed_name), indent=None, separators=(",", ":")) + "\n"


def loads(text: str) -> ColoredGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def write_colored(cg: ColoredGraph, path: str | Path, seed_name: str | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(cg, seed_name))
    return path


def read_colored(path: str | Path) -> ColoredGraph:
    path = Path(path)
    try:
        return loads(path.read_text())
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None
