"""Graphs, edge colorings, and the color-saturation calculus.

A coloring is stored as one color id per edge, aligned with the host's sorted
edge tuple.  Color ids are dense (``0..c-1``); nothing else about their values
is meaningful, since every quantity here is invariant under renaming colors.

Vertices of a complete multipartite host are numbered part by part, so part
``i`` occupies a consecutive block of vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import ValidationError

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PartiteSpec:
    """Part sizes of ``K_{n1,...,nr}``, kept sorted non-increasing."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        if len(sizes) < 2:
            raise ValidationError(f"need at least 2 parts, got {len(sizes)}")
        for n in sizes:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ValidationError(f"part sizes must be positive integers, got {n!r}")
        object.__setattr__(self, "sizes", tuple(sorted(sizes, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "PartiteSpec":
        try:
            sizes = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
        except ValueError:
            raise ValidationError(f"cannot parse part sizes from {text!r}") from None
        return cls(tuple(sizes))

    @classmethod
    def balanced(cls, r: int, t: int) -> "PartiteSpec":
        return cls((t,) * r)

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        return sum(a * b for a, b in combinations(self.sizes, 2))

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``part_of`` is set for complete multipartite hosts."""

    vertex_count: int
    edges: tuple[Edge, ...]
    part_of: tuple[int, ...] | None = None

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValidationError("vertex_count must be non-negative")
        normalized = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {e} has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            pair = _edge(u, v)
            if pair in normalized:
                raise ValidationError(f"duplicate edge {pair}")
            normalized.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))
        if self.part_of is not None:
            parts = tuple(self.part_of)
            if len(parts) != n:
                raise ValidationError("part_of must assign a part to every vertex")
            object.__setattr__(self, "part_of", parts)
            expected = {(u, v) for u, v in combinations(range(n), 2) if parts[u] != parts[v]}
            if expected != normalized:
                raise ValidationError("edges do not form the complete multipartite graph on part_of")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(n), 2)), tuple(range(n)))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edge_index

    @cached_property
    def parts(self) -> tuple[tuple[int, ...], ...] | None:
        """Vertex blocks in part-index order, or None for a general graph."""
        if self.part_of is None:
            return None
        blocks: dict[int, list[int]] = {}
        for v, p in enumerate(self.part_of):
            blocks.setdefault(p, []).append(v)
        return tuple(tuple(blocks[p]) for p in sorted(blocks))

    @property
    def part_sizes(self) -> tuple[int, ...] | None:
        return None if self.parts is None else tuple(len(b) for b in self.parts)


def build_host(spec: PartiteSpec | Sequence[int]) -> Graph:
    """Materialize ``K_{n1,...,nr}`` with vertices numbered part by part."""
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    return host_from_sizes(spec.sizes)


def host_from_sizes(sizes: Sequence[int]) -> Graph:
    """Like :func:`build_host` but keeps the given part order (no sorting)."""
    part_of = tuple(p for p, n in enumerate(sizes) for _ in range(n))
    n = len(part_of)
    edges = tuple((u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v])
    return Graph(n, edges, part_of)


@dataclass(frozen=True)
class ColoredGraph:
    """A graph plus one dense color id per edge (``colors[i]`` colors ``graph.edges[i]``)."""

    graph: Graph
    colors: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        colors = tuple(self.colors)
        if len(colors) != self.graph.e:
            raise ValidationError(f"{len(colors)} colors given for {self.graph.e} edges")
        used = set(colors)
        if used != set(range(len(used))):
            raise ValidationError("color ids must be dense 0..c-1")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_labels(cls, graph: Graph, labels: Sequence[Hashable], name: str | None = None) -> "ColoredGraph":
        """Build from arbitrary per-edge labels, renumbered by first occurrence."""
        remap: dict[Hashable, int] = {}
        ids = tuple(remap.setdefault(lab, len(remap)) for lab in labels)
        return cls(graph, ids, name)

    @classmethod
    def from_edge_map(cls, graph: Graph, mapping: Mapping[Edge, Hashable], name: str | None = None) -> "ColoredGraph":
        try:
            labels = [mapping[e] if e in mapping else mapping[(e[1], e[0])] for e in graph.edges]
        except KeyError as exc:
            raise ValidationError(f"edge {exc.args[0]} has no color") from None
        return cls.from_labels(graph, labels, name)

    @property
    def color_count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices of each color class, indexed by color id."""
        buckets: list[list[int]] = [[] for _ in range(self.color_count)]
        for i, c in enumerate(self.colors):
            buckets[c].append(i)
        return tuple(tuple(b) for b in buckets)

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_index[_edge(u, v)]]

    def normalized(self) -> "ColoredGraph":
        """Same partition, color ids relabeled by first occurrence in edge order."""
        return ColoredGraph.from_labels(self.graph, self.colors, self.name)

    def with_name(self, name: str) -> "ColoredGraph":
        return ColoredGraph(self.graph, self.colors, name)


@dataclass(frozen=True)
class ColorClassification:
    """How many vertices saturate each color: none, exactly one, or both endpoints."""

    s0: frozenset[int]
    s1: Mapping[int, int]
    s2: Mapping[int, Edge]

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.s0), len(self.s1), len(self.s2)


def _class_saturators(cg: ColoredGraph, color: int) -> set[int]:
    edges = cg.graph.edges
    members = cg.classes[color]
    common = set(edges[members[0]])
    for i in members[1:]:
        common.intersection_update(edges[i])
        if not common:
            break
    return common


def classify_colors(cg: ColoredGraph) -> ColorClassification:
    s0: set[int] = set()
    s1: dict[int, int] = {}
    s2: dict[int, Edge] = {}
    for color, members in enumerate(cg.classes):
        sat = _class_saturators(cg, color)
        if len(sat) == 2:
            s2[color] = cg.graph.edges[members[0]]
        elif sat:
            s1[color] = next(iter(sat))
        else:
            s0.add(color)
    return ColorClassification(frozenset(s0), s1, s2)


def colors_at(cg: ColoredGraph, v: int) -> set[int]:
    return {cg.color(v, x) for x in cg.graph.neighbors(v)}


def saturated_colors(cg: ColoredGraph, v: int) -> set[int]:
    """Colors appearing at ``v`` all of whose edges touch ``v``."""
    out = set()
    for a in colors_at(cg, v):
        if all(v in cg.graph.edges[i] for i in cg.classes[a]):
            out.add(a)
    return out


def color_degree(cg: ColoredGraph, v: int) -> int:
    return len(colors_at(cg, v))


def saturated_color_degree(cg: ColoredGraph, v: int) -> int:
    return len(saturated_colors(cg, v))


def rainbow_clique(cg: ColoredGraph, k: int) -> tuple[int, ...] | None:
    """Vertex set of some rainbow ``K_k``, or None.

    Grows cliques in increasing vertex order and abandons a branch as soon as a
    newly added edge repeats a color already on the clique.
    """
    if k < 2:
        raise ValidationError("clique size k must be at least 2")
    g = cg.graph
    n = g.vertex_count
    if k > n:
        return None
    adj = g.adjacency
    color_of = {e: c for e, c in zip(g.edges, cg.colors)}
    clique: list[int] = []
    used: set[int] = set()

    def extend(candidates: list[int]) -> bool:
        if len(clique) == k:
            return True
        need = k - len(clique)
        for idx, w in enumerate(candidates):
            if len(candidates) - idx < need:
                return False
            new_colors = [color_of[(x, w)] for x in clique]
            if len(set(new_colors)) != len(new_colors) or used.intersection(new_colors):
                continue
            clique.append(w)
            used.update(new_colors)
            rest = [y for y in candidates[idx + 1:] if y in adj[w]]
            if extend(rest):
                return True
            clique.pop()
            used.difference_update(new_colors)
        return False

    return tuple(clique) if extend(list(range(n))) else None


def contains_rainbow_clique(cg: ColoredGraph, k: int) -> bool:
    return rainbow_clique(cg, k) is not None


def vertices_symmetric(cg: ColoredGraph, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` are symmetric in the colored graph.

    The color bijection between the saturated colors of ``u`` and ``v`` is forced
    by the edges (each saturated color of ``u`` appears at some neighbor ``x`` and
    must map to the color of ``vx``), so it is read off and checked directly.
    """
    g = cg.graph
    if u == v:
        raise ValidationError("symmetry needs two distinct vertices")
    if g.has_edge(u, v):
        raise ValidationError(f"vertices {u} and {v} are adjacent")
    if g.neighbors(u) != g.neighbors(v):
        return False
    sat_u = saturated_colors(cg, u)
    sat_v = saturated_colors(cg, v)
    if len(sat_u) != len(sat_v):
        return False
    sigma: dict[int, int] = {}
    for x in g.neighbors(v):
        a = cg.color(u, x)
        b = cg.color(v, x)
        if a not in sat_u:
            if b != a:
                return False
        elif sigma.setdefault(a, b) != b:
            return False
    image = set(sigma.values())
    return len(image) == len(sigma) and image == sat_v


def induced_coloring(cg: ColoredGraph, vertices: Iterable[int]) -> ColoredGraph:
    """Colored subgraph induced on ``vertices``, relabeled ``0..m-1`` in the given order."""
    verts = list(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    g = cg.graph
    edges, labels = [], []
    for e, c in zip(g.edges, cg.colors):
        if e[0] in pos and e[1] in pos:
            edges.append(_edge(pos[e[0]], pos[e[1]]))
            labels.append(c)
    part_of = None if g.part_of is None else tuple(g.part_of[v] for v in verts)
    sub = Graph(len(verts), tuple(edges), None)
    if part_of is not None:
        ranks = {p: i for i, p in enumerate(sorted(set(part_of)))}
        part_of = tuple(ranks[p] for p in part_of)
        try:
            sub = Graph(len(verts), tuple(edges), part_of)
        except ValidationError:
            pass
    edge_to_label = dict(zip(edges, labels))
    return ColoredGraph.from_labels(sub, [edge_to_label[e] for e in sub.edges])
