"""Blow-ups, symmetrization, and the named extremal colorings.

Every construction returns a :class:`ColoredGraph` whose ``name`` records which
recipe produced it; that name is written as ``seed_name`` when the coloring is
saved in the interchange format.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from .canon import canonical_form
from .core import (
    ColoredGraph,
    Graph,
    PartiteSpec,
    build_host,
    classify_colors,
    host_from_sizes,
    saturated_colors,
)
from .errors import ValidationError


def size_function(f: Sequence[int] | Mapping[int, int], vertex_count: int) -> tuple[int, ...]:
    """Normalize a size function to a tuple indexed by base vertex."""
    if isinstance(f, Mapping):
        if set(f) != set(range(vertex_count)):
            raise ValidationError("size function must be defined on every base vertex")
        values = tuple(f[v] for v in range(vertex_count))
    else:
        values = tuple(f)
        if len(values) != vertex_count:
            raise ValidationError(f"size function has {len(values)} values for {vertex_count} vertices")
    for v, s in enumerate(values):
        if not isinstance(s, int) or s < 1:
            raise ValidationError(f"size function value at vertex {v} must be a positive integer, got {s!r}")
    return values


def blow_up(base: ColoredGraph, f: Sequence[int] | Mapping[int, int]) -> ColoredGraph:
    """Replace base vertex ``v_i`` by an independent set of ``f[i]`` copies.

    Colors saturated by no vertex are copied onto every blown edge; a color
    saturated by one vertex ``v_i`` splits into one color per copy of ``v_i``;
    an exclusive color splits into one color per blown edge.
    """
    g = base.graph
    sizes = size_function(f, g.vertex_count)
    offset = [0]
    for s in sizes:
        offset.append(offset[-1] + s)
    cls = classify_colors(base)
    part_of = None
    if g.part_of is not None:
        part_of = tuple(g.part_of[i] for i, s in enumerate(sizes) for _ in range(s))
    labels: dict[tuple[int, int], tuple] = {}
    for (i, j), a in zip(g.edges, base.colors):
        for s in range(sizes[i]):
            for t in range(sizes[j]):
                if a in cls.s0:
                    lab = (a,)
                elif a in cls.s1:
                    lab = (a, s if cls.s1[a] == i else t)
                else:
                    lab = (a, s, t)
                labels[(offset[i] + s, offset[j] + t)] = lab
    graph = Graph(offset[-1], tuple(labels), part_of)
    return ColoredGraph.from_edge_map(graph, labels, name=base.name)


def symmetrize(cg: ColoredGraph, v: int, u: int) -> ColoredGraph:
    """Recolor the edges at ``v`` to mirror those at ``u``.

    A color at ``u`` that ``u`` does not saturate is copied as is; each color
    saturated by ``u`` gets one fresh partner color.  Surviving colors keep their
    relative order and fresh colors are numbered after them.
    """
    g = cg.graph
    if u == v or g.has_edge(u, v):
        raise ValidationError(f"cannot symmetrize {v} to {u}: vertices must be distinct and non-adjacent")
    if g.neighbors(u) != g.neighbors(v):
        raise ValidationError(f"cannot symmetrize {v} to {u}: neighborhoods differ")
    sat_u = saturated_colors(cg, u)
    labels: list = list(cg.colors)
    for x in g.neighbors(v):
        a = cg.color(u, x)
        labels[g.edge_index[(min(v, x), max(v, x))]] = a if a not in sat_u else ("fresh", a)
    surviving = sorted({lab for lab in labels if isinstance(lab, int)})
    remap: dict = {a: i for i, a in enumerate(surviving)}
    for a in sorted(sat_u):
        remap[("fresh", a)] = len(remap)
    return ColoredGraph(g, tuple(remap[lab] for lab in labels), cg.name)


def _base_from(r: int, same: Sequence[tuple[int, int]] = (), name: str | None = None) -> ColoredGraph:
    """Coloring of ``K_r`` that is rainbow except that the listed edges share one color."""
    shared = {tuple(sorted(e)) for e in same}
    k_r = build_host([1] * r)
    labels = ["shared" if e in shared else e for e in k_r.edges]
    return ColoredGraph.from_labels(k_r, labels, name)


def normal_base(k: int) -> ColoredGraph:
    """Rainbow ``K_k`` except that ``v_{k-2}v_k`` and ``v_{k-1}v_k`` share a color."""
    return _base_from(k, [(k - 3, k - 1), (k - 2, k - 1)], "normal")


def normal_coloring(spec: PartiteSpec | Sequence[int], k: int | None = None) -> ColoredGraph:
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    k = spec.r if k is None else k
    if spec.r != k:
        raise ValidationError(f"normal coloring needs exactly k={k} parts, got {spec.r}")
    if k < 3:
        raise ValidationError("normal coloring needs k >= 3")
    return blow_up(normal_base(k), spec.sizes)


def turan_sizes(n: int, parts: int) -> tuple[int, ...]:
    q, extra = divmod(n, parts)
    return tuple(q + 1 if i < extra else q for i in range(parts))


def turan_graph(n: int, parts: int) -> Graph:
    """``T_{n,parts}``: complete ``parts``-partite on ``n`` vertices, sizes within one."""
    if parts < 1 or parts > n:
        raise ValidationError(f"Turán graph needs 1 <= parts <= n, got parts={parts}, n={n}")
    return host_from_sizes(turan_sizes(n, parts))


def turan_base(r: int, k: int) -> ColoredGraph:
    """``K_r`` with a rainbow ``T_{r,k-2}`` and one common color on the remaining edges."""
    if k < 3 or k - 2 > r:
        raise ValidationError(f"Turán base coloring needs 3 <= k <= r + 2, got r={r}, k={k}")
    block = host_from_sizes(turan_sizes(r, k - 2)).part_of
    k_r = build_host([1] * r)
    labels = [e if block[e[0]] != block[e[1]] else "common" for e in k_r.edges]
    return ColoredGraph.from_labels(k_r, labels, "turan")


def turan_coloring(r: int, t: int, k: int) -> ColoredGraph:
    if k < 4:
        raise ValidationError(f"Turán coloring needs k >= 4, got {k}")
    if r <= k:
        raise ValidationError(f"Turán coloring needs r > k, got r={r}, k={k}")
    if t < 1:
        raise ValidationError(f"part size t must be positive, got {t}")
    return blow_up(turan_base(r, k), [t] * r)


def lexical_coloring(n: int) -> ColoredGraph:
    """``K_n`` with ``c(v_i v_j) = min(i, j)``: ``n - 1`` colors and no rainbow triangle."""
    k_n = build_host([1] * n)
    return ColoredGraph.from_labels(k_n, [e[0] for e in k_n.edges], "lexical")


def pair_ladder_coloring(spec: PartiteSpec | Sequence[int]) -> ColoredGraph:
    """Rainbow-triangle-free coloring of ``K_{n1..nr}`` pairing parts (1,2), (3,4), ...

    Inside a pair every edge gets its own color.  All edges from pair ``i`` to
    any later pair (or to the unpaired last part) share one color per ``i``.
    """
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    r = spec.r
    group = [i // 2 for i in range(r)]
    k_r = build_host([1] * r)
    labels = [e if group[e[0]] == group[e[1]] else ("level", group[e[0]]) for e in k_r.edges]
    return blow_up(ColoredGraph.from_labels(k_r, labels, "pair-ladder"), spec.sizes)


def book_colorings(n: int, dedupe: bool = False) -> list[ColoredGraph]:
    """Every page-pattern coloring of the book ``B_n = K_{n,1,1}``.

    Vertices ``0..n-1`` are the pages ``z_i``; ``n`` and ``n+1`` are the spine
    ends ``x`` and ``y``.  The spine gets color ``a0`` and page ``i`` gets one of
    ``(a_i, a_i)``, ``(a_i, a0)``, ``(a0, a_i)`` on ``(xz_i, yz_i)``.
    """
    if n < 1:
        raise ValidationError("book needs at least one page")
    host = host_from_sizes([n, 1, 1])
    x, y = n, n + 1
    out: list[ColoredGraph] = []
    seen: set[bytes] = set()
    for patterns in product(range(3), repeat=n):
        labels = {(x, y): "a0"}
        for z, p in enumerate(patterns):
            labels[(z, x)] = "a0" if p == 2 else ("a", z)
            labels[(z, y)] = "a0" if p == 1 else ("a", z)
        cg = ColoredGraph.from_edge_map(host, labels, "book")
        if dedupe:
            key = canonical_form(cg)
            if key in seen:
                continue
            seen.add(key)
        out.append(cg)
    return out


def example1_coloring(r: int, k: int, t1: int, t2: int) -> ColoredGraph:
    """Extremal but not totally symmetric coloring of ``K_r^{t1+t2}``.

    ``T = T_{r-1,k-2}`` is extended by ``v_r`` in two ways: joining the smallest
    part A (for the first ``t1`` copies of ``v_r``) or the second smallest part B
    (for the remaining ``t2`` copies).  Edges of the two extended Turán graphs
    get exclusive colors and everything else one common color.
    """
    if k < 4 or r <= k:
        raise ValidationError(f"needs r > k >= 4, got r={r}, k={k}")
    if r % (k - 2) == 0:
        raise ValidationError(f"needs k-2 not dividing r; here {k - 2} divides {r}")
    if t1 < 1 or t2 < 1:
        raise ValidationError("t1 and t2 must be positive")
    t = t1 + t2
    block = host_from_sizes(turan_sizes(r - 1, k - 2)).part_of
    a_part, b_part = k - 3, k - 4
    host = build_host([t] * r)
    last = r - 1
    labels = {}
    for u, w in host.edges:
        i, j = u // t, w // t
        if j < last:
            exclusive = block[i] != block[j]
        else:
            joined = a_part if (w - last * t) < t1 else b_part
            exclusive = block[i] != joined
        labels[(u, w)] = (u, w) if exclusive else "common"
    return ColoredGraph.from_edge_map(host, labels, "example1")


def named_graph(name: str) -> Graph:
    """The small exceptional graphs: hourglass, house, prism."""
    edges = {
        "hourglass": [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
        "house": [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)],
        "prism": [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    }
    if name not in edges:
        raise ValidationError(f"unknown graph {name!r}")
    n = 6 if name == "prism" else 5
    return Graph(n, tuple(edges[name]))


def rainbow_plus_common(graph: Graph, name: str | None = None) -> ColoredGraph:
    """``K_n`` with the edges of ``graph`` rainbow and every other edge one common color."""
    k_n = build_host([1] * graph.vertex_count)
    present = set(graph.edges)
    return ColoredGraph.from_labels(k_n, [e if e in present else "common" for e in k_n.edges], name)

