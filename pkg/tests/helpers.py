"""Deliberately naive reference implementations used as test oracles.

Nothing here shares code with the package beyond the data types, so
agreement between the two is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from antiramsey.core import ColoredGraph, Graph


def set_partitions(m: int):
    """Every partition of ``range(m)`` as a restricted-growth string."""
    if m == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            prefix.append(c)
            yield from rec(prefix, max(top, c))
            prefix.pop()

    yield from rec([0], 0)


def bell(m: int) -> int:
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def naive_rainbow(cg: ColoredGraph, k: int) -> bool:
    g = cg.graph
    col = dict(zip(g.edges, cg.colors))
    for group in combinations(range(g.vertex_count), k):
        pairs = list(combinations(group, 2))
        if all(p in col for p in pairs) and len({col[p] for p in pairs}) == len(pairs):
            return True
    return False


def naive_saturators(cg: ColoredGraph, color: int) -> set[int]:
    edges = [e for e, c in zip(cg.graph.edges, cg.colors) if c == color]
    return {v for v in range(cg.graph.vertex_count) if all(v in e for e in edges)}


def naive_ar(host: Graph, k: int) -> int:
    best = -1
    for rgs in set_partitions(host.e):
        cg = ColoredGraph(host, rgs)
        if cg.color_count > best and not naive_rainbow(cg, k):
            best = cg.color_count
    return best


def naive_isomorphic(a: ColoredGraph, b: ColoredGraph) -> bool:
    n = a.graph.vertex_count
    if n != b.graph.vertex_count or a.graph.e != b.graph.e:
        return False
    col_b = dict(zip(b.graph.edges, b.colors))
    for perm in permutations(range(n)):
        sigma: dict[int, int] = {}
        ok = True
        for (u, v), c in zip(a.graph.edges, a.colors):
            e = (min(perm[u], perm[v]), max(perm[u], perm[v]))
            if e not in col_b or sigma.setdefault(c, col_b[e]) != col_b[e]:
                ok = False
                break
        if ok and len(set(sigma.values())) == len(sigma):
            return True
    return False


def turan_edge_count(n: int, parts: int) -> int:
    sizes = [n // parts + (1 if i < n % parts else 0) for i in range(parts)]
    return sum(a * b for a, b in combinations(sizes, 2))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_coloring(rng: random.Random, graph: Graph, max_colors: int | None = None) -> ColoredGraph:
    m = graph.e
    top = max(1, max_colors if max_colors is not None else m)
    labels = [rng.randrange(top) for _ in range(m)]
    return ColoredGraph.from_labels(graph, labels)


def relabel(cg: ColoredGraph, perm: list[int], color_perm: list[int]) -> ColoredGraph:
    """Apply a vertex permutation and a color permutation."""
    g = cg.graph
    mapping = {}
    for (u, v), c in zip(g.edges, cg.colors):
        a, b = perm[u], perm[v]
        mapping[(min(a, b), max(a, b))] = color_perm[c]
    part_of = None
    if g.part_of is not None:
        part_of = [0] * g.vertex_count
        for v in range(g.vertex_count):
            part_of[perm[v]] = g.part_of[v]
    host = Graph(g.vertex_count, tuple(mapping), None if part_of is None else tuple(part_of))
    return ColoredGraph(host, tuple(mapping[e] for e in host.edges))


def graph_with_twins(rng: random.Random, n: int) -> tuple[Graph, int, int]:
    """Random graph on ``n`` vertices with non-adjacent ``u, v`` sharing a neighborhood."""
    u, v = rng.sample(range(n), 2)
    others = [x for x in range(n) if x not in (u, v)]
    nbrs = {x for x in others if rng.random() < 0.6}
    edges = {e for e in combinations(others, 2) if rng.random() < 0.5}
    for x in nbrs:
        edges.add((min(u, x), max(u, x)))
        edges.add((min(v, x), max(v, x)))
    return Graph(n, tuple(edges)), u, v
