"""Colored-graph isomorphism and canonical keys for small hosts.

Two independent routes are provided on purpose: :func:`canonical_form` minimizes
a labeled encoding over vertex orders, while :func:`colored_isomorphic` searches
for a vertex bijection directly.  Both are exhaustive and meant for graphs with
at most a dozen or so vertices.
"""

from __future__ import annotations

from array import array
from collections import Counter

from .core import ColoredGraph, Graph


def monochrome(graph: Graph) -> ColoredGraph:
    return ColoredGraph(graph, (0,) * graph.e)


def _color_matrix(cg: ColoredGraph) -> list[list[int]]:
    n = cg.graph.vertex_count
    m = [[0] * n for _ in range(n)]
    for (u, v), c in zip(cg.graph.edges, cg.colors):
        m[u][v] = m[v][u] = c + 1
    return m


def _rank(signatures: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _local_invariants(cg: ColoredGraph) -> tuple[list[Counter], list[int], list[tuple]]:
    g = cg.graph
    size = [len(c) for c in cg.classes]
    at = [Counter() for _ in range(g.vertex_count)]
    for (u, v), c in zip(g.edges, cg.colors):
        at[u][c] += 1
        at[v][c] += 1
    inv = [
        (g.degree(v), tuple(sorted((size[c], m) for c, m in at[v].items())))
        for v in range(g.vertex_count)
    ]
    return at, size, inv


def vertex_cells(cg: ColoredGraph) -> list[list[int]]:
    """Isomorphism-invariant ordered partition of the vertices (color refinement)."""
    g = cg.graph
    at, size, inv = _local_invariants(cg)
    ranks = _rank(inv)
    while True:
        sig = []
        for v in range(g.vertex_count):
            around = []
            for x in g.neighbors(v):
                c = cg.color(v, x)
                around.append((ranks[x], size[c], at[v][c], at[x][c]))
            sig.append((ranks[v], tuple(sorted(around))))
        refined = _rank(sig)
        if len(set(refined)) == len(set(ranks)):
            break
        ranks = refined
    cells: dict[int, list[int]] = {}
    for v, r in enumerate(ranks):
        cells.setdefault(r, []).append(v)
    return [cells[r] for r in sorted(cells)]


def canonical_form(cg: ColoredGraph) -> bytes:
    """Byte key equal for two colored graphs exactly when they are isomorphic.

    The key is the upper triangle of the color matrix read column by column, with
    0 for a non-edge and colors renumbered by first occurrence.  It is minimized
    over all vertex orders that list the refinement cells in order; the search is
    a lexicographic branch and bound on key prefixes.
    """
    n = cg.graph.vertex_count
    cells = vertex_cells(cg)
    slot_cell = [ci for ci, cell in enumerate(cells) for _ in cell]
    m = _color_matrix(cg)
    best: list[int] | None = None
    key: list[int] = []
    perm: list[int] = []
    used = [False] * n
    cmap: dict[int, int] = {}

    def dfs(pos: int, less: bool) -> bool:
        # ``less``: the current prefix is already below the best key's prefix.
        # Returns True when the best key was replaced inside this subtree, after
        # which the prefix equals the new best and comparisons resume.
        nonlocal best
        if pos == n:
            if best is None or less:
                best = key.copy()
                return True
            return False
        start = len(key)
        updated = False
        for w in cells[slot_cell[pos]]:
            if used[w]:
                continue
            added = []
            now_less = less or best is None
            worse = False
            row = m[w]
            for i in range(pos):
                x = row[perm[i]]
                if x:
                    y = cmap.get(x)
                    if y is None:
                        y = len(cmap) + 1
                        cmap[x] = y
                        added.append(x)
                    x = y
                key.append(x)
                if not now_less:
                    b = best[start + i]
                    if x > b:
                        worse = True
                        break
                    if x < b:
                        now_less = True
            if not worse:
                used[w] = True
                perm.append(w)
                if dfs(pos + 1, now_less):
                    updated = True
                    less = False
                perm.pop()
                used[w] = False
            del key[start:]
            for x in added:
                del cmap[x]
        return updated

    dfs(0, False)
    return array("I", [n, *best]).tobytes()


def graph_canonical_form(graph: Graph) -> bytes:
    return canonical_form(monochrome(graph))


def colored_isomorphic(a: ColoredGraph, b: ColoredGraph) -> bool:
    """Direct backtracking search for a vertex bijection plus color bijection."""
    ga, gb = a.graph, b.graph
    n = ga.vertex_count
    if n != gb.vertex_count or ga.e != gb.e or a.color_count != b.color_count:
        return False
    if sorted(map(len, a.classes)) != sorted(map(len, b.classes)):
        return False
    inv_a = _local_invariants(a)[2]
    inv_b = _local_invariants(b)[2]
    if sorted(inv_a) != sorted(inv_b):
        return False
    ma, mb = _color_matrix(a), _color_matrix(b)
    order = sorted(range(n), key=lambda v: (-ga.degree(v), v))
    rho: dict[int, int] = {}
    taken = [False] * n
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def dfs(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if taken[w] or inv_b[w] != inv_a[v]:
                continue
            added = []
            ok = True
            for u, wu in rho.items():
                x, y = ma[v][u], mb[w][wu]
                if (x == 0) != (y == 0):
                    ok = False
                    break
                if x == 0:
                    continue
                fx, by = fwd.get(x), bwd.get(y)
                if fx is None and by is None:
                    fwd[x] = y
                    bwd[y] = x
                    added.append((x, y))
                elif fx != y or by != x:
                    ok = False
                    break
            if ok:
                rho[v] = w
                taken[w] = True
                if dfs(i + 1):
                    return True
                del rho[v]
                taken[w] = False
            for x, y in added:
                del fwd[x]
                del bwd[y]
        return False

    return dfs(0)


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    return colored_isomorphic(monochrome(a), monochrome(b))
