"""Branch and bound over edge-set partitions with no rainbow ``K_k``.

Partitions are enumerated as restricted-growth strings over a fixed edge order:
edge ``i`` joins one of the classes opened so far or opens the next one.  A
class only ever grows, so two edges placed in different classes stay in
different classes in every descendant.  That gives the rainbow cut: once all
edges of some ``K_k`` are placed in pairwise distinct classes the branch is
dead.

The objective is a sum of per-class weights.  With unit weights it is the
number of colors.  With a vertex size function ``f`` it is the number of colors
of the blow-up: a single-edge class ``v_i v_j`` is worth ``f_i f_j``, a star
centered at ``v_i`` is worth ``f_i``, anything else 1.  Both weights can only
drop as a class grows, so the current total plus the best possible weight of
the unplaced edges (each alone in a fresh class) bounds every completion.

That bound is tightened by clique packing.  A ``K_k`` whose placed edges are in
pairwise distinct classes still needs a repeated color, so at least one of its
unplaced edges ends up sharing a class, which costs at least the smallest
fresh weight among them.  Over cliques with disjoint unplaced edge sets these
costs add up.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

log = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class PartitionProblem:
    vertex_count: int
    edges: tuple[Edge, ...]
    k: int
    sizes: tuple[int, ...] | None = None  # None means unit weight per class


@dataclass
class SearchStats:
    nodes: int = 0
    pruned_bound: int = 0
    pruned_rainbow: int = 0
    leaves: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.pruned_bound += other.pruned_bound
        self.pruned_rainbow += other.pruned_rainbow
        self.leaves += other.leaves

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "pruned_bound": self.pruned_bound,
            "pruned_rainbow": self.pruned_rainbow,
            "leaves": self.leaves,
        }


@dataclass
class SearchOutcome:
    value: int
    best: tuple[int, ...] | None
    optimal: list[tuple[int, ...]] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)


def clique_edge_sets(problem: PartitionProblem) -> list[list[tuple[int, ...]]]:
    """For each edge index, the other edges of every ``K_k`` whose last edge it is."""
    index = {e: i for i, e in enumerate(problem.edges)}
    adj = [set() for _ in range(problem.vertex_count)]
    for u, v in problem.edges:
        adj[u].add(v)
        adj[v].add(u)
    by_last: list[list[tuple[int, ...]]] = [[] for _ in problem.edges]
    k = problem.k

    def grow(clique: list[int], cand: list[int]) -> None:
        if len(clique) == k:
            ids = sorted(index[(a, b)] for a, b in combinations(clique, 2))
            by_last[ids[-1]].append(tuple(ids[:-1]))
            return
        for i, w in enumerate(cand):
            grow(clique + [w], [x for x in cand[i + 1:] if x in adj[w]])

    if k >= 2:
        grow([], list(range(problem.vertex_count)))
    return by_last


def _search(
    problem: PartitionProblem,
    prefix: Sequence[int] = (),
    floor: int = 0,
    collect: bool = False,
) -> SearchOutcome:
    edges = problem.edges
    m = len(edges)
    unit = problem.sizes is None
    f = problem.sizes
    cliques = clique_edge_sets(problem)
    edge_w = [1 if unit else f[a] * f[b] for a, b in edges]
    rem = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        rem[i] = rem[i + 1] + edge_w[i]
    # per depth: (placed edges, unplaced edge set, min unplaced weight), fewest unplaced first
    packing: list[list[tuple[tuple[int, ...], frozenset[int], int]]] = []
    full = [tuple(sorted((*others, last))) for last, group in enumerate(cliques) for others in group]
    for i in range(m + 1):
        rows = []
        for q in full:
            if q[-1] < i:
                continue
            placed = tuple(j for j in q if j < i)
            free = frozenset(j for j in q if j >= i)
            rows.append((placed, free, min(edge_w[j] for j in free)))
        rows.sort(key=lambda row: (len(row[1]), row[0]))
        packing.append(rows)

    assign = [0] * m
    count: list[int] = []
    common: list[tuple[int, ...]] = []
    weight: list[int] = []
    total = 0
    stats = SearchStats()
    best_value = -1
    best: list[int] | None = None
    optimal: list[tuple[int, ...]] = []

    def class_weight(c: int) -> int:
        if unit:
            return 1
        if count[c] == 1:
            return f[common[c][0]] * f[common[c][1]]
        if common[c]:
            return f[common[c][0]]
        return 1

    def rainbow(i: int, c: int) -> bool:
        for others in cliques[i]:
            seen = {c}
            for j in others:
                a = assign[j]
                if a in seen:
                    break
                seen.add(a)
            else:
                return True
        return False

    def packing_loss(i: int) -> int:
        loss = 0
        taken: set[int] = set()
        for placed, free, w in packing[i]:
            if not taken.isdisjoint(free):
                continue
            if len({assign[j] for j in placed}) != len(placed):
                continue
            taken |= free
            loss += w
        return loss

    def place(i: int, c: int) -> tuple:
        nonlocal total
        a, b = edges[i]
        assign[i] = c
        if c == len(count):
            count.append(1)
            common.append((a, b))
            w = 1 if unit else f[a] * f[b]
            weight.append(w)
            total += w
            return ("new",)
        saved = (count[c], common[c], weight[c])
        count[c] += 1
        common[c] = tuple(x for x in common[c] if x == a or x == b)
        w = class_weight(c)
        total += w - weight[c]
        weight[c] = w
        return ("old", c, saved)

    def unplace(token: tuple) -> None:
        nonlocal total
        if token[0] == "new":
            total -= weight.pop()
            count.pop()
            common.pop()
            return
        _, c, (cnt, com, w) = token
        total += w - weight[c]
        count[c], common[c], weight[c] = cnt, com, w

    def dfs(i: int) -> None:
        nonlocal best_value, best
        stats.nodes += 1
        if i == m:
            stats.leaves += 1
            if total > best_value:
                best_value = total
                best = assign.copy()
                optimal.clear()
                if collect:
                    optimal.append(tuple(assign))
            elif total == best_value:
                if best is None or assign < best:
                    best = assign.copy()
                if collect:
                    optimal.append(tuple(assign))
            return
        bound = total + rem[i]
        target = max(best_value, floor)
        if bound < target:
            stats.pruned_bound += 1
            return
        bound -= packing_loss(i)
        if bound < target:
            stats.pruned_bound += 1
            return
        if bound == target and not collect and best is not None and assign[:i] > best[:i]:
            stats.pruned_bound += 1
            return
        opened = len(count)
        for c in (opened, *range(opened)):
            if rainbow(i, c):
                stats.pruned_rainbow += 1
                continue
            token = place(i, c)
            dfs(i + 1)
            unplace(token)

    for i, c in enumerate(prefix):
        if c > len(count) or rainbow(i, c):
            return SearchOutcome(-1, None, [], stats)
        place(i, c)
    dfs(len(prefix))
    if best is None:
        return SearchOutcome(-1, None, [], stats)
    return SearchOutcome(best_value, tuple(best), sorted(optimal), stats)


def _prefixes(problem: PartitionProblem, want: int) -> list[tuple[int, ...]]:
    """Rainbow-feasible restricted-growth prefixes, deep enough to give ``want`` subtrees."""
    cliques = clique_edge_sets(problem)
    m = len(problem.edges)
    level: list[tuple[int, ...]] = [()]
    depth = 0
    while len(level) < want and depth < m:
        nxt = []
        for p in level:
            opened = max(p, default=-1) + 1
            for c in range(opened + 1):
                cand = p + (c,)
                dead = any(len({*(cand[j] for j in others), c}) == problem.k * (problem.k - 1) // 2
                           for others in cliques[depth])
                if not dead:
                    nxt.append(cand)
        level = nxt
        depth += 1
    return level


def _search_star(args) -> SearchOutcome:
    return _search(*args)


def maximize(
    problem: PartitionProblem,
    *,
    floor: int = 0,
    collect: bool = False,
    jobs: int = 1,
) -> SearchOutcome:
    """Best rainbow-``K_k``-free partition (lexicographically smallest among ties).

    ``floor`` is a value known to be attainable; branches that cannot reach it
    are cut from the start.  With ``collect`` every optimal partition is
    returned.  ``jobs > 1`` splits the tree into prefix subtrees searched in
    separate processes; the result does not depend on ``jobs``.
    """
    if jobs <= 1:
        out = _search(problem, (), floor, collect)
    else:
        prefixes = _prefixes(problem, 8 * jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_star, [(problem, p, floor, collect) for p in prefixes]))
        stats = SearchStats()
        for p in parts:
            stats.merge(p.stats)
        value = max((p.value for p in parts), default=-1)
        winners = [p for p in parts if p.value == value and p.best is not None]
        best = min((p.best for p in winners), default=None)
        optimal = sorted(x for p in winners for x in p.optimal) if collect else []
        out = SearchOutcome(value, best, optimal, stats)
    log.info("partition search: value=%s %s", out.value, out.stats.as_dict())
    return out
