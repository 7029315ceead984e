"""Brute-force ground truth for small hosts.

Everything here works from the definition of ``ar(G, K_k)`` directly: all
partitions of the host's edge set are searched (with unit class weights), so
the results do not depend on any closed formula or on the blow-up reduction.
The same search core is shared with :mod:`antiramsey.engine`.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Iterator, Sequence

from .canon import canonical_form, graph_canonical_form
from .constructions import blow_up, named_graph, turan_graph
from .core import ColoredGraph, Graph, PartiteSpec, classify_colors, contains_rainbow_clique
from .engine import BASE_LIMIT, argmax_bases
from .errors import CapacityError, ValidationError
from .formulas import ArResult, dirac_extremal_bound, formula_for
from .io import write_colored
from .search import PartitionProblem, maximize

log = logging.getLogger(__name__)

EDGE_CAP = 13
DIRAC_VERTEX_CAP = 8


def _check_cap(host: Graph, edge_cap: int) -> None:
    if host.e > edge_cap:
        raise CapacityError(f"host has {host.e} edges, above the edge cap {edge_cap}", parameter="edge-cap")


def _seed_value(host: Graph, k: int) -> int:
    """A value known to be attainable on ``host``, from a closed-form construction."""
    if host.part_sizes is None:
        return 0
    try:
        known = formula_for(PartiteSpec(host.part_sizes), k, with_witness=False)
    except ValidationError:
        return 0
    return 0 if known is None else known.value


def _run(host: Graph, k: int, edge_cap: int, jobs: int, collect: bool, seed: bool):
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    _check_cap(host, edge_cap)
    problem = PartitionProblem(host.vertex_count, host.edges, k)
    floor = _seed_value(host, k) if seed else 0
    out = maximize(problem, floor=floor, collect=collect, jobs=jobs)
    if out.best is None and floor > 0:
        # the seed overshot; redo the search unseeded so the answer stays exact
        log.warning("seed value %d not attainable, searching without it", floor)
        out = maximize(problem, floor=0, collect=collect, jobs=jobs)
    return out


def brute_force_ar(
    host: Graph,
    k: int,
    *,
    edge_cap: int = EDGE_CAP,
    jobs: int = 1,
    seed: bool = True,
) -> ArResult:
    """``ar(host, K_k)`` by exhaustive partition search.

    With ``seed`` the search starts from the closed-form value when one applies.
    That value only prunes; if it were not attainable the search is rerun
    without it.
    """
    out = _run(host, k, edge_cap, jobs, collect=False, seed=seed)
    witness = ColoredGraph(host, out.best, "oracle")
    return ArResult(out.value, "oracle", k, witness, out.stats.as_dict())


@dataclass
class ExtremalFamily:
    host: Graph
    k: int
    ar_value: int
    representatives: list[ColoredGraph]
    complete: bool = True
    stats: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.representatives)


def enumerate_extremal(
    host: Graph,
    k: int,
    *,
    edge_cap: int = EDGE_CAP,
    jobs: int = 1,
    seed: bool = True,
) -> ExtremalFamily:
    """Every extremal coloring of ``host`` up to colored isomorphism, sorted by canonical key."""
    out = _run(host, k, edge_cap, jobs, collect=True, seed=seed)
    reps: dict[bytes, ColoredGraph] = {}
    for rgs in out.optimal:
        cg = ColoredGraph(host, rgs)
        reps.setdefault(canonical_form(cg), cg)
    ordered = [reps[key].with_name(f"extremal-{i}") for i, key in enumerate(sorted(reps))]
    stats = {**out.stats.as_dict(), "labeled_optima": len(out.optimal)}
    return ExtremalFamily(host, k, out.value, ordered, True, stats)


def write_manifest(family: ExtremalFamily, directory: str | Path, stem: str = "extremal") -> Path:
    """Write one interchange file per representative plus ``manifest.json``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    files = []
    for i, cg in enumerate(family.representatives):
        name = f"{stem}_{i:03d}.json"
        write_colored(cg, directory / name, cg.name)
        files.append(name)
    manifest = {
        "partite_sizes": list(family.host.part_sizes) if family.host.part_sizes else None,
        "vertex_count": family.host.vertex_count,
        "k": family.k,
        "ar_value": family.ar_value,
        "count": family.count,
        "complete": family.complete,
        "files": files,
    }
    path = directory / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n")
    return path


# Classification of extremal colorings of complete k-partite hosts.

def _host_parts(cg: ColoredGraph, k: int) -> list[tuple[int, ...]]:
    g = cg.graph
    parts = g.parts
    if parts is None:
        # complete multipartite graphs are exactly those where non-adjacency is transitive
        blocks: list[list[int]] = []
        for v in range(g.vertex_count):
            for b, block in enumerate(blocks):
                if not g.has_edge(v, block[0]):
                    blocks[b].append(v)
                    break
            else:
                blocks.append([v])
        parts = tuple(tuple(b) for b in blocks)
        expected = {(u, v) for u, v in combinations(range(g.vertex_count), 2)
                    if not any(u in b and v in b for b in parts)}
        if expected != set(g.edges):
            raise ValidationError("host is not a complete multipartite graph")
    if len(parts) != k:
        raise ValidationError(f"host has {len(parts)} parts; the classifier needs exactly k={k}")
    return list(parts)


def _orderings(parts: list[tuple[int, ...]]) -> Iterator[list[tuple[int, ...]]]:
    """All orders of the parts with sizes non-increasing."""
    ordered = sorted(parts, key=len, reverse=True)
    groups: list[list[tuple[int, ...]]] = []
    for p in ordered:
        if groups and len(groups[-1][0]) == len(p):
            groups[-1].append(p)
        else:
            groups.append([p])
    for choice in product(*(permutations(g) for g in groups)):
        yield [p for group in choice for p in group]


def _only_exclusive_outside(cg: ColoredGraph, allowed: set[int]) -> bool:
    """Every class except those in ``allowed`` is a single edge."""
    return all(len(cls) == 1 for c, cls in enumerate(cg.classes) if c not in allowed)


def _matches_pairing(cg: ColoredGraph, parts: list[tuple[int, ...]]) -> bool:
    k = len(parts)
    if k < 4 or len(parts[k - 4]) != 1:
        return False
    a, b, c, d = (parts[i][0] for i in range(k - 4, k))
    shared = cg.color(a, b)
    if cg.color(c, d) != shared or len(cg.classes[shared]) != 2:
        return False
    return _only_exclusive_outside(cg, {shared})


def _matches_book(cg: ColoredGraph, parts: list[tuple[int, ...]]) -> bool:
    k = len(parts)
    if len(parts[k - 2]) != 1:
        return False
    pages = parts[k - 3]
    x, y = parts[k - 2][0], parts[k - 1][0]
    spine = cg.color(x, y)
    book_colors = {spine}
    index = cg.graph.edge_index
    book_edges = {index[(min(x, y), max(x, y))]}
    for z in pages:
        page = {index[(min(x, z), max(x, z))], index[(min(y, z), max(y, z))]}
        book_edges |= page
        own = {cg.colors[i] for i in page} - {spine}
        if len(own) != 1:
            return False
        (a,) = own
        # the page color lives on this page only
        if not set(cg.classes[a]) <= page:
            return False
        book_colors.add(a)
    if not all(i in book_edges for i in cg.classes[spine]):
        return False
    return _only_exclusive_outside(cg, book_colors)


def _matches_stars(cg: ColoredGraph, parts: list[tuple[int, ...]]) -> bool:
    k = len(parts)
    sizes = [len(p) for p in parts]
    target = sizes[k - 3] + sizes[k - 2]
    pairs = [(i, j) for i, j in combinations(range(k - 1), 2) if sizes[i] + sizes[j] == target]
    g = cg.graph
    stars: set[int] = set()
    for u in parts[k - 1]:
        found = None
        for i, j in pairs:
            span = parts[i] + parts[j]
            colors = {cg.color(u, w) for w in span}
            if len(colors) != 1:
                continue
            (a,) = colors
            expected = {g.edge_index[(min(u, w), max(u, w))] for w in span}
            if set(cg.classes[a]) == expected:
                found = a
                break
        if found is None:
            return False
        stars.add(found)
    return _only_exclusive_outside(cg, stars)


SHAPE_TAGS = ("construction1", "construction2", "construction3")


def classify_theorem8(cg: ColoredGraph, k: int) -> str:
    """Which of the three extremal shapes of a complete ``k``-partite host ``cg`` has.

    Shapes are tried in order and matched over every part order with
    non-increasing sizes:

    * ``construction1``: four singleton parts at the end, one color shared by the
      two disjoint edges among them, all other colors exclusive.
    * ``construction2``: the last three parts form a book (last two parts are
      singletons) colored like a page-pattern book, all other colors exclusive.
    * ``construction3``: each vertex of the last part has one color spanning two
      other parts whose sizes add up to ``n_{k-2} + n_{k-1}``, all other colors
      exclusive.

    Returns ``"none"`` when no shape fits.
    """
    if k < 3:
        raise ValidationError(f"k must be >= 3, got {k}")
    parts = _host_parts(cg, k)
    orders = list(_orderings(parts))
    checks = (_matches_pairing, _matches_book, _matches_stars)
    for tag, check in zip(SHAPE_TAGS, checks):
        if any(check(cg, order) for order in orders):
            return tag
    return "none"


# Extremal graphs without K_k - e.

def _clique_minus_edge(adj: list[set[int]], n: int, k: int, v: int) -> bool:
    """Does the graph contain ``K_k - e`` using vertex ``v``?"""
    others = [w for w in range(n) if w != v]
    for rest in combinations(others, k - 1):
        group = (v, *rest)
        missing = sum(1 for a, b in combinations(group, 2) if b not in adj[a])
        if missing <= 1:
            return True
    return False


def _edge_thresholds(n: int, target: int) -> list[int]:
    # removing a minimum-degree vertex from p vertices and E edges keeps >= E - floor(2E/p) edges
    need = [0] * (n + 1)
    need[n] = target
    for p in range(n, 1, -1):
        need[p - 1] = max(0, need[p] - (2 * need[p]) // p)
    return need


def dirac_extremal_graphs(n: int, k: int) -> list[Graph]:
    """All graphs on ``n`` vertices with ``e(T_{n,k-2})`` edges and no ``K_k - e``, up to isomorphism.

    Graphs are grown one vertex at a time.  A level keeps only graphs dense
    enough to extend to the target edge count, using the fact that deleting a
    minimum-degree vertex loses at most the average degree.
    """
    target = dirac_extremal_bound(n, k)
    if n > DIRAC_VERTEX_CAP:
        raise CapacityError(f"n={n} exceeds the vertex cap {DIRAC_VERTEX_CAP}", parameter="n")
    need = _edge_thresholds(n, target)
    level: dict[bytes, Graph] = {graph_canonical_form(Graph(1, ())): Graph(1, ())}
    for p in range(2, n + 1):
        nxt: dict[bytes, Graph] = {}
        v = p - 1
        for g in level.values():
            for size in range(p):
                for nbrs in combinations(range(v), size):
                    if g.e + size < need[p] or (p == n and g.e + size != target):
                        continue
                    adj = [set(a) for a in g.adjacency] + [set(nbrs)]
                    for w in nbrs:
                        adj[w].add(v)
                    if p >= k and _clique_minus_edge(adj, p, k, v):
                        continue
                    h = Graph(p, g.edges + tuple((w, v) for w in nbrs))
                    nxt.setdefault(graph_canonical_form(h), h)
        level = nxt
        log.debug("dirac search: %d graphs on %d vertices", len(level), p)
    return [level[key] for key in sorted(level)]


def dirac_graph_name(graph: Graph, k: int) -> str:
    n = graph.vertex_count
    key = graph_canonical_form(graph)
    if k - 2 <= n and graph_canonical_form(turan_graph(n, k - 2)) == key:
        return "turan"
    for name in ("hourglass", "house", "prism"):
        candidate = named_graph(name)
        if candidate.vertex_count == n and graph_canonical_form(candidate) == key:
            return name
    return "unnamed"


# Totally symmetric extremal colorings of balanced hosts.

@dataclass
class BaseCheck:
    base: ColoredGraph
    rainbow_graph: str | None  # name of the rainbow part when the shape fits
    ok: bool


@dataclass
class SymmetricOptimaReport:
    r: int
    t: int
    k: int
    value: int
    expected_value: int
    bases: list[BaseCheck]
    expected_names: list[str]
    passed: bool

    @property
    def found_names(self) -> list[str]:
        return sorted(b.rainbow_graph or "?" for b in self.bases)


def rainbow_part(base: ColoredGraph) -> Graph | None:
    """The graph of exclusive-color edges, if every other edge carries one common color."""
    cls = classify_colors(base)
    if cls.s1 or len(cls.s0) != 1:
        return None
    g = base.graph
    rainbow = tuple(e for e, c in zip(g.edges, base.colors) if c in cls.s2)
    return Graph(g.vertex_count, rainbow)


def verify_theorem10(r: int, t: int, k: int, *, base_limit: int = BASE_LIMIT, jobs: int = 1) -> SymmetricOptimaReport:
    """Check that every optimal base coloring of ``K_r`` for ``f = t`` is a rainbow
    extremal ``K_k - e``-free graph plus one common color, and that every such
    graph shows up."""
    if k < 4 or r <= k:
        raise ValidationError(f"needs r > k >= 4, got r={r}, k={k}")
    if t < 2:
        raise ValidationError(f"needs t >= 2, got t={t}")
    if r > DIRAC_VERTEX_CAP:
        raise CapacityError(f"r={r} exceeds the vertex cap {DIRAC_VERTEX_CAP}", parameter="r")
    spec = PartiteSpec.balanced(r, t)
    found = argmax_bases(spec, k, base_limit=base_limit, jobs=jobs)
    value = found[0].weighted_count if found else -1
    expected = formula_for(spec, k, with_witness=False).value
    dirac = {graph_canonical_form(g): dirac_graph_name(g, k) for g in dirac_extremal_graphs(r, k)}
    unique: dict[bytes, ColoredGraph] = {}
    for score in found:
        unique.setdefault(canonical_form(score.base), score.base)
    checks = []
    for key in sorted(unique):
        base = unique[key]
        rainbow = rainbow_part(base)
        name = dirac.get(graph_canonical_form(rainbow)) if rainbow is not None else None
        ok = name is not None and not contains_rainbow_clique(base, k)
        checks.append(BaseCheck(base.with_name(name or "unmatched"), name, ok))
    names = sorted(dirac.values())
    passed = (
        value == expected
        and all(c.ok for c in checks)
        and sorted(c.rainbow_graph for c in checks) == names
    )
    return SymmetricOptimaReport(r, t, k, value, expected, checks, names, passed)


def distinct_extremal_blowups(sizes: Sequence[int], k: int, *, base_limit: int = BASE_LIMIT, jobs: int = 1) -> list[ColoredGraph]:
    """Optimal base colorings blown up to the host, up to colored isomorphism.

    Only colorings that are blow-ups are covered, so a single result is a
    partial uniqueness check rather than a proof.
    """
    spec = PartiteSpec(tuple(sizes))
    unique: dict[bytes, ColoredGraph] = {}
    for score in argmax_bases(spec, k, base_limit=base_limit, jobs=jobs):
        cg = blow_up(score.base, spec.sizes)
        unique.setdefault(canonical_form(cg), cg)
    return [unique[key] for key in sorted(unique)]
