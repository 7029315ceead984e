"""Exact ``ar(K_{n1..nr}, K_k)`` by maximizing blow-up color counts over colorings of ``K_r``.

The anti-Ramsey number of a complete multipartite host equals the largest
color count of a blow-up ``B(K_r^c, f)`` with ``f(v_i) = n_i``, taken over all
colorings ``c`` of ``K_r`` without a rainbow ``K_k``.  The colorings of ``K_r``
are enumerated by :mod:`antiramsey.search` with the blow-up weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .constructions import blow_up, size_function
from .core import ColoredGraph, PartiteSpec, build_host, classify_colors
from .errors import CapacityError, ValidationError
from .formulas import ArResult
from .search import PartitionProblem, SearchOutcome, maximize

BASE_LIMIT = 7


@dataclass(frozen=True)
class BaseColoringScore:
    base: ColoredGraph
    weighted_count: int


def weighted_color_count(base: ColoredGraph, f: Sequence[int] | Mapping[int, int]) -> int:
    """Color count of ``blow_up(base, f)`` computed from the base alone."""
    sizes = size_function(f, base.graph.vertex_count)
    cls = classify_colors(base)
    return (
        len(cls.s0)
        + sum(sizes[v] for v in cls.s1.values())
        + sum(sizes[a] * sizes[b] for a, b in cls.s2.values())
    )


def _problem(spec: PartiteSpec, k: int, base_limit: int) -> PartitionProblem:
    if k < 3:
        raise ValidationError(f"k must be >= 3, got {k}")
    if spec.r < k:
        raise ValidationError(f"need r >= k, got r={spec.r}, k={k}")
    if spec.r > base_limit:
        raise CapacityError(f"r={spec.r} exceeds the base limit {base_limit}", parameter="r")
    k_r = build_host([1] * spec.r)
    return PartitionProblem(spec.r, k_r.edges, k, spec.sizes)


def _run(spec, k, base_limit, jobs, collect) -> tuple[PartiteSpec, SearchOutcome]:
    if not isinstance(spec, PartiteSpec):
        spec = PartiteSpec(tuple(spec))
    out = maximize(_problem(spec, k, base_limit), collect=collect, jobs=jobs)
    return spec, out


def ar_via_theorem6(
    spec: PartiteSpec | Sequence[int],
    k: int,
    *,
    base_limit: int = BASE_LIMIT,
    jobs: int = 1,
    with_witness: bool = True,
) -> ArResult:
    spec, out = _run(spec, k, base_limit, jobs, collect=False)
    k_r = build_host([1] * spec.r)
    base = ColoredGraph(k_r, out.best, "theorem6-base")
    witness = blow_up(base, spec.sizes).with_name("theorem6") if with_witness else None
    return ArResult(out.value, "theorem6", k, witness, {**out.stats.as_dict(), "base": list(out.best)})


def argmax_bases(
    spec: PartiteSpec | Sequence[int],
    k: int,
    *,
    base_limit: int = BASE_LIMIT,
    jobs: int = 1,
) -> list[BaseColoringScore]:
    """Every optimal base coloring of ``K_r`` (as restricted-growth labelings, sorted)."""
    spec, out = _run(spec, k, base_limit, jobs, collect=True)
    k_r = build_host([1] * spec.r)
    return [BaseColoringScore(ColoredGraph(k_r, rgs), out.value) for rgs in out.optimal]
