"""Closed-form Turán and anti-Ramsey values.

All functions take the forbidden clique size ``k`` of ``K_k`` directly; any
shift to a Turán-graph index happens inside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import constructions
from .core import ColoredGraph, PartiteSpec, contains_rainbow_clique
from .errors import ValidationError


@dataclass(frozen=True)
class ArResult:
    """An anti-Ramsey value, how it was obtained, and optionally a coloring attaining it."""

    value: int
    method: str
    k: int
    witness: ColoredGraph | None = None
    stats: dict = field(default_factory=dict, compare=False)

    def check_witness(self) -> bool:
        if self.witness is None:
            return True
        return self.witness.color_count == self.value and not contains_rainbow_clique(self.witness, self.k)


def _spec(spec: PartiteSpec | Sequence[int]) -> PartiteSpec:
    return spec if isinstance(spec, PartiteSpec) else PartiteSpec(tuple(spec))


def turan_edges(n: int, parts: int) -> int:
    """Edge count of ``T_{n,parts}`` (equal to ``C(n,2)`` once ``parts >= n``)."""
    if n < 0 or parts < 1:
        raise ValidationError(f"bad Turán parameters n={n}, parts={parts}")
    parts = min(parts, max(n, 1))
    sizes = constructions.turan_sizes(n, parts)
    return comb(n, 2) - sum(comb(s, 2) for s in sizes)


def turan_number(n: int, k: int) -> int:
    """``ex(K_n, K_k)``: most edges on ``n`` vertices with no ``K_k``."""
    if k < 2:
        raise ValidationError(f"forbidden clique size must be >= 2, got {k}")
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    return turan_edges(n, k - 1)


def ar_complete(n: int, k: int, with_witness: bool = True) -> ArResult:
    if k < 3:
        raise ValidationError(f"k must be >= 3, got {k}")
    if n < k:
        raise ValidationError(f"need n >= k, got n={n}, k={k}")
    if k == 3:
        witness = constructions.lexical_coloring(n) if with_witness else None
        return ArResult(n - 1, "formula:complete-triangle", k, witness)
    witness = constructions.turan_base(n, k) if with_witness else None
    return ArResult(turan_number(n, k - 1) + 1, "formula:complete", k, witness)


def multipartite_k3_value(spec: PartiteSpec) -> int:
    n = spec.sizes
    r = spec.r
    paired = sum(n[i] * n[i + 1] for i in range(0, r - 1, 2))
    if r % 2:
        return paired + n[-1] + (r - 1) // 2 - 1
    return paired + r // 2 - 1


def ar_multipartite_k3(spec: PartiteSpec | Sequence[int], with_witness: bool = True) -> ArResult:
    spec = _spec(spec)
    if spec.r < 3:
        raise ValidationError(f"need at least 3 parts, got {spec.r}")
    witness = constructions.pair_ladder_coloring(spec) if with_witness else None
    return ArResult(multipartite_k3_value(spec), "formula:multipartite-triangle", 3, witness)


def kpartite_value(spec: PartiteSpec) -> int:
    n = spec.sizes
    return spec.edge_count - n[-1] * (n[-2] + n[-3] - 1)


def ar_kpartite(spec: PartiteSpec | Sequence[int], k: int, with_witness: bool = True) -> ArResult:
    spec = _spec(spec)
    if k < 3:
        raise ValidationError(f"k must be >= 3, got {k}")
    if spec.r != k:
        raise ValidationError(f"k-partite formula needs exactly k={k} parts, got {spec.r}")
    witness = constructions.normal_coloring(spec) if with_witness else None
    return ArResult(kpartite_value(spec), "formula:k-partite", k, witness)


def ar_balanced(r: int, t: int, k: int, with_witness: bool = True) -> ArResult:
    if k == 3:
        raise ValidationError("balanced formula needs k >= 4; use ar_multipartite_k3 for triangles")
    if k < 4:
        raise ValidationError(f"k must be >= 4, got {k}")
    if r < k:
        raise ValidationError(f"need r >= k, got r={r}, k={k}")
    if t < 1:
        raise ValidationError(f"part size t must be positive, got {t}")
    if r == k:
        value = t * t * (comb(k, 2) - 2) + t
        witness = constructions.normal_coloring(PartiteSpec.balanced(r, t)) if with_witness else None
    else:
        value = t * t * turan_number(r, k - 1) + 1
        witness = constructions.turan_coloring(r, t, k) if with_witness else None
    return ArResult(value, "formula:balanced", k, witness)


def dirac_extremal_bound(n: int, k: int) -> int:
    """Most edges on ``n`` vertices with no ``K_k`` minus an edge: ``e(T_{n,k-2})``."""
    if k < 4 or n < k + 1:
        raise ValidationError(f"needs k >= 4 and n >= k + 1, got n={n}, k={k}")
    return turan_edges(n, k - 2)


def formula_for(spec: PartiteSpec | Sequence[int], k: int, with_witness: bool = True) -> ArResult | None:
    """The closed form that applies to ``ar(K_{spec}, K_k)``, or None."""
    spec = _spec(spec)
    if k < 3 or spec.r < k:
        return None
    if all(n == 1 for n in spec.sizes):
        return ar_complete(spec.r, k, with_witness)
    if spec.r == k:
        return ar_kpartite(spec, k, with_witness)
    if k == 3:
        return ar_multipartite_k3(spec, with_witness)
    if len(set(spec.sizes)) == 1:
        return ar_balanced(spec.r, spec.sizes[0], k, with_witness)
    return None
