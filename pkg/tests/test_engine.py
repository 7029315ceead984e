import random

import pytest

from antiramsey.constructions import blow_up
from antiramsey.core import ColoredGraph, Graph, PartiteSpec, build_host, contains_rainbow_clique
from antiramsey.engine import ar_via_theorem6, argmax_bases, weighted_color_count
from antiramsey.errors import CapacityError, ValidationError
from antiramsey.formulas import formula_for
from antiramsey.oracle import brute_force_ar

from helpers import random_coloring, set_partitions


def test_weighted_count_examples():
    k3 = Graph.complete(3)
    assert weighted_color_count(ColoredGraph(k3, (0, 1, 2)), (2, 1, 1)) == 5
    assert weighted_color_count(ColoredGraph.from_labels(k3, ["b", "b", "a"]), (2, 1, 1)) == 3
    assert weighted_color_count(ColoredGraph(k3, (0, 0, 0)), (3, 2, 1)) == 1


def test_weighted_count_matches_blow_up_exhaustive():
    rng = random.Random(2)
    for r in (2, 3, 4, 5):
        g = Graph.complete(r)
        for rgs in set_partitions(r * (r - 1) // 2):
            if r == 5 and rng.random() > 0.02:
                continue
            base = ColoredGraph(g, rgs)
            f = [rng.randint(1, 3) for _ in range(r)]
            assert weighted_color_count(base, f) == blow_up(base, f).color_count


@pytest.mark.parametrize("sizes, k, value", [([2, 1, 1], 3, 3), ([2, 2, 2, 2], 4, 18), ([2, 2, 2, 2, 2], 4, 25)])
def test_engine_examples(sizes, k, value):
    res = ar_via_theorem6(sizes, k)
    assert res.value == value and res.method == "theorem6"
    assert res.check_witness()
    assert res.witness.graph.part_sizes == tuple(sorted(sizes, reverse=True))


def test_engine_matches_formulas():
    specs = [(a, b, c) for a in range(1, 4) for b in range(1, a + 1) for c in range(1, b + 1)]
    specs += [(2, 2, 1, 1), (3, 1, 1, 1, 1), (2, 2, 2, 1, 1), (1,) * 6]
    for sizes in specs:
        for k in range(3, len(sizes) + 1):
            known = formula_for(sizes, k, False)
            if known is not None:
                assert ar_via_theorem6(sizes, k, with_witness=False).value == known.value, (sizes, k)


def test_engine_matches_oracle_on_small_hosts():
    for sizes, k in [((2, 1, 1, 1), 3), ((2, 1, 1, 1), 4), ((2, 2, 1), 3), ((1, 1, 1, 1, 1), 3), ((3, 1, 1, 1), 4)]:
        host = build_host(sizes)
        assert host.e <= 12
        assert ar_via_theorem6(sizes, k).value == brute_force_ar(host, k, seed=False).value


def test_unbalanced_beyond_formulas():
    # no closed form applies; witness must still be valid
    res = ar_via_theorem6([3, 2, 2, 1, 1], 4)
    assert formula_for([3, 2, 2, 1, 1], 4) is None
    assert res.check_witness()
    assert res.value >= ar_via_theorem6([2, 2, 2, 1, 1], 4, with_witness=False).value


def test_engine_is_deterministic_across_jobs():
    a = ar_via_theorem6([2, 2, 1, 1, 1], 4)
    b = ar_via_theorem6([2, 2, 1, 1, 1], 4, jobs=2)
    assert a.value == b.value and a.stats["base"] == b.stats["base"]


def test_engine_rejects():
    with pytest.raises(ValidationError):
        ar_via_theorem6([2, 1], 3)
    with pytest.raises(ValidationError):
        ar_via_theorem6([1, 1, 1], 2)
    with pytest.raises(CapacityError) as info:
        ar_via_theorem6([1] * 8, 4)
    assert info.value.parameter == "r"


def test_argmax_bases_all_optimal_and_rainbow_free():
    spec = PartiteSpec((2, 2, 2, 2, 2))
    bases = argmax_bases(spec, 4)
    assert bases
    for b in bases:
        assert b.weighted_count == 25
        assert weighted_color_count(b.base, spec.sizes) == 25
        assert not contains_rainbow_clique(b.base, 4)
    rgs = [b.base.colors for b in bases]
    assert rgs == sorted(rgs)


def test_random_bases_never_beat_engine():
    rng = random.Random(9)
    sizes = (3, 2, 1, 1)
    best = ar_via_theorem6(sizes, 4, with_witness=False).value
    for _ in range(300):
        base = random_coloring(rng, Graph.complete(4), rng.randint(1, 6))
        if not contains_rainbow_clique(base, 4):
            assert weighted_color_count(base, sizes) <= best
