import json

import pytest

from antiramsey.canon import colored_isomorphic, graph_canonical_form, graphs_isomorphic
from antiramsey.constructions import book_colorings, named_graph, normal_coloring, turan_graph
from antiramsey.core import ColoredGraph, Graph, build_host, contains_rainbow_clique, host_from_sizes
from antiramsey.errors import CapacityError, ValidationError
from antiramsey.io import read_colored
from antiramsey.oracle import (
    brute_force_ar,
    classify_theorem8,
    dirac_extremal_graphs,
    dirac_graph_name,
    distinct_extremal_blowups,
    enumerate_extremal,
    rainbow_part,
    verify_theorem10,
    write_manifest,
)

from helpers import naive_ar, naive_rainbow


@pytest.mark.parametrize("sizes, k, value", [([1] * 4, 3, 3), ([2, 1, 1], 3, 3), ([1] * 5, 4, 7)])
def test_brute_force_examples(sizes, k, value):
    for seed in (True, False):
        res = brute_force_ar(build_host(sizes), k, seed=seed)
        assert res.value == value and res.method == "oracle"
        assert res.check_witness()


def test_brute_force_general_graph_matches_naive():
    g = Graph(5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (2, 4)))
    assert brute_force_ar(g, 3).value == naive_ar(g, 3)


def test_brute_force_capacity():
    with pytest.raises(CapacityError) as info:
        brute_force_ar(build_host([1] * 6), 4)
    assert info.value.parameter == "edge-cap"
    assert brute_force_ar(build_host([2, 2, 2]), 3, edge_cap=12).value == 6


def test_seed_that_overshoots_falls_back(monkeypatch):
    import antiramsey.oracle as oracle

    monkeypatch.setattr(oracle, "_seed_value", lambda host, k: 99)
    assert brute_force_ar(build_host([2, 1, 1]), 3).value == 3
    assert enumerate_extremal(build_host([2, 1, 1]), 3).count == 4


def test_enumerate_small_families():
    fam = enumerate_extremal(build_host([1, 1, 1]), 3)
    assert fam.ar_value == 2 and fam.count == 1 and fam.complete
    fam = enumerate_extremal(build_host([2, 1, 1]), 3)
    assert fam.count == 4
    for cg in fam.representatives:
        assert cg.color_count == 3 and not naive_rainbow(cg, 3)
    for i, a in enumerate(fam.representatives):
        for b in fam.representatives[i + 1:]:
            assert not colored_isomorphic(a, b)


def test_enumerate_books_match_page_patterns():
    for n in (1, 2, 3):
        fam = enumerate_extremal(host_from_sizes([n, 1, 1]), 3)
        assert fam.ar_value == n + 1
        assert fam.count == len(book_colorings(n, dedupe=True))


def test_enumerate_is_deterministic():
    a = enumerate_extremal(build_host([1] * 5), 4)
    b = enumerate_extremal(build_host([1] * 5), 4, jobs=2)
    assert [c.colors for c in a.representatives] == [c.colors for c in b.representatives]


def test_manifest(tmp_path):
    fam = enumerate_extremal(build_host([2, 1, 1]), 3)
    path = write_manifest(fam, tmp_path)
    doc = json.loads(path.read_text())
    assert doc["ar_value"] == 3 and doc["count"] == 4 and len(doc["files"]) == 4
    for name, cg in zip(doc["files"], fam.representatives):
        assert read_colored(tmp_path / name) == cg


# classifier

def test_classify_normal_colorings():
    assert classify_theorem8(normal_coloring([2, 1, 1]), 3) == "construction2"
    for t in (2, 3):
        assert classify_theorem8(normal_coloring([t] * 4), 4) == "construction3"


def test_classify_disjoint_pair():
    g = Graph.complete(4)
    cg = ColoredGraph.from_edge_map(g, {(0, 1): "s", (2, 3): "s", (0, 2): 1, (0, 3): 2, (1, 2): 3, (1, 3): 4})
    assert classify_theorem8(cg, 4) == "construction1"


def test_classify_none_and_rejects():
    assert classify_theorem8(ColoredGraph(build_host([2, 1, 1]), (0,) * 5), 3) == "none"
    with pytest.raises(ValidationError):
        classify_theorem8(normal_coloring([2, 1, 1]), 4)
    with pytest.raises(ValidationError):
        classify_theorem8(ColoredGraph(Graph(4, ((0, 1), (1, 2), (2, 3))), (0, 1, 2)), 3)


def test_classify_infers_parts_without_part_map():
    cg = normal_coloring([2, 1, 1])
    plain = ColoredGraph(Graph(cg.graph.vertex_count, cg.graph.edges), cg.colors)
    assert classify_theorem8(plain, 3) == "construction2"


def test_classify_blow_up_with_star_spanning_other_parts():
    # sizes 2,2,2,1: the last vertex sees one color on U_1 and U_3 (2 + 2 = n_2 + n_3)
    host = host_from_sizes([2, 2, 2, 1])
    labels = {e: e for e in host.edges}
    for w in (0, 1, 4, 5):
        labels[(w, 6)] = "star"
    cg = ColoredGraph.from_edge_map(host, labels)
    assert not contains_rainbow_clique(cg, 4)
    assert classify_theorem8(cg, 4) == "construction3"
    # spanning U_1 and U_2 instead is the normal coloring's shape
    labels = {e: e for e in host.edges}
    for w in (0, 1, 2, 3):
        labels[(w, 6)] = "star"
    assert classify_theorem8(ColoredGraph.from_edge_map(host, labels), 4) == "construction3"


def test_overlapping_shapes_take_the_first_tag():
    # a star on U_1 and U_3 at the last vertex of K_{2,2,1,1} is also a page-pattern book
    host = host_from_sizes([2, 2, 1, 1])
    labels = {e: e for e in host.edges}
    for w in (0, 1, 4):
        labels[(w, 5)] = "star"
    assert classify_theorem8(ColoredGraph.from_edge_map(host, labels), 4) == "construction2"


# Dirac graphs

def test_dirac_families():
    names = lambda n: sorted(dirac_graph_name(g, 4) for g in dirac_extremal_graphs(n, 4))
    assert names(5) == ["hourglass", "house", "turan"]
    assert names(6) == ["prism", "turan"]
    assert names(7) == ["turan"]


def test_dirac_graphs_are_extremal_and_free():
    for n in (5, 6):
        for g in dirac_extremal_graphs(n, 4):
            assert g.e == turan_graph(n, 2).e
            # no K_4 - e: no two triangles share an edge
            adj = g.adjacency
            for u, v in g.edges:
                assert len(adj[u] & adj[v]) <= 1
    gs = dirac_extremal_graphs(6, 5)
    assert [dirac_graph_name(g, 5) for g in gs] == ["turan"]
    assert graphs_isomorphic(gs[0], turan_graph(6, 3))


def test_dirac_rejects():
    with pytest.raises(CapacityError):
        dirac_extremal_graphs(9, 4)
    with pytest.raises(ValidationError):
        dirac_extremal_graphs(4, 4)


def test_dirac_names():
    assert dirac_graph_name(named_graph("prism"), 4) == "prism"
    assert dirac_graph_name(Graph(5, ((0, 1),)), 4) == "unnamed"
    assert graph_canonical_form(named_graph("house")) != graph_canonical_form(named_graph("hourglass"))


# totally symmetric colorings

def test_symmetric_optima_at_five():
    rep = verify_theorem10(5, 2, 4)
    assert rep.passed
    assert rep.value == rep.expected_value == 25
    assert rep.found_names == ["hourglass", "house", "turan"]


def test_symmetric_optima_at_six():
    rep = verify_theorem10(6, 2, 4)
    assert rep.passed and rep.found_names == ["prism", "turan"]


def test_symmetric_optima_rejects():
    with pytest.raises(ValidationError):
        verify_theorem10(4, 2, 4)
    with pytest.raises(ValidationError):
        verify_theorem10(5, 1, 4)


def test_rainbow_part_excludes_star_colors():
    g = Graph.complete(5)
    # one color saturated by vertex 0 at the spot of two common edges: not of the required shape
    labels = {e: e for e in g.edges}
    labels[(0, 1)] = labels[(0, 2)] = "star"
    labels[(3, 4)] = "common"
    cg = ColoredGraph.from_edge_map(g, labels)
    assert rainbow_part(cg) is None


def test_planted_lower_base_excluded():
    # a base with a star color scores below the maximum, so it never shows up
    rep = verify_theorem10(5, 2, 4)
    for check in rep.bases:
        assert rainbow_part(check.base) is not None


def test_uniqueness_partial():
    reps = distinct_extremal_blowups([3, 2, 2, 2], 4)
    assert len(reps) == 1
    assert classify_theorem8(reps[0], 4) == "construction3"
    # premise violated: K_{2,1,1} with k = 3 has several extremal classes
    assert enumerate_extremal(build_host([2, 1, 1]), 3).count > 1
    # blown-up optima are always among the raw extremal classes
    blown = distinct_extremal_blowups([2, 1, 1, 1], 4)
    fam = enumerate_extremal(build_host([2, 1, 1, 1]), 4)
    assert all(any(colored_isomorphic(b, c) for c in fam.representatives) for b in blown)
