"""Smoke tests for the python bindings."""

import pytest

import extremal


def test_graph_basics():
    g = extremal.Graph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            g.add_edge(u, v)
    assert g.vertex_count() == 4
    assert g.edge_count() == 6
    assert g.degree(0) == 3
    assert g.has_edge(2, 3)
    assert extremal.count_triangles(g) == 4
    assert g.to_graph6() == "C~"
    assert extremal.Graph.from_graph6("C~") == g
    with pytest.raises(ValueError):
        g.add_edge(0, 1)
    with pytest.raises(IndexError):
        g.add_edge(0, 9)


def test_subgraphs_and_sets():
    km = extremal.k_minus(3, 3)
    inside = km.induced_subgraph([0, 1, 2])
    assert inside.edge_count() == 1
    assert km.delete_vertices([0, 1]) == extremal.complete_bipartite(1, 3)
    assert km.edges_between([0, 1, 2], [3, 4, 5]) == 9
    assert extremal.triangle_profile(km)["per_edge"][(0, 1)] == 3


def test_covering_and_counting():
    km = extremal.k_minus(3, 3)
    cert = extremal.tau_triangle(km)
    assert cert.tau == 1
    assert extremal.is_triangle_cover(km, cert.cover)
    assert extremal.tau_triangle_oracle(km) == 1
    assert extremal.count_triangles(km) == extremal.count_triangles_oracle(km) == 3
    assert extremal.count_cliques(km, 3) == 3
    assert extremal.list_cliques(extremal.Graph.from_graph6("C~"), 3) == [
        [0, 1, 2],
        [0, 1, 3],
        [0, 2, 3],
        [1, 2, 3],
    ]


def test_families_and_predictions():
    pred = extremal.predict_family("kst:10,2,1")
    assert pred["edges"] == 26
    assert pred["triangles"] == 8
    assert pred["tau"] == 2
    g = extremal.build_family("kst:10,2,1")
    assert g.edge_count() == 26
    assert extremal.count_triangles(g) == 8
    assert extremal.tau_triangle(g).tau == 2
    assert extremal.turan_part_sizes(8, 3) == [3, 3, 2]
    assert extremal.turan_edge_count(8, 3) == 21
    with pytest.raises(ValueError):
        extremal.build_family("kst:10,2,2")


def test_isomorphism():
    p4 = extremal.Graph(4)
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        p4.add_edge(u, v)
    star = extremal.Graph(4)
    for v in [1, 2, 3]:
        star.add_edge(0, v)
    assert not extremal.are_isomorphic(p4, star)
    assert extremal.are_isomorphic(p4, p4)
    reps = extremal.reduce_to_isomorphism_classes([p4, star, p4])
    assert len(reps) == 2


def test_enumeration():
    visited, passed = extremal.enumerate_labeled(4, 3)
    assert (visited, passed) == (20, 20)
    seen = []
    extremal.enumerate_labeled(4, 3, visitor=seen.append)
    assert len(seen) == 20
    assert all(g.edge_count() == 3 for g in seen)
    visited, passed = extremal.enumerate_labeled(5, 6, min_triangles=1)
    assert visited == 210
    assert 0 < passed < visited


def test_verify_reports():
    report = extremal.check_main(5)
    assert report.holds()
    assert report.claim_id == "main"
    assert report.space_size == 120
    assert "claim_id" in report.to_json()
    extremal.revalidate(report)

    erdos = extremal.check_erdos(6, 1, threads=2)
    assert erdos.extremal_value == 3
    assert erdos.holds()

    lemma3 = extremal.check_lemma3(4, 4)
    assert not lemma3.holds()
    assert lemma3.counterexamples == ["eq A=2 B=2 a=1 b=1 f=2"]
