"""Triangle packing and covering: nu, tau, typed clique covers, theta, and
the constructive transversal bound."""

import itertools
import random

import pytest

from trigraph.generators import complete, cycle_power, enumerate_small_graphs, wheel
from trigraph.graph import Graph, enumerate_triangles
from trigraph.packing import (
    k4_subgraphs,
    maximal_cliques,
    nu_delta,
    tau_delta,
    theta_tgraph,
    transversal_from_cover,
    tuza_report,
    typed_cliques,
    typed_cliques_complete,
)
from trigraph.tgraph import build_triangle_graph

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def brute_nu(g):
    tris = enumerate_triangles(g)
    best = 0
    for r in range(len(tris), 0, -1):
        for combo in itertools.combinations(tris, r):
            edges = [e for t in combo for e in t.edges]
            if len(edges) == len(set(edges)):
                return r
    return best


def brute_tau(g):
    tris = enumerate_triangles(g)
    if not tris:
        return 0
    edges = list(g.edges())
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            if all(any(e in t for e in combo) for t in tris):
                return r
    raise AssertionError("unreachable")


def assert_valid_packing(g, indices):
    tris = enumerate_triangles(g)
    used = set()
    for i in indices:
        for e in tris[i].edges:
            assert e not in used
            used.add(e)


def assert_valid_transversal(g, edges):
    for t in enumerate_triangles(g):
        assert any(e in t for e in edges)


# -- nu / tau ------------------------------------------------------------------


def test_spot_values_match_brute_force():
    for g, nu_expect, tau_expect in (
        (complete(4), 1, 2),
        (complete(5), 2, 4),
        (complete(6), 4, 6),
        (BOWTIE, 2, 2),
        (wheel(4), 2, 2),
    ):
        nu, packing = nu_delta(g)
        tau, cover = tau_delta(g)
        assert (nu, tau) == (nu_expect, tau_expect)
        assert (brute_nu(g), brute_tau(g)) == (nu_expect, tau_expect)
        assert len(packing) == nu and len(cover) == tau
        assert_valid_packing(g, packing)
        assert_valid_transversal(g, cover)


def test_triangle_free_graph():
    g = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert nu_delta(g) == (0, ())
    assert tau_delta(g) == (0, ())


# -- K4 detection -----------------------------------------------------------------


def test_k4_subgraphs():
    assert k4_subgraphs(complete(4)) == [(0, 1, 2, 3)]
    assert len(k4_subgraphs(complete(5))) == 5
    assert k4_subgraphs(wheel(4)) == []
    assert k4_subgraphs(BOWTIE) == []


# -- typed cliques -----------------------------------------------------------------


def test_typed_cliques_of_k4():
    tg = build_triangle_graph(complete(4))
    cliques = typed_cliques(tg)
    kinds = sorted(c.kind for c in cliques)
    assert kinds == ["A"] * 6 + ["B"]
    b = next(c for c in cliques if c.kind == "B")
    assert b.members == (0, 1, 2, 3)
    assert b.anchor == (0, 1, 2, 3)
    complete_flag, offender = typed_cliques_complete(tg)
    assert complete_flag and offender is None


def test_typed_cliques_isolated_triangles_get_singletons():
    tg = build_triangle_graph(BOWTIE)
    cliques = typed_cliques(tg)
    assert [c.kind for c in cliques] == ["A", "A"]
    assert sorted(c.anchor for c in cliques) == [(0, 1), (2, 3)]
    assert sorted(c.members for c in cliques) == [(0,), (1,)]


def test_maximal_cliques():
    assert maximal_cliques(complete(4)) == [(0, 1, 2, 3)]
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert maximal_cliques(c6) == [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert maximal_cliques(Graph(2)) == [(0,), (1,)]
    assert maximal_cliques(Graph(0)) == []


# -- theta and the constructive transversal ------------------------------------------


def test_theta_of_k4_uses_the_type_b_clique():
    tg = build_triangle_graph(complete(4))
    theta, cover, fallback = theta_tgraph(tg)
    assert theta == 1 and not fallback
    assert cover[0].kind == "B"
    edges = transversal_from_cover(complete(4), cover)
    assert edges == ((0, 1), (2, 3))
    assert_valid_transversal(complete(4), edges)


def test_theta_of_bowtie():
    tg = build_triangle_graph(BOWTIE)
    theta, cover, fallback = theta_tgraph(tg)
    assert theta == 2 and not fallback
    edges = transversal_from_cover(BOWTIE, cover)
    assert len(edges) == 2
    assert_valid_transversal(BOWTIE, edges)


def test_transversal_from_cover_rejects_partial_covers():
    tg = build_triangle_graph(BOWTIE)
    _, cover, _ = theta_tgraph(tg)
    with pytest.raises(ValueError, match="misses"):
        transversal_from_cover(BOWTIE, cover[:1])


# -- the full report ------------------------------------------------------------------


def test_tuza_report_k4():
    rep = tuza_report(complete(4))
    assert (rep.nu, rep.tau, rep.theta) == (1, 2, 1)
    assert rep.tgraph_perfect
    assert rep.bound_2x and not rep.equality
    assert not rep.cover_fallback
    assert len(rep.constructive_transversal) == 2
    d = rep.to_dict()
    assert d["nu"] == 1 and d["tau"] == 2 and d["theta"] == 1


def test_tuza_report_equality_on_edge_disjoint_triangles():
    rep = tuza_report(BOWTIE)
    assert rep.nu == rep.tau == rep.theta == 2
    assert rep.equality and rep.bound_2x


def test_tuza_report_on_triangle_free_host():
    rep = tuza_report(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert rep.nu == rep.tau == rep.theta == 0
    assert rep.packing_witness == () and rep.constructive_transversal == ()


def test_tuza_report_squared_cycle():
    rep = tuza_report(cycle_power(9, 2))
    assert rep.nu <= rep.tau <= 3 * rep.nu
    assert not rep.tgraph_perfect  # T is an odd hole


def test_tuza_invariants_on_random_corpus_samples():
    rng = random.Random(7)
    pool = list(enumerate_small_graphs(6))
    for g in rng.sample(pool, 60):
        rep = tuza_report(g)  # internal consistency asserts run here
        assert rep.nu <= rep.tau <= 3 * rep.nu or rep.nu == 0
        assert not rep.cover_fallback
        assert len(rep.packing_witness) == rep.nu
        assert len(rep.transversal_witness) == rep.tau
        assert len(rep.cover_witness) == rep.theta
        assert_valid_packing(g, rep.packing_witness)
        assert_valid_transversal(g, rep.transversal_witness)
        if rep.tgraph_perfect:
            assert rep.nu == rep.theta
            assert rep.tau <= len(rep.constructive_transversal) <= 2 * rep.nu
