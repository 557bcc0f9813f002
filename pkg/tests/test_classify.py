"""Cycle characterization, the path-neighborhood specialization, C_n-freeness,
and the tree / chordal / perfect verdicts."""

import pytest

from trigraph.classify import (
    RouteDisagreement,
    characterize_cycle,
    classify_png_cycle,
    tgraph_class,
    tgraph_cn_free,
    tgraph_is_cycle_direct,
    tgraph_pattern_free,
    theorem_hypothesis_violation,
)
from trigraph.generators import (
    complete,
    complete_minus,
    cycle,
    cycle_power,
    path,
    supplementary,
    wheel,
)
from trigraph.graph import Graph, is_isomorphic
from trigraph.tgraph import build_triangle_graph, find_designated_cycle
from trigraph.transforms import edge_split

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def split_chord(g, edge, apex):
    dc = find_designated_cycle(build_triangle_graph(g))
    return edge_split(g, edge, apex, "strong", dc).graph


# -- hypothesis gate -----------------------------------------------------------


def test_theorem_hypothesis_violation():
    assert theorem_hypothesis_violation(complete(4)) is None
    assert "isolated" in theorem_hypothesis_violation(Graph(5, [(0, 1), (0, 2), (1, 2)]))
    assert "triangle" in theorem_hypothesis_violation(path(3))


# -- direct route ----------------------------------------------------------------


def test_tgraph_is_cycle_direct():
    assert tgraph_is_cycle_direct(cycle_power(7, 2)) == (7, None)
    assert tgraph_is_cycle_direct(wheel(4)) == (4, None)
    n, reason = tgraph_is_cycle_direct(complete(4))
    assert n is None and "2-regular" in reason
    n, reason = tgraph_is_cycle_direct(BOWTIE)
    assert n is None and "2 triangle" in reason
    two_bases = Graph(10, list(complete_minus(5, "K3").edges())
                      + [(a + 5, b + 5) for a, b in complete_minus(5, "K3").edges()])
    n, reason = tgraph_is_cycle_direct(two_bases)
    assert n is None and "disconnected" in reason


# -- characterization --------------------------------------------------------------


def test_characterize_cycle_on_the_bases():
    for g, name, length in (
        (complete_minus(5, "K3"), "K5-K3", 3),
        (wheel(4), "W4", 4),
        (cycle_power(7, 2), "C7^2", 7),
        (cycle_power(10, 2), "C10^2", 10),
        (supplementary("C"), "S_C", 8),
    ):
        cert = characterize_cycle(g)
        assert cert.is_cycle and cert.length == length
        assert cert.case == name and cert.base == name
        assert cert.splits == 0 and cert.reduction.steps == ()
        assert cert.hypothesis_ok
        assert cert.odd_hole == (length >= 5 and length % 2 == 1)


def test_characterize_cycle_on_a_derived_instance():
    g = split_chord(wheel(4), (0, 1), 4)
    cert = characterize_cycle(g)
    assert cert.is_cycle and cert.length == 5
    assert cert.case == "derived" and cert.base == "W4"
    assert cert.splits == 1 and cert.odd_hole
    assert bool(is_isomorphic(cert.base_graph, wheel(4)))


def test_characterize_cycle_direct_verdict_survives_hypothesis_violation():
    g = Graph(8, list(cycle_power(7, 2).edges()))  # isolated vertex 7
    cert = characterize_cycle(g)
    assert cert.is_cycle and cert.length == 7
    assert not cert.hypothesis_ok and "isolated" in cert.hypothesis_reason
    assert cert.base is None and cert.reduction is None


def test_characterize_cycle_negative():
    cert = characterize_cycle(complete(5))
    assert not cert.is_cycle and cert.reason
    assert cert.base is None


# -- path-neighborhood specialization ------------------------------------------------


def test_png_applicability():
    rep = classify_png_cycle(wheel(4))
    assert not rep.applicable and rep.offending_vertex == 4  # hub induces a cycle
    rep = classify_png_cycle(complete_minus(5, "K3"))
    assert not rep.applicable
    rep = classify_png_cycle(path(5))
    assert not rep.applicable  # leaf neighborhoods are single vertices


def test_png_cases():
    rep = classify_png_cycle(cycle_power(8, 2))
    assert rep.applicable and rep.is_cycle and rep.case == "cycle-power"
    rep = classify_png_cycle(supplementary("B"))
    assert rep.applicable and rep.is_cycle and rep.case == "supplementary"
    rep = classify_png_cycle(split_chord(cycle_power(7, 2), (0, 2), 1))
    assert rep.applicable and rep.is_cycle and rep.case == "derived"
    assert rep.certificate.base == "C7^2"


def test_png_non_cycle():
    g = cycle_power(6, 2)
    rep = classify_png_cycle(g)
    if rep.applicable:
        assert not rep.is_cycle and rep.case is None


# -- C_n-freeness ----------------------------------------------------------------------


def test_cn_free_routes_agree():
    r = tgraph_cn_free(complete(4), 3)
    assert not r.free and r.agree
    assert r.direct_witness is not None and r.member_witness is not None
    member, emb = r.member_witness
    assert member.base == "K4"
    for u, v in member.graph.edges():
        assert complete(4).has_edge(emb[u], emb[v])

    r = tgraph_cn_free(cycle_power(9, 2), 9)
    assert not r.free and r.agree

    r = tgraph_cn_free(cycle_power(9, 2), 4)
    assert r.free and r.agree
    assert r.direct_witness is None and r.member_witness is None


def test_cn_free_on_triangle_free_hosts():
    r = tgraph_cn_free(cycle(9), 3)
    assert r.free and r.agree


def test_cn_free_rejects_short_lengths():
    with pytest.raises(ValueError):
        tgraph_cn_free(complete(4), 2)


# -- tree / chordal / perfect -------------------------------------------------------------


def test_class_report_triangle_tree():
    rep = tgraph_class(DIAMOND)
    assert rep.has_triangles and rep.triangle_connected
    assert rep.tree.value and rep.tree.agree
    assert rep.chordal.value and rep.perfect.value


def test_class_report_k4():
    rep = tgraph_class(complete(4))
    assert not rep.tree.value and rep.tree.agree
    assert rep.chordal.value and rep.chordal.agree
    assert rep.perfect.value and rep.perfect.agree


def test_class_report_squared_cycle():
    rep = tgraph_class(cycle_power(7, 2))
    assert not rep.tree.value and not rep.chordal.value and not rep.perfect.value
    assert rep.tree.agree and rep.chordal.agree and rep.perfect.agree
    assert rep.perfect.member_witness is not None


def test_class_report_even_cycle_tgraph_is_perfect_not_chordal():
    rep = tgraph_class(supplementary("A"))  # T is C_8
    assert not rep.tree.value
    assert not rep.chordal.value
    assert rep.perfect.value
    assert rep.tree.agree and rep.chordal.agree and rep.perfect.agree


def test_class_report_disconnected_triangles():
    rep = tgraph_class(BOWTIE)
    assert rep.has_triangles and not rep.triangle_connected
    assert not rep.tree.value
    assert rep.chordal.value and rep.perfect.value


def test_class_report_no_triangles():
    rep = tgraph_class(cycle(5))
    assert not rep.has_triangles
    assert not rep.tree.value and rep.tree.note
    assert rep.chordal.value and rep.perfect.value


def test_pattern_free_holds_on_assorted_hosts():
    for g in (complete(5), complete(6), cycle_power(9, 2), wheel(6), DIAMOND, BOWTIE):
        assert tgraph_pattern_free(g)


def test_characterize_cycle_never_disagrees_on_split_towers():
    g = cycle_power(8, 2)
    for step in range(4):
        cert = characterize_cycle(g)
        assert cert.is_cycle and cert.length == 8 + step
        assert cert.splits == step
        dc = find_designated_cycle(build_triangle_graph(g))
        # split the lexicographically first private chord
        cov_edges = sorted(
            e for e in g.edges()
            if len([z for z in range(g.order)
                    if g.has_edge(e[0], z) and g.has_edge(e[1], z)]) == 1
        )
        edge = cov_edges[0]
        apex = next(z for z in range(g.order)
                    if g.has_edge(edge[0], z) and g.has_edge(edge[1], z))
        g = edge_split(g, edge, apex, "strong", dc).graph
