"""Classifiers for triangle-graph shape, each computed by two independent
routes (a direct check on T(G) and a forbidden-subgraph characterization of
G) so the structure theorems are exercised, not assumed."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .generators import (
    complete_minus,
    cycle_power,
    forbidden_family,
    perfect_forbidden_family,
    supplementary,
    triangle_graph_forbidden_pattern,
    wheel,
)
from .graph import Graph, contains_subgraph, find_induced_cycle, find_hole, is_isomorphic
from .tgraph import TriangleFreeError, build_triangle_graph, is_triangle_connected
from .transforms import TransformLog, reduce_to_irreducible


class RouteDisagreement(RuntimeError):
    """Two supposedly equivalent classification routes returned different
    verdicts; this would falsify a structure theorem, so it is never
    swallowed."""


# ---------------------------------------------------------------------------
# cycle shape


def theorem_hypothesis_violation(g: Graph) -> Optional[str]:
    """Reason the cycle characterization's hypothesis fails, or None: the
    graph must have no isolated vertices and every edge on a triangle."""
    for v in range(g.order):
        if g.degree(v) == 0:
            return f"isolated vertex {v}"
    tg = build_triangle_graph(g)
    for e, tris in tg.edge_incidence.items():
        if not tris:
            return f"edge {e[0]}-{e[1]} lies on no triangle"
    return None


def tgraph_is_cycle_direct(g: Graph) -> tuple[Optional[int], Optional[str]]:
    """(cycle length, None) when T(g) is a cycle, else (None, reason)."""
    t = build_triangle_graph(g).derived
    if t.order < 3:
        return None, f"only {t.order} triangle(s)"
    if any(t.degree(v) != 2 for v in range(t.order)):
        return None, "triangle graph is not 2-regular"
    if not t.is_connected():
        return None, "triangle graph is disconnected"
    return t.order, None


@dataclass(frozen=True)
class CycleCertificate:
    is_cycle: bool
    length: Optional[int]
    reason: Optional[str]  # when not a cycle
    hypothesis_ok: bool
    hypothesis_reason: Optional[str]
    case: Optional[str]  # base name, or 'derived' when the log is nonempty
    base: Optional[str]
    base_graph: Optional[Graph]
    reduction: Optional[TransformLog]
    splits: int  # inverse edge splits in the reduction = split parity
    odd_hole: bool  # the cycle is an odd hole (odd length >= 5)


def _identify_base(g: Graph) -> Optional[str]:
    """Name an irreducible graph whose triangle graph is a cycle."""
    if g.order == 5 and is_isomorphic(complete_minus(5, "K3"), g):
        return "K5-K3"
    if g.order == 5 and is_isomorphic(wheel(4), g):
        return "W4"
    if g.order >= 7 and is_isomorphic(cycle_power(g.order, 2), g):
        return f"C{g.order}^2"
    if g.order == 8:
        for letter in "ABCD":
            if is_isomorphic(supplementary(letter), g):
                return f"S_{letter}"
    return None


def characterize_cycle(g: Graph) -> CycleCertificate:
    """Decide whether T(g) is a cycle and, when it is, certify it by
    reducing g to an irreducible base graph.

    The direct degree check and the reduction route must agree; a
    disagreement raises RouteDisagreement."""
    hyp = theorem_hypothesis_violation(g)
    n, reason = tgraph_is_cycle_direct(g)
    if n is None:
        return CycleCertificate(
            False, None, reason, hyp is None, hyp,
            None, None, None, None, 0, False,
        )
    if hyp is not None:
        # the direct verdict stands, but the characterization does not apply
        return CycleCertificate(
            True, n, None, False, hyp, None, None, None, None, 0,
            n >= 5 and n % 2 == 1,
        )
    base, log = reduce_to_irreducible(g)
    name = _identify_base(base)
    if name is None:
        raise RouteDisagreement(
            f"T(g) is a {n}-cycle but reduction reached an unrecognized "
            f"irreducible graph: {base!r} via {log.to_text()!r}"
        )
    splits = sum(1 for s in log.steps if s.kind == "unsplit")
    base_len, _ = tgraph_is_cycle_direct(base)
    if base_len is None or base_len + splits != n:
        raise RouteDisagreement(
            f"reduction to {name} used {splits} inverse splits but cycle "
            f"lengths are {n} (input) and {base_len} (base)"
        )
    case = name if not log.steps else "derived"
    return CycleCertificate(
        True, n, None, True, None, case, name, base, log, splits,
        n >= 5 and n % 2 == 1,
    )


# ---------------------------------------------------------------------------
# path-neighborhood specialization


@dataclass(frozen=True)
class PathNeighborhoodReport:
    applicable: bool
    offending_vertex: Optional[int]
    is_cycle: bool
    case: Optional[str]  # 'cycle-power' | 'supplementary' | 'derived'
    certificate: Optional[CycleCertificate]


def _induces_nontrivial_path(g: Graph, v: int) -> bool:
    sub = g.induced(sorted(g.neighbors(v)))
    h = sub.graph
    if h.order < 2:
        return False
    degs = sorted(h.degrees())
    if h.order == 2:
        return degs == [1, 1]
    return (
        h.is_connected()
        and degs[0] == 1 and degs[1] == 1
        and all(d == 2 for d in degs[2:])
    )


def classify_png_cycle(g: Graph) -> PathNeighborhoodReport:
    """Cycle classification for graphs whose every open neighborhood induces
    a path on >= 2 vertices; such graphs have a cycle triangle graph exactly
    when they are a squared cycle (length >= 7), one of the supplementary
    graphs, or derived from those by edge splits alone."""
    for v in range(g.order):
        if not _induces_nontrivial_path(g, v):
            return PathNeighborhoodReport(False, v, False, None, None)
    cert = characterize_cycle(g)
    if not cert.is_cycle:
        return PathNeighborhoodReport(True, None, False, None, cert)
    base = cert.base
    if base is None or base in ("K5-K3", "W4"):
        raise RouteDisagreement(
            f"path-neighborhood graph with a cycle triangle graph reduced "
            f"to unexpected base {base!r}"
        )
    if any(s.kind == "unstick" for s in cert.reduction.steps):
        raise RouteDisagreement(
            "path-neighborhood graph needed an inverse vertex stick: "
            + cert.reduction.to_text()
        )
    if cert.case != "derived":
        case = "cycle-power" if base.startswith("C") else "supplementary"
    else:
        case = "derived"
    return PathNeighborhoodReport(True, None, True, case, cert)


# ---------------------------------------------------------------------------
# C_n-freeness of T, two routes


@dataclass(frozen=True)
class CnFreeReport:
    n: int
    free: bool  # the direct verdict
    direct_free: bool
    direct_witness: Optional[tuple[int, ...]]  # triangle indices in T
    member_free: bool
    member_witness: Optional[tuple]  # (FamilyMember, embedding mapping)
    agree: bool


def tgraph_cn_free(g: Graph, n: int) -> CnFreeReport:
    """Whether T(g) has no induced n-cycle, checked directly on T and by
    forbidden-subgraph containment in g."""
    if n < 3:
        raise ValueError("cycle length starts at 3")
    tg = build_triangle_graph(g)
    t = tg.derived
    if n == 3:
        direct = None
        for i in range(t.order):
            for j in range(i + 1, t.order):
                if t.has_edge(i, j):
                    common = t.adj[i] & t.adj[j] & ~((1 << i) | (1 << j))
                    if common:
                        direct = (i, j, common.bit_length() - 1)
                        break
            if direct:
                break
    else:
        direct = find_induced_cycle(t, length=n)
    member_witness = None
    for m in forbidden_family(n, g.order, g.edge_count).members:
        emb = contains_subgraph(g, m.graph, induced=False)
        if emb is not None:
            member_witness = (m, emb)
            break
    direct_free = direct is None
    member_free = member_witness is None
    return CnFreeReport(
        n, direct_free, direct_free, direct, member_free, member_witness,
        direct_free == member_free,
    )


# ---------------------------------------------------------------------------
# tree / chordal / perfect, two routes


@dataclass(frozen=True)
class DualVerdict:
    value: bool
    direct: bool
    characterization: bool
    agree: bool
    direct_witness: Optional[tuple[int, ...]] = None
    member_witness: Optional[tuple] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class ClassReport:
    has_triangles: bool
    triangle_connected: bool
    tree: DualVerdict
    chordal: DualVerdict
    perfect: DualVerdict


def tgraph_pattern_free(g: Graph) -> bool:
    """Every triangle graph avoids the join of two isolated vertices with
    an edge-plus-isolated-vertex as an induced subgraph; this premise backs
    the odd-hole-only perfection test."""
    t = build_triangle_graph(g).derived
    return contains_subgraph(t, triangle_graph_forbidden_pattern(), induced=True) is None


def _family_embedding(g: Graph, lengths) -> Optional[tuple]:
    for n in lengths:
        for m in forbidden_family(n, g.order, g.edge_count).members:
            emb = contains_subgraph(g, m.graph, induced=False)
            if emb is not None:
                return (n, m, emb)
    return None


def tgraph_class(g: Graph) -> ClassReport:
    """Tree / chordal / perfect verdicts for T(g), each by direct inspection
    of T and by forbidden-subgraph containment in g."""
    tg = build_triangle_graph(g)
    t = tg.derived
    has_triangles = t.order > 0
    try:
        tri_conn = is_triangle_connected(g)[0]
    except TriangleFreeError:
        tri_conn = False

    max_n = g.edge_count // 2

    # tree
    tree_direct = has_triangles and t.is_connected() and t.edge_count == t.order - 1
    tree_wit = None
    if has_triangles and not tree_direct and t.is_connected():
        tree_wit = find_hole(t) or _any_triangle(t)
    tree_member = _family_embedding(g, range(3, max_n + 1))
    tree_char = has_triangles and tri_conn and tree_member is None
    tree = DualVerdict(
        tree_direct, tree_direct, tree_char, tree_direct == tree_char,
        tree_wit, tree_member,
        None if has_triangles else "no triangles; tree verdict is vacuous",
    )

    # chordal
    hole = find_hole(t)
    chordal_member = _family_embedding(g, range(4, max_n + 1))
    chordal_direct = hole is None
    chordal = DualVerdict(
        chordal_direct, chordal_direct, chordal_member is None,
        chordal_direct == (chordal_member is None), hole, chordal_member,
    )

    # perfect
    odd_hole = find_induced_cycle(t, parity="odd")
    perfect_member = None
    for m in perfect_forbidden_family(g.order, g.edge_count):
        emb = contains_subgraph(g, m.graph, induced=False)
        if emb is not None:
            perfect_member = (m, emb)
            break
    perfect_direct = odd_hole is None
    perfect = DualVerdict(
        perfect_direct, perfect_direct, perfect_member is None,
        perfect_direct == (perfect_member is None), odd_hole, perfect_member,
    )

    return ClassReport(has_triangles, tri_conn, tree, chordal, perfect)


def _any_triangle(t: Graph) -> Optional[tuple[int, int, int]]:
    for i in range(t.order):
        for j in range(i + 1, t.order):
            if t.has_edge(i, j):
                common = t.adj[i] & t.adj[j] & ~((1 << i) | (1 << j))
                if common:
                    return (i, j, common.bit_length() - 1)
    return None
