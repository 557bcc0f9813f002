"""Triangle graph construction and the structures hanging off a designated
cycle: edge coverage, cycle-triangle neighborhoods, hairy-cycle form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    InducedSubgraph,
    Triangle,
    enumerate_triangles,
    find_induced_cycle,
)


class TriangleFreeError(ValueError):
    """Raised where an operation needs at least one triangle."""


class TriangleGraph:
    """The triangle graph T(G): one vertex per triangle of the base graph,
    adjacent exactly when the two triangles share an edge."""

    __slots__ = ("base", "triangles", "derived", "edge_incidence")

    def __init__(self, base: Graph):
        tris = enumerate_triangles(base)
        incidence: dict[tuple[int, int], list[int]] = {e: [] for e in base.edges()}
        for i, t in enumerate(tris):
            for e in t.edges:
                incidence[e].append(i)
        edges = []
        for shared in incidence.values():
            for a in range(len(shared)):
                for b in range(a + 1, len(shared)):
                    edges.append((shared[a], shared[b]))
        self.base = base
        self.triangles = tris
        self.derived = Graph(len(tris), edges)
        self.edge_incidence = {e: tuple(l) for e, l in incidence.items()}

    def triangles_at_edge(self, e) -> tuple[int, ...]:
        u, v = e
        return self.edge_incidence[(u, v) if u < v else (v, u)]

    def index_of(self, vertices) -> int:
        t = Triangle(tuple(sorted(vertices)))
        return self.triangles.index(t)


def build_triangle_graph(g: Graph) -> TriangleGraph:
    return TriangleGraph(g)


@dataclass(frozen=True)
class DesignatedCycle:
    """A chordless cycle in a triangle graph, as a tuple of triangle indices
    in cyclic order (length 3 means three mutually adjacent triangles)."""

    triangle_indices: tuple[int, ...]

    def __len__(self):
        return len(self.triangle_indices)

    def __iter__(self):
        return iter(self.triangle_indices)


def check_designated_cycle(tg: TriangleGraph, cycle: DesignatedCycle) -> None:
    """Raise ValueError unless ``cycle`` is a chordless cycle of T(G)."""
    seq = cycle.triangle_indices
    n = len(seq)
    if n < 3:
        raise ValueError("designated cycle needs at least three triangles")
    if len(set(seq)) != n:
        raise ValueError("designated cycle repeats a triangle")
    t_count = tg.derived.order
    for i in seq:
        if not 0 <= i < t_count:
            raise ValueError(f"triangle index {i} out of range")
    for k in range(n):
        a, b = seq[k], seq[(k + 1) % n]
        if not tg.derived.has_edge(a, b):
            raise ValueError(f"consecutive triangles {a}, {b} share no edge")
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if tg.derived.has_edge(seq[i], seq[j]):
                raise ValueError(
                    f"non-consecutive triangles {seq[i]}, {seq[j]} share an edge"
                )


def find_designated_cycle(tg: TriangleGraph) -> Optional[DesignatedCycle]:
    """First chordless cycle in T(G), shortest length first."""
    d = tg.derived
    for i, j, k in (t.vertices for t in enumerate_triangles(d)):
        return DesignatedCycle((i, j, k))
    for length in range(4, d.order + 1):
        hit = find_induced_cycle(d, length)
        if hit is not None:
            return DesignatedCycle(tuple(hit))
    return None


@dataclass(frozen=True)
class EdgeCoverage:
    """Base edges bucketed by how many cycle-triangles contain them."""

    base: Graph
    cycle: DesignatedCycle
    private: frozenset[tuple[int, int]]
    doubly_covered: frozenset[tuple[int, int]]
    over_covered: frozenset[tuple[int, int]]
    uncovered: frozenset[tuple[int, int]]


def classify_edge_coverage(tg: TriangleGraph, cycle: DesignatedCycle) -> EdgeCoverage:
    check_designated_cycle(tg, cycle)
    on_cycle = set(cycle.triangle_indices)
    buckets = {0: [], 1: [], 2: []}
    over = []
    for e, tris in tg.edge_incidence.items():
        c = sum(1 for t in tris if t in on_cycle)
        if c >= 3:
            over.append(e)
        else:
            buckets[c].append(e)
    return EdgeCoverage(
        base=tg.base,
        cycle=cycle,
        private=frozenset(buckets[1]),
        doubly_covered=frozenset(buckets[2]),
        over_covered=frozenset(over),
        uncovered=frozenset(buckets[0]),
    )


def cycle_triangle_neighborhood(
    tg: TriangleGraph, cycle: DesignatedCycle, v: int
) -> InducedSubgraph:
    """N*(v): vertices of the cycle-triangles through v, minus v itself, with
    exactly the cycle-triangle edges not incident to v."""
    check_designated_cycle(tg, cycle)
    verts = set()
    edges = set()
    for idx in cycle.triangle_indices:
        t = tg.triangles[idx]
        if v not in t.vertices:
            continue
        others = tuple(x for x in t.vertices if x != v)
        verts.update(others)
        edges.add(others)
    keep = sorted(verts)
    pos = {x: i for i, x in enumerate(keep)}
    return InducedSubgraph(
        Graph(len(keep), [(pos[a], pos[b]) for a, b in edges]), tuple(keep)
    )


def is_triangle_connected(g: Graph):
    """Whether T(G) is connected; when not, also an edge partition (A, B) with
    every triangle of G inside one part."""
    tg = build_triangle_graph(g)
    if not tg.triangles:
        raise TriangleFreeError("graph has no triangles")
    comps = tg.derived.components()
    if len(comps) == 1:
        return True, None
    part_a = set()
    for i in comps[0]:
        part_a.update(tg.triangles[i].edges)
    part_b = set(g.edges()) - part_a
    return False, (frozenset(part_a), frozenset(part_b))


@dataclass(frozen=True)
class HairyCycle:
    """A cycle plus pendant edges hanging off cycle vertices."""

    core: tuple[int, ...]  # cyclic order, starting at the lowest core vertex
    pendants: tuple[tuple[int, tuple[int, ...]], ...]  # (core vertex, leaves)

    def pendant_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.pendants)


def hairy_cycle_structure(cov: EdgeCoverage) -> Optional[HairyCycle]:
    """Decompose the doubly-covered subgraph (V, F) as a cycle with pendant
    edges; None when it has no such shape."""
    g = cov.base
    deg = {v: 0 for v in range(g.order)}
    nbr = {v: [] for v in range(g.order)}
    for a, b in cov.doubly_covered:
        deg[a] += 1
        deg[b] += 1
        nbr[a].append(b)
        nbr[b].append(a)
    if g.order == 0 or any(d == 0 for d in deg.values()):
        return None
    core = sorted(v for v, d in deg.items() if d >= 2)
    leaves = [v for v, d in deg.items() if d == 1]
    if len(core) < 3:
        return None
    core_set = set(core)
    # every leaf hangs off the core
    pend: dict[int, list[int]] = {v: [] for v in core}
    for v in leaves:
        (w,) = nbr[v]
        if w not in core_set:
            return None
        pend[w].append(v)
    # the core induces a single cycle
    core_nbr = {v: sorted(u for u in nbr[v] if u in core_set) for v in core}
    if any(len(ns) != 2 for ns in core_nbr.values()):
        return None
    start = core[0]
    walk = [start, core_nbr[start][0]]
    while walk[-1] != start:
        prev, cur = walk[-2], walk[-1]
        a, b = core_nbr[cur]
        walk.append(b if a == prev else a)
    if len(walk) != len(core) + 1:
        return None
    return HairyCycle(
        core=tuple(walk[:-1]),
        pendants=tuple((v, tuple(sorted(pend[v]))) for v in core),
    )
