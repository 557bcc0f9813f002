"""Graph constructors, the forbidden-subgraph families characterizing cycle
shapes in triangle graphs, and exhaustive enumeration of small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import kernels
from .graph import Graph, canonical_form, canonical_graph, enumerate_triangles
from .tgraph import DesignatedCycle, build_triangle_graph
from .transforms import WEAK, TransformError, edge_split, vertex_stick


# ---------------------------------------------------------------------------
# named constructors


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Hub vertex n joined to every vertex of an n-cycle on 0..n-1."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    return Graph(n + 1, [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)])


def cycle_power(n: int, k: int = 2) -> Graph:
    """Cycle on n vertices with chords between vertices at distance <= k."""
    if n < 3 or k < 1:
        raise ValueError("cycle power needs n >= 3 and k >= 1")
    edges = set()
    for i in range(n):
        for d in range(1, k + 1):
            j = (i + d) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def complete_minus(n: int, pattern: str) -> Graph:
    """K_n minus the edges of a triangle ('K3') or a 4-vertex path ('P4'),
    placed on the highest labels."""
    g = complete(n)
    if pattern == "K3":
        if n < 3:
            raise ValueError("need n >= 3")
        a, b, c = n - 3, n - 2, n - 1
        return g.with_edges(remove=[(a, b), (a, c), (b, c)])
    if pattern == "P4":
        if n < 4:
            raise ValueError("need n >= 4")
        a, b, c, d = n - 4, n - 3, n - 2, n - 1
        return g.with_edges(remove=[(a, b), (b, c), (c, d)])
    raise ValueError(f"unknown pattern {pattern!r} (expected 'K3' or 'P4')")


_SUPPLEMENTARY = {
    # cycle length, extra chords (1-based), apex attachment points (1-based)
    "A": (4, [], [1, 2, 3, 4]),
    "B": (5, [(3, 5), (4, 1)], [1, 2, 3]),
    "C": (6, [(2, 4), (3, 5), (4, 6), (5, 1)], [1, 2]),
    "D": (6, [(1, 3), (2, 4), (4, 6), (5, 1)], [1, 4]),
}


def supplementary(letter: str) -> Graph:
    """The four 8-vertex, 16-edge graphs whose triangle graph is an 8-cycle:
    a chorded cycle v_1..v_m plus degree-3 vertices u_i, each joined to
    v_{i-1}, v_i, v_{i+1}.  Zero-based labels, v_i first."""
    letter = letter.upper()
    if letter not in _SUPPLEMENTARY:
        raise ValueError("supplementary graphs are 'A', 'B', 'C', 'D'")
    m, chords, apexes = _SUPPLEMENTARY[letter]
    edges = [(i - 1, (i % m + 1) - 1) for i in range(1, m + 1)]
    edges += [(a - 1, b - 1) for a, b in chords]
    for slot, i in enumerate(apexes):
        u = m + slot
        for j in (i - 1, i, i + 1):
            edges.append((u, (j - 1) % m))
    return Graph(m + len(apexes), edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    off = a.order
    edges = list(a.edges())
    edges += [(u + off, v + off) for u, v in b.edges()]
    edges += [(u, v + off) for u in range(a.order) for v in range(b.order)]
    return Graph(a.order + b.order, edges)


def triangle_graph_forbidden_pattern() -> Graph:
    """The 5-vertex graph no triangle graph contains as an induced subgraph:
    the join of two isolated vertices with (an edge plus an isolated vertex)."""
    return join(empty_graph(2), path(3).complement())


_NAMED = {
    "complete": (complete, 1),
    "K": (complete, 1),
    "cycle": (cycle, 1),
    "C": (cycle, 1),
    "path": (path, 1),
    "P": (path, 1),
    "empty": (empty_graph, 1),
    "wheel": (wheel, 1),
    "W": (wheel, 1),
    "cycle-power": (cycle_power, 2),
    "complete-minus": (complete_minus, 2),
    "supplementary": (supplementary, 1),
    "S": (supplementary, 1),
}


def make_named(name: str, *params: str) -> Graph:
    """Build a named family member, e.g. ('K', '5'), ('cycle-power', '9', '2'),
    ('complete-minus', '6', 'P4'), ('S', 'B')."""
    if name not in _NAMED:
        raise ValueError(f"unknown family {name!r}; known: {sorted(_NAMED)}")
    fn, arity = _NAMED[name]
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s)")
    args = [int(p) if p.lstrip("-").isdigit() else p for p in params]
    return fn(*args)


# ---------------------------------------------------------------------------
# induced cycle enumeration (used to seed family generation)


def enumerate_induced_cycles(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All chordless cycles of the given length, one orientation each."""
    if length == 3:
        return [t.vertices for t in enumerate_triangles(g)]
    out = []
    adj = g.adj
    for s in range(g.order):
        sadj = adj[s]
        above = -1 << (s + 1)

        def walk(pathv, path_mask, ban):
            last = pathv[-1]
            cand = adj[last] & above & ~ban & ~path_mask
            m = cand
            while m:
                b = m & -m
                w = b.bit_length() - 1
                m ^= b
                if (sadj >> w) & 1:
                    if len(pathv) + 1 == length and pathv[1] < w:
                        out.append(tuple(pathv) + (w,))
                elif len(pathv) + 1 < length:
                    walk(pathv + [w], path_mask | 1 << w, ban | adj[last])

        m0 = sadj & above
        while m0:
            b = m0 & -m0
            v1 = b.bit_length() - 1
            m0 ^= b
            walk([s, v1], (1 << s) | (1 << v1), 0)
    return out


# ---------------------------------------------------------------------------
# forbidden families


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph  # canonically labeled
    base: str
    splits: int
    sticks: int


@dataclass(frozen=True)
class ForbiddenFamily:
    n: int
    members: tuple[FamilyMember, ...]

    def graphs(self) -> tuple[Graph, ...]:
        return tuple(m.graph for m in self.members)


def _cycle_key(g: Graph, dc: DesignatedCycle, tg) -> tuple:
    """Dedup key for a (graph, designated cycle) state."""
    labels, form = kernels.canonical_labeling(g.order, g.adj)
    seq = [frozenset(labels[v] for v in tg.triangles[i].vertices) for i in dc]
    best = None
    k = len(seq)
    for rev in (seq, seq[::-1]):
        for r in range(k):
            rot = tuple(tuple(sorted(s)) for s in rev[r:] + rev[:r])
            if best is None or rot < best:
                best = rot
    return form, best


def _split_descendants(base: Graph, base_name: str, cycle_len: int, count: int):
    """All canonically distinct results of ``count`` weak splits applied to
    ``base``, tried over every chordless cycle of ``cycle_len`` in its
    triangle graph and every private edge."""
    tg0 = build_triangle_graph(base)
    states = {}
    for cyc in enumerate_induced_cycles(tg0.derived, cycle_len):
        dc = DesignatedCycle(cyc)
        states.setdefault(_cycle_key(base, dc, tg0), (base, dc))
    for _ in range(count):
        nxt = {}
        for g, dc in states.values():
            tg = build_triangle_graph(g)
            on_cycle = set(dc)
            for e, tris in tg.edge_incidence.items():
                covering = [i for i in tris if i in on_cycle]
                if len(covering) != 1:
                    continue
                apex = next(
                    x for x in tg.triangles[covering[0]].vertices if x not in e
                )
                res = edge_split(g, e, apex, WEAK, dc)
                new_tg = build_triangle_graph(res.graph)
                key = _cycle_key(res.graph, res.cycle, new_tg)
                nxt.setdefault(key, (res.graph, res.cycle))
        states = nxt
    seen = {}
    for g, _ in states.values():
        seen.setdefault(canonical_form(g), g)
    return [(canonical_graph(g), base_name, count) for g in seen.values()]


def _stick_closure(seeds):
    """Close a list of (graph, base, splits) under weak vertex sticking."""
    out = {}
    frontier = []
    for g, base, splits in seeds:
        key = canonical_form(g)
        if key not in out:
            out[key] = FamilyMember(g, base, splits, 0)
            frontier.append(out[key])
    while frontier:
        nxt = []
        for member in frontier:
            g = member.graph
            for u in range(g.order):
                for v in range(u + 1, g.order):
                    d = g.distance(u, v)
                    if d is not None and d < 3:
                        continue
                    stuck = vertex_stick(g, u, v, WEAK).graph
                    key = canonical_form(stuck)
                    if key not in out:
                        fm = FamilyMember(
                            canonical_graph(stuck),
                            member.base,
                            member.splits,
                            member.sticks + 1,
                        )
                        out[key] = fm
                        nxt.append(fm)
        frontier = nxt
    return list(out.values())


@lru_cache(maxsize=None)
def _family_core(n: int, host_vertex_bound: int) -> tuple[FamilyMember, ...]:
    if n == 3:
        members = [
            FamilyMember(canonical_graph(complete(4)), "K4", 0, 0),
            FamilyMember(canonical_graph(complete_minus(5, "K3")), "K5-K3", 0, 0),
        ]
    elif n == 4:
        members = [FamilyMember(canonical_graph(wheel(4)), "W4", 0, 0)]
    else:
        seeds = []
        for m in range(5, n + 1):
            seeds += _split_descendants(cycle_power(m, 2), f"C{m}^2", m, n - m)
        if n >= 6:
            seeds += _split_descendants(complete_minus(6, "K3"), "K6-K3", 6, n - 6)
            seeds += _split_descendants(complete_minus(6, "P4"), "K6-P4", 6, n - 6)
        members = _stick_closure(seeds)
        members.append(FamilyMember(canonical_graph(wheel(n)), f"W{n}", 0, 0))
    kept = [m for m in members if m.graph.order <= host_vertex_bound]
    kept.sort(key=lambda m: (m.graph.order, m.graph.edge_count, m.graph.adj))
    return tuple(kept)


@lru_cache(maxsize=None)
def forbidden_family(
    n: int, host_vertex_bound: int, host_edge_bound: Optional[int] = None
) -> ForbiddenFamily:
    """The graphs whose presence as a (not necessarily induced) subgraph
    characterizes a chordless n-cycle in the triangle graph of the host.
    Members that cannot fit in a host with the given vertex (and optional
    edge) budget are pruned."""
    if n < 3:
        raise ValueError("cycle length starts at 3")
    if host_edge_bound is None:
        host_edge_bound = host_vertex_bound * (host_vertex_bound - 1) // 2
    kept = [
        m
        for m in _family_core(n, host_vertex_bound)
        if m.graph.edge_count <= host_edge_bound
    ]
    return ForbiddenFamily(n, tuple(kept))


@lru_cache(maxsize=None)
def perfect_forbidden_family(
    host_vertex_bound: int, host_edge_bound: Optional[int] = None
) -> tuple[FamilyMember, ...]:
    """Forbidden subgraphs characterizing an odd chordless cycle of length
    >= 5 somewhere in the triangle graph: the union of the cycle families
    over odd lengths, pruned to the host budget."""
    if host_edge_bound is None:
        host_edge_bound = host_vertex_bound * (host_vertex_bound - 1) // 2
    out = []
    seen = set()
    max_len = host_edge_bound // 2
    for L in range(5, max_len + 1, 2):
        for m in forbidden_family(L, host_vertex_bound, host_edge_bound).members:
            key = canonical_form(m.graph)
            if key not in seen:
                seen.add(key)
                out.append(m)
    return tuple(out)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _mask_to_graph(order: int, mask: int) -> Graph:
    edges = []
    k = 0
    for i in range(order):
        for j in range(i + 1, order):
            if (mask >> k) & 1:
                edges.append((i, j))
            k += 1
    return Graph(order, edges)


def enumerate_small_graphs(max_order: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every isomorphism class with 1..max_order vertices exactly once,
    ascending order then ascending edge count."""
    if max_order < 1 or max_order > 7:
        raise ValueError("built-in enumeration covers orders 1..7")
    for order in range(1, max_order + 1):
        graphs = [_mask_to_graph(order, m) for m in kernels.graph_classes(order)]
        graphs.sort(key=lambda g: (g.edge_count, g.adj))
        for g in graphs:
            if connected_only and not g.is_connected():
                continue
            yield g
