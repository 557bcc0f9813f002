"""Exact triangle packing and covering numbers, clique covers of the
triangle graph, and the constructive two-per-clique transversal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .graph import Graph, find_induced_cycle
from .tgraph import TriangleGraph, build_triangle_graph


class BoundViolation(RuntimeError):
    """A packing/covering identity that should hold unconditionally failed."""


@dataclass(frozen=True)
class TypedClique:
    kind: str  # 'A' (edge-based), 'B' (K_4-based), 'maximal' (fallback only)
    members: tuple[int, ...]  # triangle indices, ascending
    anchor: tuple  # the fixed edge for 'A', the 4 vertices for 'B'


def nu_delta(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum number of pairwise edge-disjoint triangles, with a witness
    list of triangle indices (an exact maximum independent set of T(g))."""
    t = build_triangle_graph(g).derived
    if t.order == 0:
        return 0, ()
    size, mask = kernels.max_independent_set(t.order, t.adj)
    witness = tuple(i for i in range(t.order) if (mask >> i) & 1)
    return size, witness


def tau_delta(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum number of edges meeting every triangle, with the edge set."""
    tg = build_triangle_graph(g)
    if not tg.triangles:
        return 0, ()
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    triples = [tuple(sorted(index[e] for e in t.edges)) for t in tg.triangles]
    chosen = kernels.min_hitting_set3(len(edges), triples)
    return len(chosen), tuple(edges[i] for i in chosen)


def k4_subgraphs(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-cliques of g, ascending."""
    out = []
    adj = g.adj
    for a, b in g.edges():
        common = adj[a] & adj[b]
        m1 = common
        while m1:
            c = (m1 & -m1).bit_length() - 1
            m1 &= m1 - 1
            if c <= b:
                continue
            m2 = common & adj[c]
            while m2:
                d = (m2 & -m2).bit_length() - 1
                m2 &= m2 - 1
                if d > c:
                    out.append((a, b, c, d))
    out.sort()
    return out


def typed_cliques(tg: TriangleGraph) -> list[TypedClique]:
    """Cliques of T(G) of the two shapes a minimum cover ever needs: the
    triangles on a shared edge, and the four triangles of a K_4.  A triangle
    sharing no edge gets a singleton clique anchored at its smallest edge."""
    out = []
    for e in tg.base.edges():
        tris = tg.edge_incidence[e]
        if len(tris) >= 2:
            out.append(TypedClique("A", tuple(tris), e))
    for i, tri in enumerate(tg.triangles):
        if tg.derived.degree(i) == 0:
            out.append(TypedClique("A", (i,), min(tri.edges)))
    for quad in k4_subgraphs(tg.base):
        members = []
        qa, qb, qc, qd = quad
        for trip in ((qa, qb, qc), (qa, qb, qd), (qa, qc, qd), (qb, qc, qd)):
            members.append(tg.index_of(trip))
        out.append(TypedClique("B", tuple(sorted(members)), quad))
    return out


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    out = []
    adj = g.adj
    full = (1 << g.order) - 1

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(tuple(i for i in range(g.order) if (r >> i) & 1))
            return
        px = p | x
        pivot = max(
            (i for i in range(g.order) if (px >> i) & 1),
            key=lambda i: (adj[i] & p).bit_count(),
        )
        m = p & ~adj[pivot]
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            bk(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    if g.order:
        bk(0, full, 0)
    return sorted(out)


def typed_cliques_complete(tg: TriangleGraph) -> tuple[bool, Optional[tuple]]:
    """Whether every maximal clique of T(G) is one of the typed cliques;
    when not, the offending clique is returned."""
    typed = {frozenset(c.members) for c in typed_cliques(tg)}
    for clique in maximal_cliques(tg.derived):
        if frozenset(clique) not in typed:
            return False, clique
    return True, None


def _min_set_cover(universe: int, candidates: list[frozenset]) -> list[int]:
    """Exact minimum cover of the bit-universe; returns candidate indices."""
    masks = []
    for c in candidates:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    order = sorted(range(len(masks)), key=lambda i: (-masks[i].bit_count(), i))
    best: list = []
    best_size = universe.bit_count() + 1
    seen: dict[int, int] = {}

    def covers_of(v):
        return [i for i in order if (masks[i] >> v) & 1]

    def rec(uncovered, chosen):
        nonlocal best, best_size
        if uncovered == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = list(chosen)
            return
        if len(chosen) + 1 >= best_size:
            return
        if seen.get(uncovered, best_size) <= len(chosen):
            return
        seen[uncovered] = len(chosen)
        biggest = max(masks[i].bit_count() for i in order)
        need = -(-uncovered.bit_count() // biggest)
        if len(chosen) + need >= best_size:
            return
        v = min(
            (i for i in range(universe.bit_length()) if (uncovered >> i) & 1),
            key=lambda i: len(covers_of(i)),
        )
        for i in covers_of(v):
            chosen.append(i)
            rec(uncovered & ~masks[i], chosen)
            chosen.pop()

    rec(universe, [])
    return best


def theta_tgraph(tg: TriangleGraph) -> tuple[int, list[TypedClique], bool]:
    """Exact minimum clique cover of T(G) over the typed cliques; the flag
    reports whether the unrestricted fallback had to be used."""
    m = len(tg.triangles)
    if m == 0:
        return 0, [], False
    complete, _ = typed_cliques_complete(tg)
    fallback = not complete
    if complete:
        cands = typed_cliques(tg)
    else:
        cands = [
            TypedClique("maximal", c, ()) for c in maximal_cliques(tg.derived)
        ]
    sets = [frozenset(c.members) for c in cands]
    chosen = _min_set_cover((1 << m) - 1, sets)
    cover = [cands[i] for i in sorted(chosen)]
    return len(cover), cover, fallback


def transversal_from_cover(
    g: Graph, cover: list[TypedClique]
) -> tuple[tuple[int, int], ...]:
    """At most two edges per clique in the cover — the fixed edge of an
    edge-based clique, a perfect matching of a K_4 — verified to meet every
    triangle of g."""
    tg = build_triangle_graph(g)
    covered = set()
    for c in cover:
        covered.update(c.members)
    if covered != set(range(len(tg.triangles))):
        missing = sorted(set(range(len(tg.triangles))) - covered)
        raise ValueError(f"cover misses triangle indices {missing}")
    edges = set()
    for c in cover:
        if c.kind == "A":
            edges.add(tuple(c.anchor))
        elif c.kind == "B":
            a, b, cc, d = sorted(c.anchor)
            edges.add((a, b))
            edges.add((cc, d))
        else:
            raise ValueError(f"cannot build a transversal from kind {c.kind!r}")
    for tri in tg.triangles:
        if not any(e in tri for e in edges):
            raise BoundViolation(f"constructed edges miss triangle {tri.vertices}")
    return tuple(sorted(edges))


@dataclass(frozen=True)
class TuzaReport:
    nu: int
    tau: int
    theta: int
    packing_witness: tuple[int, ...]
    transversal_witness: tuple[tuple[int, int], ...]
    cover_witness: tuple[TypedClique, ...]
    constructive_transversal: tuple[tuple[int, int], ...]
    tgraph_perfect: bool
    bound_2x: bool  # tau <= 2 nu
    equality: bool  # tau == nu
    cover_fallback: bool

    def to_dict(self) -> dict:
        return {
            "nu": self.nu,
            "tau": self.tau,
            "theta": self.theta,
            "packing_witness": list(self.packing_witness),
            "transversal_witness": [list(e) for e in self.transversal_witness],
            "cover_witness": [
                {"kind": c.kind, "members": list(c.members), "anchor": list(c.anchor)}
                for c in self.cover_witness
            ],
            "constructive_transversal": [
                list(e) for e in self.constructive_transversal
            ],
            "tgraph_perfect": self.tgraph_perfect,
            "bound_2x": self.bound_2x,
            "equality": self.equality,
            "cover_fallback": self.cover_fallback,
        }


def tuza_report(g: Graph) -> TuzaReport:
    """Packing number, covering number, clique-cover number, and the
    two-per-clique transversal, with the unconditional and perfect-case
    bounds checked on the spot."""
    tg = build_triangle_graph(g)
    nu, packing = nu_delta(g)
    tau, transversal = tau_delta(g)
    theta, cover, fallback = theta_tgraph(tg)
    constructive = transversal_from_cover(g, cover) if cover else ()
    perfect = find_induced_cycle(tg.derived, parity="odd") is None

    for i in packing:
        for j in packing:
            if i < j and tg.derived.has_edge(i, j):
                raise BoundViolation(f"packing triangles {i},{j} share an edge")
    remaining = [t for t in tg.triangles if not any(e in t for e in transversal)]
    if remaining:
        raise BoundViolation(f"transversal misses {remaining[0].vertices}")
    if not (nu <= tau <= 3 * nu) and tg.triangles:
        raise BoundViolation(f"nu={nu}, tau={tau} outside [nu, 3nu]")
    if perfect:
        if nu != theta:
            raise BoundViolation(f"perfect T but nu={nu} != theta={theta}")
        if not (tau <= len(constructive) <= 2 * theta):
            raise BoundViolation(
                f"perfect T but tau={tau}, constructive={len(constructive)}, "
                f"theta={theta}"
            )
    return TuzaReport(
        nu, tau, theta, packing, transversal, tuple(cover), constructive,
        perfect, tau <= 2 * nu, tau == nu, fallback,
    )
