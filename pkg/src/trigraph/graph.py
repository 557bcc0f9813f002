"""Immutable simple graphs on dense integer labels, plus the exact search
primitives (triangles, subgraph containment, isomorphism, induced cycles)
used by every other module."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from . import kernels


class Graph:
    """Simple undirected graph on vertices ``0 .. order-1``.

    Instances are immutable values: operations return new graphs.  Adjacency
    is stored as one bitmask per vertex.
    """

    __slots__ = ("order", "_adj")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        g = cls.__new__(cls)
        masks = tuple(masks)
        object.__setattr__(g, "order", len(masks))
        object.__setattr__(g, "_adj", masks)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors ----------------------------------------------------

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.order):
            m = self._adj[u] & (-1 << (u + 1))
            out.extend((u, v) for v in _bits(m))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.order, self._adj))

    def __repr__(self):
        return f"Graph({self.order}, {list(self.edges())!r})"

    # -- derived graphs -----------------------------------------------------

    def with_edges(self, add=(), remove=()) -> "Graph":
        es = set(map(_norm_edge, self.edges()))
        for e in map(_norm_edge, remove):
            if e not in es:
                raise ValueError(f"edge {e} not present")
            es.discard(e)
        es.update(map(_norm_edge, add))
        return Graph(self.order, sorted(es))

    def with_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        w = self.order
        return Graph(w + 1, list(self.edges()) + [(v, w) for v in neighbors])

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph.from_masks(
            (full & ~self._adj[v] & ~(1 << v)) for v in range(self.order)
        )

    def relabel(self, labels: Iterable[int]) -> "Graph":
        """New graph where old vertex v becomes ``labels[v]`` (a bijection)."""
        labels = tuple(labels)
        if sorted(labels) != list(range(self.order)):
            raise ValueError("labels must be a permutation of the vertex set")
        masks = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in _bits(self._adj[v]):
                row |= 1 << labels[u]
            masks[labels[v]] = row
        return Graph.from_masks(masks)

    def induced(self, vertices: Iterable[int]) -> "InducedSubgraph":
        """Induced subgraph on ``vertices`` with dense relabeling; the second
        component maps dense label -> original vertex."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v])
            for u, v in self.edges()
            if u in pos and v in pos
        ]
        return InducedSubgraph(Graph(len(keep), edges), tuple(keep))

    # -- traversal ----------------------------------------------------------

    def components(self) -> tuple[frozenset[int], ...]:
        seen = 0
        comps = []
        for s in range(self.order):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(frozenset(_bits(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.components()) == 1

    def distance(self, u: int, v: int) -> Optional[int]:
        """BFS distance, or None when u and v sit in different components."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = 1 << u
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for x in _bits(frontier):
                nxt |= self._adj[x]
            frontier = nxt & ~seen
            if (frontier >> v) & 1:
                return d
            seen |= frontier
        return None


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _norm_edge(e):
    u, v = e
    return (u, v) if u < v else (v, u)


class InducedSubgraph(NamedTuple):
    graph: Graph
    labels: tuple[int, ...]


class Triangle(NamedTuple):
    vertices: tuple[int, int, int]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        a, b, c = self.vertices
        return ((a, b), (a, c), (b, c))

    def __contains__(self, item):
        if isinstance(item, int):
            return item in self.vertices
        return tuple(item) in self.edges


@dataclass(frozen=True)
class IsoCertificate:
    """Witness for an isomorphism query: ``mapping[u]`` is the image of u,
    or ``mapping is None`` when the graphs are not isomorphic."""

    mapping: Optional[tuple[int, ...]]

    def __bool__(self):
        return self.mapping is not None


def enumerate_triangles(g: Graph) -> tuple[Triangle, ...]:
    """All triangles in lexicographic vertex order."""
    out = []
    for i in range(g.order):
        for j in _bits(g.adj_mask(i) & (-1 << (i + 1))):
            for k in _bits(g.adj_mask(i) & g.adj_mask(j) & (-1 << (j + 1))):
                out.append(Triangle((i, j, k)))
    return tuple(out)


def contains_subgraph(host: Graph, pattern: Graph, induced: bool = False):
    """First embedding of ``pattern`` into ``host`` (vertex tuple indexed by
    pattern vertex), or None.  Non-induced by default."""
    if not induced and pattern.edge_count > host.edge_count:
        return None
    return kernels.find_embedding(
        pattern.order, pattern.adj, host.order, host.adj, induced
    )


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Canonical adjacency rows; equal forms characterize isomorphic graphs.
    Usable as a dedup key."""
    return kernels.canonical_labeling(g.order, g.adj)[1]


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    return Graph.from_masks(canonical_form(g))


def is_isomorphic(a: Graph, b: Graph) -> IsoCertificate:
    """Certified isomorphism test via canonical labelings."""
    if a.order != b.order or a.edge_count != b.edge_count:
        return IsoCertificate(None)
    if sorted(a.degrees()) != sorted(b.degrees()):
        return IsoCertificate(None)
    la, fa = kernels.canonical_labeling(a.order, a.adj)
    lb, fb = kernels.canonical_labeling(b.order, b.adj)
    if fa != fb:
        return IsoCertificate(None)
    inv_b = [0] * b.order
    for v, lab in enumerate(lb):
        inv_b[lab] = v
    return IsoCertificate(tuple(inv_b[la[v]] for v in range(a.order)))


def find_induced_cycle(g: Graph, length: Optional[int] = None, parity: Optional[str] = None):
    """Chordless cycle search.

    Exactly one mode: ``length`` (>= 4) looks for that exact length;
    ``parity='odd'`` looks for any odd chordless cycle of length >= 5.
    Returns the cycle as a vertex tuple, or None.
    """
    if (length is None) == (parity is None):
        raise ValueError("specify exactly one of length or parity")
    if parity is not None:
        if parity != "odd":
            raise ValueError("parity must be 'odd'")
        return kernels.find_chordless_cycle(g.order, g.adj, 5, g.order, True)
    if length < 4:
        raise ValueError("induced cycle length must be at least 4")
    return kernels.find_chordless_cycle(g.order, g.adj, length, length, False)


def find_hole(g: Graph):
    """Any chordless cycle of length >= 4 (absence characterizes chordal)."""
    return kernels.find_chordless_cycle(g.order, g.adj, 4, g.order, False)


def open_neighborhood(g: Graph, v: int) -> InducedSubgraph:
    """Subgraph induced by N(v), densely relabeled."""
    return g.induced(g.neighbors(v))


def is_path_graph(g: Graph) -> bool:
    """True when g is a single path on >= 1 vertices."""
    if g.order == 0 or not g.is_connected() or g.edge_count != g.order - 1:
        return False
    return all(g.degree(v) <= 2 for v in range(g.order))


def is_cycle_graph(g: Graph) -> bool:
    """True when g is a single cycle on >= 3 vertices."""
    return (
        g.order >= 3
        and g.is_connected()
        and all(g.degree(v) == 2 for v in range(g.order))
    )
