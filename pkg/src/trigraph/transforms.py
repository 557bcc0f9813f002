"""Edge splitting / vertex sticking calculus with inverses, logs, replay,
reduction to irreducible form, and log normalization.

Label conventions (deterministic throughout):

* edge split: the subdividing vertex gets the next free label (old order);
  existing labels are untouched.
* vertex stick of u, v: u and v are removed, survivors are relabeled densely
  in ascending order, the merged vertex takes the last label.
* inverse split of w: w is removed, survivors are relabeled densely.
* inverse stick of w: w is removed, survivors are relabeled densely, the two
  new vertices take the last two labels (side-u vertex first).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, open_neighborhood
from .tgraph import (
    DesignatedCycle,
    TriangleGraph,
    build_triangle_graph,
    check_designated_cycle,
    cycle_triangle_neighborhood,
)

WEAK = "weak"
STRONG = "strong"
STRICT = "strict"

_SPLIT_STRENGTHS = (WEAK, STRONG, STRICT)
_STICK_STRENGTHS = (WEAK, STRONG)


class TransformError(ValueError):
    """A transformation precondition failed; the message names the clause."""


@dataclass(frozen=True)
class TransformStep:
    """One applied operation.

    ``vertices`` is (x, y, apex) for a split, (u, v) for a stick, and (w,)
    for the inverses; ``side`` lists the neighbors joined to the first new
    vertex of an inverse stick.
    """

    kind: str  # "split" | "stick" | "unsplit" | "unstick"
    strength: str
    vertices: tuple[int, ...]
    side: Optional[tuple[int, ...]] = None

    def to_text(self) -> str:
        verb = {"split": "SPLIT", "stick": "STICK", "unsplit": "UNSPLIT", "unstick": "UNSTICK"}[self.kind]
        parts = [verb, self.strength, *map(str, self.vertices)]
        if self.kind == "unstick":
            parts.append(",".join(map(str, self.side)))
        return " ".join(parts)

    @classmethod
    def from_text(cls, line: str) -> "TransformStep":
        toks = line.split()
        if not toks:
            raise ValueError("empty step")
        verb = toks[0].upper()
        try:
            if verb == "SPLIT":
                strength, x, y, z = toks[1], int(toks[2]), int(toks[3]), int(toks[4])
                if len(toks) != 5 or strength not in _SPLIT_STRENGTHS:
                    raise ValueError
                return cls("split", strength, (x, y, z))
            if verb == "STICK":
                strength, u, v = toks[1], int(toks[2]), int(toks[3])
                if len(toks) != 4 or strength not in _STICK_STRENGTHS:
                    raise ValueError
                return cls("stick", strength, (u, v))
            if verb == "UNSPLIT":
                strength, w = toks[1], int(toks[2])
                if len(toks) != 3 or strength not in _SPLIT_STRENGTHS:
                    raise ValueError
                return cls("unsplit", strength, (w,))
            if verb == "UNSTICK":
                strength, w = toks[1], int(toks[2])
                side = tuple(int(s) for s in toks[3].split(","))
                if len(toks) != 4 or strength not in _STICK_STRENGTHS:
                    raise ValueError
                return cls("unstick", strength, (w,), side)
        except (IndexError, ValueError):
            raise ValueError(f"malformed step: {line!r}") from None
        raise ValueError(f"unknown step verb: {toks[0]!r}")


@dataclass(frozen=True)
class TransformLog:
    initial: Graph
    steps: tuple[TransformStep, ...]
    final: Graph

    def to_text(self) -> str:
        return "".join(s.to_text() + "\n" for s in self.steps)

    @staticmethod
    def parse_steps(text: str) -> tuple[TransformStep, ...]:
        steps = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                steps.append(TransformStep.from_text(line))
        return tuple(steps)


@dataclass(frozen=True)
class TransformResult:
    graph: Graph
    step: TransformStep
    cycle: Optional[DesignatedCycle] = None
    relabel: Optional[dict] = None


# ---------------------------------------------------------------------------
# helpers


def _distance_at_least(g: Graph, u: int, v: int, k: int) -> bool:
    d = g.distance(u, v)
    return d is None or d >= k


def _triangles_on_edge(g: Graph, x: int, y: int) -> tuple[int, ...]:
    return tuple(
        z
        for z in range(g.order)
        if (g.adj_mask(x) >> z) & 1 and (g.adj_mask(y) >> z) & 1
    )


def _remap_cycle(
    new_graph: Graph,
    old_tg: TriangleGraph,
    cycle: DesignatedCycle,
    vmap,
    replace: Optional[dict] = None,
) -> DesignatedCycle:
    """Carry a designated cycle across a mutation.  ``vmap`` maps old labels
    to new; ``replace`` maps an old cycle position to the list of new-graph
    triangle vertex sets standing in for that triangle."""
    new_tg = build_triangle_graph(new_graph)
    seq = []
    for pos, idx in enumerate(cycle.triangle_indices):
        if replace and pos in replace:
            sets = replace[pos]
        else:
            sets = [tuple(sorted(vmap(v) for v in old_tg.triangles[idx].vertices))]
        for s in sets:
            seq.append(new_tg.index_of(s))
    out = DesignatedCycle(tuple(seq))
    check_designated_cycle(new_tg, out)
    return out


def _delete_vertex_relabel(g: Graph, w: int):
    """Relabel map for removing vertex w (labels above w shift down)."""
    return {v: (v if v < w else v - 1) for v in range(g.order) if v != w}


# ---------------------------------------------------------------------------
# forward operations


def edge_split(
    g: Graph,
    edge,
    apex: int,
    strength: str,
    cycle: Optional[DesignatedCycle] = None,
) -> TransformResult:
    """Replace edge xy of triangle xy-apex with the path x-w-y plus edge
    w-apex.  Strength rules:

    * strict: xy lies in exactly one triangle of the whole graph, and both
      other triangle edges lie in more than one;
    * weak: xy lies in exactly one cycle-triangle, which is xy-apex;
    * strong: weak, and no additional triangle contains xy.
    """
    x, y = edge
    if x > y:
        x, y = y, x
    if strength not in _SPLIT_STRENGTHS:
        raise TransformError(f"unknown split strength {strength!r}")
    if not g.has_edge(x, y):
        raise TransformError(f"({x}, {y}) is not an edge")
    if not (g.has_edge(x, apex) and g.has_edge(y, apex)):
        raise TransformError(f"({x}, {y}, {apex}) is not a triangle")

    tg = build_triangle_graph(g) if (cycle is not None or strength != STRICT) else None
    apexes = _triangles_on_edge(g, x, y)

    if strength == STRICT:
        if len(apexes) != 1:
            raise TransformError(
                f"strict split needs ({x}, {y}) in exactly one triangle, found {len(apexes)}"
            )
        if len(_triangles_on_edge(g, x, apex)) < 2 or len(_triangles_on_edge(g, y, apex)) < 2:
            raise TransformError(
                "strict split needs both other triangle edges in more than one triangle"
            )
    else:
        if cycle is None:
            raise TransformError(f"{strength} split needs a designated cycle")
        check_designated_cycle(tg, cycle)
        covering = [
            i
            for i in cycle.triangle_indices
            if (x, y) in tg.triangles[i]
        ]
        if len(covering) != 1:
            raise TransformError(
                f"({x}, {y}) lies in {len(covering)} cycle-triangles, not private"
            )
        tri = tg.triangles[covering[0]]
        if tuple(sorted((x, y, apex))) != tri.vertices:
            raise TransformError(
                f"cycle-triangle of ({x}, {y}) is {tri.vertices}, apex {apex} does not match"
            )
        if strength == STRONG and len(apexes) != 1:
            raise TransformError(
                f"strong split forbids additional triangles on ({x}, {y}), found {len(apexes)}"
            )

    w = g.order
    new_g = g.with_vertex().with_edges(
        add=[(x, w), (w, y), (w, apex)], remove=[(x, y)]
    )
    step = TransformStep("split", strength, (x, y, apex))

    new_cycle = None
    if cycle is not None:
        first = tuple(sorted((x, w, apex)))
        second = tuple(sorted((w, y, apex)))
        seq = cycle.triangle_indices
        pos = next(
            p for p, i in enumerate(seq) if (x, y) in tg.triangles[i]
        )
        pred = tg.triangles[seq[pos - 1]].vertices
        if not (x in pred and apex in pred):
            first, second = second, first
        new_cycle = _remap_cycle(new_g, tg, cycle, lambda v: v, {pos: [first, second]})
    return TransformResult(new_g, step, new_cycle, None)


def vertex_stick(
    g: Graph,
    u: int,
    v: int,
    strength: str,
    cycle: Optional[DesignatedCycle] = None,
) -> TransformResult:
    """Merge u and v into one vertex adjacent to N(u) | N(v).  Weak needs
    distance >= 3, strong needs >= 4 (different components qualify)."""
    if u > v:
        u, v = v, u
    if strength not in _STICK_STRENGTHS:
        raise TransformError(f"unknown stick strength {strength!r}")
    if u == v:
        raise TransformError("stick needs two distinct vertices")
    need = 3 if strength == WEAK else 4
    if not _distance_at_least(g, u, v, need):
        raise TransformError(
            f"{strength} stick needs distance >= {need} between {u} and {v}, got {g.distance(u, v)}"
        )
    old_tg = build_triangle_graph(g) if cycle is not None else None
    if old_tg is not None:
        check_designated_cycle(old_tg, cycle)

    merged_nbrs = [x for x in range(g.order) if x not in (u, v) and (g.has_edge(u, x) or g.has_edge(v, x))]
    survivors = [x for x in range(g.order) if x not in (u, v)]
    relabel = {old: i for i, old in enumerate(survivors)}
    w = len(survivors)
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges() if a not in (u, v) and b not in (u, v)
    ]
    edges += [(relabel[x], w) for x in merged_nbrs]
    new_g = Graph(w + 1, edges)
    step = TransformStep("stick", strength, (u, v))
    full_map = dict(relabel)
    full_map[u] = w
    full_map[v] = w
    new_cycle = None
    if cycle is not None:
        new_cycle = _remap_cycle(new_g, old_tg, cycle, lambda z: full_map[z])
    return TransformResult(new_g, step, new_cycle, full_map)


# ---------------------------------------------------------------------------
# inverse operations


def _weak_unsplit_pair(g: Graph, w: int):
    nb = g.neighbors(w)
    if len(nb) != 3:
        return None
    for i in range(3):
        for j in range(i + 1, 3):
            if not g.has_edge(nb[i], nb[j]):
                return nb[i], nb[j]
    return None


def _strong_unsplit_pair(g: Graph, w: int):
    nb = g.neighbors(w)
    if len(nb) != 3:
        return None
    for i in range(3):
        for j in range(i + 1, 3):
            u, v = nb[i], nb[j]
            if g.has_edge(u, v):
                continue
            third = next(x for x in nb if x not in (u, v))
            common = g.adj_mask(u) & g.adj_mask(v) & ~(1 << w) & ~(1 << third)
            if common == 0:
                return u, v
    return None


def _strict_unsplit_triple(g: Graph, w: int):
    nb = g.neighbors(w)
    if len(nb) != 3:
        return None
    for z in nb:
        x, y = sorted(t for t in nb if t != z)
        if not (g.has_edge(x, z) and g.has_edge(y, z)):
            continue
        if g.has_edge(x, y):
            continue
        if g.adj_mask(w) & g.adj_mask(x) != 1 << z:
            continue
        if g.adj_mask(w) & g.adj_mask(y) != 1 << z:
            continue
        if g.adj_mask(x) & g.adj_mask(y) != (1 << w) | (1 << z):
            continue
        return x, y, z
    return None


def inverse_edge_split(
    g: Graph,
    w: int,
    strength: str,
    cycle: Optional[DesignatedCycle] = None,
) -> TransformResult:
    """Remove degree-3 vertex w and join the deterministically chosen pair of
    its neighbors, undoing a split of the given strength.

    * weak: first non-adjacent neighbor pair (lexicographic);
    * strong: additionally w must be the only common neighbor of the pair
      besides the third neighbor;
    * strict: the full reversal conditions of a strict split.
    """
    if strength not in _SPLIT_STRENGTHS:
        raise TransformError(f"unknown split strength {strength!r}")
    if not 0 <= w < g.order:
        raise TransformError(f"vertex {w} out of range")
    if g.degree(w) != 3:
        raise TransformError(f"inverse split needs degree 3 at {w}, got {g.degree(w)}")
    if strength == WEAK:
        pair = _weak_unsplit_pair(g, w)
        clause = "no non-adjacent neighbor pair"
    elif strength == STRONG:
        pair = _strong_unsplit_pair(g, w)
        clause = "no neighbor pair with w as only extra common neighbor"
    else:
        triple = _strict_unsplit_triple(g, w)
        pair = triple[:2] if triple else None
        clause = "strict reversal conditions not met"
    if pair is None:
        raise TransformError(f"inverse {strength} split at {w}: {clause}")
    u, v = pair

    old_tg = build_triangle_graph(g) if cycle is not None else None
    if old_tg is not None:
        check_designated_cycle(old_tg, cycle)

    relabel = _delete_vertex_relabel(g, w)
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges() if a != w and b != w
    ]
    edges.append((relabel[u], relabel[v]))
    new_g = Graph(g.order - 1, edges)
    step = TransformStep("unsplit", strength, (w,))

    new_cycle = None
    if cycle is not None:
        seq = cycle.triangle_indices
        holding = [p for p, i in enumerate(seq) if w in old_tg.triangles[i]]
        if len(holding) != 2 or (holding[1] - holding[0]) % len(seq) not in (
            1,
            len(seq) - 1,
        ):
            raise TransformError(
                "inverse split needs w in exactly two consecutive cycle-triangles"
            )
        a, b = holding
        if (a, b) == (0, len(seq) - 1):
            a, b = b, a
        third = next(x for x in g.neighbors(w) if x not in (u, v))
        merged = tuple(sorted((relabel[u], relabel[v], relabel[third])))
        # drop one merged position, substitute the merged triangle at the other
        kept = [i for p, i in enumerate(seq) if p != b]
        pos_a = kept.index(seq[a])
        new_cycle = _remap_cycle(
            new_g,
            old_tg,
            DesignatedCycle(tuple(kept)),
            lambda z: relabel[z],
            {pos_a: [merged]},
        )
    return TransformResult(new_g, step, new_cycle, relabel)


def inverse_vertex_stick(
    g: Graph,
    w: int,
    strength: str,
    side: Optional[tuple[int, ...]] = None,
    cycle: Optional[DesignatedCycle] = None,
) -> TransformResult:
    """Pull w apart into two vertices, splitting its neighborhood along
    connected components.

    * strong: the subgraph induced by N(w) must be disconnected;
    * weak: the cycle-triangle neighborhood N*(w) must be disconnected
      (a designated cycle is required).

    ``side`` lists the neighbors joined to the first new vertex; it must be a
    union of components.  Default: the component holding the lowest-labeled
    neighbor, alone.
    """
    if strength not in _STICK_STRENGTHS:
        raise TransformError(f"unknown stick strength {strength!r}")
    if not 0 <= w < g.order:
        raise TransformError(f"vertex {w} out of range")
    nbrs = g.neighbors(w)
    if not nbrs:
        raise TransformError(f"vertex {w} has no neighbors")

    if strength == STRONG:
        sub, labels = open_neighborhood(g, w)
    else:
        if cycle is None:
            raise TransformError("weak inverse stick needs a designated cycle")
        tg = build_triangle_graph(g)
        check_designated_cycle(tg, cycle)
        sub, labels = cycle_triangle_neighborhood(tg, cycle, w)
        if set(labels) != set(nbrs):
            missing = sorted(set(nbrs) - set(labels))
            raise TransformError(
                f"edges from {w} to {missing} lie in no cycle-triangle"
            )
    comps = [frozenset(labels[i] for i in c) for c in sub.components()]
    if len(comps) < 2:
        kind = "N(w)" if strength == STRONG else "N*(w)"
        raise TransformError(f"inverse {strength} stick at {w}: {kind} is connected")

    if side is None:
        side_u = next(c for c in comps if min(nbrs) in c)
    else:
        side_u = frozenset(side)
        if not side_u or side_u == set(nbrs) or not side_u <= set(nbrs):
            raise TransformError("side must be a nonempty proper subset of N(w)")
        for c in comps:
            if side_u & c and not c <= side_u:
                raise TransformError(f"side splits a component {sorted(c)}")
    side_v = frozenset(nbrs) - side_u

    relabel = _delete_vertex_relabel(g, w)
    u_lab = g.order - 1
    v_lab = g.order
    edges = [(relabel[a], relabel[b]) for a, b in g.edges() if a != w and b != w]
    edges += [(relabel[x], u_lab) for x in sorted(side_u)]
    edges += [(relabel[x], v_lab) for x in sorted(side_v)]
    new_g = Graph(g.order + 1, edges)
    step = TransformStep("unstick", strength, (w,), tuple(sorted(side_u)))

    new_cycle = None
    if cycle is not None and strength == WEAK:
        def vmap_for(tri):
            others = [x for x in tri.vertices if x != w]
            target = u_lab if others[0] in side_u else v_lab
            return lambda z: target if z == w else relabel[z]

        new_tg = build_triangle_graph(new_g)
        seq = []
        for idx in cycle.triangle_indices:
            tri = tg.triangles[idx]
            vm = vmap_for(tri) if w in tri.vertices else (lambda z: relabel[z])
            seq.append(new_tg.index_of(tuple(sorted(vm(z) for z in tri.vertices))))
        new_cycle = DesignatedCycle(tuple(seq))
        check_designated_cycle(new_tg, new_cycle)
    return TransformResult(new_g, step, new_cycle, relabel)


# ---------------------------------------------------------------------------
# replay


def apply_step(g: Graph, step: TransformStep) -> Graph:
    """Replay a recorded step.  Validation is as strict as the step text
    allows: cycle-relative clauses (which the log grammar does not carry) are
    not re-derived."""
    return _apply_step_full(g, step)[0]


def _apply_step_full(g: Graph, step: TransformStep):
    if step.kind == "split":
        x, y, z = step.vertices
        if x > y:
            x, y = y, x
        if not (g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z)):
            raise TransformError(f"({x}, {y}, {z}) is not a triangle")
        if step.strength == STRICT:
            res = edge_split(g, (x, y), z, STRICT)
            return res.graph, None
        if step.strength == STRONG and len(_triangles_on_edge(g, x, y)) != 1:
            raise TransformError(
                f"strong split forbids additional triangles on ({x}, {y})"
            )
        w = g.order
        new_g = g.with_vertex().with_edges(add=[(x, w), (w, y), (w, z)], remove=[(x, y)])
        return new_g, None
    if step.kind == "stick":
        u, v = step.vertices
        res = vertex_stick(g, u, v, step.strength)
        return res.graph, res.relabel
    if step.kind == "unsplit":
        res = inverse_edge_split(g, step.vertices[0], step.strength)
        return res.graph, res.relabel
    if step.kind == "unstick":
        w = step.vertices[0]
        if step.strength == STRONG:
            res = inverse_vertex_stick(g, w, STRONG, side=step.side)
            return res.graph, res.relabel
        # weak: the designated cycle is not in the log; check shape only
        side_u = frozenset(step.side or ())
        nbrs = frozenset(g.neighbors(w))
        if not side_u or not side_u < nbrs:
            raise TransformError("side must be a nonempty proper subset of N(w)")
        relabel = _delete_vertex_relabel(g, w)
        u_lab, v_lab = g.order - 1, g.order
        edges = [(relabel[a], relabel[b]) for a, b in g.edges() if a != w and b != w]
        edges += [(relabel[x], u_lab) for x in sorted(side_u)]
        edges += [(relabel[x], v_lab) for x in sorted(nbrs - side_u)]
        return Graph(g.order + 1, edges), relabel
    raise TransformError(f"unknown step kind {step.kind!r}")


def replay(initial: Graph, steps) -> Graph:
    g = initial
    for step in steps:
        g = apply_step(g, step)
    return g


# ---------------------------------------------------------------------------
# reduction


def _tgraph_cycle_length(g: Graph) -> Optional[int]:
    tg = build_triangle_graph(g)
    d = tg.derived
    if d.order >= 3 and d.is_connected() and all(x == 2 for x in d.degrees()):
        return d.order
    return None


def reduce_to_irreducible(g: Graph, rng: Optional[random.Random] = None):
    """Apply inverse strong sticks and inverse strict splits until neither
    applies; input must have a cycle triangle graph.  Deterministic order:
    inverse sticks first, lowest vertex first; pass ``rng`` to randomize the
    choice at every step instead.

    Returns ``(irreducible_graph, log)``.
    """
    if _tgraph_cycle_length(g) is None:
        raise TransformError("reduction needs a graph whose triangle graph is a cycle")
    cur = g
    steps = []
    while True:
        unsticks = []
        for w in range(cur.order):
            if cur.degree(w) >= 2:
                sub, _ = open_neighborhood(cur, w)
                if len(sub.components()) >= 2:
                    unsticks.append(w)
        unsplits = [
            w
            for w in range(cur.order)
            if cur.degree(w) == 3 and _strict_unsplit_triple(cur, w) is not None
        ]
        if rng is None:
            if unsticks:
                choice = ("unstick", unsticks[0])
            elif unsplits:
                choice = ("unsplit", unsplits[0])
            else:
                break
        else:
            pool = [("unstick", w) for w in unsticks] + [("unsplit", w) for w in unsplits]
            if not pool:
                break
            choice = pool[rng.randrange(len(pool))]
        kind, w = choice
        if kind == "unstick":
            res = inverse_vertex_stick(cur, w, STRONG)
        else:
            res = inverse_edge_split(cur, w, STRICT)
        cur = res.graph
        steps.append(res.step)
    return cur, TransformLog(g, tuple(steps), cur)


# ---------------------------------------------------------------------------
# log normalization: all splits before all sticks


def reorder_log(log: TransformLog) -> TransformLog:
    """Rewrite a forward log (splits and sticks only) into an equivalent one
    applying every split before every stick, preferring splits whose edge
    currently lies in more than one triangle.  The final graphs of the two
    logs are isomorphic."""
    for s in log.steps:
        if s.kind not in ("split", "stick"):
            raise TransformError("reorder expects a forward log (splits and sticks)")

    # trace: name every vertex that ever exists
    tok = {v: ("v", v) for v in range(log.initial.order)}
    split_records = []  # ((tok_x, tok_y), tok_apex)
    stick_records = []  # (tok_u, tok_v, strength)
    cur = log.initial
    for step in log.steps:
        if step.kind == "split":
            x, y, z = step.vertices
            if x > y:
                x, y = y, x
            split_records.append(((tok[x], tok[y]), tok[z]))
            cur, _ = _apply_step_full(cur, step)
            tok[cur.order - 1] = ("s", len(split_records) - 1)
        else:
            u, v = step.vertices
            stick_records.append((tok[min(u, v)], tok[max(u, v)], step.strength))
            cur, relabel = _apply_step_full(cur, step)
            tok = {relabel[old]: t for old, t in tok.items() if old in relabel}
            tok[cur.order - 1] = ("k", len(stick_records) - 1)

    # rebuild
    loc = {("v", v): v for v in range(log.initial.order)}
    merged_pair = {("k", j): (u, v) for j, (u, v, _) in enumerate(stick_records)}

    def candidates(token):
        if token in loc:
            return [loc[token]]
        if token[0] == "k":
            u, v = merged_pair[token]
            return candidates(u) + candidates(v)
        return []

    def resolve(token, want_adjacent, what):
        cands = [c for c in candidates(token) if all(g2.has_edge(c, o) for o in want_adjacent)]
        if len(cands) != 1:
            raise TransformError(f"cannot resolve {what} of a reordered split")
        return cands[0]

    g2 = log.initial
    new_steps = []
    remaining = list(range(len(split_records)))
    while remaining:
        ready = []
        for i in remaining:
            (ta, tb), tz = split_records[i]
            ca = candidates(ta)
            cb = candidates(tb)
            pairs = [(a, b) for a in ca for b in cb if g2.has_edge(a, b)]
            if len(pairs) == 1:
                ready.append((i, pairs[0], tz))
        if not ready:
            raise TransformError("no reordered split is applicable; log is inconsistent")
        pick = None
        for i, (a, b), tz in ready:
            if len(_triangles_on_edge(g2, a, b)) > 1:
                pick = (i, (a, b), tz)
                break
        if pick is None:
            pick = ready[0]
        i, (a, b), tz = pick
        z = resolve(tz, (a, b), "apex")
        strength = WEAK if len(_triangles_on_edge(g2, a, b)) > 1 else STRONG
        step = TransformStep("split", strength, (min(a, b), max(a, b), z))
        g2, _ = _apply_step_full(g2, step)
        loc[("s", i)] = g2.order - 1
        new_steps.append(step)
        remaining.remove(i)

    for j, (tu, tv, strength) in enumerate(stick_records):
        u = resolve(tu, (), "stick endpoint")
        v = resolve(tv, (), "stick endpoint")
        step = TransformStep("stick", strength, (min(u, v), max(u, v)))
        g2, relabel = _apply_step_full(g2, step)
        loc = {t: relabel[lab] for t, lab in loc.items() if lab in relabel and t not in (tu, tv)}
        loc.pop(tu, None)
        loc.pop(tv, None)
        loc[("k", j)] = g2.order - 1
        new_steps.append(step)

    return TransformLog(log.initial, tuple(new_steps), g2)
