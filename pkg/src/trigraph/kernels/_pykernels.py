"""Pure-Python search kernels.

Graphs enter as ``(n, adj)`` where ``adj[v]`` is the neighbor bitmask of
vertex ``v``.  Every routine is deterministic: given equal inputs it returns
bit-identical outputs, and the compiled twin in ``_ckernels`` mirrors each
tie-breaking rule exactly.
"""

from itertools import permutations

__all__ = [
    "canonical_labeling",
    "find_chordless_cycle",
    "find_embedding",
    "max_independent_set",
    "min_hitting_set3",
    "graph_classes",
]


def _bit_list(mask):
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(n, adj, cells):
    """Equitable refinement of an ordered partition (list of vertex lists)."""
    while True:
        index = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                index[v] = ci
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed = []
            for v in cell:
                sig = sorted(index[u] for u in _bit_list(adj[v]))
                keyed.append((tuple(sig), v))
            keyed.sort()
            group = [keyed[0][1]]
            for (sig, v), (prev_sig, _) in zip(keyed[1:], keyed):
                if sig == prev_sig:
                    group.append(v)
                else:
                    new_cells.append(group)
                    group = [v]
                    changed = True
            new_cells.append(group)
        if not changed:
            return new_cells
        cells = new_cells


def _twins(adj, u, v):
    # True for interchangeable vertices (equal neighborhoods, adjacent or not).
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_labeling(n, adj):
    """Return ``(labels, form)``: ``labels[v]`` is the canonical label of v and
    ``form`` is the relabeled adjacency row tuple, minimal over all labelings.
    """
    if n == 0:
        return (), ()
    best_form = None
    best_labels = None

    def emit(cells):
        nonlocal best_form, best_labels
        labels = [0] * n
        for i, cell in enumerate(cells):
            labels[cell[0]] = i
        form = [0] * n
        for v in range(n):
            row = 0
            m = adj[v]
            while m:
                b = m & -m
                row |= 1 << labels[b.bit_length() - 1]
                m ^= b
            form[labels[v]] = row
        form = tuple(form)
        if best_form is None or form < best_form:
            best_form = form
            best_labels = tuple(labels)

    def rec(cells):
        cells = _refine(n, adj, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            emit(cells)
            return
        cell = cells[target]
        reps = []
        for v in cell:
            if any(_twins(adj, v, u) for u in reps):
                continue
            reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            rec(cells[:target] + [[v], rest] + cells[target + 1 :])

    rec([list(range(n))])
    return best_labels, best_form


# ---------------------------------------------------------------------------
# chordless cycle search


def find_chordless_cycle(n, adj, min_len, max_len, odd_only):
    """First chordless cycle with min_len <= length <= max_len, ascending from
    the lowest start vertex; ``odd_only`` restricts to odd lengths.
    """
    if max_len > n:
        max_len = n
    if min_len < 4 or min_len > max_len:
        return None

    for s in range(n):
        sadj = adj[s]
        above = -1 << (s + 1)

        # Depth-first over chordless paths [s, v1, ..., vk] whose interior
        # vertices avoid N(s); a candidate adjacent to s closes a cycle.
        def walk(path, path_mask, ban):
            last = path[-1]
            cand = adj[last] & above & ~ban & ~path_mask
            length = len(path) + 1
            for w in _bit_list(cand):
                if (sadj >> w) & 1:
                    if length >= min_len and (not odd_only or length % 2 == 1):
                        return path + [w]
                elif length < max_len:
                    hit = walk(path + [w], path_mask | 1 << w, ban | adj[last])
                    if hit is not None:
                        return hit
            return None

        for v1 in _bit_list(sadj & above):
            hit = walk([s, v1], (1 << s) | (1 << v1), 0)
            if hit is not None:
                return tuple(hit)
    return None


# ---------------------------------------------------------------------------
# subgraph embedding


def find_embedding(pn, padj, hn, hadj, induced):
    """Injective map of the pattern into the host preserving edges (and, when
    ``induced``, non-edges); returns ``mapping[pattern_vertex] = host_vertex``.
    """
    if pn > hn:
        return None
    if pn == 0:
        return ()
    pdeg = [padj[v].bit_count() for v in range(pn)]
    hdeg = [hadj[v].bit_count() for v in range(hn)]

    # Static order: most already-placed neighbors first, then degree, then index.
    order = []
    placed = 0
    for _ in range(pn):
        best_v = -1
        best_key = None
        for v in range(pn):
            if (placed >> v) & 1:
                continue
            key = ((padj[v] & placed).bit_count(), pdeg[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        placed |= 1 << best_v

    mapping = [-1] * pn

    def rec(pos, used):
        if pos == pn:
            return True
        p = order[pos]
        for h in range(hn):
            if (used >> h) & 1 or hdeg[h] < pdeg[p]:
                continue
            ok = True
            for qpos in range(pos):
                q = order[qpos]
                pe = (padj[p] >> q) & 1
                he = (hadj[h] >> mapping[q]) & 1
                if pe and not he:
                    ok = False
                    break
                if induced and he and not pe:
                    ok = False
                    break
            if ok:
                mapping[p] = h
                if rec(pos + 1, used | 1 << h):
                    return True
                mapping[p] = -1
        return False

    return tuple(mapping) if rec(0, 0) else None


# ---------------------------------------------------------------------------
# exact maximum independent set


def max_independent_set(n, adj):
    """Exact MIS by branch and bound; returns ``(size, vertex_mask)`` for the
    first optimum in include-branch-first order.
    """
    best_size = 0
    best_mask = 0

    def rec(cand, cur_mask, cur_size):
        nonlocal best_size, best_mask
        if cur_size + cand.bit_count() <= best_size:
            return
        if cand == 0:
            best_size = cur_size
            best_mask = cur_mask
            return
        pivot = -1
        pivot_deg = -1
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (adj[v] & cand).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
        rec(cand & ~(adj[pivot] | 1 << pivot), cur_mask | 1 << pivot, cur_size + 1)
        rec(cand & ~(1 << pivot), cur_mask, cur_size)

    rec((1 << n) - 1 if n else 0, 0, 0)
    return best_size, best_mask


# ---------------------------------------------------------------------------
# exact minimum hitting set over 3-element sets


def min_hitting_set3(m, triples):
    """Exact minimum hitting set for a family of 3-element subsets of range(m).

    Branches on an unhit triple with the fewest non-banned elements; bounds by
    a greedy element-disjoint sub-family (memoized per unhit mask).
    """
    triples = [tuple(t) for t in triples]
    t_count = len(triples)
    if t_count == 0:
        return ()
    all_mask = (1 << t_count) - 1
    elem_hits = [0] * m
    elem_masks = []
    for i, t in enumerate(triples):
        tm = 0
        for e in t:
            elem_hits[e] |= 1 << i
            tm |= 1 << e
        elem_masks.append(tm)

    # greedy upper bound / initial witness
    best = []
    unhit = all_mask
    while unhit:
        pick = -1
        pick_gain = -1
        for e in range(m):
            gain = (elem_hits[e] & unhit).bit_count()
            if gain > pick_gain:
                pick_gain = gain
                pick = e
        best.append(pick)
        unhit &= ~elem_hits[pick]
    best_size = len(best)

    lb_cache = {}

    def lower_bound(unhit_mask):
        lb = lb_cache.get(unhit_mask)
        if lb is None:
            lb = 0
            used = 0
            mm = unhit_mask
            while mm:
                b = mm & -mm
                i = b.bit_length() - 1
                mm ^= b
                if not elem_masks[i] & used:
                    lb += 1
                    used |= elem_masks[i]
            lb_cache[unhit_mask] = lb
        return lb

    chosen = []

    def rec(unhit_mask, banned):
        nonlocal best, best_size
        if not unhit_mask:
            if len(chosen) < best_size:
                best = list(chosen)
                best_size = len(chosen)
            return
        if len(chosen) + lower_bound(unhit_mask) >= best_size:
            return
        pick_allowed = None
        mm = unhit_mask
        while mm:
            b = mm & -mm
            i = b.bit_length() - 1
            mm ^= b
            allowed = [e for e in triples[i] if not (banned >> e) & 1]
            if pick_allowed is None or len(allowed) < len(pick_allowed):
                pick_allowed = allowed
                if len(allowed) == 0:
                    break
        if not pick_allowed:
            return
        new_ban = banned
        for e in pick_allowed:
            chosen.append(e)
            rec(unhit_mask & ~elem_hits[e], new_ban)
            chosen.pop()
            new_ban |= 1 << e

    rec(all_mask, 0)
    return tuple(sorted(best))


# ---------------------------------------------------------------------------
# enumeration of small graphs up to isomorphism


def graph_classes(order):
    """Minimum-edge-mask representative of every isomorphism class on
    ``order`` labeled vertices, ascending.  Edge (i, j), i < j, sits at the
    lexicographic bit position within the upper triangle.
    """
    if order < 1 or order > 7:
        raise ValueError("built-in enumeration supports orders 1..7")
    pairs = []
    eidx = {}
    for i in range(order):
        for j in range(i + 1, order):
            eidx[(i, j)] = len(pairs)
            pairs.append((i, j))
    m = len(pairs)

    perm_tables = []
    for perm in permutations(range(order)):
        table = [0] * m
        for (i, j), e in eidx.items():
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            table[e] = eidx[(a, b)]
        perm_tables.append(table)

    seen = bytearray(1 << m)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        reps.append(mask)
        for table in perm_tables:
            r = mask
            out = 0
            while r:
                b = r & -r
                out |= 1 << table[b.bit_length() - 1]
                r ^= b
            seen[out] = 1
    return reps
