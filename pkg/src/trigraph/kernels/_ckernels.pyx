# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; each routine mirrors its twin in ``_pykernels``
bit for bit (same branching order, same tie-breaking, same results).  Inputs
are limited to 63 vertices / 63 set elements; the dispatcher routes larger
inputs to the pure backend."""

from itertools import permutations

from libc.string cimport memcmp, memcpy, memset
from libc.stdlib cimport calloc, free, malloc

ctypedef unsigned long long u64

__all__ = [
    "canonical_labeling",
    "find_chordless_cycle",
    "find_embedding",
    "max_independent_set",
    "min_hitting_set3",
    "graph_classes",
]


cdef inline int _popcount(u64 x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef inline int _lowbit(u64 x) noexcept:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


# ---------------------------------------------------------------------------
# canonical labeling


cdef struct CanonBest:
    int have
    int n
    u64 form[64]
    int labels[64]


cdef int _canon_refine(int n, u64 *adj, int *vs, int *cstart, int ncells) noexcept:
    # Equitable refinement; within each cell vertices end up ordered by
    # (signature, vertex), matching the pure version's sort.
    cdef int index[64]
    cdef unsigned char sig[4096]
    cdef int out_vs[64]
    cdef int out_cstart[65]
    cdef int colors[64]
    cdef int c, k, v, u, i, j, size, start, ncols, changed, out_ncells, pos
    cdef u64 m, b

    while True:
        for c in range(ncells):
            for k in range(cstart[c], cstart[c + 1]):
                index[vs[k]] = c
        changed = 0
        out_ncells = 0
        pos = 0
        out_cstart[0] = 0
        for c in range(ncells):
            start = cstart[c]
            size = cstart[c + 1] - start
            if size == 1:
                out_vs[pos] = vs[start]
                pos += 1
                out_ncells += 1
                out_cstart[out_ncells] = pos
                continue
            # signatures: sorted neighbor colors, stored +1, zero padded
            for k in range(size):
                v = vs[start + k]
                ncols = 0
                m = adj[v]
                while m:
                    u = _lowbit(m)
                    m &= m - 1
                    colors[ncols] = index[u] + 1
                    ncols += 1
                for i in range(1, ncols):
                    j = i
                    while j > 0 and colors[j - 1] > colors[j]:
                        colors[j - 1], colors[j] = colors[j], colors[j - 1]
                        j -= 1
                memset(sig + v * 64, 0, 64)
                for i in range(ncols):
                    sig[v * 64 + i] = <unsigned char> colors[i]
            # insertion sort of the cell slice by (signature, vertex)
            for i in range(start + 1, start + size):
                v = vs[i]
                j = i
                while j > start:
                    u = vs[j - 1]
                    k = memcmp(sig + u * 64, sig + v * 64, 64)
                    if k > 0 or (k == 0 and u > v):
                        vs[j] = u
                        j -= 1
                    else:
                        break
                vs[j] = v
            # split on signature change
            for k in range(size):
                v = vs[start + k]
                out_vs[pos] = v
                pos += 1
                if k + 1 < size:
                    u = vs[start + k + 1]
                    if memcmp(sig + v * 64, sig + u * 64, 64) != 0:
                        out_ncells += 1
                        out_cstart[out_ncells] = pos
                        changed = 1
            out_ncells += 1
            out_cstart[out_ncells] = pos
        memcpy(vs, out_vs, n * sizeof(int))
        memcpy(cstart, out_cstart, (out_ncells + 1) * sizeof(int))
        ncells = out_ncells
        if not changed:
            return ncells


cdef inline int _twins(u64 *adj, int u, int v) noexcept:
    return (adj[u] & ~((<u64> 1) << v)) == (adj[v] & ~((<u64> 1) << u))


cdef void _canon_emit(int n, u64 *adj, int *vs, CanonBest *best) noexcept:
    cdef int labels[64]
    cdef u64 form[64]
    cdef int i, v, better
    cdef u64 m, row
    for i in range(n):
        labels[vs[i]] = i
    for v in range(n):
        row = 0
        m = adj[v]
        while m:
            row |= (<u64> 1) << labels[_lowbit(m)]
            m &= m - 1
        form[labels[v]] = row
    if not best.have:
        better = 1
    else:
        better = 0
        for i in range(n):
            if form[i] != best.form[i]:
                better = form[i] < best.form[i]
                break
    if better:
        best.have = 1
        memcpy(best.form, form, n * sizeof(u64))
        memcpy(best.labels, labels, n * sizeof(int))


cdef void _canon_rec(int n, u64 *adj, int *vs, int *cstart, int ncells,
                     CanonBest *best) noexcept:
    cdef int target, c, k, v, i, nreps, is_twin, w, pos
    cdef int reps[64]
    cdef int child_vs[64]
    cdef int child_cstart[65]

    ncells = _canon_refine(n, adj, vs, cstart, ncells)
    target = -1
    for c in range(ncells):
        if cstart[c + 1] - cstart[c] > 1:
            target = c
            break
    if target < 0:
        _canon_emit(n, adj, vs, best)
        return
    nreps = 0
    for k in range(cstart[target], cstart[target + 1]):
        v = vs[k]
        is_twin = 0
        for i in range(nreps):
            if _twins(adj, v, reps[i]):
                is_twin = 1
                break
        if not is_twin:
            reps[nreps] = v
            nreps += 1
    for i in range(nreps):
        v = reps[i]
        pos = 0
        for k in range(cstart[target]):
            child_vs[pos] = vs[k]
            pos += 1
        for c in range(target):
            child_cstart[c] = cstart[c]
        child_cstart[target] = cstart[target]
        child_vs[pos] = v
        pos += 1
        child_cstart[target + 1] = pos
        for k in range(cstart[target], cstart[target + 1]):
            w = vs[k]
            if w != v:
                child_vs[pos] = w
                pos += 1
        child_cstart[target + 2] = pos
        for c in range(target + 1, ncells):
            for k in range(cstart[c], cstart[c + 1]):
                child_vs[pos] = vs[k]
                pos += 1
            child_cstart[c + 2] = pos
        _canon_rec(n, adj, child_vs, child_cstart, ncells + 1, best)


def canonical_labeling(int n, adj):
    """Return ``(labels, form)``: ``labels[v]`` is the canonical label of v and
    ``form`` is the relabeled adjacency row tuple, minimal over all labelings.
    """
    if n == 0:
        return (), ()
    cdef u64 adjv[64]
    cdef int vs[64]
    cdef int cstart[65]
    cdef int v
    cdef CanonBest best
    for v in range(n):
        adjv[v] = adj[v]
        vs[v] = v
    cstart[0] = 0
    cstart[1] = n
    best.have = 0
    best.n = n
    _canon_rec(n, adjv, vs, cstart, 1, &best)
    return (
        tuple([best.labels[v] for v in range(n)]),
        tuple([best.form[v] for v in range(n)]),
    )


# ---------------------------------------------------------------------------
# chordless cycle search


cdef int _cycle_walk(u64 *adj, u64 sadj, u64 above, int *path, int depth,
                     u64 path_mask, u64 ban, int min_len, int max_len,
                     int odd_only) noexcept:
    cdef int last = path[depth - 1]
    cdef u64 cand = adj[last] & above & ~ban & ~path_mask
    cdef int length = depth + 1
    cdef int w, hit
    cdef u64 m = cand, b
    while m:
        b = m & (~m + 1)
        w = _lowbit(b)
        m ^= b
        if (sadj >> w) & 1:
            if length >= min_len and (not odd_only or length % 2 == 1):
                path[depth] = w
                return length
        elif length < max_len:
            path[depth] = w
            hit = _cycle_walk(adj, sadj, above, path, depth + 1,
                              path_mask | b, ban | adj[last],
                              min_len, max_len, odd_only)
            if hit:
                return hit
    return 0


def find_chordless_cycle(int n, adj, int min_len, int max_len, bint odd_only):
    """First chordless cycle with min_len <= length <= max_len, ascending from
    the lowest start vertex; ``odd_only`` restricts to odd lengths.
    """
    if max_len > n:
        max_len = n
    if min_len < 4 or min_len > max_len:
        return None
    cdef u64 adjv[64]
    cdef int path[65]
    cdef int s, v1, hit
    cdef u64 sadj, above, m, b
    for s in range(n):
        adjv[s] = adj[s]
    for s in range(n):
        sadj = adjv[s]
        above = 0 if s + 1 >= 64 else (~(<u64> 0)) << (s + 1)
        m = sadj & above
        while m:
            b = m & (~m + 1)
            v1 = _lowbit(b)
            m ^= b
            path[0] = s
            path[1] = v1
            hit = _cycle_walk(adjv, sadj, above, path, 2,
                              ((<u64> 1) << s) | b, 0,
                              min_len, max_len, odd_only)
            if hit:
                return tuple([path[v] for v in range(hit)])
    return None


# ---------------------------------------------------------------------------
# subgraph embedding


cdef int _embed_rec(int pn, u64 *padj, int hn, u64 *hadj, int *pdeg, int *hdeg,
                    int *order, int *mapping, int pos, u64 used,
                    int induced) noexcept:
    if pos == pn:
        return 1
    cdef int p = order[pos]
    cdef int h, qpos, q, ok, pe, he
    for h in range(hn):
        if (used >> h) & 1 or hdeg[h] < pdeg[p]:
            continue
        ok = 1
        for qpos in range(pos):
            q = order[qpos]
            pe = (padj[p] >> q) & 1
            he = (hadj[h] >> mapping[q]) & 1
            if pe and not he:
                ok = 0
                break
            if induced and he and not pe:
                ok = 0
                break
        if ok:
            mapping[p] = h
            if _embed_rec(pn, padj, hn, hadj, pdeg, hdeg, order, mapping,
                          pos + 1, used | ((<u64> 1) << h), induced):
                return 1
            mapping[p] = -1
    return 0


def find_embedding(int pn, padj, int hn, hadj, bint induced):
    """Injective map of the pattern into the host preserving edges (and, when
    ``induced``, non-edges); returns ``mapping[pattern_vertex] = host_vertex``.
    """
    if pn > hn:
        return None
    if pn == 0:
        return ()
    cdef u64 pa[64]
    cdef u64 ha[64]
    cdef int pdeg[64]
    cdef int hdeg[64]
    cdef int order[64]
    cdef int mapping[64]
    cdef int v, i, best_v, cnt
    cdef u64 placed = 0
    cdef int key0, key1, key2, bk0, bk1, bk2, better
    for v in range(pn):
        pa[v] = padj[v]
        pdeg[v] = _popcount(pa[v])
        mapping[v] = -1
    for v in range(hn):
        ha[v] = hadj[v]
        hdeg[v] = _popcount(ha[v])
    # Static order: most already-placed neighbors first, then degree, then index.
    for i in range(pn):
        best_v = -1
        for v in range(pn):
            if (placed >> v) & 1:
                continue
            key0 = _popcount(pa[v] & placed)
            key1 = pdeg[v]
            key2 = -v
            if best_v < 0:
                better = 1
            elif key0 != bk0:
                better = key0 > bk0
            elif key1 != bk1:
                better = key1 > bk1
            else:
                better = key2 > bk2
            if better:
                best_v = v
                bk0 = key0
                bk1 = key1
                bk2 = key2
        order[i] = best_v
        placed |= (<u64> 1) << best_v
    if _embed_rec(pn, pa, hn, ha, pdeg, hdeg, order, mapping, 0, 0, induced):
        return tuple([mapping[v] for v in range(pn)])
    return None


# ---------------------------------------------------------------------------
# exact maximum independent set


cdef struct MisBest:
    int size
    u64 mask


cdef void _mis_rec(int n, u64 *adj, u64 cand, u64 cur_mask, int cur_size,
                   MisBest *best) noexcept:
    if cur_size + _popcount(cand) <= best.size:
        return
    if cand == 0:
        best.size = cur_size
        best.mask = cur_mask
        return
    cdef int pivot = -1
    cdef int pivot_deg = -1
    cdef int v, d
    cdef u64 m = cand, b
    while m:
        b = m & (~m + 1)
        v = _lowbit(b)
        m ^= b
        d = _popcount(adj[v] & cand)
        if d > pivot_deg:
            pivot_deg = d
            pivot = v
    _mis_rec(n, adj, cand & ~(adj[pivot] | ((<u64> 1) << pivot)),
             cur_mask | ((<u64> 1) << pivot), cur_size + 1, best)
    _mis_rec(n, adj, cand & ~((<u64> 1) << pivot), cur_mask, cur_size, best)


def max_independent_set(int n, adj):
    """Exact MIS by branch and bound; returns ``(size, vertex_mask)`` for the
    first optimum in include-branch-first order.
    """
    cdef u64 adjv[64]
    cdef int v
    cdef MisBest best
    for v in range(n):
        adjv[v] = adj[v]
    best.size = 0
    best.mask = 0
    _mis_rec(n, adjv, ((<u64> 1) << n) - 1 if n else 0, 0, 0, &best)
    return best.size, best.mask


# ---------------------------------------------------------------------------
# exact minimum hitting set over 3-element sets


cdef struct Hs3:
    int m
    int t_count
    u64 elem_hits[64]
    int tri[64][3]
    u64 elem_masks[64]
    int best[64]
    int best_size
    int chosen[64]
    int n_chosen


cdef int _hs3_lower_bound(Hs3 *st, u64 unhit, dict cache):
    cdef object key = unhit
    cdef object got = cache.get(key)
    if got is not None:
        return got
    cdef int lb = 0
    cdef u64 used = 0, mm = unhit, b
    cdef int i
    while mm:
        b = mm & (~mm + 1)
        i = _lowbit(b)
        mm ^= b
        if not (st.elem_masks[i] & used):
            lb += 1
            used |= st.elem_masks[i]
    cache[key] = lb
    return lb


cdef void _hs3_rec(Hs3 *st, u64 unhit, u64 banned, dict cache):
    cdef int i, k, e, n_allowed, pick_n
    cdef int allowed[3]
    cdef int pick[3]
    cdef u64 mm, b, new_ban
    if not unhit:
        if st.n_chosen < st.best_size:
            for i in range(st.n_chosen):
                st.best[i] = st.chosen[i]
            st.best_size = st.n_chosen
        return
    if st.n_chosen + _hs3_lower_bound(st, unhit, cache) >= st.best_size:
        return
    pick_n = -1
    mm = unhit
    while mm:
        b = mm & (~mm + 1)
        i = _lowbit(b)
        mm ^= b
        n_allowed = 0
        for k in range(3):
            e = st.tri[i][k]
            if not (banned >> e) & 1:
                allowed[n_allowed] = e
                n_allowed += 1
        if pick_n < 0 or n_allowed < pick_n:
            pick_n = n_allowed
            for k in range(n_allowed):
                pick[k] = allowed[k]
            if n_allowed == 0:
                break
    if pick_n <= 0:
        return
    new_ban = banned
    for k in range(pick_n):
        e = pick[k]
        st.chosen[st.n_chosen] = e
        st.n_chosen += 1
        _hs3_rec(st, unhit & ~st.elem_hits[e], new_ban, cache)
        st.n_chosen -= 1
        new_ban |= (<u64> 1) << e


def min_hitting_set3(int m, triples):
    """Exact minimum hitting set for a family of 3-element subsets of range(m).

    Branches on an unhit triple with the fewest non-banned elements; bounds by
    a greedy element-disjoint sub-family (memoized per unhit mask).
    """
    cdef Hs3 st
    cdef int i, k, e, pick, pick_gain, gain, n_best
    cdef u64 all_mask, unhit
    tl = [tuple(t) for t in triples]
    st.t_count = len(tl)
    if st.t_count == 0:
        return ()
    st.m = m
    all_mask = ((<u64> 1) << st.t_count) - 1
    for e in range(m):
        st.elem_hits[e] = 0
    for i in range(st.t_count):
        st.elem_masks[i] = 0
        for k in range(3):
            e = tl[i][k]
            st.tri[i][k] = e
            st.elem_hits[e] |= (<u64> 1) << i
            st.elem_masks[i] |= (<u64> 1) << e

    # greedy upper bound / initial witness
    n_best = 0
    unhit = all_mask
    while unhit:
        pick = -1
        pick_gain = -1
        for e in range(m):
            gain = _popcount(st.elem_hits[e] & unhit)
            if gain > pick_gain:
                pick_gain = gain
                pick = e
        st.best[n_best] = pick
        n_best += 1
        unhit &= ~st.elem_hits[pick]
    st.best_size = n_best
    st.n_chosen = 0

    cache: dict = {}
    _hs3_rec(&st, all_mask, 0, cache)
    return tuple(sorted([st.best[i] for i in range(st.best_size)]))


# ---------------------------------------------------------------------------
# enumeration of small graphs up to isomorphism


def graph_classes(int order):
    """Minimum-edge-mask representative of every isomorphism class on
    ``order`` labeled vertices, ascending.  Edge (i, j), i < j, sits at the
    lexicographic bit position within the upper triangle.
    """
    if order < 1 or order > 7:
        raise ValueError("built-in enumeration supports orders 1..7")
    cdef int eidx[7][7]
    cdef int m = 0
    cdef int i, j, a, b, e, t, idx
    cdef unsigned int mask, r, out, lowbit
    for i in range(order):
        for j in range(i + 1, order):
            eidx[i][j] = m
            m += 1
    perms = list(permutations(range(order)))
    cdef int n_tables = len(perms)
    cdef int *tables = <int *> malloc(n_tables * m * sizeof(int))
    if tables == NULL:
        raise MemoryError()
    cdef unsigned char *seen = <unsigned char *> calloc(1, (<size_t> 1) << m)
    if seen == NULL:
        free(tables)
        raise MemoryError()
    try:
        for t in range(n_tables):
            perm = perms[t]
            e = 0
            for i in range(order):
                for j in range(i + 1, order):
                    a = perm[i]
                    b = perm[j]
                    if a > b:
                        a, b = b, a
                    tables[t * m + e] = eidx[a][b]
                    e += 1
        reps = []
        for mask in range(<unsigned int> 1 << m):
            if seen[mask]:
                continue
            reps.append(<object> <long> mask)
            for t in range(n_tables):
                r = mask
                out = 0
                while r:
                    lowbit = r & (~r + 1)
                    idx = 0
                    while not (lowbit & 1):
                        lowbit >>= 1
                        idx += 1
                    out |= (<unsigned int> 1) << tables[t * m + idx]
                    r &= r - 1
                seen[out] = 1
        return reps
    finally:
        free(tables)
        free(seen)
