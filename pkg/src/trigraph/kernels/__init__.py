"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``TRIGRAPH_PURE=1`` to force the pure backend.  Inputs too large for the
compiled fixed-width code paths (more than 63 vertices / 63 set elements)
route to the pure backend transparently.
"""

import os

from . import _pykernels as _py

_c = None
if not os.environ.get("TRIGRAPH_PURE"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"

_MAXN = 63


def canonical_labeling(n, adj):
    if _c is not None and n <= _MAXN:
        return _c.canonical_labeling(n, adj)
    return _py.canonical_labeling(n, adj)


def find_chordless_cycle(n, adj, min_len, max_len, odd_only):
    if _c is not None and n <= _MAXN:
        return _c.find_chordless_cycle(n, adj, min_len, max_len, odd_only)
    return _py.find_chordless_cycle(n, adj, min_len, max_len, odd_only)


def find_embedding(pn, padj, hn, hadj, induced):
    if _c is not None and pn <= _MAXN and hn <= _MAXN:
        return _c.find_embedding(pn, padj, hn, hadj, induced)
    return _py.find_embedding(pn, padj, hn, hadj, induced)


def max_independent_set(n, adj):
    if _c is not None and n <= _MAXN:
        return _c.max_independent_set(n, adj)
    return _py.max_independent_set(n, adj)


def min_hitting_set3(m, triples):
    if _c is not None and m <= _MAXN and len(triples) <= _MAXN:
        return _c.min_hitting_set3(m, triples)
    return _py.min_hitting_set3(m, triples)


def graph_classes(order):
    if _c is not None:
        return _c.graph_classes(order)
    return _py.graph_classes(order)
