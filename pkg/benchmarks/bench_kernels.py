"""Timing comparison of the compiled and pure kernel backends.

Run:  python benchmarks/bench_kernels.py
"""

import time

from trigraph.kernels import _pykernels
from trigraph.graph import Graph
from trigraph.tgraph import build_triangle_graph
from trigraph.generators import complete, cycle_power, enumerate_small_graphs, wheel

try:
    from trigraph.kernels import _ckernels
except ImportError:
    _ckernels = None


def adj_of(g: Graph):
    return g.order, g.adj


def workloads():
    order6 = [g for g in enumerate_small_graphs(6)]
    t_k7 = build_triangle_graph(complete(7))
    edges = complete(7).edges()
    eidx = {e: i for i, e in enumerate(edges)}
    triples = [
        tuple(sorted(eidx[e] for e in t.edges)) for t in t_k7.triangles
    ]
    c12 = cycle_power(12, 2)
    t_c12 = build_triangle_graph(c12).derived
    w6 = wheel(6)

    yield "canonical_labeling (156 order-6 graphs)", lambda k: [
        k.canonical_labeling(g.order, g.adj) for g in order6
    ]
    yield "find_chordless_cycle (odd hole in T(C_12^2))", lambda k: [
        k.find_chordless_cycle(t_c12.order, t_c12.adj, 5, t_c12.order, True)
        for _ in range(200)
    ]
    yield "find_embedding (W_6 into order-6 graphs)", lambda k: [
        k.find_embedding(w6.order, w6.adj, g.order, g.adj, False) for g in order6
    ]
    yield "max_independent_set (T(K_7), 35 vertices) x100", lambda k: [
        k.max_independent_set(t_k7.derived.order, t_k7.derived.adj)
        for _ in range(100)
    ]
    yield "min_hitting_set3 (triangles of K_7) x100", lambda k: [
        k.min_hitting_set3(len(edges), triples) for _ in range(100)
    ]
    yield "graph_classes(7)", lambda k: k.graph_classes(7)


def main():
    if _ckernels is None:
        print("compiled backend unavailable; nothing to compare")
        return
    header = f"{'workload':<50} {'pure':>9} {'cython':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in workloads():
        t0 = time.perf_counter()
        ref = fn(_pykernels)
        t1 = time.perf_counter()
        got = fn(_ckernels)
        t2 = time.perf_counter()
        assert got == ref, f"backend mismatch in {name}"
        pure_s, cy_s = t1 - t0, t2 - t1
        print(f"{name:<50} {pure_s:>8.3f}s {cy_s:>8.3f}s {pure_s / cy_s:>7.1f}x")
    print("all workloads returned identical results on both backends")


if __name__ == "__main__":
    main()
