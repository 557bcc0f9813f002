"""Backend parity: the compiled kernels must return byte-identical results to
the pure-Python ones, including tie-breaking."""

import os
import random
import subprocess
import sys

import pytest

import trigraph.kernels as kernels
from trigraph.kernels import _pykernels as pyk

cyk = pytest.importorskip(
    "trigraph.kernels._ckernels", reason="compiled kernels not built"
)


def random_adj(rng, n, p):
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return tuple(masks)


def cases(seed, count, max_n):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_n)
        yield n, random_adj(rng, n, rng.choice((0.15, 0.3, 0.5, 0.8)))


def test_canonical_labeling_parity():
    for n, adj in cases(1, 300, 10):
        assert pyk.canonical_labeling(n, adj) == cyk.canonical_labeling(n, adj)


def test_find_chordless_cycle_parity():
    for n, adj in cases(2, 300, 10):
        for args in ((4, n, False), (5, n, True), (6, 6, False)):
            assert pyk.find_chordless_cycle(n, adj, *args) == cyk.find_chordless_cycle(
                n, adj, *args
            )


def test_find_embedding_parity():
    rng = random.Random(3)
    for _ in range(200):
        hn = rng.randint(1, 9)
        hadj = random_adj(rng, hn, 0.5)
        pn = rng.randint(0, min(hn, 5))
        padj = random_adj(rng, pn, 0.5)
        for induced in (False, True):
            assert pyk.find_embedding(pn, padj, hn, hadj, induced) == cyk.find_embedding(
                pn, padj, hn, hadj, induced
            )


def test_max_independent_set_parity():
    for n, adj in cases(4, 300, 12):
        assert pyk.max_independent_set(n, adj) == cyk.max_independent_set(n, adj)


def test_min_hitting_set3_parity():
    rng = random.Random(5)
    for _ in range(200):
        m = rng.randint(3, 14)
        count = rng.randint(0, 12)
        triples = [tuple(sorted(rng.sample(range(m), 3))) for _ in range(count)]
        assert pyk.min_hitting_set3(m, triples) == cyk.min_hitting_set3(m, triples)


def test_graph_classes_parity():
    for order in range(1, 7):
        assert list(pyk.graph_classes(order)) == list(cyk.graph_classes(order))


def test_dispatcher_uses_the_compiled_backend_here():
    assert kernels.BACKEND == "cython"
    # small inputs go through the compiled path and match the pure one
    adj = (0b0110, 0b1001, 0b1001, 0b0110)
    assert kernels.canonical_labeling(4, adj) == pyk.canonical_labeling(4, adj)


def test_pure_env_override():
    code = "import trigraph.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, TRIGRAPH_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "python"


def test_hitting_set_large_element_count_routes_to_pure():
    # 64+ elements exceed the compiled fixed-width path; dispatch must not break
    triples = [(i, i + 1, i + 2) for i in range(0, 90, 3)]
    got = kernels.min_hitting_set3(92, triples)
    assert got == pyk.min_hitting_set3(92, triples)
    assert len(got) == len(triples)  # the triples are disjoint
