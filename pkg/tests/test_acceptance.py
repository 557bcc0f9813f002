"""Acceptance suite: one test per shipped guarantee, one printed verdict line
per criterion (see the terminal summary section)."""

import itertools
import random
from contextlib import contextmanager
from functools import lru_cache

import conftest

from trigraph.classify import characterize_cycle, tgraph_is_cycle_direct
from trigraph.cli import main
from trigraph.generators import (
    complete,
    complete_minus,
    cycle,
    cycle_power,
    enumerate_small_graphs,
    forbidden_family,
    supplementary,
    wheel,
)
from trigraph.graph import Graph, canonical_form, enumerate_triangles, is_isomorphic
from trigraph.packing import nu_delta, tau_delta
from trigraph.survey import run_survey
from trigraph.tgraph import build_triangle_graph
from trigraph.transforms import edge_split, reduce_to_irreducible, vertex_stick


@contextmanager
def criterion(num, desc):
    notes = []
    try:
        yield notes
    except BaseException:
        conftest.record_verdict(f"criterion {num}: FAIL - {desc}")
        raise
    conftest.record_verdict(
        "; ".join([f"criterion {num}: PASS - {desc}"] + notes)
    )


def iso(a, b):
    return bool(is_isomorphic(a, b))


def tgraph(g):
    return build_triangle_graph(g).derived


# -- criterion 1: named triangle-graph shapes -----------------------------------


def test_criterion_1_named_shapes():
    with criterion(1, "named triangle-graph shapes"):
        assert iso(tgraph(complete_minus(5, "K3")), cycle(3))
        assert iso(tgraph(wheel(4)), cycle(4))
        for n in range(7, 11):
            assert iso(tgraph(cycle_power(n, 2)), cycle(n))
        for letter in "ABCD":
            assert iso(tgraph(supplementary(letter)), cycle(8))
        assert iso(tgraph(complete(4)), complete(4))
        petersen = Graph(
            10,
            [(i, (i + 1) % 5) for i in range(5)]
            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            + [(i, 5 + i) for i in range(5)],
        )
        tk5 = tgraph(complete(5))
        anti = petersen.complement()
        assert anti.order == 10 and anti.edge_count == 30
        assert all(d == 6 for d in anti.degrees())
        assert iso(tk5, anti)


# -- criterion 2: forbidden-family sizes ------------------------------------------


def test_criterion_2_family_sizes():
    with criterion(2, "forbidden-family sizes and edge counts") as notes:
        fam3 = forbidden_family(3, 16).members
        assert len(fam3) == 2
        assert any(iso(m.graph, complete(4)) for m in fam3)
        assert any(iso(m.graph, complete_minus(5, "K3")) for m in fam3)

        fam4 = forbidden_family(4, 16).members
        assert len(fam4) == 1 and iso(fam4[0].graph, wheel(4))

        fam5 = forbidden_family(5, 16).members
        assert len(fam5) == 2
        assert any(iso(m.graph, wheel(5)) for m in fam5)
        assert any(iso(m.graph, complete(5)) for m in fam5)

        fam6 = forbidden_family(6, 16).members
        assert len(fam6) == 5

        sizes = []
        for n in range(3, 9):
            members = forbidden_family(n, 16).members
            sizes.append(len(members))
            for m in members:
                if iso(m.graph, complete_minus(5, "K3")):
                    assert m.graph.edge_count == 7
                else:
                    assert m.graph.edge_count == 2 * n
        notes.append(f"family sizes for n=3..8: {sizes}")


# -- criteria 3 and 4: corpus cross-checks ------------------------------------------


@lru_cache(maxsize=None)
def connected_corpus():
    return tuple(enumerate_small_graphs(7, connected_only=True))


def test_criterion_3_cn_freeness_cross_check():
    with criterion(3, "induced-C_n search in T agrees with forbidden families "
                      "on all connected graphs up to 7 vertices") as notes:
        corpus = connected_corpus()
        per_order = [sum(1 for g in corpus if g.order == n) for n in range(1, 8)]
        assert per_order == [1, 1, 2, 6, 21, 112, 853]
        rep = run_survey(corpus, checks=("cn-free",))
        assert rep.ok, "\n".join(rep.violations)
        notes.append(f"{len(corpus)} graphs, n in {{3,4,5,6}}, zero disagreements")


def test_criterion_4_class_verdicts_cross_check():
    with criterion(4, "tree/chordal/perfect verdicts agree across routes and "
                      "every T(G) avoids the join pattern") as notes:
        corpus = connected_corpus()
        rep = run_survey(corpus, checks=("classes", "pattern"))
        assert rep.ok, "\n".join(rep.violations)
        notes.append(f"{len(corpus)} graphs, zero disagreements")


# -- criteria 5 and 6: randomized round-trips ------------------------------------------


BASES = (
    ("W4", wheel(4)),
    ("C7^2", cycle_power(7, 2)),
    ("C8^2", cycle_power(8, 2)),
    ("C9^2", cycle_power(9, 2)),
    ("C10^2", cycle_power(10, 2)),
    ("S_A", supplementary("A")),
    ("S_B", supplementary("B")),
    ("S_C", supplementary("C")),
    ("S_D", supplementary("D")),
    ("K5-K3", complete_minus(5, "K3")),
)


def strict_split_candidates(g):
    out = []
    for x, y in g.edges():
        apexes = [z for z in range(g.order) if g.has_edge(x, z) and g.has_edge(y, z)]
        if len(apexes) != 1:
            continue
        z = apexes[0]
        side_x = sum(1 for t in range(g.order) if g.has_edge(x, t) and g.has_edge(z, t))
        side_y = sum(1 for t in range(g.order) if g.has_edge(y, t) and g.has_edge(z, t))
        if side_x >= 2 and side_y >= 2:
            out.append(((x, y), z))
    return out


def strong_stick_candidates(g):
    out = []
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if g.has_edge(u, v):
                continue
            d = g.distance(u, v)
            if d is None or d >= 4:
                out.append((u, v))
    return out


@lru_cache(maxsize=None)
def randomized_instances():
    """500 instances: a base plus up to 4 valid strict splits / strong sticks,
    with per-step evidence for the length/isomorphism invariants.  The op type
    is drawn first (coin flip when both types are available) because valid
    strong sticks are rare and would otherwise never be picked."""
    rng = random.Random(20260825)
    instances = []
    split_ok = []
    stick_ok = []
    for _ in range(500):
        name, base = BASES[rng.randrange(len(BASES))]
        base_len, _ = tgraph_is_cycle_direct(base)
        g = base
        splits = 0
        sticks = 0
        for _ in range(rng.randint(0, 4)):
            sp = strict_split_candidates(g)
            st = strong_stick_candidates(g)
            if sp and st:
                kind = "stick" if rng.random() < 0.5 else "split"
            elif sp:
                kind = "split"
            elif st:
                kind = "stick"
            else:
                break
            len_before, _ = tgraph_is_cycle_direct(g)
            t_before = tgraph(g)
            if kind == "split":
                e, z = sp[rng.randrange(len(sp))]
                g = edge_split(g, e, z, "strict").graph
                splits += 1
                len_after, _ = tgraph_is_cycle_direct(g)
                split_ok.append(len_after == len_before + 1)
            else:
                u, v = st[rng.randrange(len(st))]
                g = vertex_stick(g, u, v, "strong").graph
                sticks += 1
                stick_ok.append(iso(tgraph(g), t_before))
        instances.append((g, name, base_len, splits, sticks))
    return instances, tuple(split_ok), tuple(stick_ok)


def test_criterion_5_randomized_round_trips():
    with criterion(5, "500 randomized instances characterize with the "
                      "correct cycle length") as notes:
        instances, _, _ = randomized_instances()
        assert len(instances) == 500
        for g, name, base_len, splits, _ in instances:
            cert = characterize_cycle(g)
            assert cert.is_cycle and cert.hypothesis_ok, (name, splits)
            assert cert.length == base_len + splits, (name, cert.length)
            assert cert.base is not None
        total_splits = sum(i[3] for i in instances)
        total_sticks = sum(i[4] for i in instances)
        notes.append(f"{total_splits} splits and {total_sticks} sticks applied")

        # order-invariance probe: reported, not asserted
        diverged = {}
        for idx, (g, _, _, _, _) in enumerate(instances):
            bases = {}
            first, _ = reduce_to_irreducible(g)
            bases[canonical_form(first)] = first
            for trial in range(16):
                b, _ = reduce_to_irreducible(g, rng=random.Random(idx * 1000 + trial))
                bases.setdefault(canonical_form(b), b)
            if len(bases) != 1:
                names = tuple(sorted(characterize_cycle(b).base for b in bases.values()))
                diverged[idx] = names
        if diverged:
            patterns = sorted(set(diverged.values()))
            notes.append(
                f"NOTE: reduction order changed the base on {len(diverged)}/500 "
                f"instances ({' / '.join('<->'.join(p) for p in patterns)}, "
                f"e.g. instances {sorted(diverged)[:3]}); each order replays "
                f"cleanly, so this is logged as a finding against base "
                f"uniqueness, not a failure"
            )
        else:
            notes.append(
                "confluence probe: 500 instances x 16 shuffled reductions "
                "all reached a single base class"
            )


def test_criterion_6_per_step_invariants():
    with criterion(6, "each split adds one T-cycle vertex and each strong "
                      "stick preserves T up to isomorphism") as notes:
        _, split_ok, stick_ok = randomized_instances()
        assert split_ok and stick_ok, "the seed produced no ops of some kind"
        assert all(split_ok)
        assert all(stick_ok)
        notes.append(f"{len(split_ok)} split steps, {len(stick_ok)} stick steps")


# -- criterion 7: packing / covering over the full corpus ----------------------------


def brute_nu(g):
    tris = enumerate_triangles(g)
    for r in range(len(tris), 0, -1):
        for combo in itertools.combinations(tris, r):
            edges = [e for t in combo for e in t.edges]
            if len(edges) == len(set(edges)):
                return r
    return 0


def brute_tau(g):
    tris = enumerate_triangles(g)
    if not tris:
        return 0
    for r in range(g.edge_count + 1):
        for combo in itertools.combinations(g.edges(), r):
            if all(any(e in t for e in combo) for t in tris):
                return r
    raise AssertionError("unreachable")


def test_criterion_7_tuza_suite():
    with criterion(7, "packing/covering suite over all graphs up to "
                      "7 vertices") as notes:
        assert (nu_delta(complete(4))[0], tau_delta(complete(4))[0]) == (1, 2)
        assert (brute_nu(complete(4)), brute_tau(complete(4))) == (1, 2)
        assert (nu_delta(complete(5))[0], tau_delta(complete(5))[0]) == (2, 4)
        assert (brute_nu(complete(5)), brute_tau(complete(5))) == (2, 4)

        corpus = list(enumerate_small_graphs(7))
        assert len(corpus) == 1252
        rep = run_survey(corpus, checks=("tuza",))
        assert rep.ok, "\n".join(rep.violations)
        assert "naive alpha cross-checks: 1243" in rep.text
        line = next(l for l in rep.text.splitlines() if "tau=nu" in l)
        notes.append(line)


# -- criterion 8: determinism ----------------------------------------------------------


def test_criterion_8_survey_determinism(capsys):
    with criterion(8, "survey reports are byte-identical across --jobs") as notes:
        assert main(["survey", "--max-order", "6"]) == 0
        solo = capsys.readouterr().out
        assert main(["survey", "--max-order", "6", "--jobs", "4"]) == 0
        quad = capsys.readouterr().out
        assert solo == quad
        notes.append(f"{len(solo.splitlines())}-line report, jobs=1 vs jobs=4")
