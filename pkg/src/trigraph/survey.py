"""Corpus-wide verification harness: runs the dual-route classifiers, the
packing/covering bounds, and serialization round trips over a stream of
graphs, with a report that is byte-identical for any worker count."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .classify import (
    RouteDisagreement,
    characterize_cycle,
    tgraph_class,
    tgraph_cn_free,
    tgraph_is_cycle_direct,
    tgraph_pattern_free,
)
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph, find_induced_cycle, is_isomorphic
from .packing import BoundViolation, k4_subgraphs, tuza_report
from .tgraph import build_triangle_graph
from .transforms import replay

ALL_CHECKS = ("cycle", "cn-free", "classes", "pattern", "tuza", "roundtrip")

_OBS_KEYS = (
    "graphs",
    "cycle_tgraphs",
    "naive_alpha_checked",
    "equality_candidates",
    "equality_holds",
)


def naive_alpha(g: Graph) -> int:
    """Independence number by plain exclude-or-take-closed-neighborhood
    recursion; deliberately unrelated to the branch-and-bound solver."""

    @lru_cache(maxsize=None)
    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        without = rec(mask & ~(1 << v))
        with_v = 1 + rec(mask & ~(g.adj[v] | (1 << v)))
        return max(without, with_v)

    return rec((1 << g.order) - 1)


def check_graph(g: Graph, checks: tuple[str, ...]) -> tuple[list[str], dict[str, int]]:
    """All selected invariant checks for one graph; returns violation
    messages and observation counters."""
    bad: list[str] = []
    obs = dict.fromkeys(_OBS_KEYS, 0)
    obs["graphs"] = 1

    if "cycle" in checks:
        try:
            cert = characterize_cycle(g)
            if cert.is_cycle:
                obs["cycle_tgraphs"] = 1
            direct_n, _ = tgraph_is_cycle_direct(g)
            if cert.is_cycle != (direct_n is not None):
                bad.append("cycle certificate disagrees with the direct check")
            elif cert.is_cycle and cert.length != direct_n:
                bad.append(
                    f"cycle length mismatch: {cert.length} vs {direct_n}"
                )
            if "roundtrip" in checks and cert.reduction is not None:
                got = replay(g, cert.reduction.steps)
                if got != cert.base_graph:
                    bad.append("replaying the reduction log missed the base")
        except RouteDisagreement as exc:
            bad.append(f"cycle: {exc}")

    if "cn-free" in checks:
        for n in (3, 4, 5, 6):
            r = tgraph_cn_free(g, n)
            if not r.agree:
                bad.append(
                    f"C_{n}-freeness routes disagree: direct={r.direct_free} "
                    f"members={r.member_free}"
                )

    if "classes" in checks:
        rep = tgraph_class(g)
        for label, verdict in (
            ("tree", rep.tree),
            ("chordal", rep.chordal),
            ("perfect", rep.perfect),
        ):
            if not verdict.agree:
                bad.append(
                    f"{label} routes disagree: direct={verdict.direct} "
                    f"characterization={verdict.characterization}"
                )
        if rep.tree.value and not rep.chordal.value:
            bad.append("tree verdict without chordal verdict")
        if rep.chordal.value and not rep.perfect.value:
            bad.append("chordal verdict without perfect verdict")

    if "pattern" in checks:
        if not tgraph_pattern_free(g):
            bad.append("triangle graph contains the forbidden join pattern")

    if "tuza" in checks:
        try:
            rep = tuza_report(g)
            if rep.cover_fallback:
                bad.append("typed cliques missed a maximal clique of T")
            t = build_triangle_graph(g).derived
            if t.order <= 20:
                obs["naive_alpha_checked"] = 1
                if rep.nu != naive_alpha(t):
                    bad.append(
                        f"nu={rep.nu} but naive alpha(T)={naive_alpha(t)}"
                    )
            if t.order and not k4_subgraphs(g):
                if find_induced_cycle(t, parity="odd") is None:
                    obs["equality_candidates"] = 1
                    if rep.equality:
                        obs["equality_holds"] = 1
        except BoundViolation as exc:
            bad.append(f"tuza: {exc}")

    if "roundtrip" in checks:
        if parse_graph6(emit_graph6(g)) != g:
            bad.append("graph6 round trip changed the graph")
        back, _ = parse_edge_list(emit_edge_list(g))
        if not is_isomorphic(back, g):
            bad.append("edge-list round trip changed the graph")

    return bad, obs


def _worker(item: tuple[int, str, tuple[str, ...]]):
    idx, g6, checks = item
    bad, obs = check_graph(parse_graph6(g6), checks)
    return idx, bad, obs


@dataclass(frozen=True)
class SurveyReport:
    text: str
    violations: int

    @property
    def ok(self) -> bool:
        return self.violations == 0


def run_survey(graphs, checks=ALL_CHECKS, jobs: int = 1) -> SurveyReport:
    """Run the selected checks over every graph; the report text depends
    only on the corpus and the check selection, never on ``jobs``."""
    checks = tuple(c for c in ALL_CHECKS if c in checks)
    items = [(i, emit_graph6(g), checks) for i, g in enumerate(graphs)]
    results: list = [None] * len(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for idx, bad, obs in pool.map(_worker, items, chunksize=16):
                results[idx] = (bad, obs)
    else:
        for item in items:
            idx, bad, obs = _worker(item)
            results[idx] = (bad, obs)

    totals = dict.fromkeys(_OBS_KEYS, 0)
    lines = [
        f"corpus: {len(items)} graphs",
        "checks: " + (", ".join(checks) if checks else "none"),
    ]
    violations = 0
    for (idx, g6, _), (bad, obs) in zip(items, results):
        for key in _OBS_KEYS:
            totals[key] += obs[key]
        for msg in bad:
            violations += 1
            lines.append(f"FAIL {g6}: {msg}")
    lines.append(f"violations: {violations}")
    lines.append(f"cycle triangle graphs: {totals['cycle_tgraphs']}")
    lines.append(f"naive alpha cross-checks: {totals['naive_alpha_checked']}")
    lines.append(
        "observed tau=nu on K4-free hosts with odd-hole-free T: "
        f"{totals['equality_holds']}/{totals['equality_candidates']}"
    )
    lines.append("OK" if violations == 0 else "FAIL")
    return SurveyReport("\n".join(lines) + "\n", violations)
