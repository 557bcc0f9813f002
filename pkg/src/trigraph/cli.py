"""Command-line interface: build graphs, inspect triangle graphs, classify,
reduce, enumerate forbidden families, compute packing numbers, and run the
corpus survey."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .classify import (
    characterize_cycle,
    classify_png_cycle,
    tgraph_class,
    tgraph_cn_free,
)
from .formats import (
    ParseError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graph6_file,
    tgraph_to_dot,
)
from .generators import enumerate_small_graphs, forbidden_family, make_named
from .graph import Graph
from .packing import tuza_report
from .survey import ALL_CHECKS, run_survey
from .tgraph import build_triangle_graph
from .transforms import TransformLog, replay


def parse_graph(text: str, fmt: str) -> Graph:
    """Parse one graph from text in the named format ('edge-list' or
    'graph6'); 'auto' tries graph6 first, then edge-list."""
    if fmt == "edge-list":
        return parse_edge_list(text)[0]
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "auto":
        stripped = text.strip()
        if stripped and "\n" not in stripped and " " not in stripped:
            try:
                return parse_graph6(stripped)
            except ParseError:
                pass
        return parse_edge_list(text)[0]
    raise ValueError(f"unknown format {fmt!r}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit_graph(g: Graph, as_graph6: bool) -> str:
    return emit_graph6(g) + "\n" if as_graph6 else emit_edge_list(g)


def _edge_words(edges) -> str:
    return ", ".join(f"{u}-{v}" for u, v in edges) if edges else "(none)"


# ---------------------------------------------------------------------------
# verb handlers


def _cmd_generate(args) -> int:
    g = make_named(args.family, *args.params)
    sys.stdout.write(_emit_graph(g, args.graph6))
    return 0


def _cmd_tgraph(args) -> int:
    g = parse_graph(_read_input(args.input), args.input_format)
    tg = build_triangle_graph(g)
    if args.dot:
        sys.stdout.write(tgraph_to_dot(tg))
    elif args.json:
        doc = {
            "order": tg.derived.order,
            "triangles": [list(t.vertices) for t in tg.triangles],
            "edges": [list(e) for e in tg.derived.edges()],
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for i, t in enumerate(tg.triangles):
            sys.stdout.write(f"# t{i} = {t.vertices[0]},{t.vertices[1]},{t.vertices[2]}\n")
        sys.stdout.write(emit_edge_list(tg.derived))
    return 0


def _cycle_dict(cert) -> dict:
    return {
        "is_cycle": cert.is_cycle,
        "length": cert.length,
        "reason": cert.reason,
        "hypothesis_ok": cert.hypothesis_ok,
        "hypothesis_reason": cert.hypothesis_reason,
        "case": cert.case,
        "base": cert.base,
        "log": cert.reduction.to_text() if cert.reduction else None,
        "splits": cert.splits,
        "odd_hole": cert.odd_hole,
    }


def _verdict_dict(v) -> dict:
    return {
        "value": v.value,
        "direct": v.direct,
        "characterization": v.characterization,
        "agree": v.agree,
        "direct_witness": list(v.direct_witness) if v.direct_witness else None,
        "note": v.note,
    }


def _cmd_classify(args) -> int:
    g = parse_graph(_read_input(args.input), args.input_format)
    wanted = [k for k in ("cycle", "tree", "chordal", "perfect") if getattr(args, k)]
    if not wanted and args.cn_free is None:
        wanted = ["cycle", "tree", "chordal", "perfect"]
    doc: dict = {}
    lines: list[str] = []

    if "cycle" in wanted:
        cert = characterize_cycle(g)
        doc["cycle"] = _cycle_dict(cert)
        if cert.is_cycle:
            detail = f"length {cert.length}"
            if cert.case:
                detail += f", case {cert.case}, base {cert.base}, {cert.splits} split(s)"
            if not cert.hypothesis_ok:
                detail += f", hypothesis violated ({cert.hypothesis_reason})"
            if cert.odd_hole:
                detail += ", odd hole"
            lines.append(f"cycle: yes ({detail})")
        else:
            lines.append(f"cycle: no ({cert.reason})")

    if any(k in wanted for k in ("tree", "chordal", "perfect")):
        rep = tgraph_class(g)
        for key in ("tree", "chordal", "perfect"):
            if key not in wanted:
                continue
            v = getattr(rep, key)
            doc[key] = _verdict_dict(v)
            if args.route == "direct":
                lines.append(f"{key}: {'yes' if v.direct else 'no'} (direct)")
            elif args.route == "forbidden":
                lines.append(
                    f"{key}: {'yes' if v.characterization else 'no'} (forbidden-subgraph)"
                )
            else:
                agree = "agree" if v.agree else "DISAGREE"
                lines.append(
                    f"{key}: {'yes' if v.value else 'no'} "
                    f"(direct {v.direct}, forbidden-subgraph {v.characterization}, {agree})"
                )

    if args.cn_free is not None:
        r = tgraph_cn_free(g, args.cn_free)
        doc[f"c{r.n}_free"] = {
            "free": r.free,
            "direct_free": r.direct_free,
            "direct_witness": list(r.direct_witness) if r.direct_witness else None,
            "member_free": r.member_free,
            "agree": r.agree,
        }
        agree = "agree" if r.agree else "DISAGREE"
        lines.append(
            f"C_{r.n}-free: {'yes' if r.free else 'no'} "
            f"(direct {r.direct_free}, forbidden-subgraph {r.member_free}, {agree})"
        )

    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_reduce(args) -> int:
    g = parse_graph(_read_input(args.input), args.input_format)
    cert = characterize_cycle(g)
    if not cert.is_cycle or cert.reduction is None:
        reason = cert.reason or cert.hypothesis_reason or "not reducible"
        sys.stderr.write(f"not a cycle triangle graph: {reason}\n")
        return 1
    base_text = _emit_graph(cert.base_graph, args.graph6)
    log_text = cert.reduction.to_text()
    if args.base_out:
        with open(args.base_out, "w", encoding="utf-8") as fh:
            fh.write(base_text)
    if args.log_out:
        with open(args.log_out, "w", encoding="utf-8") as fh:
            fh.write(log_text)
    sys.stdout.write(f"# base: {cert.base} (case {cert.case}), T cycle length {cert.length}\n")
    if not args.base_out:
        sys.stdout.write(base_text)
    if not args.log_out:
        sys.stdout.write("# log\n")
        sys.stdout.write(log_text)
    return 0


def _cmd_forbidden(args) -> int:
    fam = forbidden_family(args.n, args.max_host)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        manifest = []
        for k, m in enumerate(fam.members):
            fname = f"member_{k:03d}.txt"
            with open(os.path.join(args.out_dir, fname), "w", encoding="utf-8") as fh:
                fh.write(emit_edge_list(m.graph))
            manifest.append(
                f"{fname} base={m.base} splits={m.splits} sticks={m.sticks} "
                f"vertices={m.graph.order} edges={m.graph.edge_count}"
            )
        with open(os.path.join(args.out_dir, "manifest.txt"), "w", encoding="utf-8") as fh:
            fh.write("\n".join(manifest) + "\n")
        sys.stdout.write(f"{len(fam.members)} member(s) written to {args.out_dir}\n")
    else:
        for m in fam.members:
            sys.stdout.write(
                f"{emit_graph6(m.graph)} base={m.base} splits={m.splits} "
                f"sticks={m.sticks}\n"
            )
    return 0


def _cmd_tuza(args) -> int:
    g = parse_graph(_read_input(args.input), args.input_format)
    rep = tuza_report(g)
    if args.json:
        sys.stdout.write(json.dumps(rep.to_dict(), indent=2) + "\n")
        return 0
    lines = [
        f"nu = {rep.nu} (triangles {', '.join(map(str, rep.packing_witness)) or '(none)'})",
        f"tau = {rep.tau} (edges {_edge_words(rep.transversal_witness)})",
        f"theta = {rep.theta}",
        f"T perfect: {'yes' if rep.tgraph_perfect else 'no'}",
        f"constructive transversal: {_edge_words(rep.constructive_transversal)} "
        f"(size {len(rep.constructive_transversal)})",
        f"tau <= 2 nu: {'yes' if rep.bound_2x else 'no'}; "
        f"tau == nu: {'yes' if rep.equality else 'no'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_survey(args) -> int:
    if args.graph6_file:
        graphs = parse_graph6_file(_read_input(args.graph6_file))
    else:
        graphs = list(
            enumerate_small_graphs(args.max_order, connected_only=not args.all)
        )
    checks = tuple(args.checks.split(",")) if args.checks else ALL_CHECKS
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        sys.stderr.write(f"unknown checks: {', '.join(unknown)}\n")
        return 2
    report = run_survey(graphs, checks, jobs=args.jobs)
    sys.stdout.write(report.text)
    return 0 if report.ok else 1


def _cmd_replay(args) -> int:
    g = parse_graph(_read_input(args.input), args.input_format)
    steps = TransformLog.parse_steps(_read_input(args.log))
    result = replay(g, steps)
    sys.stdout.write(_emit_graph(result, args.graph6))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="graph file (edge list or graph6), '-' for stdin")
    p.add_argument(
        "--input-format",
        choices=("auto", "edge-list", "graph6"),
        default="auto",
    )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="trigraph",
        description="Triangle-graph toolkit: shapes, reductions, forbidden "
        "families, and packing/covering numbers.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="emit a named graph")
    p.add_argument("family", help="e.g. K, C, P, W, cycle-power, complete-minus, S")
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--graph6", action="store_true", help="emit graph6 instead of an edge list")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("tgraph", help="build the triangle graph")
    _add_input(p)
    p.add_argument("--dot", action="store_true", help="emit DOT with triangle labels")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tgraph)

    p = sub.add_parser("classify", help="cycle / tree / chordal / perfect verdicts")
    _add_input(p)
    p.add_argument("--cycle", action="store_true")
    p.add_argument("--tree", action="store_true")
    p.add_argument("--chordal", action="store_true")
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--cn-free", type=int, metavar="N", default=None)
    p.add_argument("--route", choices=("direct", "forbidden", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("reduce", help="reduce to an irreducible base with a log")
    _add_input(p)
    p.add_argument("--graph6", action="store_true")
    p.add_argument("--base-out", metavar="FILE", default=None)
    p.add_argument("--log-out", metavar="FILE", default=None)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("forbidden", help="forbidden family for cycle length n")
    p.add_argument("n", type=int)
    p.add_argument("--max-host", type=int, default=12, metavar="V")
    p.add_argument("--out-dir", metavar="DIR", default=None)
    p.set_defaults(fn=_cmd_forbidden)

    p = sub.add_parser("tuza", help="packing and covering numbers")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tuza)

    p = sub.add_parser("survey", help="run invariant checks over a corpus")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.add_argument("--graph6", dest="graph6_file", metavar="FILE", default=None)
    p.add_argument("--checks", default=None, help="comma-separated subset of: " + ",".join(ALL_CHECKS))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_survey)

    p = sub.add_parser("replay", help="apply a transform log to a graph")
    _add_input(p)
    p.add_argument("log", help="file of log steps, '-' for stdin")
    p.add_argument("--graph6", action="store_true")
    p.set_defaults(fn=_cmd_replay)

    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
