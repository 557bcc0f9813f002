"""Graph serialization: whitespace edge lists, graph6, and DOT export of
triangle graphs."""

from __future__ import annotations

from typing import Optional

from .graph import Graph
from .tgraph import TriangleGraph


class ParseError(ValueError):
    """Malformed graph input; carries the 1-based line (or byte) position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# edge list


def parse_edge_list(text: str) -> tuple[Graph, dict[str, int]]:
    """One edge per line as two whitespace-separated tokens; '#' starts a
    comment; blank lines are skipped; a single token on a line declares an
    isolated vertex.  Tokens map to dense labels in first-appearance order;
    the map is returned alongside the graph."""
    names: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def label(tok: str) -> int:
        if tok not in names:
            names[tok] = len(names)
        return names[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            label(tokens[0])
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
        u, v = label(tokens[0]), label(tokens[1])
        if u == v:
            raise ParseError(f"self-loop on {tokens[0]!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"repeated edge {tokens[0]} {tokens[1]}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(len(names), edges), names


def emit_edge_list(g: Graph, names: Optional[dict[str, int]] = None) -> str:
    """Inverse of parse_edge_list; isolated vertices become single-token
    lines so the round trip preserves the order."""
    token = {v: k for k, v in (names or {}).items()}
    word = lambda v: token.get(v, str(v))
    lines = [f"{word(u)} {word(v)}" for u, v in g.edges()]
    lines += [word(v) for v in range(g.order) if g.degree(v) == 0]
    return "\n".join(lines) + "\n" if lines else ""


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(line: str) -> Graph:
    """Standard graph6 encoding, single-byte order field (up to 62 vertices)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", 1)
    data = [ord(c) - 63 for c in s]
    for pos, val in enumerate(data, start=1):
        if not 0 <= val <= 63:
            raise ParseError(f"byte {s[pos - 1]!r} outside graph6 range", pos)
    n = data[0]
    if n == 63:
        raise ParseError("orders above 62 are not supported", 1)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise ParseError(
            f"order {n} needs {need} payload bytes, got {len(data) - 1}", len(s)
        )
    bits = []
    for val in data[1:]:
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.order > 62:
        raise ValueError("orders above 62 are not supported")
    bits = []
    for j in range(1, g.order):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.order)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph6_file(text: str) -> list[Graph]:
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", lineno) from exc
    return graphs


# ---------------------------------------------------------------------------
# DOT


def tgraph_to_dot(tg: TriangleGraph, name: str = "T") -> str:
    """DOT rendering of T(G); each vertex is labeled with its triangle's
    sorted vertex triple so witnesses can be read off the picture."""
    lines = [f"graph {name} {{"]
    for i, tri in enumerate(tg.triangles):
        label = ",".join(str(v) for v in tri.vertices)
        lines.append(f'  t{i} [label="{label}"];')
    for i, j in tg.derived.edges():
        lines.append(f"  t{i} -- t{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
