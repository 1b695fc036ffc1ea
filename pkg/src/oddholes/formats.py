"""Graph parsing and serialization: graph6, DIMACS edge format, JSON.

graph6 is the primary corpus format (bit-exact per the published format
description: N(n) size header, 6-bit groups, column-major upper triangle).
DIMACS ("p edge n m" / "e u v", 1-based) and a JSON edge list
{"n": int, "edges": [[u, v], ...]} are accepted as alternatives.
"""

from __future__ import annotations

import json

from .errors import MalformedInput
from .graph import Graph, from_edge_list

_G6_HEADER = ">>graph6<<"


def _g6_size(line: str, pos: int) -> tuple[int, int]:
    """Decode the N(n) size field starting at pos; return (n, next_pos)."""
    if pos >= len(line):
        raise MalformedInput("empty graph6 record")
    c = ord(line[pos])
    if c == 126:
        if pos + 3 < len(line) and ord(line[pos + 1]) == 126:
            chars = line[pos + 2 : pos + 8]
            if len(chars) < 6:
                raise MalformedInput("truncated graph6 size field")
            n = 0
            for ch in chars:
                n = (n << 6) | _g6_val(ch)
            return n, pos + 8
        chars = line[pos + 1 : pos + 4]
        if len(chars) < 3:
            raise MalformedInput("truncated graph6 size field")
        n = 0
        for ch in chars:
            n = (n << 6) | _g6_val(ch)
        return n, pos + 4
    if not 63 <= c <= 125:
        raise MalformedInput(f"invalid graph6 size character {line[pos]!r}")
    return c - 63, pos + 1


def _g6_val(ch: str) -> int:
    c = ord(ch)
    if not 63 <= c <= 126:
        raise MalformedInput(f"invalid graph6 character {ch!r}")
    return c - 63


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record into a Graph."""
    line = line.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER) :]
    if not line:
        raise MalformedInput("empty graph6 record")
    n, pos = _g6_size(line, 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < nchars:
        raise MalformedInput(
            f"truncated graph6 bit stream: need {nchars} chars, got {len(body)}"
        )
    if len(body) > nchars:
        raise MalformedInput("trailing characters after graph6 record")
    bits = []
    for ch in body:
        v = _g6_val(ch)
        bits.extend((v >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def write_graph6(G: Graph) -> str:
    """Encode a Graph as a graph6 record (no trailing newline)."""
    n = G.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = [chr(126)]
        out.extend(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        out = [chr(126), chr(126)]
        out.extend(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS edge-format document (one graph per file)."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedInput(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise MalformedInput(f"line {lineno}: bad problem line {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise MalformedInput(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise MalformedInput(f"line {lineno}: bad edge line {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            pairs.append((u, v))
        else:
            raise MalformedInput(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise MalformedInput("missing DIMACS problem line")
    return from_edge_list(n, pairs)


def write_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(G.edges))
    return "\n".join(lines) + "\n"


def parse_json_graph(obj) -> Graph:
    """Build a Graph from a decoded {"n": ..., "edges": [...]} object."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise MalformedInput('JSON graph must be {"n": int, "edges": [[u,v],...]}')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise MalformedInput("JSON graph fields have wrong types")
    return from_edge_list(n, [tuple(e) for e in edges])


def write_json_graph(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in sorted(G.edges)]})


def detect_format(text: str) -> str:
    """Guess graph6 / dimacs / json from document content."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line[0] in "{[":
            return "json"
        if line.split()[0] in ("c", "p", "e"):
            return "dimacs"
        return "graph6"
    return "graph6"


def iter_graphs(text: str, fmt: str | None = None):
    """Yield (line_number, Graph) records from a document.

    graph6 carries one graph per line; DIMACS one per document; JSON either
    a single object or a list of objects.
    """
    fmt = fmt or detect_format(text)
    if fmt == "graph6":
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield lineno, parse_graph6(line)
            except MalformedInput as exc:
                raise MalformedInput(f"line {lineno}: {exc}") from exc
    elif fmt == "dimacs":
        yield 1, parse_dimacs(text)
    elif fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"bad JSON: {exc}") from exc
        if isinstance(obj, list):
            for i, item in enumerate(obj, start=1):
                yield i, parse_json_graph(item)
        else:
            yield 1, parse_json_graph(obj)
    else:
        raise MalformedInput(f"unknown format {fmt!r}")
