"""Reading and writing graphs as CSV edge lists or JSON.

CSV: one edge per row, ``u,v,line[,length]`` (length defaults to 1).
Lines starting with ``#`` are comments; the comment ``# nodes: N`` fixes the
node count, otherwise it is one more than the largest endpoint.

JSON: ``{"nodes": n, "edges": [[u, v, "line", length], ...]}``.
"""
from __future__ import annotations

import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .core import ColoredGraph, Length, build_graph
from .errors import GraphError, ParseError

_NODES_DIRECTIVE = re.compile(r"#\s*nodes\s*[:=]\s*(\d+)\s*$")


def _format_length(x: Length) -> str:
    return str(x)


def _parse_length(text: str, lineno: int | None) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad length {text!r}", lineno) from None


def _parse_node(text: str, lineno: int | None) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"bad node id {text!r}", lineno) from None


def parse_csv(text: str) -> ColoredGraph:
    node_count = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            match = _NODES_DIRECTIVE.match(stripped)
            if match:
                node_count = int(match.group(1))
            continue
        row = next(csv.reader([line]))
        if len(row) not in (3, 4):
            raise ParseError(f"expected u,v,line[,length], got {len(row)} fields", lineno)
        u = _parse_node(row[0], lineno)
        v = _parse_node(row[1], lineno)
        length = _parse_length(row[3], lineno) if len(row) == 4 else 1
        edges.append(((u, v, length, row[2].strip()), lineno))
    if node_count is None:
        node_count = 1 + max((max(u, v) for (u, v, _, _), _ in edges), default=0)
    return _build_with_lines(node_count, edges)


def _build_with_lines(node_count, edges) -> ColoredGraph:
    # Rebuild edge by edge on failure so the error carries a line number.
    try:
        return build_graph(node_count, [e for e, _ in edges])
    except GraphError as exc:
        for i in range(len(edges)):
            try:
                build_graph(node_count, [e for e, _ in edges[: i + 1]])
            except GraphError:
                raise ParseError(str(exc), edges[i][1]) from exc
        raise ParseError(str(exc)) from exc


def format_csv(g: ColoredGraph) -> str:
    buf = io.StringIO()
    buf.write(f"# nodes: {g.n}\n")
    writer = csv.writer(buf, lineterminator="\n")
    for u, v, length, name in g.edge_list():
        row = [u, v, name]
        if length != 1:
            row.append(_format_length(length))
        writer.writerow(row)
    return buf.getvalue()


def parse_json(text: str) -> ColoredGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or "nodes" not in data or "edges" not in data:
        raise ParseError('expected an object with "nodes" and "edges"')
    edges = []
    for i, raw in enumerate(data["edges"]):
        if not isinstance(raw, list) or len(raw) not in (3, 4):
            raise ParseError(f"edge #{i}: expected [u, v, line, length?]")
        u, v, name = raw[:3]
        length = raw[3] if len(raw) == 4 else 1
        if isinstance(length, float):
            length = repr(length)
        edges.append(((u, v, Fraction(length), str(name)), None))
    try:
        return build_graph(int(data["nodes"]), [e for e, _ in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def format_json(g: ColoredGraph) -> str:
    edges = []
    for u, v, length, name in g.edge_list():
        edges.append([u, v, name, length if isinstance(length, int) else str(length)])
    return json.dumps({"nodes": g.n, "edges": edges}, ensure_ascii=False) + "\n"


def parse_graph(text: str) -> ColoredGraph:
    """Parse either format, deciding by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_csv(text)


def read_text(path: str | Path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def load_graph(path: str | Path) -> ColoredGraph:
    return parse_graph(read_text(path))
