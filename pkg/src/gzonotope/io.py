"""Graph text/JSON formats.

Text: a header line ``n m`` followed by ``m`` lines ``i j`` (1-indexed).
Blank lines and ``#`` comments are ignored.  JSON: ``{"n": 4, "edges": [[1, 2], ...]}``.
"""

from __future__ import annotations

import json

from .errors import ValidationError
from .graph import Graph, make_graph


class ParseError(ValidationError):
    pass


def parse_graph_text(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("empty graph input")
    lineno, header = rows[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(f"line {lineno}: expected header 'n m', got {header!r}") from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"line {lineno}: header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        try:
            a, b = (int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"line {lineno}: expected edge 'i j', got {line!r}") from None
        edges.append((a, b))
    return make_graph(n, edges)


def parse_graph_json(data) -> Graph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON graph: {exc}") from None
    try:
        return make_graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ParseError(f"JSON graph needs 'n' and 'edges' of pairs: {exc}") from None


def parse_graph(text: str) -> Graph:
    """Dispatch on content: a leading ``{`` means JSON."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def parse_inline_edges(n: int, spec: str) -> Graph:
    """``"1-2,1-3 2-3"`` style edge lists."""
    edges = []
    for tok in spec.replace(",", " ").split():
        try:
            a, b = (int(x) for x in tok.split("-"))
        except ValueError:
            raise ParseError(f"bad inline edge {tok!r}; expected 'i-j'") from None
        edges.append((a, b))
    return make_graph(n, edges)
