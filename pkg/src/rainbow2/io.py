"""Plain-text edge-list and colouring documents.

Edge list::

    # comment
    n m
    u v        (m lines, 0-based ids)

Colouring::

    n m k
    u v c      (m lines, 1 <= c <= k)

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from .errors import InvalidGraph, ParseError
from .graph import Graph, build_graph
from .verify import EdgeColoring


def _rows(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(lineno: int, fields: list[str], count: int) -> list[int]:
    if len(fields) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {len(fields)}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {' '.join(fields)!r}") from None


def _header_and_body(text: str, width: int, body_width: int):
    rows = list(_rows(text))
    if not rows:
        raise ParseError("empty document")
    header = _ints(*rows[0], width)
    if min(header) < 0:
        raise ParseError("negative count in header")
    body = [_ints(lineno, f, body_width) for lineno, f in rows[1:]]
    if len(body) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(body)}")
    return header, body


def parse_edge_list(text: str) -> Graph:
    (n, _), body = _header_and_body(text, 2, 2)
    try:
        return build_graph(n, body)
    except InvalidGraph as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[int, EdgeColoring]:
    """Return ``(n, colouring)``; matching it to a graph is the caller's job."""
    (n, _, k), body = _header_and_body(text, 3, 3)
    colors = {}
    for a, b, col in body:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise ParseError(f"bad edge ({a}, {b}) for n={n}")
        if not 1 <= col <= k:
            raise ParseError(f"colour {col} outside 1..{k}")
        key = (min(a, b), max(a, b))
        if key in colors:
            raise ParseError(f"edge {key} coloured twice")
        colors[key] = col
    return n, EdgeColoring(colors, k)


def format_coloring(g: Graph, c: EdgeColoring) -> str:
    lines = [f"{g.n} {g.m} {c.k}"] + [f"{a} {b} {c.color(a, b)}" for a, b in g.edges]
    return "\n".join(lines) + "\n"
