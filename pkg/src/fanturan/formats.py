"""Plain-text formats.

``.uhg``: first non-comment line ``n r m``, then ``m`` lines of ``r``
vertex indices. ``.g``: ``n m`` then ``m`` lines ``u v``. Lines starting
with ``#`` and blank lines are ignored. Emitters write edges in sorted order
so that ``emit(parse(x))`` is canonical.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator

from .hypercore import Graph, Hypergraph, HypergraphError


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_uhg(text: str) -> Hypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing header 'n r m'") from None
    if len(header) != 3:
        raise ParseError("header must be 'n r m'", lineno)
    n, r, m = _ints(header, lineno)
    if n < 0 or r < 1 or m < 0:
        raise ParseError(f"invalid header values n={n} r={r} m={m}", lineno)
    h = Hypergraph(n, r)
    count = 0
    for lineno, tokens in lines:
        if count == m:
            raise ParseError(f"more than the declared {m} hyperedges", lineno)
        if len(tokens) != r:
            raise ParseError(f"expected {r} vertices, got {len(tokens)}", lineno)
        verts = _ints(tokens, lineno)
        try:
            added = h.add(verts)
        except HypergraphError as exc:
            raise ParseError(str(exc), lineno) from None
        if not added:
            raise ParseError(f"duplicate hyperedge {tuple(sorted(verts))}", lineno)
        count += 1
    if count != m:
        raise ParseError(f"declared {m} hyperedges, found {count}")
    return h


def emit_uhg(h: Hypergraph) -> str:
    out = [f"{h.n} {h.r} {len(h)}"]
    out.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing header 'n m'") from None
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = _ints(header, lineno)
    if n < 0 or m < 0:
        raise ParseError(f"invalid header values n={n} m={m}", lineno)
    g = Graph(n)
    count = 0
    for lineno, tokens in lines:
        if count == m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        if len(tokens) != 2:
            raise ParseError(f"expected 2 vertices, got {len(tokens)}", lineno)
        u, v = _ints(tokens, lineno)
        try:
            added = g.add_edge(u, v)
        except HypergraphError as exc:
            raise ParseError(str(exc), lineno) from None
        if not added:
            raise ParseError(f"duplicate edge ({min(u, v)}, {max(u, v)})", lineno)
        count += 1
    if count != m:
        raise ParseError(f"declared {m} edges, found {count}")
    return g


def emit_graph(g: Graph) -> str:
    out = [f"{g.n} {len(g)}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_uhg(path: str | os.PathLike) -> Hypergraph:
    with open(path) as fh:
        return parse_uhg(fh.read())


def write_uhg(h: Hypergraph, path: str | os.PathLike, comments: Iterable[str] = ()) -> None:
    with open(path, "w") as fh:
        for c in comments:
            fh.write(f"# {c}\n")
        fh.write(emit_uhg(h))


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(emit_graph(g))
