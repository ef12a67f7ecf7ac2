"""Uniform hypergraphs and simple graphs on dense 0-based vertex sets.

Both containers have set semantics. A :class:`Hypergraph` keeps a pair index
(pair -> hyperedges containing it) up to date on every insertion and removal,
so heaviness and link-set queries never rescan the edge list.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterable, Iterator

Pair = tuple[int, int]
Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Invalid input to a hypergraph operation."""


class UnsupportedUniformityError(HypergraphError):
    """The operation is only defined for another uniformity."""


def pair(u: int, v: int) -> Pair:
    """Return the pair ``{u, v}`` stored as ``(min, max)``."""
    if u == v:
        raise HypergraphError(f"pair needs distinct vertices, got ({u}, {v})")
    return (u, v) if u < v else (v, u)


def subedges(e: Iterable[int], s: int) -> list[Edge]:
    """All ``s``-subsets of ``e`` in lexicographic order."""
    items = sorted(e)
    if s > len(items):
        raise HypergraphError(f"subset size {s} exceeds edge size {len(items)}")
    return list(combinations(items, s))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``center`` is an optional distinguished vertex (fans and stars use it).
    """

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (), center: int | None = None):
        if n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.center = center
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[Pair] = set()
        for e in edges:
            u, v = e
            self.add_edge(u, v)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} out of range [0, {self.n})")

    def add_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        p = pair(u, v)
        if p in self._edges:
            return False
        self._edges.add(p)
        self._adj[u].add(v)
        self._adj[v].add(u)
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        p = pair(u, v)
        if p not in self._edges:
            return False
        self._edges.discard(p)
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        return True

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and pair(u, v) in self._edges

    @property
    def edges(self) -> list[Pair]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return set(self._adj[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def copy(self) -> Graph:
        return Graph(self.n, self._edges, center=self.center)

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        try:
            u, v = e  # type: ignore[misc]
            return self.has_edge(u, v)
        except (TypeError, ValueError):
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1``.

    Hyperedges are stored as sorted tuples. Adding a hyperedge that is
    already present is a no-op and returns ``False``.
    """

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if r < 1:
            raise HypergraphError(f"uniformity must be positive, got {r}")
        if n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.r = r
        self._edges: set[Edge] = set()
        self._pair_index: dict[Pair, list[Edge]] = defaultdict(list)
        self._vertex_index: list[list[Edge]] = [[] for _ in range(n)]
        for e in edges:
            self.add(e)

    def normalize(self, e: Iterable[int]) -> Edge:
        """Validate ``e`` against this hypergraph and return it sorted."""
        t = tuple(sorted(e))
        if len(t) != self.r:
            raise HypergraphError(f"hyperedge {t} has {len(t)} vertices, expected {self.r}")
        if len(set(t)) != len(t):
            raise HypergraphError(f"hyperedge {t} repeats a vertex")
        if t and (t[0] < 0 or t[-1] >= self.n):
            raise HypergraphError(f"hyperedge {t} has a vertex out of range [0, {self.n})")
        return t

    def add(self, e: Iterable[int]) -> bool:
        t = self.normalize(e)
        if t in self._edges:
            return False
        self._edges.add(t)
        for p in combinations(t, 2):
            self._pair_index[p].append(t)
        for v in t:
            self._vertex_index[v].append(t)
        return True

    def remove(self, e: Iterable[int]) -> bool:
        t = self.normalize(e)
        if t not in self._edges:
            return False
        self._edges.discard(t)
        for p in combinations(t, 2):
            bucket = self._pair_index[p]
            bucket.remove(t)
            if not bucket:
                del self._pair_index[p]
        for v in t:
            self._vertex_index[v].remove(t)
        return True

    def rebuild_index(self) -> None:
        """Recompute the pair and vertex indices from the edge set."""
        self._pair_index = defaultdict(list)
        self._vertex_index = [[] for _ in range(self.n)]
        for t in sorted(self._edges):
            for p in combinations(t, 2):
                self._pair_index[p].append(t)
            for v in t:
                self._vertex_index[v].append(t)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} out of range [0, {self.n})")

    def _check_pair(self, u: int, v: int) -> Pair:
        self._check(u)
        self._check(v)
        return pair(u, v)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self._edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def heaviness(self, u: int, v: int) -> int:
        """Number of hyperedges containing both ``u`` and ``v``."""
        return len(self._pair_index.get(self._check_pair(u, v), ()))

    def is_heavy(self, u: int, v: int, q: int) -> bool:
        return self.heaviness(u, v) >= q

    def is_light(self, u: int, v: int, q: int) -> bool:
        return self.heaviness(u, v) <= q

    def edges_containing_pair(self, u: int, v: int) -> list[Edge]:
        return list(self._pair_index.get(self._check_pair(u, v), ()))

    def edges_containing(self, v: int) -> list[Edge]:
        self._check(v)
        return list(self._vertex_index[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._vertex_index[v])

    def codegree(self, s: Iterable[int]) -> int:
        """Number of hyperedges containing every vertex of ``s``."""
        items = sorted(set(s))
        for v in items:
            self._check(v)
        if not items:
            return len(self._edges)
        if len(items) == 1:
            return len(self._vertex_index[items[0]])
        bucket = self._pair_index.get((items[0], items[1]), ())
        if len(items) == 2:
            return len(bucket)
        rest = items[2:]
        return sum(1 for e in bucket if all(v in e for v in rest))

    def shadow_neighbors(self, v: int) -> set[int]:
        """Vertices sharing at least one hyperedge with ``v``."""
        self._check(v)
        out: set[int] = set()
        for e in self._vertex_index[v]:
            out.update(e)
        out.discard(v)
        return out

    def link_set(self, u: int, v: int) -> set[int]:
        """Third vertices of the hyperedges through the pair ``{u, v}``."""
        if self.r != 3:
            raise UnsupportedUniformityError(f"link sets are defined for r = 3, got r = {self.r}")
        p = self._check_pair(u, v)
        return {w for e in self._pair_index.get(p, ()) for w in e if w != p[0] and w != p[1]}

    def link_graph(self, v: int) -> Graph:
        if self.r != 3:
            raise UnsupportedUniformityError(f"link graphs are defined for r = 3, got r = {self.r}")
        self._check(v)
        g = Graph(self.n)
        for e in self._vertex_index[v]:
            a, b = (w for w in e if w != v)
            g.add_edge(a, b)
        return g

    def link_hypergraph(self, s: Iterable[int]) -> Hypergraph:
        """The ``(r - |s|)``-graph of hyperedges containing ``s``, with ``s`` removed."""
        ss = set(s)
        for v in ss:
            self._check(v)
        if len(ss) >= self.r:
            raise HypergraphError(f"link of a {len(ss)}-set in an {self.r}-graph is undefined")
        out = Hypergraph(self.n, self.r - len(ss))
        for e in self._edges:
            if ss.issubset(e):
                out.add(w for w in e if w not in ss)
        return out

    def copy(self) -> Hypergraph:
        return Hypergraph(self.n, self.r, self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        try:
            return tuple(sorted(e)) in self._edges  # type: ignore[call-overload]
        except TypeError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self._edges == other._edges

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={len(self._edges)})"


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r, combinations(range(n), r))
