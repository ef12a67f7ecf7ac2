"""Deterministic constructors for fans, stars, expansions and the star cover.

Labeling is fixed so that outputs are reproducible byte for byte:

* fans and stars put the center at vertex 0 and triangle ``j`` (1-based) on
  ``{0, 2j-1, 2j}``;
* expansions keep the core vertices ``0..|V(F)|-1`` and append extension
  vertices in sorted edge order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable

from .hypercore import Edge, Graph, Hypergraph, HypergraphError, Pair, complete_hypergraph, pair


@dataclass
class CoreMap:
    """Where the core graph sits inside an (partial) expansion.

    ``edge_extensions`` maps each enlarged core edge (in core labels) to its
    added vertices; ``bare`` lists core edges left unenlarged.
    """

    core_vertices: dict[int, int]
    edge_extensions: dict[Pair, tuple[int, ...]] = field(default_factory=dict)
    center: int | None = None
    bare: list[Pair] = field(default_factory=list)

    def validate(self, r: int) -> None:
        images = list(self.core_vertices.values())
        added = [v for ext in self.edge_extensions.values() for v in ext]
        if len(set(images)) != len(images):
            raise HypergraphError("core map is not injective")
        if len(set(added)) != len(added) or set(added) & set(images):
            raise HypergraphError("extension vertices collide")
        for e, ext in self.edge_extensions.items():
            if len(ext) != r - 2:
                raise HypergraphError(f"edge {e} has {len(ext)} added vertices, expected {r - 2}")


@dataclass
class PartialExpansion:
    """A core graph with only some edges enlarged into hyperedges."""

    n: int
    r: int
    hyperedges: Hypergraph
    bare_pairs: list[Pair]


def t_fan(t: int) -> Graph:
    if t < 1:
        raise HypergraphError(f"t-fan needs t >= 1, got {t}")
    return k_fan(t, 3)


def k_fan(t: int, k: int) -> Graph:
    """``t`` copies of ``K_k`` sharing only vertex 0."""
    if t < 1 or k < 3:
        raise HypergraphError(f"(t,k)-fan needs t >= 1 and k >= 3, got t={t}, k={k}")
    g = Graph((k - 1) * t + 1, center=0)
    for j in range(t):
        block = [0] + list(range(1 + (k - 1) * j, 1 + (k - 1) * (j + 1)))
        for u, v in combinations(block, 2):
            g.add_edge(u, v)
    return g


def star_graph(t: int) -> Graph:
    """``K_{1,t}`` with center 0."""
    if t < 1:
        raise HypergraphError(f"star needs t >= 1, got {t}")
    return Graph(t + 1, [(0, j) for j in range(1, t + 1)], center=0)


def path_graph(m: int) -> Graph:
    """Path on ``m`` vertices ``0-1-...-(m-1)``."""
    if m < 2:
        raise HypergraphError(f"path needs at least 2 vertices, got {m}")
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def triangle() -> Graph:
    return t_fan(1)


def expand(f: Graph, r: int) -> tuple[Hypergraph, CoreMap]:
    """The ``r``-expansion of ``f``: every edge gets ``r-2`` fresh vertices."""
    h, cmap = _enlarge(f, f.edges, r)
    return h.hyperedges, cmap


def partial_expand(f: Graph, enlarged: Iterable[Iterable[int]], r: int) -> tuple[PartialExpansion, CoreMap]:
    chosen = []
    for e in enlarged:
        u, v = e
        p = pair(u, v)
        if not f.has_edge(*p):
            raise HypergraphError(f"{p} is not an edge of the core graph")
        chosen.append(p)
    return _enlarge(f, sorted(set(chosen)), r)


def _enlarge(f: Graph, enlarged: list[Pair], r: int) -> tuple[PartialExpansion, CoreMap]:
    if r < 2:
        raise HypergraphError(f"expansion needs r >= 2, got {r}")
    n = f.n + (r - 2) * len(enlarged)
    h = Hypergraph(n, r)
    cmap = CoreMap({v: v for v in range(f.n)}, center=f.center)
    nxt = f.n
    for e in enlarged:
        ext = tuple(range(nxt, nxt + r - 2))
        nxt += r - 2
        h.add(e + ext)
        cmap.edge_extensions[e] = ext
    enlarged_set = set(enlarged)
    cmap.bare = [e for e in f.edges if e not in enlarged_set]
    return PartialExpansion(n, r, h, list(cmap.bare)), cmap


def _star_map(t: int, r: int) -> CoreMap:
    leaves = [1 + (r - 1) * j for j in range(t)]
    return CoreMap(
        {0: 0, **{j + 1: leaf for j, leaf in enumerate(leaves)}},
        {(0, j + 1): tuple(range(leaf + 1, leaf + r - 1)) for j, leaf in enumerate(leaves)},
        center=0,
    )


def star_expansion_edges(t: int, r: int) -> list[Edge]:
    return [(0,) + tuple(range(1 + (r - 1) * j, 1 + (r - 1) * (j + 1))) for j in range(t)]


def star_expansion(t: int, r: int) -> tuple[Hypergraph, CoreMap]:
    """``S_t^r``: ``t`` hyperedges meeting pairwise exactly in vertex 0.

    Hyperedge ``j`` is ``{0} ∪ {1 + (r-1)j, ..., (r-1)(j+1)}``; its first
    non-center vertex is the core leaf.
    """
    if r < 2:
        raise HypergraphError(f"star expansion needs r >= 2, got {r}")
    if t < 1:
        raise HypergraphError(f"star needs t >= 1, got {t}")
    # contiguous blocks, unlike expand() which appends extensions after the core
    return Hypergraph(t * (r - 1) + 1, r, star_expansion_edges(t, r)), _star_map(t, r)


def fan_plus(t: int, i: int) -> Hypergraph:
    """``F_t^3`` plus the first ``i`` core triangles as hyperedges."""
    if not 0 <= i <= t:
        raise HypergraphError(f"need 0 <= i <= t, got t={t}, i={i}")
    h, _ = expand(t_fan(t), 3)
    for j in range(1, i + 1):
        h.add((0, 2 * j - 1, 2 * j))
    return h


def hyperfan(t: int, r: int) -> Hypergraph:
    """``F(t, r)``: ``t`` copies of ``K_r^{(r-1)}`` sharing vertex 0, each
    ``(r-1)``-edge enlarged by one fresh vertex."""
    if t < 1 or r < 3:
        raise HypergraphError(f"hyperfan needs t >= 1 and r >= 3, got t={t}, r={r}")
    base = t * (r - 1) + 1
    h = Hypergraph(base + t * r, r)
    nxt = base
    for j in range(t):
        block = [0] + list(range(1 + (r - 1) * j, 1 + (r - 1) * (j + 1)))
        for sub in combinations(block, r - 1):
            h.add(sub + (nxt,))
            nxt += 1
    return h


def star_cover(n: int, t: int, r: int) -> Hypergraph:
    """All ``r``-subsets of ``[0, n)`` meeting ``U = {0, ..., t-1}``."""
    if not 0 <= t <= n or r > n or r < 1:
        raise HypergraphError(f"star cover needs 0 <= t <= n and 1 <= r <= n, got n={n}, t={t}, r={r}")
    # sorted tuples meet U exactly when their smallest vertex is below t
    return Hypergraph(n, r, (c for c in combinations(range(n), r) if c[0] < t))


def star_cover_count(n: int, t: int, r: int) -> int:
    if not 0 <= t <= n or r > n or r < 1:
        raise HypergraphError(f"star cover needs 0 <= t <= n and 1 <= r <= n, got n={n}, t={t}, r={r}")
    return comb(n, r) - comb(n - t, r)


KINDS = {
    "fan": ("t",),
    "k-fan": ("t", "k"),
    "star": ("t",),
    "path": ("m",),
    "triangle": (),
    "expansion": ("graph",),
    "partial-expansion": ("t",),
    "fan-plus": ("t", "i"),
    "hyperfan": ("t",),
    "star-cover": ("n", "t"),
    "complete": ("n",),
    "uhg": ("file",),
}

_ALIASES = {"k_fan": "k-fan", "fan_plus": "fan-plus", "star_cover": "star-cover",
            "partial_expansion": "partial-expansion", "star-expansion": "star"}

_STRING_PARAMS = {"graph", "file", "enlarged"}


@dataclass(frozen=True)
class FamilySpec:
    """A named family with parameters, e.g. ``FamilySpec.parse("fan t=2 r=3")``.

    Kinds whose forbidden configuration is an expansion of a core graph
    (fan, k-fan, star, path, triangle, expansion) expose :meth:`core_graph`;
    every kind can :meth:`build` its hypergraph.
    """

    kind: str
    params: tuple[tuple[str, int | str], ...] = ()

    @classmethod
    def make(cls, kind: str, **params: int | str) -> FamilySpec:
        spec = cls(_ALIASES.get(kind, kind), tuple(sorted(params.items())))
        spec.validate()
        return spec

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        tokens = text.split()
        if not tokens:
            raise HypergraphError("empty family spec")
        params: dict[str, int | str] = {}
        for tok in tokens[1:]:
            m = re.fullmatch(r"([A-Za-z_]+)=(\S+)", tok)
            if not m:
                raise HypergraphError(f"bad family parameter {tok!r}; expected key=value")
            key, val = m.group(1), m.group(2)
            if key in _STRING_PARAMS:
                params[key] = val
            else:
                try:
                    params[key] = int(val)
                except ValueError:
                    raise HypergraphError(f"parameter {key} must be an integer, got {val!r}") from None
        return cls.make(tokens[0], **params)

    def __str__(self) -> str:
        return " ".join([self.kind] + [f"{k}={v}" for k, v in self.params])

    def get(self, key: str, default: int | str | None = None):
        return dict(self.params).get(key, default)

    @property
    def r(self) -> int:
        if self.kind in ("fan-plus",):
            return 3
        return int(self.get("r", 3))

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise HypergraphError(f"unknown family kind {self.kind!r}; known: {', '.join(sorted(KINDS))}")
        p = dict(self.params)
        for key in KINDS[self.kind]:
            if key not in p:
                raise HypergraphError(f"family {self.kind!r} needs parameter {key}")
        checks = {
            "t": lambda v: v >= (0 if self.kind == "star-cover" else 1),
            "r": lambda v: v >= 2,
            "k": lambda v: v >= 3,
            "m": lambda v: v >= 2,
            "n": lambda v: v >= 0,
            "i": lambda v: v >= 0,
        }
        for key, ok in checks.items():
            if key in p and not ok(p[key]):
                raise HypergraphError(f"parameter {key}={p[key]} out of range for {self.kind!r}")
        if self.kind == "fan-plus" and p["i"] > p["t"]:
            raise HypergraphError(f"fan-plus needs i <= t, got i={p['i']}, t={p['t']}")
        if self.kind == "hyperfan" and self.r < 3:
            raise HypergraphError("hyperfan needs r >= 3")
        if self.kind == "star-cover" and not (p["t"] <= p["n"] and self.r <= p["n"]):
            raise HypergraphError("star-cover needs t <= n and r <= n")

    def core_graph(self) -> Graph | None:
        """The core graph whose expansion this family denotes, if any."""
        k = self.kind
        if k == "fan":
            return t_fan(int(self.get("t")))
        if k == "k-fan":
            return k_fan(int(self.get("t")), int(self.get("k")))
        if k == "star":
            return star_graph(int(self.get("t")))
        if k == "path":
            return path_graph(int(self.get("m")))
        if k == "triangle":
            return triangle()
        if k == "expansion":
            from .formats import read_graph

            return read_graph(str(self.get("graph")))
        return None

    def build(self) -> Hypergraph:
        k, r = self.kind, self.r
        if k == "star":
            return star_expansion(int(self.get("t")), r)[0]
        core = self.core_graph()
        if core is not None:
            return expand(core, r)[0]
        if k == "partial-expansion":
            return self.build_partial().hyperedges
        if k == "fan-plus":
            return fan_plus(int(self.get("t")), int(self.get("i")))
        if k == "hyperfan":
            return hyperfan(int(self.get("t")), r)
        if k == "star-cover":
            return star_cover(int(self.get("n")), int(self.get("t")), r)
        if k == "complete":
            return complete_hypergraph(int(self.get("n")), r)
        if k == "uhg":
            from .formats import read_uhg

            return read_uhg(str(self.get("file")))
        raise HypergraphError(f"cannot build family {k!r}")

    def build_partial(self) -> PartialExpansion:
        """Partial expansion of ``t_fan(t)``; ``enlarged`` is far, close, all or none."""
        if self.kind != "partial-expansion":
            raise HypergraphError(f"{self.kind!r} is not a partial expansion")
        f = t_fan(int(self.get("t")))
        which = str(self.get("enlarged", "far"))
        far = [e for e in f.edges if 0 not in e]
        close = [e for e in f.edges if 0 in e]
        table = {"far": far, "close": close, "all": f.edges, "none": []}
        if which not in table:
            raise HypergraphError(f"enlarged must be one of {sorted(table)}, got {which!r}")
        return partial_expand(f, table[which], self.r)[0]
