"""Finding expansion copies, and the constructive steps built on top of it.

:func:`contains_expansion` is exhaustive: ``None`` means the host is free of
the expansion. The core graph is placed vertex by vertex (most constrained
first, lexicographic candidates); extension vertices are chosen afterwards
as a system of distinct representatives. For ``r = 3`` that is a bipartite
matching, which is also used to prune partial placements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Mapping

import networkx as nx

from .hypercore import Edge, Graph, Hypergraph, HypergraphError, Pair, UnsupportedUniformityError, pair
from .matching import BipartiteGraph, augmenting_matching, greedy_independent_set


@dataclass
class Embedding:
    """Injective placement of a core graph plus extension vertices per edge.

    ``extension_map`` is keyed by core edges in core labels. A partial
    embedding simply omits some core edges.
    """

    core_map: dict[int, int]
    extension_map: dict[Pair, tuple[int, ...]] = field(default_factory=dict)

    def image(self, e: Pair) -> Pair:
        return pair(self.core_map[e[0]], self.core_map[e[1]])

    def hyperedges(self) -> list[Edge]:
        return sorted(tuple(sorted(self.image(e) + tuple(x))) for e, x in self.extension_map.items())

    def vertices(self) -> list[int]:
        return sorted(set(self.core_map.values()).union(*map(set, self.extension_map.values())))

    def validate(self, h: Hypergraph, f: Graph, complete: bool = True) -> None:
        """Raise :class:`HypergraphError` unless this is a valid (partial) copy."""
        if set(self.core_map) != set(f.vertices()):
            raise HypergraphError("core map must place every core vertex")
        images = list(self.core_map.values())
        added = [v for ext in self.extension_map.values() for v in ext]
        everything = images + added
        if len(set(everything)) != len(everything):
            raise HypergraphError("embedding reuses a vertex")
        for v in everything:
            if not 0 <= v < h.n:
                raise HypergraphError(f"vertex {v} out of range")
        for e, ext in self.extension_map.items():
            if not f.has_edge(*e):
                raise HypergraphError(f"{e} is not a core edge")
            if len(ext) != h.r - 2:
                raise HypergraphError(f"edge {e} has {len(ext)} extension vertices, expected {h.r - 2}")
            if self.image(e) + tuple(ext) not in h:
                raise HypergraphError(f"edge {e} with extension {tuple(ext)} is not a hyperedge")
        if complete and set(self.extension_map) != set(f.edges):
            raise HypergraphError("embedding leaves core edges without extension")

    def to_dict(self) -> dict:
        return {
            "core_map": {str(k): v for k, v in sorted(self.core_map.items())},
            "extension_map": {f"{a},{b}": list(x) for (a, b), x in sorted(self.extension_map.items())},
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> Embedding:
        core = {int(k): int(v) for k, v in d["core_map"].items()}
        ext = {}
        for key, x in d.get("extension_map", {}).items():
            a, b = (int(s) for s in key.split(","))
            ext[pair(a, b)] = tuple(int(v) for v in x)
        return cls(core, ext)


def _search_order(f: Graph, fixed: Iterable[int]) -> list[int]:
    placed = list(fixed)
    seen = set(placed)
    rest = [v for v in f.vertices() if v not in seen]
    order = []
    while rest:
        v = max(rest, key=lambda x: (len(f.neighbors(x) & seen), f.degree(x), -x))
        order.append(v)
        seen.add(v)
        rest.remove(v)
    return order


def automorphisms(f: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of ``f`` as image tuples, identity first."""
    n = f.n
    deg = [f.degree(v) for v in range(n)]
    nbrs = [f.neighbors(v) for v in range(n)]
    out: list[tuple[int, ...]] = []
    img = [-1] * n
    used = [False] * n

    def go(v: int) -> None:
        if v == n:
            out.append(tuple(img))
            return
        for c in range(n):
            if used[c] or deg[c] != deg[v]:
                continue
            if any((img[u] in nbrs[c]) != (u in nbrs[v]) for u in range(v)):
                continue
            img[v] = c
            used[c] = True
            go(v + 1)
            used[c] = False
        img[v] = -1

    go(0)
    return out


def symmetry_constraints(f: Graph, order: list[int]) -> list[tuple[int, int]]:
    """Pairs ``(u, w)`` such that requiring ``image(u) < image(w)`` keeps
    exactly one copy per automorphism class of placements.

    Walks a stabilizer chain along ``order``: for each vertex with a
    non-trivial orbit under the current stabilizer, it must receive the
    smallest image in that orbit.
    """
    group = automorphisms(f)
    out = []
    for v in order:
        orbit = sorted({g[v] for g in group})
        out.extend((v, w) for w in orbit if w != v)
        group = [g for g in group if g[v] == v]
        if len(group) == 1:
            break
    return out


def arc_orbit_representatives(f: Graph) -> list[tuple[int, int]]:
    """One oriented edge ``(a, b)`` from each automorphism orbit of arcs."""
    group = automorphisms(f)
    seen: set[tuple[int, int]] = set()
    reps = []
    for a, b in f.edges:
        for arc in ((a, b), (b, a)):
            if arc in seen:
                continue
            reps.append(arc)
            seen.update((g[arc[0]], g[arc[1]]) for g in group)
    return reps


class _ExpansionSearch:
    def __init__(self, h: Hypergraph, f: Graph, symmetry: bool = True):
        self.h = h
        self.f = f
        self.r = h.r
        self.symmetry = symmetry
        self.nbr = [h.shadow_neighbors(v) for v in range(h.n)]
        self._opts: dict[Pair, list[tuple[int, ...]]] = {}
        self.nodes = 0

    def options(self, x: int, y: int) -> list[tuple[int, ...]]:
        key = pair(x, y)
        got = self._opts.get(key)
        if got is None:
            got = sorted(tuple(w for w in e if w != key[0] and w != key[1]) for e in self.h.edges_containing_pair(*key))
            self._opts[key] = got
        return got

    def run(self, fixed_core: dict[int, int], fixed_ext: dict[Pair, tuple[int, ...]]) -> Embedding | None:
        f = self.f
        self.core = dict(fixed_core)
        self.fixed_ext = dict(fixed_ext)
        self.used = set(self.core.values()).union(*map(set, fixed_ext.values()))
        self.order = _search_order(f, self.core)
        self.below: dict[int, list[int]] = {v: [] for v in f.vertices()}
        self.above: dict[int, list[int]] = {v: [] for v in f.vertices()}
        if self.symmetry and not self.core:
            for u, w in symmetry_constraints(f, self.order):
                self.above[w].append(u)
                self.below[u].append(w)
        self.open_edges: list[Pair] = [
            e for e in f.edges if e not in fixed_ext and e[0] in self.core and e[1] in self.core
        ]
        self.match: dict[Pair, int] = {}
        self.owner: dict[int, Pair] = {}
        if self.r == 3:
            if not self._feasible():
                return None
        elif not all(self._live_options(e) for e in self.open_edges):
            return None
        return self._place(0)

    def _live_options(self, e: Pair) -> list[tuple[int, ...]]:
        used = self.used
        return [x for x in self.options(self.core[e[0]], self.core[e[1]]) if not used.intersection(x)]

    def _link_adjacency(self) -> dict[Pair, list[int]]:
        used = self.used
        return {
            e: [x[0] for x in self.options(self.core[e[0]], self.core[e[1]]) if x[0] not in used]
            for e in self.open_edges
        }

    def _feasible(self) -> bool:
        m = augmenting_matching(self.open_edges, self._link_adjacency())
        self.match = dict(m)
        self.owner = {b: a for a, b in m.items()}
        return len(m) == len(self.open_edges)

    def _augment(self, root: Pair) -> bool:
        # one alternating-path search from an unmatched open edge
        used, core, owner, match = self.used, self.core, self.owner, self.match
        seen: set[int] = set()
        parent: dict[int, Pair] = {}
        stack = [(root, iter(self.options(core[root[0]], core[root[1]])))]
        while stack:
            a, it = stack[-1]
            for (b,) in it:
                if b in used or b in seen:
                    continue
                seen.add(b)
                parent[b] = a
                nxt = owner.get(b)
                if nxt is None:
                    while True:
                        a = parent[b]
                        prev = match.get(a)
                        match[a] = b
                        owner[b] = a
                        if a == root:
                            return True
                        b = prev
                stack.append((nxt, iter(self.options(core[nxt[0]], core[nxt[1]]))))
                break
            else:
                stack.pop()
        return False

    def _place(self, i: int) -> Embedding | None:
        self.nodes += 1
        if i == len(self.order):
            return self._extend()
        v = self.order[i]
        placed_nbrs = [u for u in self.f.neighbors(v) if u in self.core]
        if placed_nbrs:
            cand = set(self.nbr[self.core[placed_nbrs[0]]])
            for u in placed_nbrs[1:]:
                cand &= self.nbr[self.core[u]]
        else:
            cand = set(range(self.h.n))
        cand -= self.used
        lo = max((self.core[u] for u in self.above[v] if u in self.core), default=-1)
        hi = min((self.core[w] for w in self.below[v] if w in self.core), default=self.h.n)
        new_edges = [pair(v, u) for u in placed_nbrs]
        for c in sorted(cand):
            if c <= lo:
                continue
            if c >= hi:
                break
            self.core[v] = c
            self.used.add(c)
            self.open_edges.extend(new_edges)
            if self.r == 3:
                saved = (dict(self.match), dict(self.owner))
                lost = self.owner.pop(c, None)
                if lost is not None:
                    del self.match[lost]
                ok = all(self._augment(e) for e in ([lost] if lost is not None else []) + new_edges)
            else:
                ok = all(self._live_options(e) for e in self.open_edges)
            if ok:
                found = self._place(i + 1)
                if found is not None:
                    return found
            if self.r == 3:
                self.match, self.owner = saved
            del self.open_edges[len(self.open_edges) - len(new_edges):]
            self.used.discard(c)
            del self.core[v]
        return None

    def _extend(self) -> Embedding | None:
        ext = dict(self.fixed_ext)
        if self.r == 3:
            if len(self.match) < len(self.open_edges):
                return None
            ext.update({e: (self.match[e],) for e in self.open_edges})
        elif self.r > 3:
            chosen = self._disjoint_sets()
            if chosen is None:
                return None
            ext.update(chosen)
        else:
            ext.update({e: () for e in self.open_edges})
        return Embedding(dict(self.core), ext)

    def _disjoint_sets(self) -> dict[Pair, tuple[int, ...]] | None:
        # r >= 4: pick pairwise disjoint (r-2)-sets, fewest options first
        edges = sorted(self.open_edges, key=lambda e: (len(self._live_options(e)), e))
        used = set(self.used)
        chosen: dict[Pair, tuple[int, ...]] = {}

        def go(j: int) -> bool:
            if j == len(edges):
                return True
            e = edges[j]
            for x in self.options(self.core[e[0]], self.core[e[1]]):
                if used.intersection(x):
                    continue
                used.update(x)
                chosen[e] = x
                if go(j + 1):
                    return True
                used.difference_update(x)
                del chosen[e]
            return False

        return chosen if go(0) else None


def contains_expansion(
    h: Hypergraph, f: Graph, through: Iterable[int] | None = None, symmetry: bool = True
) -> Embedding | None:
    """A copy of the ``r``-expansion of ``f`` in ``h``, or ``None`` if there is none.

    With ``through`` set to a hyperedge of ``h``, only copies using that
    hyperedge are considered. ``symmetry`` skips placements that differ by an
    automorphism of ``f``; it never changes whether a copy is found.
    """
    if h.r < 2:
        raise UnsupportedUniformityError(f"expansions need r >= 2, got {h.r}")
    search = _ExpansionSearch(h, f, symmetry=symmetry)
    if through is None:
        if f.n + (h.r - 2) * len(f) > h.n:
            return None
        return search.run({}, {})
    e = h.normalize(through)
    if e not in h:
        raise HypergraphError(f"{e} is not a hyperedge")
    arcs = arc_orbit_representatives(f) if symmetry else [arc for a, b in f.edges for arc in ((a, b), (b, a))]
    for a, b in arcs:
        for x, y in combinations(e, 2):
            rest = tuple(w for w in e if w != x and w != y)
            found = search.run({a: x, b: y}, {pair(a, b): rest})
            if found is not None:
                return found
    return None


def contains_subhypergraph(h: Hypergraph, p: Hypergraph, through: Iterable[int] | None = None) -> dict[int, int] | None:
    """Injective vertex map sending every hyperedge of ``p`` onto a hyperedge
    of ``h`` (not necessarily induced), or ``None``."""
    if p.r != h.r:
        return None
    if p.n > h.n:
        return None
    p_nbr = [p.shadow_neighbors(v) for v in range(p.n)]
    h_nbr = [h.shadow_neighbors(v) for v in range(h.n)]
    p_edges_at = [p.edges_containing(v) for v in range(p.n)]
    h_edges = h.edge_set()
    # degree filter: an image must have at least the pattern degree
    h_deg = [h.degree(v) for v in range(h.n)]

    def search(fixed: dict[int, int]) -> dict[int, int] | None:
        for pe in p.edges:
            if all(v in fixed for v in pe) and tuple(sorted(fixed[v] for v in pe)) not in h_edges:
                return None
        pg = Graph(p.n, [pair(u, w) for u in range(p.n) for w in p_nbr[u] if u < w])
        order = _search_order(pg, fixed)
        core = dict(fixed)
        used = set(core.values())

        def go(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            placed = [u for u in p_nbr[v] if u in core]
            if placed:
                cand = set(h_nbr[core[placed[0]]])
                for u in placed[1:]:
                    cand &= h_nbr[core[u]]
            else:
                cand = set(range(h.n))
            need = p.degree(v)
            for c in sorted(cand - used):
                if h_deg[c] < need:
                    continue
                core[v] = c
                ok = all(
                    tuple(sorted(core[w] for w in pe)) in h_edges
                    for pe in p_edges_at[v]
                    if all(w in core for w in pe)
                )
                if ok:
                    used.add(c)
                    if go(i + 1):
                        return True
                    used.discard(c)
                del core[v]
            return False

        return dict(core) if go(0) else None

    if through is None:
        return search({})
    e = h.normalize(through)
    for pe in p.edges:
        for img in permutations(e):
            found = search(dict(zip(pe, img)))
            if found is not None:
                return found
    return None


def greedy_complete(h: Hypergraph, f: Graph, placement: Embedding) -> Embedding | None:
    """Extend a partial 3-expansion of ``f`` by picking, for every bare core
    edge in lexicographic order, the smallest unused vertex of its link set.

    Succeeds whenever each bare edge image is ``(|E(f)| + |V(f)| - 2)``-heavy.
    """
    if h.r != 3:
        raise UnsupportedUniformityError(f"greedy completion is for r = 3, got r = {h.r}")
    placement.validate(h, f, complete=False)
    ext = dict(placement.extension_map)
    used = set(placement.core_map.values()).union(*map(set, ext.values()))
    for e in f.edges:
        if e in ext:
            continue
        x, y = placement.image(e)
        free = [w for w in sorted(h.link_set(x, y)) if w not in used]
        if not free:
            return None
        ext[e] = (free[0],)
        used.add(free[0])
    return Embedding(dict(placement.core_map), ext)


@dataclass
class Star:
    """A copy of ``S_q^3``: hyperedges meeting pairwise exactly in ``center``."""

    center: int
    hyperedges: list[Edge]

    def __post_init__(self) -> None:
        self.hyperedges = [tuple(sorted(e)) for e in self.hyperedges]
        seen: set[int] = set()
        for e in self.hyperedges:
            if self.center not in e:
                raise HypergraphError(f"star hyperedge {e} misses the center {self.center}")
            rest = set(e) - {self.center}
            if rest & seen:
                raise HypergraphError("star hyperedges must meet only in the center")
            seen |= rest

    @property
    def vertices(self) -> set[int]:
        return {v for e in self.hyperedges for v in e} | {self.center}

    def inside_pairs(self) -> list[Pair]:
        return [p for e in self.hyperedges for p in _pairs_of(e)]

    def check_in(self, h: Hypergraph) -> None:
        for e in self.hyperedges:
            if e not in h:
                raise HypergraphError(f"star hyperedge {e} is not in the hypergraph")

    def __len__(self) -> int:
        return len(self.hyperedges)


def _pairs_of(e: Edge) -> list[Pair]:
    return [(e[i], e[j]) for i in range(len(e)) for j in range(i + 1, len(e))]


def is_nice(h: Hypergraph, star: Star, w: Mapping[Pair, int]) -> bool:
    """Every inside pair ``e`` has at least ``w[e]`` link vertices outside the star."""
    star.check_in(h)
    outside = star.vertices
    return all(len(h.link_set(*e) - outside) >= w.get(e, 0) for e in star.inside_pairs())


@dataclass
class NiceStarSpec:
    star: Star
    w: dict[Pair, int]
    k: int
    r: int


class NiceStarPreconditionError(HypergraphError):
    def __init__(self, message: str, pair: Pair):
        self.pair = pair
        super().__init__(message)


def fix_link_vertices(h: Hypergraph, spec: NiceStarSpec) -> dict[Pair, list[int]]:
    """For every inside pair ``e`` of the star, the ``w(e)`` smallest link
    vertices outside its own star hyperedge."""
    fixed = {}
    for x in spec.star.hyperedges:
        for e in _pairs_of(x):
            want = spec.w.get(e, 0)
            if want > spec.k:
                raise NiceStarPreconditionError(f"weight {want} of pair {e} exceeds k = {spec.k}", e)
            if h.heaviness(*e) < want + 1:
                raise NiceStarPreconditionError(
                    f"pair {e} lies in {h.heaviness(*e)} hyperedges, needs at least w + 1 = {want + 1}", e
                )
            fixed[e] = sorted(h.link_set(*e) - set(x))[:want]
    return fixed


def conflict_graph(h: Hypergraph, spec: NiceStarSpec, fixed: dict[Pair, list[int]] | None = None) -> Graph:
    """Star hyperedges as vertices; ``i ~ j`` when a vertex fixed for a pair
    inside one of them lies in the other."""
    if fixed is None:
        fixed = fix_link_vertices(h, spec)
    edges = spec.star.hyperedges
    owner = {v: i for i, e in enumerate(edges) for v in e if v != spec.star.center}
    g = Graph(len(edges))
    for i, x in enumerate(edges):
        for e in _pairs_of(x):
            for v in fixed[e]:
                j = owner.get(v)
                if j is not None and j != i:
                    g.add_edge(i, j)
    return g


def find_nice_star(h: Hypergraph, spec: NiceStarSpec) -> Star | None:
    """A nice ``S_r^3`` among the hyperedges of ``spec.star``.

    Guaranteed to exist once ``q > (1 + 6k) r``.
    """
    spec.star.check_in(h)
    g = conflict_graph(h, spec)
    chosen = greedy_independent_set(g)
    if len(chosen) < spec.r:
        return None
    return Star(spec.star.center, [spec.star.hyperedges[i] for i in chosen[: spec.r]])


def auxiliary_bipartite(h: Hypergraph, star: Star, t: int) -> BipartiteGraph:
    """Left: ``(5t-1)``-light inside pairs of ``star``; right: vertices outside
    it; a pair and a vertex are adjacent when together they form a hyperedge."""
    star.check_in(h)
    inside = star.vertices
    left = [e for e in star.inside_pairs() if h.heaviness(*e) <= 5 * t - 1]
    right = [v for v in range(h.n) if v not in inside]
    adj = {e: sorted(h.link_set(*e) - inside) for e in left}
    return BipartiteGraph(left, right, adj)


def find_disjoint_star(h: Hypergraph, q: int) -> Star | None:
    """An ``S_q^3`` in ``h``, or ``None`` if ``h`` has none.

    For each center the link graph needs a matching of size ``q``.
    """
    if h.r != 3:
        raise UnsupportedUniformityError(f"star search is for r = 3, got r = {h.r}")
    if q < 1:
        raise HypergraphError(f"star size must be positive, got {q}")
    for v in range(h.n):
        link = h.link_graph(v)
        if len(link) < q:
            continue
        g = nx.Graph()
        g.add_edges_from(link.edges)
        m = nx.max_weight_matching(g, maxcardinality=True)
        if len(m) >= q:
            pairs = sorted(pair(a, b) for a, b in m)[:q]
            return Star(v, [tuple(sorted((v, a, b))) for a, b in pairs])
    return None
