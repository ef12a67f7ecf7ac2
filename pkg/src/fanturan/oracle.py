"""Small exact Turán numbers, greedy lower bounds, and isomorphism.

The exact search walks the ``r``-sets of ``[0, n)`` in lexicographic order,
branching include-first. Each node keeps only the candidates that can still
be added without creating a forbidden copy; once a candidate is blocked it
stays blocked further down, so ``current + |candidates|`` is a valid bound.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Union

from .embed import contains_expansion, contains_subhypergraph
from .gallery import FamilySpec
from .hypercore import Edge, Graph, Hypergraph, HypergraphError

Forbidden = Union[Graph, Hypergraph, FamilySpec]

SCHEMA = 1


def _resolve(forbidden: Forbidden) -> Graph | Hypergraph:
    if isinstance(forbidden, FamilySpec):
        core = forbidden.core_graph()
        return core if core is not None else forbidden.build()
    return forbidden


def forbidden_order(forbidden: Forbidden, r: int) -> int:
    """Vertex count of the forbidden ``r``-graph."""
    f = _resolve(forbidden)
    if isinstance(f, Graph):
        return f.n + (r - 2) * len(f)
    return f.n


def copy_finder(forbidden: Forbidden, r: int) -> Callable[..., object]:
    """``finder(h, through=None)`` returning a copy of the forbidden graph or ``None``."""
    f = _resolve(forbidden)
    if len(f) == 0:
        raise HypergraphError("forbidden configuration has no edges; every hypergraph contains it")
    if isinstance(f, Graph):
        return lambda h, through=None: contains_expansion(h, f, through=through)
    if f.r != r:
        raise HypergraphError(f"forbidden hypergraph is {f.r}-uniform, search is {r}-uniform")
    return lambda h, through=None: contains_subhypergraph(h, f, through=through)


def _describe(forbidden: Forbidden) -> dict:
    if isinstance(forbidden, FamilySpec):
        return {"spec": str(forbidden)}
    if isinstance(forbidden, Graph):
        return {"graph": {"n": forbidden.n, "edges": [list(e) for e in forbidden.edges]}}
    return {"hypergraph": {"n": forbidden.n, "r": forbidden.r, "edges": [list(e) for e in forbidden.edges]}}


def _undescribe(d: dict) -> Forbidden:
    if "spec" in d:
        return FamilySpec.parse(d["spec"])
    if "graph" in d:
        return Graph(d["graph"]["n"], d["graph"]["edges"])
    g = d["hypergraph"]
    return Hypergraph(g["n"], g["r"], g["edges"])


@dataclass
class TuranCertificate:
    n: int
    r: int
    forbidden: Forbidden
    value: int
    witness: Hypergraph
    exact: bool
    nodes_explored: int = 0
    elapsed: float = 0.0
    method: str = "branch-and-bound"
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "r": self.r,
            "forbidden": _describe(self.forbidden),
            "value": self.value,
            "exact": self.exact,
            "witness": [list(e) for e in self.witness.edges],
            "nodes_explored": self.nodes_explored,
            "elapsed": round(self.elapsed, 6),
            "method": self.method,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> TuranCertificate:
        if d.get("schema") != SCHEMA:
            raise HypergraphError(f"unsupported certificate schema {d.get('schema')!r}")
        n, r = int(d["n"]), int(d["r"])
        return cls(
            n, r, _undescribe(d["forbidden"]), int(d["value"]), Hypergraph(n, r, d["witness"]),
            bool(d["exact"]), int(d.get("nodes_explored", 0)), float(d.get("elapsed", 0.0)),
            d.get("method", "branch-and-bound"), int(d.get("seed", 0)),
        )


def verify_certificate(cert: TuranCertificate) -> list[str]:
    """Re-check a certificate; returns a list of problems (empty when valid)."""
    problems = []
    if cert.witness.n != cert.n or cert.witness.r != cert.r:
        problems.append("witness dimensions do not match n, r")
    if len(cert.witness) != cert.value:
        problems.append(f"witness has {len(cert.witness)} hyperedges, certificate claims {cert.value}")
    found = copy_finder(cert.forbidden, cert.r)(cert.witness)
    if found is not None:
        problems.append(f"witness contains the forbidden configuration: {found}")
    if cert.exact and forbidden_order(cert.forbidden, cert.r) > cert.n and cert.value != comb(cert.n, cert.r):
        problems.append("forbidden graph does not fit, so the exact value must be C(n, r)")
    return problems


def greedy_lower_bound(n: int, r: int, forbidden: Forbidden, seed: int = 0) -> Hypergraph:
    """Insert ``r``-sets in a seeded random order while the result stays free.

    The output is maximal: every absent ``r``-set would create a copy.
    """
    if forbidden_order(forbidden, r) > n:
        return Hypergraph(n, r, combinations(range(n), r))
    finder = copy_finder(forbidden, r)
    cands = list(combinations(range(n), r))
    random.Random(seed).shuffle(cands)
    h = Hypergraph(n, r)
    for c in cands:
        h.add(c)
        if finder(h, through=c) is not None:
            h.remove(c)
    return h


class _Budget:
    def __init__(self, seconds: float | None, nodes: int | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.nodes_left = nodes
        self.nodes = 0
        self.exhausted = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes_left is not None and self.nodes > self.nodes_left:
            self.exhausted = True
        elif self.deadline is not None and self.nodes % 64 == 0 and time.monotonic() > self.deadline:
            self.exhausted = True
        return not self.exhausted


def exact_turan(
    n: int,
    r: int,
    forbidden: Forbidden,
    budget_sec: float | None = None,
    node_limit: int | None = None,
    symmetry: bool = True,
    seed: int = 0,
    canonical: bool = False,
) -> TuranCertificate:
    """Largest ``r``-graph on ``n`` vertices with no forbidden copy.

    ``forbidden`` is a core graph (its ``r``-expansion is forbidden), a
    hypergraph (forbidden directly) or a :class:`FamilySpec` of either.
    When the budget runs out the certificate is inexact and ``value`` is a
    lower bound. ``canonical=True`` switches to a level-by-level search
    that keeps one hypergraph per isomorphism class.
    """
    start = time.monotonic()
    if forbidden_order(forbidden, r) > n:
        full = Hypergraph(n, r, combinations(range(n), r))
        return TuranCertificate(n, r, forbidden, len(full), full, True, 0, time.monotonic() - start, "trivial", seed)
    finder = copy_finder(forbidden, r)
    incumbent = greedy_lower_bound(n, r, forbidden, seed)
    if budget_sec == 0:
        return TuranCertificate(n, r, forbidden, len(incumbent), incumbent, False, 0, time.monotonic() - start, "greedy", seed)
    budget = _Budget(budget_sec, node_limit)
    if canonical:
        best, exact = _levels(n, r, finder, budget, incumbent)
        method = "canonical-levels"
    else:
        best, exact = _branch_and_bound(n, r, finder, budget, incumbent, symmetry)
        method = "branch-and-bound"
    return TuranCertificate(n, r, forbidden, len(best), best, exact, budget.nodes, time.monotonic() - start, method, seed)


def _branch_and_bound(n: int, r: int, finder, budget: _Budget, incumbent: Hypergraph, symmetry: bool) -> tuple[Hypergraph, bool]:
    best_edges = incumbent.edges
    best = len(best_edges)
    h = Hypergraph(n, r)

    def compatible(cands: Iterable[Edge]) -> list[Edge]:
        out = []
        for c in cands:
            h.add(c)
            if finder(h, through=c) is None:
                out.append(c)
            h.remove(c)
        return out

    def dfs(cands: list[Edge]) -> None:
        nonlocal best, best_edges
        if not budget.tick():
            return
        size = len(h)
        if size > best or (size == best and h.edges < best_edges):
            best, best_edges = size, h.edges
        for idx, e in enumerate(cands):
            if size + len(cands) - idx <= best:
                return
            h.add(e)
            dfs(compatible(cands[idx + 1:]))
            h.remove(e)
            if budget.exhausted:
                return

    everything = list(combinations(range(n), r))
    if symmetry:
        # every non-empty hypergraph has a relabeling that contains {0..r-1}
        first = tuple(range(r))
        budget.tick()
        h.add(first)
        if finder(h, through=first) is None:
            dfs(compatible(everything[1:]))
        h.remove(first)
    else:
        dfs(compatible(everything))
    return Hypergraph(n, r, best_edges), not budget.exhausted


def _levels(n: int, r: int, finder, budget: _Budget, incumbent: Hypergraph) -> tuple[Hypergraph, bool]:
    everything = list(combinations(range(n), r))
    level = {canonical_form(Hypergraph(n, r)): Hypergraph(n, r)}
    best = Hypergraph(n, r)
    while level:
        best = level[min(level)]
        nxt: dict[tuple, Hypergraph] = {}
        for key in sorted(level):
            g = level[key]
            if not budget.tick():
                out = best if len(best) >= len(incumbent) else incumbent
                return out, False
            for c in everything:
                if c in g:
                    continue
                g.add(c)
                if finder(g, through=c) is None:
                    k = canonical_form(g)
                    if k not in nxt:
                        nxt[k] = Hypergraph(n, r, k[2])
                g.remove(c)
        level = nxt
    return best, True


def _refine(h: Hypergraph, colors: list[int]) -> list[int]:
    """Colour refinement on vertices; colours are ranks of signatures, so the
    result depends only on the input colouring, never on labels."""
    n = h.n
    edges_at = [h.edges_containing(v) for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            around = sorted(tuple(sorted(colors[w] for w in e if w != v)) for e in edges_at[v])
            sigs.append((colors[v], tuple(around)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(h: Hypergraph) -> tuple:
    """Isomorphism-invariant key ``(n, r, edges)``: the smallest relabeled
    edge list over all leaves of individualisation and refinement.

    Equal keys mean isomorphic hypergraphs (the key is itself a relabeling).
    Cost grows with the automorphism group; meant for ``n <= 12``.
    """
    best: list[tuple] = []

    def leaf(colors: list[int]) -> None:
        relabeled = tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in h.edges))
        if not best or relabeled < best[0]:
            best[:] = [relabeled]

    def go(colors: list[int]) -> None:
        colors = _refine(h, colors)
        if len(set(colors)) == h.n:
            leaf(colors)
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((c for c in sizes if sizes[c] > 1), key=lambda c: (sizes[c], c))
        for v in range(h.n):
            if colors[v] == target:
                # individualise v: it keeps the class colour, the rest move up
                go([2 * c + (1 if (c == target and u != v) or c > target else 0) for u, c in enumerate(colors)])

    go([0] * h.n)
    return (h.n, h.r, best[0] if best else ())


def find_isomorphism(h1: Hypergraph, h2: Hypergraph, node_limit: int | None = None) -> dict[int, int] | None:
    """A vertex bijection carrying the hyperedges of ``h1`` onto those of ``h2``.

    Raises ``TimeoutError`` only if ``node_limit`` is hit.
    """
    if (h1.n, h1.r, len(h1)) != (h2.n, h2.r, len(h2)):
        return None
    n = h1.n
    # joint refinement so colours mean the same thing in both
    joint = Hypergraph(2 * n, h1.r, list(h1.edges) + [tuple(v + n for v in e) for e in h2.edges])
    colors = _refine(joint, [0] * (2 * n))
    c1, c2 = colors[:n], colors[n:]
    if sorted(c1) != sorted(c2):
        return None
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(c2[v], []).append(v)
    size = {c: len(vs) for c, vs in by_color.items()}
    nbr1 = [h1.shadow_neighbors(v) for v in range(n)]
    nbr2 = [h2.shadow_neighbors(v) for v in range(n)]
    edges_at = [h1.edges_containing(v) for v in range(n)]
    e2 = h2.edge_set()

    order: list[int] = []
    seen: set[int] = set()
    while len(order) < n:
        v = min((u for u in range(n) if u not in seen),
                key=lambda u: (-len(nbr1[u] & seen), size[c1[u]], c1[u], u))
        order.append(v)
        seen.add(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def go(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise TimeoutError("isomorphism search exceeded its node limit")
        if i == n:
            return True
        v = order[i]
        placed = [u for u in nbr1[v] if u in mapping]
        for c in by_color[c1[v]]:
            if c in used:
                continue
            if any(mapping[u] not in nbr2[c] for u in placed):
                continue
            mapping[v] = c
            if all(tuple(sorted(mapping[w] for w in e)) in e2 for e in edges_at[v] if all(w in mapping for w in e)):
                used.add(c)
                if go(i + 1):
                    return True
                used.discard(c)
            del mapping[v]
        return False

    return dict(mapping) if go(0) else None


@dataclass
class IsomorphismResult:
    isomorphic: bool
    mapping: dict[int, int] | None = None
    exact: bool = True
    notes: list[str] = field(default_factory=list)


def check_isomorphism(h1: Hypergraph, h2: Hypergraph, node_limit: int | None = None) -> IsomorphismResult:
    try:
        m = find_isomorphism(h1, h2, node_limit)
    except TimeoutError as exc:
        return IsomorphismResult(False, None, exact=False, notes=[str(exc)])
    notes = [] if h1.n <= 12 else ["n > 12: exact because the search completed, but running time is not bounded"]
    return IsomorphismResult(m is not None, m, exact=True, notes=notes)


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    return find_isomorphism(h1, h2) is not None
