"""Bipartite matching, the Hall-type dichotomy, and greedy independent sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .hypercore import Graph


@dataclass
class BipartiteGraph:
    """Left labels ``A``, right labels ``B`` and adjacency ``A -> B``.

    Labels are kept in the order given; adjacency lists are ordered the same
    way as ``B`` so every traversal is deterministic.
    """

    A: list[Hashable]
    B: list[Hashable]
    adj: dict[Hashable, list[Hashable]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        right = set(self.B)
        if len(right) != len(self.B) or len(set(self.A)) != len(self.A):
            raise ValueError("bipartite labels must be distinct")
        order = {b: i for i, b in enumerate(self.B)}
        clean: dict[Hashable, list[Hashable]] = {}
        for a in self.A:
            nbrs = set(self.adj.get(a, ()))
            if not nbrs <= right:
                raise ValueError(f"left vertex {a!r} adjacent to unknown right labels {sorted(map(repr, nbrs - right))}")
            clean[a] = sorted(nbrs, key=order.__getitem__)
        extra = set(self.adj) - set(self.A)
        if extra:
            raise ValueError(f"adjacency lists for unknown left labels {sorted(map(repr, extra))}")
        self.adj = clean

    @classmethod
    def from_edges(cls, A: Iterable[Hashable], B: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]) -> BipartiteGraph:
        A, B = list(A), list(B)
        adj: dict[Hashable, list[Hashable]] = {a: [] for a in A}
        for a, b in edges:
            adj.setdefault(a, []).append(b)
        return cls(A, B, adj)

    def degree(self, a: Hashable) -> int:
        return len(self.adj[a])

    def neighbors(self, a: Hashable) -> list[Hashable]:
        return list(self.adj[a])

    def has_edge(self, a: Hashable, b: Hashable) -> bool:
        return b in self.adj.get(a, ())


Matching = dict
"""A matching is a ``dict`` from left labels to distinct right labels."""


def max_matching(g: BipartiteGraph) -> dict[Hashable, Hashable]:
    """Maximum-cardinality matching by repeated augmenting paths (Kuhn)."""
    return augmenting_matching(g.A, g.adj)


def augmenting_matching(left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]) -> dict[Hashable, Hashable]:
    """Kuhn's algorithm on a bare adjacency mapping; left vertices are tried
    in the given order and neighbors in adjacency order."""
    left = list(left)
    match_right: dict[Hashable, Hashable] = {}
    match_left: dict[Hashable, Hashable] = {}
    for root in left:
        if not adj.get(root):
            continue
        # iterative DFS over alternating paths
        parent: dict[Hashable, Hashable] = {}
        seen_right: set[Hashable] = set()
        stack = [(root, iter(adj[root]))]
        found = None
        while stack and found is None:
            a, it = stack[-1]
            for b in it:
                if b in seen_right:
                    continue
                seen_right.add(b)
                parent[b] = a
                owner = match_right.get(b)
                if owner is None:
                    found = b
                    break
                stack.append((owner, iter(adj[owner])))
                break
            else:
                stack.pop()
        if found is None:
            continue
        b = found
        while True:
            a = parent[b]
            prev = match_left.get(a)
            match_left[a] = b
            match_right[b] = a
            if a == root:
                break
            b = prev
    return {a: match_left[a] for a in left if a in match_left}


def is_matching(g: BipartiteGraph, m: dict[Hashable, Hashable]) -> bool:
    return len(set(m.values())) == len(m) and all(g.has_edge(a, b) for a, b in m.items())


@dataclass
class HallResult:
    """Outcome of :func:`hall_analysis`.

    ``kind`` is ``"matching"`` (``matching`` holds ``k`` pairs),
    ``"witness"`` (``witness`` is the common ``(k-1)``-neighborhood of all of
    ``A``) or ``"failure"`` (``reasons`` says which hypothesis does not hold).
    """

    kind: str
    k: int
    matching: dict[Hashable, Hashable] | None = None
    witness: list[Hashable] | None = None
    reasons: list[str] = field(default_factory=list)
    max_matching_size: int = 0


class HallConsistencyError(RuntimeError):
    """The common-neighborhood conclusion failed although its hypotheses held."""


def hall_analysis(g: BipartiteGraph, k: int) -> HallResult:
    """Either a ``k``-matching, or the common ``(k-1)``-neighborhood forced
    when none exists, ``|A| >= k`` and every left degree is at least ``k-1``."""
    m = max_matching(g)
    if len(m) >= k:
        chosen = dict(sorted(m.items(), key=lambda kv: g.A.index(kv[0]))[:k])
        return HallResult("matching", k, matching=chosen, max_matching_size=len(m))
    reasons = []
    if len(g.A) < k:
        reasons.append(f"|A| = {len(g.A)} < k = {k}")
    low = [a for a in g.A if g.degree(a) < k - 1]
    if low:
        reasons.append(f"{len(low)} left vertices have degree < k-1 = {k - 1}, e.g. {low[0]!r} with degree {g.degree(low[0])}")
    if reasons:
        return HallResult("failure", k, reasons=reasons, max_matching_size=len(m))
    common = g.adj[g.A[0]]
    target = set(common)
    if len(common) != k - 1 or any(set(g.adj[a]) != target for a in g.A):
        raise HallConsistencyError(f"no {k}-matching but left neighborhoods are not a common (k-1)-set")
    return HallResult("witness", k, witness=list(common), max_matching_size=len(m))


def greedy_independent_set(g: Graph) -> list[int]:
    """Min-degree greedy: take a vertex of least current degree (smallest
    label on ties), drop its closed neighborhood, repeat.

    The result has size at least ``n / (1 + average degree)``.
    """
    alive = set(g.vertices())
    adj = {v: g.neighbors(v) for v in alive}
    chosen = []
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        chosen.append(v)
        gone = adj[v] | {v}
        alive -= gone
        for u in gone:
            for w in adj[u]:
                if w in alive:
                    adj[w].discard(u)
    return sorted(chosen)
