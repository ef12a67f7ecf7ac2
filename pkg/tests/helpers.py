"""Seeded generators and brute-force oracles shared by the test modules.

The oracles deliberately avoid the package's search code: they enumerate.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from fanturan.gallery import expand
from fanturan.hypercore import Graph, Hypergraph


def random_hypergraph(rng: random.Random, n: int, r: int, p: float) -> Hypergraph:
    return Hypergraph(n, r, (c for c in combinations(range(n), r) if rng.random() < p))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, (c for c in combinations(range(n), 2) if rng.random() < p))


def rescan_heaviness(h: Hypergraph, u: int, v: int) -> int:
    return sum(1 for e in h.edges if u in e and v in e)


def brute_contains_expansion(h: Hypergraph, f: Graph) -> bool:
    """Try every injective assignment of the expansion's vertices."""
    big, _ = expand(f, h.r)
    if big.n > h.n:
        return False
    target = h.edge_set()
    pattern = big.edges
    for img in permutations(range(h.n), big.n):
        if all(tuple(sorted(img[v] for v in e)) in target for e in pattern):
            return True
    return False


def brute_max_matching(A: list, adj: dict) -> int:
    """Maximum matching size by memoised search over (left index, used-right set)."""
    right = sorted({b for a in A for b in adj.get(a, ())}, key=repr)
    pos = {b: i for i, b in enumerate(right)}
    nbr = [[pos[b] for b in adj.get(a, ())] for a in A]

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> int:
        if i == len(A):
            return 0
        out = best(i + 1, used)
        for j in nbr[i]:
            if not used >> j & 1:
                out = max(out, 1 + best(i + 1, used | 1 << j))
        return out

    return best(0, 0)


def padded_hyperedge(heavinesses: tuple[int, int, int], extra_vertices: int = 0) -> Hypergraph:
    """``{0,1,2}`` plus fresh hyperedges so that pairs (0,1), (0,2), (1,2)
    lie in exactly the given numbers of hyperedges."""
    a, b, c = heavinesses
    n = 3 + (a - 1) + (b - 1) + (c - 1) + extra_vertices
    h = Hypergraph(n, 3, [(0, 1, 2)])
    nxt = 3
    for (u, v), k in zip(((0, 1), (0, 2), (1, 2)), (a, b, c)):
        for _ in range(k - 1):
            h.add((u, v, nxt))
            nxt += 1
    return h
