import random
from fractions import Fraction
from math import ceil

import pytest

from fanturan.hypercore import Graph
from fanturan.matching import (
    BipartiteGraph,
    greedy_independent_set,
    hall_analysis,
    is_matching,
    max_matching,
)

from helpers import brute_max_matching, random_graph


def random_bipartite(rng: random.Random, na: int, nb: int, p: float) -> BipartiteGraph:
    A = [f"a{i}" for i in range(na)]
    B = [f"b{j}" for j in range(nb)]
    return BipartiteGraph(A, B, {a: [b for b in B if rng.random() < p] for a in A})


class TestMaxMatching:
    def test_complete_3x2(self):
        g = BipartiteGraph.from_edges("abc", "xy", [(a, b) for a in "abc" for b in "xy"])
        m = max_matching(g)
        assert len(m) == 2 and is_matching(g, m)

    def test_disjoint_edges(self):
        g = BipartiteGraph.from_edges("abc", "xyz", zip("abc", "xyz"))
        assert max_matching(g) == {"a": "x", "b": "y", "c": "z"}

    def test_empty(self):
        assert max_matching(BipartiteGraph(["a"], ["x"], {})) == {}

    def test_needs_augmentation(self):
        # greedy a->x blocks b; an augmenting path fixes it
        g = BipartiteGraph.from_edges("ab", "xy", [("a", "x"), ("a", "y"), ("b", "x")])
        assert len(max_matching(g)) == 2

    @pytest.mark.parametrize("seed", range(500))
    def test_against_brute_force(self, seed):
        rng = random.Random(seed)
        g = random_bipartite(rng, rng.randint(0, 8), rng.randint(0, 8), rng.random())
        m = max_matching(g)
        assert is_matching(g, m)
        assert len(m) == brute_max_matching(g.A, g.adj)

    def test_bad_labels(self):
        with pytest.raises(ValueError):
            BipartiteGraph(["a"], ["x"], {"a": ["y"]})
        with pytest.raises(ValueError):
            BipartiteGraph(["a", "a"], ["x"], {})


class TestHall:
    def test_common_neighborhood(self):
        g = BipartiteGraph.from_edges(["a1", "a2", "a3"], ["b1", "b2"], [(a, b) for a in ("a1", "a2", "a3") for b in ("b1", "b2")])
        res = hall_analysis(g, 3)
        assert res.kind == "witness" and sorted(res.witness) == ["b1", "b2"]

    def test_matching_branch(self):
        g = BipartiteGraph.from_edges("abc", "xyz", zip("abc", "xyz"))
        res = hall_analysis(g, 3)
        assert res.kind == "matching" and res.matching == {"a": "x", "b": "y", "c": "z"}

    def test_hypothesis_failure(self):
        g = BipartiteGraph.from_edges("abc", "xyz", [("a", "x"), ("b", "x"), ("b", "y"), ("c", "x"), ("c", "y")])
        res = hall_analysis(g, 4)
        assert res.kind == "failure" and res.reasons

    def test_low_degree_reported(self):
        g = BipartiteGraph.from_edges("abcd", "xyz", [("a", "x")] + [(v, w) for v in "bcd" for w in "xy"])
        res = hall_analysis(g, 4)
        assert res.kind == "failure"
        assert any("degree" in s for s in res.reasons)

    @pytest.mark.parametrize("seed", range(300))
    def test_mutual_exclusion(self, seed):
        rng = random.Random(seed)
        g = random_bipartite(rng, rng.randint(1, 6), rng.randint(1, 6), rng.random())
        k = rng.randint(1, 5)
        res = hall_analysis(g, k)
        best = brute_max_matching(g.A, g.adj)
        if best >= k:
            assert res.kind == "matching"
            assert len(res.matching) == k and is_matching(g, res.matching)
        else:
            assert res.kind != "matching"


class TestIndependentSet:
    def test_empty_graph(self):
        assert greedy_independent_set(Graph(5)) == [0, 1, 2, 3, 4]

    def test_complete(self):
        g = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert len(greedy_independent_set(g)) == 1

    def test_path(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        s = greedy_independent_set(g)
        assert len(s) >= 2 and 0 in s

    @pytest.mark.parametrize("seed", range(100))
    def test_caro_wei(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 40)
        g = random_graph(rng, n, rng.random() * 0.5)
        s = greedy_independent_set(g)
        assert all(not g.has_edge(u, v) for u in s for v in s if u < v)
        assert len(s) >= sum(Fraction(1, g.degree(v) + 1) for v in range(n))
        assert len(s) >= ceil(Fraction(n * n, n + 2 * len(g)))
