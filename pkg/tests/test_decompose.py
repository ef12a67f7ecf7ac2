import random
from itertools import combinations
from math import comb

import pytest

from fanturan.decompose import (
    classify_hyperedges_3,
    classify_hyperedges_general,
    classify_pairs,
    counting_audit_3,
    counting_audit_general,
    prefix_condition,
    sorted_heaviness,
)
from fanturan.gallery import star_cover
from fanturan.hypercore import Hypergraph, UnsupportedUniformityError

from helpers import padded_hyperedge, random_hypergraph


def padded_general(heavinesses: list[int], r: int) -> Hypergraph:
    """One hyperedge on ``0..r-1`` whose i-th (r-1)-subedge, in lexicographic
    order, lies in exactly ``heavinesses[i]`` hyperedges."""
    base = tuple(range(r))
    subs = list(combinations(base, r - 1))
    n = r + sum(c - 1 for c in heavinesses)
    h = Hypergraph(n, r, [base])
    nxt = r
    for s, c in zip(subs, heavinesses):
        for _ in range(c - 1):
            h.add(s + (nxt,))
            nxt += 1
    return h


class TestClassifyPairs:
    def test_one_hyperedge(self):
        ec = classify_pairs(Hypergraph(3, 3, [(0, 1, 2)]), 1)
        assert ec.classes[1] == {(0, 1), (0, 2), (1, 2)}

    def test_star_cover(self):
        ec = classify_pairs(star_cover(8, 1, 3), 1)
        assert (1, 2) in ec.classes[1]
        assert (0, 1) in ec.heavy_rest
        assert ec.heaviness[(0, 1)] == 6

    def test_large_t(self):
        ec = classify_pairs(star_cover(8, 1, 3), 100)
        assert not ec.heavy_rest and not ec.classes[2] and not ec.classes[3]

    @pytest.mark.parametrize("seed", range(30))
    def test_partition(self, seed):
        rng = random.Random(seed)
        r = rng.choice((3, 4))
        h = random_hypergraph(rng, rng.randint(r, 10), r, rng.random() * 0.6)
        t = rng.randint(1, 4)
        ec = classify_pairs(h, t)
        occurring = {s for e in h.edges for s in combinations(e, r - 1)}
        buckets = list(ec.classes.values()) + [ec.heavy_rest]
        assert sum(len(b) for b in buckets) == len(occurring)
        assert set().union(*buckets) == occurring
        for i, members in ec.classes.items():
            for s in members:
                assert (i - 1) * t < h.codegree(s) <= i * t
        for s in ec.heavy_rest:
            assert h.codegree(s) > r * t


class TestClassifyHyperedges:
    def test_one_hyperedge(self):
        hc = classify_hyperedges_3(Hypergraph(3, 3, [(0, 1, 2)]), 1)
        assert hc.label((0, 1, 2)) == "H1"

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_one_of_each(self, t):
        h = padded_hyperedge((t, 2 * t, 3 * t))
        assert classify_hyperedges_3(h, t).label((0, 1, 2)) == "H1"

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_prime(self, t):
        h = padded_hyperedge((t + 1, 2 * t + 1, 3 * t + 1))
        assert classify_hyperedges_3(h, t).label((0, 1, 2)) == "H'"
        assert classify_hyperedges_general(h, t).label((0, 1, 2)) == "H'"

    def test_h4(self):
        h = padded_hyperedge((4, 5, 6))
        assert classify_hyperedges_3(h, 2).label((0, 1, 2)) == "H4"
        assert classify_hyperedges_general(h, 2).label((0, 1, 2)) == "cell(0, 1, 2)"

    def test_priority(self):
        h = padded_hyperedge((2, 3, 4))
        # t=2: heavinesses 2,3,4 give classes E1, E2, E2 -> H2 outranks H1
        assert classify_hyperedges_3(h, 2).label((0, 1, 2)) == "H2"

    def test_r3_requires_r3(self):
        with pytest.raises(UnsupportedUniformityError):
            classify_hyperedges_3(Hypergraph(4, 4), 1)

    def test_r4_single(self):
        hc = classify_hyperedges_general(Hypergraph(4, 4, [(0, 1, 2, 3)]), 1)
        assert hc.label((0, 1, 2, 3)) == "H1"

    @pytest.mark.parametrize("t", [1, 2])
    def test_r4_prime(self, t):
        h = padded_general([t + 1, 2 * t + 1, 3 * t + 1, 4 * t + 1], 4)
        assert classify_hyperedges_general(h, t).label((0, 1, 2, 3)) == "H'"

    def test_prefix_condition(self):
        assert prefix_condition((1, 0, 0))
        assert prefix_condition((0, 1, 2))
        assert prefix_condition((0, 0, 3))
        assert not prefix_condition((0, 0, 2))
        assert not prefix_condition((0, 0, 0, 0))


class TestAudits:
    def test_one_hyperedge(self):
        rep = counting_audit_3(Hypergraph(3, 3, [(0, 1, 2)]), 1)
        assert rep.ok
        assert rep.slacks["h1 <= t*e1"] == 2

    def test_empty(self):
        rep = counting_audit_3(Hypergraph(6, 3), 2)
        assert rep.ok and set(rep.h.values()) == {0} and set(rep.e.values()) == {0}
        gen = counting_audit_general(Hypergraph(6, 4), 2)
        assert gen.ok and set(gen.h.values()) == {0}

    def test_star_cover_frozen(self):
        rep = counting_audit_3(star_cover(10, 2, 3), 2)
        assert rep.e == {1: 28, 2: 0, 3: 0}
        assert rep.h == {"h1": 56, "h2": 0, "h3": 0, "h4": 0, "prime": 8}
        assert set(rep.slacks.values()) == {0}
        assert rep.ok

    def test_general_star_cover_frozen(self):
        rep = counting_audit_general(star_cover(12, 2, 4), 2)
        assert rep.e == {1: 120, 2: 0, 3: 0, 4: 0}
        assert rep.h["h1"] == 240 and rep.h["prime"] == 45 and rep.h["h0"] == 0
        s = rep.slacks
        assert s["t*sum|Ei| <= t*C(n,r-1)"] == 2 * comb(12, 3) - 240
        assert s["sum|Hi| + |H0| <= t*sum|Ei|"] == 0
        assert rep.ok

    @pytest.mark.parametrize("seed", range(40))
    def test_r3_and_general_agree(self, seed):
        rng = random.Random(seed)
        h = random_hypergraph(rng, rng.randint(3, 14), 3, rng.random() * 0.7)
        t = rng.randint(1, 4)
        a, b = counting_audit_3(h, t), counting_audit_general(h, t)
        assert a.ok and b.ok
        assert a.e == b.e
        for key in ("h1", "h2", "h3", "prime"):
            assert a.h[key] == b.h[key]
        assert a.h["h4"] == b.h["h0"]

    @pytest.mark.parametrize("seed", range(30))
    def test_prime_members_are_heavy(self, seed):
        rng = random.Random(500 + seed)
        h = random_hypergraph(rng, rng.randint(5, 16), 3, rng.random())
        t = rng.randint(1, 3)
        ec = classify_pairs(h, t)
        for e in classify_hyperedges_3(h, t, ec).prime:
            a, b, c = sorted_heaviness(ec, e)
            assert a >= t + 1 and b >= 2 * t + 1 and c >= 3 * t + 1

    @pytest.mark.parametrize("seed", range(20))
    def test_general_r5(self, seed):
        rng = random.Random(900 + seed)
        h = random_hypergraph(rng, rng.randint(5, 10), 5, rng.random() * 0.6)
        rep = counting_audit_general(h, rng.randint(1, 3))
        assert rep.ok, rep.to_dict()

    def test_report_serializes(self):
        import json

        json.dumps(counting_audit_3(padded_hyperedge((4, 5, 6)), 2).to_dict())
