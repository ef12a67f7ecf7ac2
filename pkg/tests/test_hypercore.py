import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanturan.gallery import expand, star_cover, t_fan
from fanturan.hypercore import (
    Graph,
    Hypergraph,
    HypergraphError,
    UnsupportedUniformityError,
    complete_hypergraph,
    pair,
    subedges,
)

from helpers import random_hypergraph, rescan_heaviness


@st.composite
def hypergraphs(draw, max_n=8, rs=(2, 3, 4)):
    r = draw(st.sampled_from(rs))
    n = draw(st.integers(min_value=r, max_value=max_n))
    all_sets = list(combinations(range(n), r))
    chosen = draw(st.lists(st.sampled_from(all_sets), max_size=25))
    return Hypergraph(n, r, chosen)


class TestHeaviness:
    def test_single_hyperedge(self):
        assert Hypergraph(3, 3, [(0, 1, 2)]).heaviness(0, 1) == 1

    def test_complete_on_seven(self):
        h = complete_hypergraph(7, 3)
        assert {h.heaviness(u, v) for u, v in combinations(range(7), 2)} == {5}

    def test_star_cover_pair(self):
        assert star_cover(10, 2, 3).heaviness(0, 1) == 8

    def test_heavy_light(self):
        h = complete_hypergraph(7, 3)
        assert h.is_heavy(0, 1, 5) and not h.is_heavy(0, 1, 6)
        assert h.is_light(0, 1, 5) and not h.is_light(0, 1, 4)

    def test_out_of_range(self):
        with pytest.raises(HypergraphError):
            Hypergraph(3, 3, [(0, 1, 2)]).heaviness(0, 3)

    @settings(max_examples=150, deadline=None)
    @given(hypergraphs())
    def test_index_matches_rescan(self, h):
        for u, v in combinations(range(h.n), 2):
            assert h.heaviness(u, v) == rescan_heaviness(h, u, v)

    @settings(max_examples=150, deadline=None)
    @given(hypergraphs())
    def test_heaviness_sum(self, h):
        total = sum(h.heaviness(u, v) for u, v in combinations(range(h.n), 2))
        assert total == comb(h.r, 2) * len(h)

    def test_index_survives_removal_and_rebuild(self):
        rng = random.Random(3)
        h = random_hypergraph(rng, 9, 3, 0.4)
        for e in h.edges[::3]:
            assert h.remove(e)
        before = {p: h.heaviness(*p) for p in combinations(range(9), 2)}
        h.rebuild_index()
        assert before == {p: h.heaviness(*p) for p in combinations(range(9), 2)}
        assert before == {p: rescan_heaviness(h, *p) for p in combinations(range(9), 2)}


class TestLinks:
    def test_link_set_examples(self):
        assert Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)]).link_set(0, 1) == {2, 3}
        assert Hypergraph(3, 3, [(0, 1, 2)]).link_set(1, 2) == {0}
        assert star_cover(6, 1, 3).link_set(1, 2) == {0}

    def test_link_set_needs_r3(self):
        with pytest.raises(UnsupportedUniformityError):
            Hypergraph(4, 4, [(0, 1, 2, 3)]).link_set(0, 1)

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs(rs=(3,)))
    def test_link_set_membership(self, h):
        for u, v in combinations(range(h.n), 2):
            link = h.link_set(u, v)
            assert len(link) == h.heaviness(u, v)
            for w in range(h.n):
                if w not in (u, v):
                    assert (w in link) == ((u, v, w) in h)

    def test_link_graph_examples(self):
        assert Hypergraph(3, 3, [(0, 1, 2)]).link_graph(0).edges == [(1, 2)]
        assert star_cover(6, 1, 3).link_graph(0) == Graph(6, combinations(range(1, 6), 2))

    def test_link_graph_of_fan_center(self):
        h, cmap = expand(t_fan(2), 3)
        center = cmap.core_vertices[0]
        through = [e for e in h.edges if center in e]
        g = h.link_graph(center)
        assert len(through) == 4
        assert sorted(g.edges) == sorted(tuple(w for w in e if w != center) for e in through)

    def test_link_graph_needs_r3(self):
        with pytest.raises(UnsupportedUniformityError):
            Hypergraph(4, 4).link_graph(0)

    def test_link_hypergraph(self):
        h = Hypergraph(5, 3, [(0, 1, 2), (0, 3, 4), (1, 2, 3)])
        assert h.link_hypergraph({0}).edges == h.link_graph(0).edges
        assert h.link_hypergraph({0}).r == 2
        assert Hypergraph(4, 4, [(0, 1, 2, 3)]).link_hypergraph({0, 1}).edges == [(2, 3)]
        assert h.link_hypergraph(set()) == h

    def test_link_hypergraph_too_big(self):
        with pytest.raises(HypergraphError):
            Hypergraph(4, 3, [(0, 1, 2)]).link_hypergraph({0, 1, 2})


class TestContainers:
    def test_subedges(self):
        assert subedges((0, 1, 2), 2) == [(0, 1), (0, 2), (1, 2)]
        assert len(subedges((0, 1, 2, 3), 3)) == 4
        assert subedges((2, 0, 1), 3) == [(0, 1, 2)]

    def test_duplicate_insert_is_noop(self):
        h = Hypergraph(4, 3)
        assert h.add((2, 1, 0))
        assert not h.add((0, 1, 2))
        assert len(h) == 1 and h.heaviness(0, 1) == 1

    @pytest.mark.parametrize("bad", [(0, 1), (0, 0, 1), (0, 1, 5), (-1, 0, 1)])
    def test_bad_hyperedges(self, bad):
        with pytest.raises(HypergraphError):
            Hypergraph(5, 3, [bad])

    def test_graph_invariants(self):
        g = Graph(3, [(1, 0), (0, 1)])
        assert g.edges == [(0, 1)]
        with pytest.raises(HypergraphError):
            g.add_edge(1, 1)
        with pytest.raises(HypergraphError):
            g.add_edge(0, 3)

    def test_pair(self):
        assert pair(3, 1) == (1, 3)
        with pytest.raises(HypergraphError):
            pair(2, 2)

    def test_codegree(self):
        h = complete_hypergraph(6, 4)
        assert h.codegree({0, 1, 2}) == 3
        assert h.codegree({0}) == comb(5, 3)
        assert h.codegree(()) == len(h)
