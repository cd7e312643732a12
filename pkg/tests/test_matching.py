import pytest
from hypothesis import given, settings

from wedge import graph as gr
from wedge import matching as mt
from wedge import structures as st
from wedge.graph import from_edge_list
from wedge.matching import EdgeSet

from oracles import brute_equimatchable, brute_wed, maximal_matching_sizes, minimal_eds_sizes
from test_graph import graphs

P4 = st.path(4)  # a-b-c-d as 0-1-2-3


def es(g, *pairs):
    return EdgeSet.of(g, pairs)


class TestNeighbourhoods:
    def test_closed_edge_neighborhood(self):
        k3 = st.k3()
        assert len(mt.closed_edge_neighborhood(k3, es(k3, (0, 1)))) == 3
        assert set(mt.closed_edge_neighborhood(P4, es(P4, (1, 2)))) == set(P4.edges)
        assert mt.closed_edge_neighborhood(P4, EdgeSet(P4, 0)).bits == 0

    def test_owner_mismatch(self):
        with pytest.raises(gr.GraphError):
            mt.closed_edge_neighborhood(st.k3(), es(P4, (0, 1)))
        with pytest.raises(gr.GraphError):
            EdgeSet(P4, 1 << 3)

    def test_remove_edge_neighborhood_c7(self):
        c7 = st.cycle(7)
        reduced = mt.remove_edge_neighborhood(c7, es(c7, (0, 1)))
        assert reduced.n == 7
        assert set(reduced.edges) == {(2, 3), (3, 4), (4, 5), (5, 6)}
        assert reduced.degree(0) == reduced.degree(1) == 0

    def test_remove_edge_neighborhood_k3_and_empty(self):
        k3 = st.k3()
        assert mt.remove_edge_neighborhood(k3, es(k3, (0, 1))).m == 0
        assert mt.remove_edge_neighborhood(P4, 0) == P4

    def test_remove_needs_matching(self):
        with pytest.raises(gr.GraphError):
            mt.remove_edge_neighborhood(P4, es(P4, (0, 1), (1, 2)))


class TestMatchings:
    def test_maximal(self):
        c4 = st.cycle(4)
        assert mt.is_maximal_matching(c4, es(c4, (0, 1), (2, 3)))
        assert mt.is_maximal_matching(P4, es(P4, (1, 2)))
        assert mt.is_matching(P4, es(P4, (0, 1)))
        assert not mt.is_maximal_matching(P4, es(P4, (0, 1)))
        assert not mt.is_matching(P4, es(P4, (0, 1), (1, 2)))

    def test_sizes(self):
        assert mt.maximal_matching_sizes(P4) == {1, 2}
        assert mt.maximal_matching_sizes(st.cycle(4)) == {2}
        assert mt.maximal_matching_sizes(st.cycle(7)) == {3}
        assert mt.maximal_matching_sizes(gr.empty_graph(3)) == {0}

    def test_witnesses_are_maximal(self):
        for size, wit in mt.enumerate_maximal_matchings(st.crystal()).items():
            assert len(wit) == size and mt.is_maximal_matching(st.crystal(), wit)

    def test_early_exit_stops_at_two_sizes(self):
        assert len(mt.enumerate_maximal_matchings(st.path(7), early_exit=True)) == 2

    def test_matching_number(self):
        assert mt.matching_number(st.complete_bipartite(3, 3)) == 3
        assert mt.matching_number(st.cycle(7)) == 3
        assert mt.matching_number(gr.empty_graph(4)) == 0

    def test_size_cap(self):
        with pytest.raises(gr.SizeLimitError):
            mt.is_equimatchable(st.path(15))
        with pytest.raises(gr.SizeLimitError):
            mt.enumerate_minimal_eds(st.path(13))

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=7))
    def test_against_brute_force(self, g):
        if g.m > 12:
            return
        assert mt.maximal_matching_sizes(g) == maximal_matching_sizes(list(g.edges))
        assert set(mt.iter_maximal_matchings(g)) == {
            m for m in mt.iter_matchings(g) if mt.is_maximal_matching(g, m)
        }


class TestDomination:
    def test_house_private_neighbour_rule(self):
        h = st.house()
        # x = 2 on the base of the triangle; star of x is {02, 23, 24}
        star = es(h, (0, 2), (2, 3), (2, 4))
        assert mt.is_edge_dominating(h, star)
        # 24's only candidates 34 and 24 are covered by 23
        assert not mt.is_minimal_eds(h, star)
        assert len(mt.private_neighbors(h, star, h.edge_index(2, 4))) == 0

    def test_c4(self):
        c4 = st.cycle(4)
        assert mt.is_minimal_eds(c4, es(c4, (0, 1), (1, 2)))
        assert not mt.is_minimal_eds(c4, es(c4, (0, 1), (1, 2), (2, 3)))

    def test_summaries(self):
        s = mt.enumerate_minimal_eds(st.k3())
        assert (s.min_size, s.max_size) == (1, 1)
        s = mt.enumerate_minimal_eds(st.cycle(5))
        assert (s.min_size, s.max_size) == (2, 2)
        s = mt.enumerate_minimal_eds(P4)
        assert (s.min_size, s.max_size) == (1, 2)
        assert set(s.witness_min) == {(1, 2)} and set(s.witness_max) == {(0, 1), (2, 3)}
        assert s.exhausted

    def test_edge_domination_number(self):
        assert mt.edge_domination_number(st.k3()) == 1
        assert mt.edge_domination_number(st.cycle(7)) == 3
        assert mt.edge_domination_number(st.house()) == 2
        assert mt.edge_domination_number(gr.empty_graph(2)) == 0

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=7))
    def test_against_brute_force(self, g):
        if g.m > 12:
            return
        sizes = minimal_eds_sizes(list(g.edges))
        s = mt.enumerate_minimal_eds(g)
        assert (s.min_size, s.max_size) == (min(sizes), max(sizes))
        assert mt.is_minimal_eds(g, s.witness_min) and mt.is_minimal_eds(g, s.witness_max)
        assert {m.bit_count() for m in mt.all_minimal_eds(g)} == sizes


class TestPredicates:
    def test_equimatchable(self):
        assert mt.is_equimatchable(st.complete(4))
        assert not mt.is_equimatchable(P4)
        assert mt.is_equimatchable(st.cycle(5))

    def test_wed(self):
        assert not mt.is_well_edge_dominated(st.complete_bipartite(2, 3))
        for g in (st.crystal(), st.house(), st.dream_house()):
            assert mt.is_well_edge_dominated(g)
        assert not mt.is_well_edge_dominated(st.diamond())
        assert mt.maximal_matching_sizes(st.diamond()) == {1, 2}

    def test_edgeless_conventions(self):
        g = gr.empty_graph(3)
        assert mt.is_equimatchable(g) and mt.is_well_edge_dominated(g)

    def test_randomly_matchable(self):
        assert mt.is_randomly_matchable(st.complete_bipartite(3, 3))
        assert not mt.is_randomly_matchable(st.cycle(6))
        assert mt.maximal_matching_sizes(st.cycle(6)) == {2, 3}
        assert mt.is_randomly_matchable(st.path(2))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7))
    def test_wed_against_brute_force(self, g):
        if g.m > 11:
            return
        assert mt.is_well_edge_dominated(g) == brute_wed(list(g.edges))
        assert mt.is_equimatchable(g) == brute_equimatchable(list(g.edges))


class TestProperties:
    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=8))
    def test_maximal_matchings_are_minimal_eds(self, g):
        mm = mt.maximal_matching_sizes(g)
        s = mt.enumerate_minimal_eds(g)
        eds_sizes = {m.bit_count() for m in mt.all_minimal_eds(g)} if g.m <= 14 else None
        if eds_sizes is not None:
            assert mm <= eds_sizes
        # gamma_e is the smallest maximal matching
        assert s.min_size == min(mm)

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=8))
    def test_wed_implies_equimatchable(self, g):
        if mt.is_well_edge_dominated(g):
            assert mt.is_equimatchable(g)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=8))
    def test_wed_is_componentwise(self, g):
        comps = gr.connected_components(g)
        parts = [gr.induced_subgraph(g, sorted(c)) for c in comps]
        assert mt.is_well_edge_dominated(g) == all(mt.is_well_edge_dominated(p) for p in parts)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_reduction_keeps_wed(self, g):
        if not mt.is_well_edge_dominated(g):
            return
        for m in mt.iter_matchings(g):
            assert mt.is_well_edge_dominated(mt.remove_edge_neighborhood(g, m))

    def test_disjoint_union_sizes_add(self):
        g = gr.disjoint_union(st.path(4), st.cycle(4))
        assert mt.maximal_matching_sizes(g) == {3, 4}
        assert not mt.is_well_edge_dominated(g)
        assert mt.is_well_edge_dominated(gr.disjoint_union(st.cycle(5), st.k3()))

    def test_equal_neighbourhoods_give_equal_sizes(self):
        g = st.complete_bipartite(2, 4)
        seen = {}
        for m in mt.iter_matchings(g):
            seen.setdefault(mt.closed_edge_neighborhood(g, m).bits, set()).add(m.bit_count())
        assert all(len(v) == 1 for v in seen.values())


def test_every_single_edge_dominates_a_star():
    g = st.star(4)
    for i in range(g.m):
        assert mt.is_minimal_eds(g, 1 << i)
    assert from_edge_list(1, []).m == 0
