"""Tests for graph construction, edge structure, metrics, and isomorphism."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eclab.errors import (
    DuplicateEdge,
    EdgeIndexOutOfRange,
    OutOfRangeVertex,
    SelfLoop,
    SizeLimitExceeded,
)
from eclab.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    two_disjoint_edges,
)
from eclab.graphs import (
    Graph,
    are_isomorphic,
    edge_neighborhood,
    format_edge_list,
    graph_from_edge_list,
    graph_metrics,
    is_full_edge,
    line_graph,
    parse_edge_list,
)


@st.composite
def small_graphs(draw, max_n=6, min_m=0, max_m=None):
    min_n = 1
    while min_n * (min_n - 1) // 2 < min_m:
        min_n += 1
    n = draw(st.integers(min_value=min_n, max_value=max(max_n, min_n)))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not all_pairs:
        return Graph(n, [])
    cap = len(all_pairs) if max_m is None else min(max_m, len(all_pairs))
    picked = draw(
        st.lists(st.sampled_from(all_pairs), unique=True, min_size=min_m, max_size=cap)
    )
    return Graph(n, picked)


class TestConstruction:
    def test_p3_direct(self):
        g = graph_from_edge_list(3, [(0, 1), (1, 2)])
        assert g.n == 3 and g.m == 2
        assert g.edges == ((0, 1), (1, 2))

    def test_c4_direct(self):
        g = graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.m == 4

    def test_duplicate_edge_rejected_unordered(self):
        with pytest.raises(DuplicateEdge):
            graph_from_edge_list(2, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            graph_from_edge_list(2, [(0, 0)])

    def test_out_of_range_endpoint(self):
        with pytest.raises(OutOfRangeVertex):
            graph_from_edge_list(2, [(0, 2)])

    def test_isolated_vertices_allowed(self):
        g = graph_from_edge_list(5, [(0, 1)])
        assert g.n == 5 and g.m == 1


class TestEdgeNeighborhood:
    def test_p4_middle_edge(self):
        g = path_graph(4)
        nb = edge_neighborhood(g, 1)
        assert nb.neighbors == frozenset({0, 2})
        assert nb.degree == 2

    def test_k4_every_edge_has_four_neighbors(self):
        g = complete_graph(4)
        for e in range(g.m):
            assert edge_neighborhood(g, e).degree == 4

    def test_star_edges_have_m_minus_1_neighbors(self):
        g = star_graph(4)
        for e in range(g.m):
            assert edge_neighborhood(g, e).degree == g.m - 1

    def test_index_out_of_range(self):
        with pytest.raises(EdgeIndexOutOfRange):
            edge_neighborhood(path_graph(3), 2)

    @settings(max_examples=60)
    @given(small_graphs())
    def test_neighbor_symmetry_and_irreflexivity(self, g):
        hoods = [edge_neighborhood(g, e).neighbors for e in range(g.m)]
        for e in range(g.m):
            assert e not in hoods[e]
            for f in hoods[e]:
                assert e in hoods[f]


class TestFullEdges:
    def test_star_edges_full(self):
        g = star_graph(5)
        assert all(is_full_edge(g, e) for e in range(g.m))

    def test_p5_middle_edge_not_full(self):
        assert not is_full_edge(path_graph(5), 1)

    def test_p3_both_edges_full(self):
        g = path_graph(3)
        assert is_full_edge(g, 0) and is_full_edge(g, 1)


class TestLineGraph:
    def test_line_of_path(self):
        assert are_isomorphic(line_graph(path_graph(4)), path_graph(3))

    def test_line_of_cycle(self):
        assert are_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))

    def test_line_of_star(self):
        assert are_isomorphic(line_graph(star_graph(4)), complete_graph(4))

    @settings(max_examples=60)
    @given(small_graphs())
    def test_line_graph_size_formula(self, g):
        expected = sum(math.comb(g.degree(v), 2) for v in range(g.n))
        assert line_graph(g).m == expected

    @settings(max_examples=60)
    @given(small_graphs(min_m=1))
    def test_line_graph_max_degree_bound(self, g):
        lg = line_graph(g)
        max_deg = max((g.degree(v) for v in range(g.n)), default=0)
        lg_max = max((lg.degree(v) for v in range(lg.n)), default=0)
        assert lg_max <= 2 * max_deg - 2


class TestMetrics:
    def test_p6(self):
        met = graph_metrics(path_graph(6))
        assert met.min_degree == 1 and met.max_degree == 2
        assert met.tree and met.connected
        assert met.diameter == 5
        assert met.longest_path_length == 5

    def test_c5(self):
        met = graph_metrics(cycle_graph(5))
        assert met.min_degree == met.max_degree == 2
        assert met.unicyclic and not met.tree
        assert met.longest_path_length == 4

    def test_two_disjoint_edges(self):
        met = graph_metrics(two_disjoint_edges())
        assert not met.connected
        assert met.diameter is None
        assert met.min_degree == met.max_degree == 1

    def test_tree_flag_consistency(self):
        for g in (path_graph(5), star_graph(4)):
            met = graph_metrics(g)
            assert met.tree and g.m == g.n - 1 and met.connected


class TestIsomorphism:
    def test_c4_is_k22(self):
        assert are_isomorphic(cycle_graph(4), complete_bipartite(2, 2))

    def test_p4_vs_star(self):
        assert not are_isomorphic(path_graph(4), star_graph(3))

    def test_line_star_vs_complete(self):
        assert are_isomorphic(line_graph(star_graph(4)), complete_graph(4))

    def test_same_degree_sequence_different_graphs(self):
        # C6 vs 2*C3: both 2-regular on six vertices.
        c6 = cycle_graph(6)
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not are_isomorphic(c6, two_triangles)

    def test_size_cap(self):
        big = complete_graph(13)
        with pytest.raises(SizeLimitExceeded):
            are_isomorphic(big, big)
        assert are_isomorphic(big, big, max_vertices=13)

    @settings(max_examples=50)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_invariant_under_relabeling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        assert are_isomorphic(g, relabeled)

    @settings(max_examples=30)
    @given(small_graphs())
    def test_reflexive(self, g):
        assert are_isomorphic(g, g)

    @settings(max_examples=30)
    @given(small_graphs(max_n=5), small_graphs(max_n=5))
    def test_symmetric(self, g1, g2):
        assert are_isomorphic(g1, g2) == are_isomorphic(g2, g1)


class TestEdgeListFormat:
    def test_round_trip(self):
        g = complete_bipartite(2, 3)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks_ignored(self):
        text = "# a path\n\n3 2\n0 1\n# middle comment\n1 2\n"
        g = parse_edge_list(text)
        assert g.edges == ((0, 1), (1, 2))

    def test_header_count_mismatch(self):
        with pytest.raises(ValueError):
            parse_edge_list("2 2\n0 1\n")
