"""Tests for the brute-force oracle and the corpus enumerators.

The corpus counts are validated against a second, independent enumerator
written here: labeled graphs canonicalized by minimizing the adjacency
bitstring over all vertex permutations (small n), and labeled trees built
from Prüfer sequences.  Only after those agree are the larger counts
frozen.
"""

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eclab.coalition import edge_coalition_number, is_ec_partition, validate_partition
from eclab.errors import BudgetExceeded, TooManyEdges
from eclab.families import cycle_graph, diamond_graph, path_graph, star_graph
from eclab.graphs import Graph, are_isomorphic
from eclab.oracle import (
    CorpusSpec,
    accepts_partition,
    brute_force_ec,
    enumerate_corpus,
    export_corpus,
    graphs_of_order,
)

from test_graphs import small_graphs


# --- independent enumerator helpers ----------------------------------------


def _canonical_form(n: int, edges: frozenset[tuple[int, int]]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        image = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)
        )
        if best is None or image < best:
            best = image
    return best


def _count_labeled_classes(n: int, keep) -> int:
    """Classes among all labeled graphs on n vertices that satisfy ``keep``."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        g = Graph(n, sorted(edges))
        if not keep(g):
            continue
        seen.add(_canonical_form(n, edges))
    return len(seen)


def _connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def _prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    seq_list = list(seq)
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    for v in seq_list:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            # Insert keeping the candidate list sorted.
            lo = 0
            while lo < len(leaves) and leaves[lo] < v:
                lo += 1
            leaves.insert(lo, v)
    edges.append((leaves[0], leaves[1]))
    return Graph(n, edges)


class TestBruteForce:
    @pytest.mark.parametrize(
        "graph,expected",
        [
            (path_graph(6), 4),
            (cycle_graph(6), 6),
            (diamond_graph(), 5),
        ],
    )
    def test_known_values(self, graph, expected):
        assert brute_force_ec(graph) == expected

    def test_edge_cap(self):
        with pytest.raises(TooManyEdges):
            brute_force_ec(star_graph(11))
        with pytest.raises(TooManyEdges):
            brute_force_ec(Graph(2))

    @settings(max_examples=25, deadline=None)
    @given(small_graphs(max_n=5, min_m=1, max_m=7))
    def test_matches_solver(self, g):
        assert brute_force_ec(g) == edge_coalition_number(g).ec

    @settings(max_examples=60)
    @given(small_graphs(min_m=1), st.data())
    def test_double_entry_with_verifier(self, g, data):
        labels = data.draw(
            st.lists(st.integers(0, max(0, g.m - 1)), min_size=g.m, max_size=g.m)
        )
        groups: dict[int, set[int]] = {}
        for e, b in enumerate(labels):
            groups.setdefault(b, set()).add(e)
        blocks = validate_partition(g, tuple(groups.values()))
        assert accepts_partition(g, blocks) == bool(is_ec_partition(g, blocks))


class TestCorpusCounts:
    def test_tree_counts_small(self):
        assert [len(graphs_of_order("trees", n)) for n in range(1, 6)] == [1, 1, 1, 2, 3]

    def test_unicyclic_base(self):
        (only,) = graphs_of_order("unicyclic", 3)
        assert are_isomorphic(only, cycle_graph(3))

    def test_against_independent_enumerator_all(self):
        for n in range(1, 6):
            assert len(graphs_of_order("all", n)) == _count_labeled_classes(
                n, lambda g: True
            )

    def test_against_independent_enumerator_connected(self):
        for n in range(1, 6):
            assert len(graphs_of_order("connected", n)) == _count_labeled_classes(
                n, _connected
            )

    def test_against_independent_enumerator_unicyclic(self):
        for n in range(3, 6):
            assert len(graphs_of_order("unicyclic", n)) == _count_labeled_classes(
                n, lambda g: _connected(g) and g.m == g.n
            )

    def test_trees_against_prufer_enumeration(self):
        for n in range(3, 7):
            forms = set()
            for seq in _all_sequences(n - 2, n):
                t = _prufer_tree(seq, n)
                forms.add(_canonical_form(n, frozenset(t.edges)))
            assert len(graphs_of_order("trees", n)) == len(forms)

    def test_frozen_larger_counts(self):
        # Counts at larger orders, frozen after the small-order enumerators
        # above agreed with the augmentation route.
        assert [len(graphs_of_order("trees", n)) for n in range(6, 11)] == [6, 11, 23, 47, 106]
        assert [len(graphs_of_order("unicyclic", n)) for n in range(6, 9)] == [13, 33, 89]
        assert len(graphs_of_order("connected", 6)) == 112

    def test_pairwise_non_isomorphic(self):
        graphs = graphs_of_order("connected", 5)
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert not are_isomorphic(graphs[i], graphs[j])


def _all_sequences(length: int, n: int):
    if length == 0:
        yield ()
        return
    for head in range(n):
        for tail in _all_sequences(length - 1, n):
            yield (head,) + tail


class TestCorpusApi:
    def test_deterministic_order(self):
        spec = CorpusSpec(5, ("trees", "unicyclic"))
        first = [g.edges for g in enumerate_corpus(spec)]
        second = [g.edges for g in enumerate_corpus(spec)]
        assert first == second

    def test_class_caps(self):
        with pytest.raises(BudgetExceeded):
            CorpusSpec(10, ("all",))
        with pytest.raises(BudgetExceeded):
            CorpusSpec(4, ("widgets",))
        CorpusSpec(10, ("trees",))  # allowed

    def test_export_file_names(self, tmp_path):
        written = export_corpus(CorpusSpec(4, ("trees",)), tmp_path)
        names = sorted(p.name for p in written)
        assert names == ["trees_1_0.el", "trees_2_0.el", "trees_3_0.el", "trees_4_0.el", "trees_4_1.el"]
        # Round-trip one file.
        from eclab.graphs import parse_edge_list

        g = parse_edge_list((tmp_path / "trees_4_1.el").read_text())
        assert g.n == 4 and g.m == 3
