# -*- coding: utf-8 -*-

# %% IMPORTS
# Built-in imports
from itertools import permutations

# Package imports
from hypothesis import given, settings, strategies as st
import networkx as nx
import pandas as pd
import pytest

# ConeKG imports
from conekg.data import build_store
from conekg.hierarchy import (
    KrackhardtScores, connected_pairs, krackhardt, lca_pairs,
    reachable_pairs, store_krackhardt)
from conekg.model import RelationKind
from conekg.utils.exceptions import DataError

# Random directed graphs on at most 9 nodes, self loops included
edge_lists = st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)),
                      min_size=1, max_size=30)


# %% HELPER FUNCTIONS
# Ancestors of every node, every node being its own ancestor
def reflexive_ancestors(graph):
    return({node: nx.ancestors(graph, node) | {node} for node in graph})


# Counts all pairs by checking every ordered pair on its own
def brute_force_counts(graph, lub_graphs):
    undirected = graph.to_undirected()
    ancestors = [reflexive_ancestors(lub) for lub in lub_graphs]
    n_connected = n_reachable = n_asymmetric = n_lca = 0
    for u, v in permutations(graph.nodes, 2):
        n_connected += nx.has_path(undirected, u, v)
        if nx.has_path(graph, u, v):
            n_reachable += 1
            n_asymmetric += not nx.has_path(graph, v, u)
        n_lca += any(u in anc and v in anc and anc[u] & anc[v]
                     for anc in ancestors)
    return(n_connected, n_reachable, n_asymmetric, n_lca)


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for the pair counts
class TestPairCounts(object):
    # Test all counts against checking every pair
    @settings(max_examples=60, deadline=None)
    @given(edge_lists, edge_lists)
    def test_brute_force(self, edges, other_edges):
        graph = nx.DiGraph(edges)
        other = nx.DiGraph([edge for edge in other_edges
                            if edge[0] in graph and edge[1] in graph])
        lub_graphs = [graph, other] if other.number_of_nodes() else [graph]
        expected = brute_force_counts(graph, lub_graphs)
        assert (connected_pairs(graph), *reachable_pairs(graph),
                lca_pairs(lub_graphs)) == expected

    # Test the counts of a path
    def test_path(self):
        graph = nx.DiGraph([(0, 1), (1, 2)])
        assert connected_pairs(graph) == 6
        assert reachable_pairs(graph) == (3, 3)
        assert lca_pairs(graph) == 6

    # Test the counts of a cycle
    def test_cycle(self):
        graph = nx.DiGraph([(0, 1), (1, 2), (2, 0)])
        assert reachable_pairs(graph) == (6, 0)
        assert lca_pairs(graph) == 6

    # Test that siblings have an LCA but co-parents do not
    def test_lca(self):
        assert lca_pairs(nx.DiGraph([(0, 1), (0, 2)])) == 6
        assert lca_pairs(nx.DiGraph([(1, 0), (2, 0)])) == 4


# Pytest class for krackhardt
class TestKrackhardt(object):
    # Test that perfect binary trees score 1 on all metrics
    @pytest.mark.parametrize('height', [1, 2, 3, 5])
    def test_binary_tree(self, height):
        tree = nx.balanced_tree(2, height, create_using=nx.DiGraph)
        assert krackhardt(tree) == KrackhardtScores(1.0, 1.0, 1.0, 1.0)

    # Test that a 2-cycle has no hierarchy
    def test_two_cycle(self):
        scores = krackhardt(nx.DiGraph([(0, 1), (1, 0)]))
        assert scores.hierarchy == 0
        assert scores.connectedness == 1
        assert scores.efficiency == 0

    # Test a graph of two separate edges
    def test_disconnected(self):
        scores = krackhardt(nx.DiGraph([(0, 1), (2, 3)]))
        assert scores.connectedness == pytest.approx(4/12)
        assert scores.hierarchy == 1
        assert scores.lubedness == pytest.approx(4/12)

    # Test that redundant edges lower the efficiency
    def test_efficiency(self):
        tree = nx.balanced_tree(2, 3, create_using=nx.DiGraph)
        tree.add_edge(0, 7)
        n = tree.number_of_nodes()
        assert krackhardt(tree).efficiency == 0
        assert krackhardt(tree, alpha=1).efficiency == pytest.approx(
            1-1/((n-1)*(n-2)/2))

    # Test that self loops are not counted as edges
    def test_self_loops(self):
        tree = nx.balanced_tree(2, 2, create_using=nx.DiGraph)
        tree.add_edge(3, 3)
        assert krackhardt(tree).efficiency == 1

    # Test that all scores lie in [0, 1]
    @settings(max_examples=40, deadline=None)
    @given(edge_lists)
    def test_range(self, edges):
        graph = nx.DiGraph(edges)
        if graph.number_of_nodes() < 2:
            return
        assert all(0 <= value <= 1 for value in krackhardt(graph))

    # Test that graphs with fewer than two nodes are refused
    def test_too_small(self):
        graph = nx.DiGraph()
        graph.add_node(0)
        with pytest.raises(DataError):
            krackhardt(graph)

    # Test the records and text of the scores
    def test_report(self):
        scores = krackhardt(nx.balanced_tree(2, 2, create_using=nx.DiGraph))
        records = scores.to_records()
        assert records[0]['lubedness'] == 1.0
        assert "Krackhardt scores" in scores.to_text()


# Pytest class for store_krackhardt
class TestStoreKrackhardt(object):
    # Test that a store holding a single tree scores 1 on all metrics
    def test_tree_store(self):
        tree = nx.balanced_tree(2, 3, create_using=nx.DiGraph)
        frame = pd.DataFrame([(str(u), 'down', str(v)) for u, v in tree.edges],
                             columns=['head', 'relation', 'tail'])
        store = build_store({'train': frame},
                            {'down': RelationKind.HYPONYM})
        assert store_krackhardt(store) == (1.0, 1.0, 1.0, 1.0)

    # Test that LCAs are only searched for in hierarchical relations
    def test_non_hierarchical(self):
        frame = pd.DataFrame([('a', 'down', 'b'), ('a', 'down', 'c'),
                              ('b', 'link', 'c')],
                             columns=['head', 'relation', 'tail'])
        store = build_store({'train': frame},
                            {'down': RelationKind.HYPONYM})
        assert store_krackhardt(store).lubedness == 1
        store = store.with_kinds([RelationKind.NONE]*store.n_base_relations)
        assert store_krackhardt(store).lubedness == 0
