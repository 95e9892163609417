# -*- coding: utf-8 -*-

"""
Graph Metrics
=============
Provides the Krackhardt scores of directed graphs, together with the
reachability and LCA pair counts they are built from.

"""


# %% IMPORTS
# Built-in imports
import logging
from typing import NamedTuple

# Package imports
import e13tools as e13
import networkx as nx
import numpy as np
import pandas as pd

# ConeKG imports
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['EFFICIENCY_ALPHA', 'KrackhardtScores', 'connected_pairs',
           'krackhardt', 'lca_pairs', 'reachable_pairs', 'store_krackhardt']

# Set logger
logger = logging.getLogger(__name__)

# Weight of the redundant edges in the efficiency
EFFICIENCY_ALPHA = 500


# %% CLASS DEFINITIONS
# Define class holding the Krackhardt scores of a graph
class KrackhardtScores(NamedTuple):
    """
    The four Krackhardt scores of a directed graph, each in [0, 1]. A tree
    scores 1 on all of them.

    """

    connectedness: float
    hierarchy: float
    efficiency: float
    lubedness: float

    # This function returns these scores as flat records
    def to_records(self):
        return([{'report': "Krackhardt scores", **self._asdict()}])

    # This function returns these scores as a text table
    def to_text(self):
        frame = pd.DataFrame(self.to_records()).drop(columns='report')
        return("Krackhardt scores\n%s" % (frame.to_string(
            index=False, float_format=lambda x: '%.4f' % (x))))


# %% FUNCTION DEFINITIONS
# This function counts the ordered pairs connected in the underlying graph
def connected_pairs(graph):
    """
    Returns the number of ordered pairs of distinct nodes of `graph` that
    are connected in its underlying undirected graph.

    """

    return(sum(len(comp)*(len(comp)-1)
               for comp in nx.weakly_connected_components(graph)))


# This function counts the reachable and asymmetrically reachable pairs
def reachable_pairs(graph):
    """
    Counts the ordered pairs of distinct nodes ``(u, v)`` of `graph` where
    `u` can reach `v`.

    Returns
    -------
    n_reachable : int
        The number of pairs where `u` can reach `v`.
    n_asymmetric : int
        The number of those pairs where `v` cannot reach `u`.

    """

    # Nodes within a strongly connected component reach each other
    cond = nx.condensation(graph)
    sizes = {node: len(members)
             for node, members in cond.nodes(data='members')}
    n_symmetric = sum(size*(size-1) for size in sizes.values())

    # Nodes reach all nodes of descending components one way only
    n_asymmetric = sum(
        sizes[node]*sum(sizes[desc] for desc in nx.descendants(cond, node))
        for node in cond)
    return(n_symmetric+n_asymmetric, n_asymmetric)


# This function counts the pairs that have a common ancestor
def lca_pairs(graphs):
    """
    Returns the number of ordered pairs of distinct nodes that have a common
    ancestor in at least one of `graphs`, where every node is an ancestor of
    itself.

    Two nodes have a common ancestor in a graph if and only if they both
    descend from one source component of its condensation.

    Parameters
    ----------
    graphs : :obj:`~networkx.DiGraph` object or list of them
        The graph(s) to search for common ancestors, with every edge
        pointing from parent to child.

    """

    # Obtain all graphs and nodes
    if isinstance(graphs, nx.DiGraph):
        graphs = [graphs]
    nodes = list(set().union(*(graph.nodes for graph in graphs)))
    index = {node: i for i, node in enumerate(nodes)}

    # Label every node with the sources it descends from
    labels = [[] for _ in nodes]
    members = []
    for graph in graphs:
        cond = nx.condensation(graph)
        for source in (node for node, deg in cond.in_degree() if not deg):
            comps = nx.descendants(cond, source) | {source}
            idx = np.array([index[u] for comp in comps
                            for u in cond.nodes[comp]['members']])
            for i in idx:
                labels[i].append(len(members))
            members.append(idx)

    # Group the nodes by their labels
    groups = {}
    for node_labels in labels:
        key = frozenset(node_labels)
        groups[key] = groups.get(key, 0)+1

    # Count the nodes sharing a label with every group, excluding itself
    total = 0
    mask = np.zeros(len(nodes), dtype=bool)
    for key, count in groups.items():
        if not key:
            continue
        mask[:] = False
        for label in key:
            mask[members[label]] = True
        total += count*(int(mask.sum())-1)
    return(total)


# This function computes the Krackhardt scores of a graph
def krackhardt(graph, lub_graphs=None, alpha=EFFICIENCY_ALPHA):
    """
    Computes the Krackhardt scores of the directed `graph`.

    Parameters
    ----------
    graph : :obj:`~networkx.DiGraph` object
        The graph to score, holding at least two nodes.

    Optional
    --------
    lub_graphs : list of :obj:`~networkx.DiGraph` objects or None. \
        Default: None
        The graphs of the single relations, with every edge pointing from
        parent to child, that an LCA may be found in. If *None*, `graph`
        itself is used.
    alpha : float. Default: 500
        The weight of the redundant edges in the efficiency.

    Returns
    -------
    scores : :obj:`~KrackhardtScores` object
        The connectedness, hierarchy, efficiency and LUBedness, all clamped
        to [0, 1]. Ratios without any pairs to count are 1.

    """

    # Check the graph
    n = graph.number_of_nodes()
    if(n < 2):
        e13.raise_error("Krackhardt scores require at least 2 nodes, not %i!"
                        % (n), DataError, logger)
    n_pairs = n*(n-1)

    # Connectedness
    connectedness = connected_pairs(graph)/n_pairs

    # Hierarchy
    n_reachable, n_asymmetric = reachable_pairs(graph)
    hierarchy = n_asymmetric/n_reachable if n_reachable else 1.0

    # Efficiency
    m = graph.number_of_edges()-nx.number_of_selfloops(graph)
    if(n == 2):
        efficiency = 1.0 if m <= 1 else 0.0
    else:
        efficiency = 1-alpha*(m-(n-1))/((n-1)*(n-2)/2)

    # LUBedness over all pairs with an LCA in any single relation
    if lub_graphs is None:
        lub_graphs = [graph]
    lubedness = lca_pairs(lub_graphs)/n_pairs

    # Return scores
    scores = KrackhardtScores(*(min(max(float(value), 0.0), 1.0) for value in
                                (connectedness, hierarchy, efficiency,
                                 lubedness)))
    logger.info("Krackhardt scores of graph with %i nodes: %s.", n, scores)
    return(scores)


# This function computes the Krackhardt scores of a triple store
def store_krackhardt(store, source='all', alpha=EFFICIENCY_ALPHA):
    """
    Computes the Krackhardt scores of the graph of all relations of
    `store`, where LCAs are searched for in every hierarchical relation
    separately.

    """

    graph = store.graph(source)
    lub_graphs = [store.relation_graph(rel, source)
                  for rel in store.hierarchical_relations()]
    return(krackhardt(graph, lub_graphs, alpha))

