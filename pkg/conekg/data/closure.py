# -*- coding: utf-8 -*-

"""
Closures
========
Provides the per-relation transitive closures of hierarchical relations,
annotated with hierarchy gaps.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import networkx as nx

# All declaration
__all__ = ['all_closures', 'ancestors_by_descendant', 'transitive_closure']

# Set logger
logger = logging.getLogger(__name__)


# %% FUNCTION DEFINITIONS
# This function computes the transitive closure of a hierarchical relation
def transitive_closure(store, rel, edge_source='train'):
    """
    Returns the transitive closure of the hierarchical relation `rel`.

    Only paths that consist of edges of `rel` alone are followed. Hypernym
    relations are traversed in reverse, such that every pair points from
    ancestor to descendant.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store holding the relation.
    rel : int
        The id of the hierarchical relation.

    Optional
    --------
    edge_source : {'train'; 'all'}. Default: 'train'
        Whether to use the training edges or the edges of all splits.

    Returns
    -------
    closure : dict of {(int, int): int}
        Mapping of every ``(ancestor, descendant)`` pair onto its hierarchy
        gap, the length of the shortest path between them.

    Raises
    ------
    :class:`~conekg.utils.exceptions.ContractError`
        If `rel` is not hierarchical.

    """

    # Check that the relation is hierarchical
    store.check_hierarchical(rel)

    # Obtain the graph of the relation
    graph = store.relation_graph(rel, edge_source)

    # Run a BFS from every node
    closure = {}
    for source in graph:
        lengths = nx.single_source_shortest_path_length(graph, source)
        closure.update(((source, target), gap)
                       for target, gap in lengths.items() if target != source)

    # Return closure
    logger.debug("Closure of relation %i (%s edges) holds %i pairs.",
                 rel, edge_source, len(closure))
    return(closure)


# This function computes the closures of all hierarchical relations
def all_closures(store, edge_source='train'):
    """
    Returns a dict mapping every hierarchical base relation id of `store`
    onto its :func:`~transitive_closure` over `edge_source`.

    """

    return({rel: transitive_closure(store, rel, edge_source)
            for rel in store.hierarchical_relations()})


# This function inverts a closure
def ancestors_by_descendant(closure):
    """
    Returns a dict mapping every descendant in `closure` onto a dict of its
    ancestors and their hierarchy gaps.

    """

    ancestors = {}
    for (anc, desc), gap in closure.items():
        ancestors.setdefault(desc, {})[anc] = gap
    return(ancestors)
