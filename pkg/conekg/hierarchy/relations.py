# -*- coding: utf-8 -*-

"""
Relation Classification
=======================
Provides the hierarchical-ness scores of single relations and the
classification of all relations of a triple store into hyponym, hypernym
and non-hierarchical relations.

"""


# %% IMPORTS
# Built-in imports
from dataclasses import dataclass
import logging
from math import log10
from typing import List, NamedTuple

# Package imports
import e13tools as e13
import networkx as nx
import pandas as pd

# ConeKG imports
from conekg.hierarchy.metrics import (
    connected_pairs, lca_pairs, reachable_pairs)
from conekg.model import RelationKind
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['THRESHOLD', 'HierarchicalnessScores', 'RelationClassification',
           'classify', 'classify_all', 'decay_factor', 'lubedness_prime',
           'relation_scores']

# Set logger
logger = logging.getLogger(__name__)

# Default threshold on the total hierarchical-ness score
THRESHOLD = 1.1


# %% CLASS DEFINITIONS
# Define class holding the hierarchical-ness scores of a relation
class HierarchicalnessScores(NamedTuple):
    """
    The hierarchical-ness scores of a single relation.

    `asymmetry` is in [0, 1] and `tree_likeness` in [-1, 1], where a
    positive `tree_likeness` means that edges point from parent to child.
    `total` is the sum of `asymmetry` and the absolute `tree_likeness`.

    """

    relation: str
    asymmetry: float
    tree_likeness: float
    total: float
    decay: float
    kind: RelationKind


# Define class holding the classification of all relations of a store
@dataclass
class RelationClassification(object):
    """
    Holds the hierarchical-ness scores of all base relations of a triple
    store, ordered by relation id, and the threshold they were classified
    with.

    """

    scores: List[HierarchicalnessScores]
    threshold: float = THRESHOLD

    @property
    def kinds(self):
        return([score.kind for score in self.scores])

    # This function returns the kind of every relation by name
    def to_meta(self):
        return({score.relation: score.kind for score in self.scores})

    # This function returns the classification as flat records
    def to_records(self):
        return([{'report': "Relation classification",
                 'relation': score.relation, 'asymmetry': score.asymmetry,
                 'tree_likeness': score.tree_likeness, 'score': score.total,
                 'hierarchical': score.kind.hierarchical,
                 'kind': score.kind.label}
                for score in self.scores])

    # This function returns the classification as a text table
    def to_text(self):
        frame = pd.DataFrame(self.to_records(), columns=[
            'relation', 'asymmetry', 'tree_likeness', 'score',
            'hierarchical', 'kind'])
        return("Relation classification (threshold %s)\n%s"
               % (self.threshold, frame.to_string(
                   index=False, float_format=lambda x: '%.4f' % (x))))


# %% FUNCTION DEFINITIONS
# This function computes the LUBedness of a possibly disconnected graph
def lubedness_prime(graph):
    """
    Returns the fraction of connected ordered pairs of `graph` that have a
    common ancestor, or 0 if `graph` has no connected pairs.

    """

    n_connected = connected_pairs(graph)
    return(lca_pairs(graph)/n_connected if n_connected else 0.0)


# This function computes the decay factor of a graph
def decay_factor(graph):
    """
    Returns the fraction of the nodes of `graph` that have both incoming and
    outgoing edges. If there are none, ``1/(n+1)**2`` is returned instead
    for `n` nodes.

    """

    n = graph.number_of_nodes()
    n_inner = sum(1 for node in graph
                  if graph.in_degree(node) and graph.out_degree(node))
    return(n_inner/n if n_inner else 1/(n+1)**2)


# This function classifies a relation from its scores
def classify(total, tree_likeness, threshold=THRESHOLD):
    """
    Returns the :class:`~conekg.model.RelationKind` of a relation with the
    given `total` and `tree_likeness` scores.

    """

    if(total >= threshold and tree_likeness > 0):
        return(RelationKind.HYPONYM)
    elif(total >= threshold and tree_likeness < 0):
        return(RelationKind.HYPERNYM)
    else:
        return(RelationKind.NONE)


# This function computes the hierarchical-ness scores of a relation
def relation_scores(store, rel, threshold=THRESHOLD, source='train'):
    """
    Computes the hierarchical-ness scores of relation `rel` of `store`.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store holding the relation.
    rel : int
        The relation id.

    Optional
    --------
    threshold : float. Default: 1.1
        The smallest total score of a hierarchical relation.
    source : {'train'; 'all'}. Default: 'train'
        Whether to use the training edges or the edges of all splits.

    Returns
    -------
    scores : :obj:`~HierarchicalnessScores` object
        The scores and kind of the relation.

    Raises
    ------
    :class:`~conekg.utils.exceptions.DataError`
        If the relation has no edges in `source`.

    """

    # Obtain the graph of the relation as written and reversed
    edges = store.relation_edges(rel, source, oriented=False)
    name = store.relation_names[store.base_relation(rel)]
    if not len(edges):
        e13.raise_error("Relation %r has no edges to score!" % (name),
                        DataError, logger)
    graph = nx.DiGraph(edges.tolist())
    reverse = graph.reverse(copy=True)

    # Asymmetry
    n_reachable, n_asymmetric = reachable_pairs(graph)
    asymmetry = n_asymmetric/n_reachable if n_reachable else 1.0

    # Tree-likeness
    decay = decay_factor(graph)
    tree_likeness = ((lubedness_prime(graph)-lubedness_prime(reverse)) /
                     max(1, log10(decay)**2))

    # Return scores
    total = asymmetry+abs(tree_likeness)
    scores = HierarchicalnessScores(name, asymmetry, tree_likeness, total,
                                    decay,
                                    classify(total, tree_likeness, threshold))
    logger.debug("Scored relation %r: %s.", name, scores)
    return(scores)


# This function classifies all relations of a store
def classify_all(store, threshold=THRESHOLD, source='train'):
    """
    Classifies every base relation of `store` by its hierarchical-ness
    scores. See :func:`~relation_scores` for the arguments.

    Returns
    -------
    classification : :obj:`~RelationClassification` object
        The scores of all base relations, whose `kinds` can be passed to
        :meth:`~conekg.data.TripleStore.with_kinds`.

    """

    scores = [relation_scores(store, rel, threshold, source)
              for rel in range(store.n_base_relations)]
    classification = RelationClassification(scores, threshold)
    logger.info("Classified %i of %i relations as hierarchical.",
                sum(kind.hierarchical for kind in classification.kinds),
                len(scores))
    return(classification)
