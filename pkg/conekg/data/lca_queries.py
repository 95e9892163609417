# -*- coding: utf-8 -*-

"""
LCA Queries
===========
Provides the construction of lowest-common-ancestor queries and their
brute-force truth sets.

"""


# %% IMPORTS
# Built-in imports
import logging
from typing import FrozenSet, NamedTuple

# Package imports
import e13tools as e13

# ConeKG imports
from conekg.data.closure import ancestors_by_descendant, transitive_closure
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['LcaQuery', 'build_lca_queries', 'lca_truth']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define class holding a single LCA query
class LcaQuery(NamedTuple):
    """
    A lowest-common-ancestor query for the entities `u` and `v` under a
    hierarchical relation.

    `truth` holds every common ancestor with the minimal summed hierarchy
    gap towards `u` and `v`, and `hop` is the smallest maximum gap of those
    ancestors. An empty `truth` means the entities share no ancestor.

    """

    u: int
    v: int
    relation: int
    truth: FrozenSet[int]
    hop: int


# %% FUNCTION DEFINITIONS
# This function computes the true LCAs of two entities
def lca_truth(ancestors, u, v):
    """
    Returns the set of lowest common ancestors of `u` and `v` and its hop
    count.

    Parameters
    ----------
    ancestors : dict of {int: dict of {int: int}}
        Mapping of every entity onto its strict ancestors and their gaps, as
        returned by :func:`~conekg.data.ancestors_by_descendant`.
    u, v : int
        The query entities.

    Returns
    -------
    truth : frozenset of int
        All common ancestors minimizing the summed gap. Empty if there are
        none.
    hop : int
        The smallest maximum gap over all ancestors in `truth`, or 0 if
        `truth` is empty.

    """

    # Obtain all common ancestors
    anc_u = ancestors.get(u, {})
    anc_v = ancestors.get(v, {})
    common = anc_u.keys() & anc_v.keys()
    if not common:
        return(frozenset(), 0)

    # Determine the ancestors with the smallest summed gap
    sums = {w: anc_u[w]+anc_v[w] for w in common}
    best = min(sums.values())
    truth = frozenset(w for w, total in sums.items() if total == best)

    # Return truth and hop count
    return(truth, min(max(anc_u[w], anc_v[w]) for w in truth))


# This function builds LCA queries for all hierarchical relations
def build_lca_queries(store, hops, count, rng, relations=None,
                      edge_source='train'):
    """
    Samples up to `count` distinct LCA queries whose true LCA lies at most
    `hops` edges above both query entities.

    Queries are spread evenly over the hierarchical relations. For every
    query, an entity `u` with ancestors is drawn first, then one of its
    ancestors within `hops` edges, and finally another descendant of that
    ancestor within `hops` edges as `v`.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store to sample from.
    hops : int
        The largest allowed hop count of a query.
    count : int
        The number of queries to sample.
    rng : :obj:`~numpy.random.Generator` object
        The random number generator to use.

    Optional
    --------
    relations : list of int or None. Default: None
        The relations to use. If *None*, all hierarchical base relations are
        used.
    edge_source : {'train'; 'all'}. Default: 'train'
        The edges the closures and truth sets are computed on.

    Returns
    -------
    queries : list of :obj:`~LcaQuery`
        The sampled queries, which can be fewer than `count` if the graph
        does not hold enough distinct queries.

    """

    # Check input arguments
    if(hops < 1 or count < 1):
        e13.raise_error("Hop limit and query count must be positive!",
                        DataError, logger)
    if relations is None:
        relations = store.hierarchical_relations()
    if not relations:
        e13.raise_error("Store does not contain any hierarchical relations!",
                        DataError, logger)

    # Prepare the ancestors and descendants of every relation
    tables = []
    for rel in relations:
        closure = transitive_closure(store, rel, edge_source)
        ancestors = ancestors_by_descendant(closure)
        descendants = {}
        for (anc, desc), gap in closure.items():
            if(gap <= hops):
                descendants.setdefault(anc, []).append(desc)
        tables.append((rel, ancestors, descendants, sorted(ancestors)))

    # Sample queries
    queries = {}
    for attempt in range(50*count):
        if(len(queries) == count):
            break

        # Draw a relation, an entity and one of its near ancestors
        rel, ancestors, descendants, children = tables[attempt % len(tables)]
        if not children:
            continue
        u = children[rng.integers(len(children))]
        near = sorted(w for w, gap in ancestors[u].items() if gap <= hops)
        if not near:
            continue
        w = near[rng.integers(len(near))]

        # Draw another descendant of that ancestor
        others = descendants[w]
        v = others[rng.integers(len(others))]
        key = (rel, min(u, v), max(u, v))
        if(u == v or key in queries):
            continue

        # Compute the truth set and keep the query if it is near enough
        truth, hop = lca_truth(ancestors, u, v)
        if(hop <= hops):
            queries[key] = LcaQuery(u, v, rel, truth, hop)

    # Warn if not enough queries were found
    if(len(queries) < count):
        e13.raise_warning("Only %i distinct LCA queries with at most %i hops "
                          "could be sampled instead of %i."
                          % (len(queries), hops, count), UserWarning, logger)

    # Return queries
    return(list(queries.values()))
