# -*- coding: utf-8 -*-

"""
Ancestor-Descendant Pairs
=========================
Provides the construction of ancestor-descendant test sets with a controlled
share of inferred pairs, and their export to TSV files.

"""


# %% IMPORTS
# Built-in imports
import logging
from typing import NamedTuple

# Package imports
import e13tools as e13
import numpy as np
import pandas as pd

# ConeKG imports
from conekg.data.closure import all_closures
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['AdPair', 'build_ad_testset', 'export_ad_pairs']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define class holding a single labeled ancestor-descendant pair
class AdPair(NamedTuple):
    """
    A labeled ancestor-descendant pair.

    Positives are pairs of the closure over all splits, where `inferred`
    states that the pair is not in the closure over the training split.
    Negatives keep the ancestor of a positive and have an infinite `gap`.

    """

    ancestor: int
    descendant: int
    relation: int
    label: bool
    inferred: bool
    gap: float


# %% HELPER DEFINITIONS
# This function distributes n over all pools proportionally to their sizes
def _allocate(sizes, n):
    sizes = np.asarray(sizes, dtype=np.float64)
    exact = n*sizes/sizes.sum()
    quotas = np.floor(exact).astype(np.int64)

    # Hand out the remainder by largest fractional part
    order = np.argsort(-(exact-quotas), kind='stable')
    quotas[order[:n-quotas.sum()]] += 1
    return(quotas)


# This function samples n pairs from per-relation pools
def _sample_pools(pools, n, rng, category):
    # Return nothing if nothing is requested
    if not n:
        return([])

    # Check that there is anything to sample from
    rels = list(pools)
    sizes = [len(pools[rel]) for rel in rels]
    if not sum(sizes):
        e13.raise_error("Requested %i %s pairs, but the graph holds 0 of them "
                        "(per-relation pool sizes: %s)!"
                        % (n, category, dict(zip(rels, sizes))), DataError,
                        logger)

    # Sample from every pool
    sampled = []
    for rel, size, quota in zip(rels, sizes, _allocate(sizes, n)):
        if not quota:
            continue
        replace = quota > size
        if replace:
            e13.raise_warning("Relation %i only holds %i %s pairs while %i "
                              "are requested; sampling with replacement."
                              % (rel, size, category, quota), UserWarning,
                              logger)
        idx = rng.choice(size, size=quota, replace=replace)
        sampled.extend((*pools[rel][i], rel) for i in idx)

    # Return sampled pairs
    return(sampled)


# %% FUNCTION DEFINITIONS
# This function builds an ancestor-descendant test set
def build_ad_testset(store, inferred_fraction, pairs, rng, closures=None):
    """
    Builds a test set of `pairs` positive and `pairs` negative
    ancestor-descendant pairs over all hierarchical relations of `store`.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store to sample from.
    inferred_fraction : float
        The fraction of positives that must be inferred pairs, which can be
        derived from all splits but not from the training split alone.
        Usually 0, 0.5 or 1.
    pairs : int
        The number of positives to sample.
    rng : :obj:`~numpy.random.Generator` object
        The random number generator to use.

    Optional
    --------
    closures : dict or None. Default: None
        Dict with keys 'train' and 'all' holding the outputs of
        :func:`~conekg.data.all_closures`. If *None*, they are computed.

    Returns
    -------
    ad_pairs : list of :obj:`~AdPair`
        Every positive immediately followed by its negative.

    """

    # Check input arguments
    if not (0 <= inferred_fraction <= 1):
        e13.raise_error("Inferred fraction must be in [0, 1], not %r!"
                        % (inferred_fraction), DataError, logger)
    if(pairs < 1):
        e13.raise_error("Number of pairs must be positive, not %r!"
                        % (pairs), DataError, logger)
    if not store.hierarchical_relations():
        e13.raise_error("Store does not contain any hierarchical relations!",
                        DataError, logger)

    # Obtain the closures
    if closures is None:
        closures = {source: all_closures(store, source)
                    for source in ('train', 'all')}
    train_cl, all_cl = closures['train'], closures['all']

    # Split the closure of every relation into trained and inferred pools
    trained = {rel: sorted(closure) for rel, closure in train_cl.items()}
    inferred = {rel: sorted(set(all_cl[rel]).difference(train_cl[rel]))
                for rel in train_cl}

    # Sample the positives
    n_inferred = int(round(pairs*inferred_fraction))
    positives = [(*pair, True) for pair in
                 _sample_pools(inferred, n_inferred, rng, 'inferred')]
    positives.extend((*pair, False) for pair in
                     _sample_pools(trained, pairs-n_inferred, rng, 'trained'))

    # Count the descendants of every ancestor
    n_desc = {}
    for rel, closure in all_cl.items():
        for anc, _ in closure:
            n_desc[rel, anc] = n_desc.get((rel, anc), 0)+1

    # Create a negative for every positive
    ad_pairs = []
    for anc, desc, rel, is_inferred in positives:
        # Check that a corrupted descendant exists
        if(n_desc[rel, anc]+1 >= store.n_entities):
            e13.raise_error("Entity %i is an ancestor of every other entity "
                            "under relation %i, so no negative can be "
                            "created!" % (anc, rel), DataError, logger)

        # Draw entities until a non-descendant is found
        while True:
            corrupt = int(rng.integers(store.n_entities))
            if(corrupt != anc and (anc, corrupt) not in all_cl[rel]):
                break

        # Add both pairs
        ad_pairs.append(AdPair(anc, desc, rel, True, is_inferred,
                               float(all_cl[rel][anc, desc])))
        ad_pairs.append(AdPair(anc, corrupt, rel, False, is_inferred,
                               float('inf')))

    # Return pairs
    logger.info("Built ancestor-descendant test set with %i positives "
                "(%i inferred).", len(positives), n_inferred)
    return(ad_pairs)


# This function exports ancestor-descendant pairs to a TSV file
def export_ad_pairs(ad_pairs, filepath, store=None):
    """
    Writes `ad_pairs` to the TSV file `filepath` with a header line. If
    `store` is given, ids are replaced by entity and relation names.

    """

    # Convert the pairs to a data frame
    df = pd.DataFrame(ad_pairs, columns=AdPair._fields)

    # Replace ids by names if possible
    if store is not None:
        entities = np.array(store.entity_names, dtype=object)
        relations = np.array(store.relation_names, dtype=object)
        df['ancestor'] = entities[df['ancestor'].to_numpy(np.int64)]
        df['descendant'] = entities[df['descendant'].to_numpy(np.int64)]
        df['relation'] = relations[df['relation'].to_numpy(np.int64)]

    # Write the file
    df.to_csv(filepath, sep='\t', index=False)
