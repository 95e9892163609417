# -*- coding: utf-8 -*-

"""
LCA Prediction
==============
Provides the evaluation of lowest-common-ancestor prediction.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import numpy as np
import torch

# ConeKG imports
from conekg.eval.ranking import check_compatible
from conekg.eval.reports import RankingReport, rank_of
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['lca_predict', 'lca_ranks']

# Set logger
logger = logging.getLogger(__name__)


# %% FUNCTION DEFINITIONS
# This function ranks the true LCAs of queries
@torch.no_grad()
def lca_ranks(model, queries):
    """
    Returns the best rank of any true LCA of every query in `queries` among
    all entities, ranked descending by their LCA scores under `model`.
    Queries without a true LCA get rank NaN.

    """

    ranks = np.full(len(queries), np.nan)
    for i, query in enumerate(queries):
        if not query.truth:
            continue
        scores = model.lca_scores(query.u, query.v, query.relation)
        truth = torch.as_tensor(sorted(query.truth), dtype=torch.int64)
        ranks[i] = float(rank_of(scores, scores[truth]).min())
    return(ranks)


# This function evaluates LCA prediction
def lca_predict(model, store, queries, name="LCA prediction"):
    """
    Evaluates `model` on predicting the lowest common ancestors of
    `queries`.

    A query counts as a hit at N if any of its true LCAs is among the N
    highest-scoring entities. Queries without a true LCA are skipped.

    Parameters
    ----------
    model : :obj:`~conekg.model.ConeModel` object
        The model to evaluate.
    store : :obj:`~conekg.data.TripleStore` object
        The store the queries were built from.
    queries : list of :obj:`~conekg.data.LcaQuery`
        The queries, as returned by :func:`~conekg.data.build_lca_queries`.

    Optional
    --------
    name : str. Default: "LCA prediction"
        The name of the report.

    Returns
    -------
    report : :obj:`~conekg.eval.RankingReport` object
        The MRR and Hits@N over all answerable queries, grouped in the
        buckets 'hops<=N' of queries whose true LCA is at most N hops away,
        and per relation.

    """

    # Check input arguments
    check_compatible(model, store)
    if not len(queries):
        e13.raise_error("No LCA queries to evaluate!", DataError, logger)

    # Rank all queries and drop those without a true LCA
    ranks = lca_ranks(model, queries)
    keep = ~np.isnan(ranks)
    skipped = int((~keep).sum())
    if skipped:
        e13.raise_warning("Skipped %i LCA queries without a common ancestor."
                          % (skipped), UserWarning, logger)
    ranks = ranks[keep]
    hops = np.array([query.hop for query in queries])[keep]
    rels = np.array([query.relation for query in queries])[keep]

    # Group the ranks per hop limit and per relation
    groups = {'hops<=%i' % (hop): hops <= hop for hop in np.unique(hops)}
    groups.update((store.relation_names[rel], rels == rel)
                  for rel in np.unique(rels))

    # Return report
    report = RankingReport.from_ranks(name, ranks, groups, skipped)
    logger.info("%s: MRR %.4f over %i queries.", name, report.mrr,
                report.count)
    return(report)
