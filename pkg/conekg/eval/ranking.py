# -*- coding: utf-8 -*-

"""
Ranking
=======
Provides the filtered knowledge graph completion evaluation.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import numpy as np
import torch

# ConeKG imports
from conekg.eval.reports import RankingReport, rank_of
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['check_compatible', 'kg_completion', 'rank_triples']

# Set logger
logger = logging.getLogger(__name__)


# %% FUNCTION DEFINITIONS
# This function checks that a model fits a triple store
def check_compatible(model, store):
    """
    Raises a :class:`~conekg.utils.exceptions.DataError` if `model` does not
    embed exactly the entities and relations of `store`.

    """

    if(model.n_entities != store.n_entities or
       model.n_relations != store.n_relations):
        e13.raise_error("Model embeds %i entities and %i relations, but the "
                        "data holds %i entities and %i relations!"
                        % (model.n_entities, model.n_relations,
                           store.n_entities, store.n_relations), DataError,
                        logger)


# This function ranks the true tails of triples
@torch.no_grad()
def rank_triples(model, store, triples, filtered=True, batch_size=256):
    """
    Returns the rank of the true tail of every triple in `triples` among all
    entities, scored by `model`.

    Parameters
    ----------
    model : :obj:`~conekg.model.ConeModel` object
        The model to score with.
    store : :obj:`~conekg.data.TripleStore` object
        The store providing the known tails of every query.
    triples : array_like of shape (n, 3)
        The triples to rank.

    Optional
    --------
    filtered : bool. Default: True
        Whether all other known tails of a query, from any split, are
        removed from its candidates.
    batch_size : int. Default: 256
        The number of queries scored at once.

    Returns
    -------
    ranks : :obj:`~numpy.ndarray` object of shape (n,)
        The 1-based ranks, where candidates tied with the true tail count as
        half above it.

    """

    triples = torch.as_tensor(np.asarray(triples), dtype=torch.int64)
    ranks = []
    for batch in triples.reshape(-1, 3).split(batch_size):
        heads, rels, tails = batch.T
        scores = model.score_all_tails(heads, rels)
        target = scores.gather(1, tails[:, None])[:, 0]

        # Remove all other known tails
        if filtered:
            for i, (head, rel, tail) in enumerate(batch.tolist()):
                known = store.known_tails(head, rel)
                known = torch.as_tensor(known[known != tail])
                scores[i, known] = -np.inf

        ranks.append(rank_of(scores, target))

    # Return ranks
    if not ranks:
        return(np.empty(0))
    return(torch.cat(ranks).numpy().astype(np.float64))


# This function evaluates knowledge graph completion
def kg_completion(model, store, split='test', filtered=True):
    """
    Evaluates `model` on predicting the tails of all triples in `split` of
    `store`.

    If `store` uses reciprocal relations, heads are predicted as the tails
    of the reciprocal triples and both directions are averaged together.

    Parameters
    ----------
    model : :obj:`~conekg.model.ConeModel` object
        The model to evaluate.
    store : :obj:`~conekg.data.TripleStore` object
        The store holding the triples.

    Optional
    --------
    split : {'train'; 'valid'; 'test'}. Default: 'test'
        The split to evaluate on.
    filtered : bool. Default: True
        Whether to use the filtered setting.

    Returns
    -------
    report : :obj:`~conekg.eval.RankingReport` object
        The MRR and Hits@N over all queries, grouped per relation.

    """

    # Check input arguments
    check_compatible(model, store)
    triples = store.split(split, with_reciprocals=True)
    if not len(triples):
        e13.raise_error("Split %r holds no triples to evaluate!" % (split),
                        DataError, logger)

    # Rank all triples
    ranks = rank_triples(model, store, triples, filtered)

    # Group the ranks per relation
    names = store.relation_names
    groups = {names[rel]: triples[:, 1] == rel
              for rel in np.unique(triples[:, 1])}

    # Return report
    name = "KG completion (%s, %s)" % (split,
                                       'filtered' if filtered else 'raw')
    report = RankingReport.from_ranks(name, ranks, groups)
    logger.info("%s: MRR %.4f over %i queries.", name, report.mrr,
                report.count)
    return(report)
