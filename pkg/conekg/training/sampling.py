# -*- coding: utf-8 -*-

"""
Sampling
========
Provides negative sampling and the iteration over shuffled training batches.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg.training.losses import TrainingBatch
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['iterate_batches', 'sample_negatives']

# Set logger
logger = logging.getLogger(__name__)


# %% FUNCTION DEFINITIONS
# This function samples corrupted tails
def sample_negatives(tails, entity_count, k, generator=None):
    """
    Draws `k` entities for every entry of `tails`, uniformly over all
    entities but the entry itself. Draws that hit the true tail are
    redrawn.

    Parameters
    ----------
    tails : int or array_like of int
        The true tail(s) to corrupt.
    entity_count : int
        The number of entities to draw from.
    k : int
        The number of negatives per tail.

    Optional
    --------
    generator : :obj:`~torch.Generator` object or None. Default: None
        The random number generator to use.

    Returns
    -------
    negatives : :obj:`~torch.Tensor` object
        Tensor of shape ``tails.shape + (k,)`` holding the negatives.

    """

    # Check input arguments
    if(entity_count < 2):
        e13.raise_error("Negative sampling requires at least 2 entities, not "
                        "%i!" % (entity_count), DataError, logger)
    if(k < 1):
        e13.raise_error("Number of negatives must be positive, not %r!"
                        % (k), DataError, logger)

    # Draw all negatives
    tails = torch.as_tensor(tails, dtype=torch.int64).unsqueeze(-1)
    neg = torch.randint(entity_count, (*tails.shape[:-1], k),
                        generator=generator)

    # Redraw all collisions until there are none left
    hit = neg == tails
    while hit.any():
        neg[hit] = torch.randint(entity_count, (int(hit.sum()),),
                                 generator=generator)
        hit = neg == tails

    # Return negatives
    return(neg)


# This function iterates over shuffled training batches
def iterate_batches(triples, entity_count, batch_size, k, generator=None):
    """
    Yields the :obj:`~conekg.training.TrainingBatch` objects of one epoch
    over `triples` in shuffled order, each holding at most `batch_size`
    positives with `k` corrupted tails each.

    """

    triples = torch.as_tensor(triples, dtype=torch.int64)
    order = torch.randperm(triples.shape[0], generator=generator)
    for idx in order.split(batch_size):
        batch = triples[idx]
        yield TrainingBatch.from_triples(
            batch, sample_negatives(batch[:, 2], entity_count, k, generator))
