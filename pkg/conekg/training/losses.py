# -*- coding: utf-8 -*-

"""
Losses
======
Provides the training batches and the distance, angle and total losses that
a :class:`~conekg.model.ConeModel` is trained with.

"""


# %% IMPORTS
# Built-in imports
import logging
from typing import NamedTuple

# Package imports
import e13tools as e13
import torch
import torch.nn.functional as F

# ConeKG imports
from conekg._globals import DTYPE
from conekg.model import RelationKind
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['LossTerms', 'TrainingBatch', 'angle_loss', 'distance_loss',
           'loss_terms', 'total_loss']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define class holding a batch of positive triples and their negatives
class TrainingBatch(NamedTuple):
    """
    A batch of positive triples with `k` corrupted entities each.

    `tail_corrupt` states per negative whether it replaces the tail or the
    head of its positive. Samplers of *ConeKG* only corrupt tails, and head
    prediction is learned through reciprocal relations instead.

    """

    heads: torch.Tensor
    rels: torch.Tensor
    tails: torch.Tensor
    negatives: torch.Tensor
    tail_corrupt: torch.Tensor

    # This function creates a batch from an array of triples
    @classmethod
    def from_triples(cls, triples, negatives, tail_corrupt=None):
        """
        Creates a batch from `triples` of shape (B, 3) and `negatives` of
        shape (B, k), checking all invariants of a batch.

        If `tail_corrupt` is *None*, every negative corrupts the tail.

        """

        # Convert the input
        triples = torch.as_tensor(triples, dtype=torch.int64).reshape(-1, 3)
        negatives = torch.as_tensor(negatives, dtype=torch.int64)
        if tail_corrupt is None:
            tail_corrupt = torch.ones_like(negatives, dtype=torch.bool)
        tail_corrupt = torch.as_tensor(tail_corrupt, dtype=torch.bool)

        # Create and check batch
        batch = cls(triples[:, 0], triples[:, 1], triples[:, 2], negatives,
                    tail_corrupt)
        batch.check()
        return(batch)

    @property
    def size(self):
        return(self.heads.shape[0])

    # This function checks the invariants of this batch
    def check(self):
        # Check that the batch is not empty
        if not self.size:
            e13.raise_error("Training batch is empty!", DataError, logger)

        # Check that all negative lists have the same length
        if(self.negatives.ndim != 2 or self.negatives.shape[0] != self.size or
           self.tail_corrupt.shape != self.negatives.shape):
            e13.raise_error("Negatives must have shape (%i, k), not %s!"
                            % (self.size, tuple(self.negatives.shape)),
                            DataError, logger)

        # Check that no negative equals the entity it replaces
        replaced = torch.where(self.tail_corrupt, self.tails[:, None],
                               self.heads[:, None])
        if (self.negatives == replaced).any():
            e13.raise_error("Negatives cannot equal the entity they replace!",
                            DataError, logger)


# Define class holding the terms of the total loss
class LossTerms(NamedTuple):
    distance: torch.Tensor
    angle: torch.Tensor
    total: torch.Tensor


# %% FUNCTION DEFINITIONS
# This function computes the self-adversarial distance loss
def distance_loss(batch, model, cfg=None):
    """
    Returns the distance loss of `batch` under `model`.

    Every negative is weighted by the softmax over its positive's negatives
    of their scores times the self-adversarial temperature. The weights are
    detached, such that no gradient flows through them.

    Parameters
    ----------
    batch : :obj:`~TrainingBatch` object
        The batch to compute the loss of.
    model : :obj:`~conekg.model.ConeModel` object
        The model to score the triples with.

    Optional
    --------
    cfg : :obj:`~conekg.model.ModelConfig` object or None. Default: None
        The configuration holding the temperature. If *None*, the
        configuration of `model` is used.

    Returns
    -------
    loss : :obj:`~torch.Tensor` object
        The scalar mean loss over all positives.

    """

    # Obtain config
    cfg = model.cfg if cfg is None else cfg

    # Score the positives
    pos = model(batch.heads, batch.rels, batch.tails)

    # Score the negatives
    heads = torch.where(batch.tail_corrupt, batch.heads[:, None],
                        batch.negatives)
    tails = torch.where(batch.tail_corrupt, batch.negatives,
                        batch.tails[:, None])
    rels = batch.rels[:, None].expand_as(heads)
    neg = model(heads, rels, tails)

    # Weigh the negatives
    weights = F.softmax(cfg.adv_temperature*neg, dim=-1).detach()

    # Return loss
    return((-F.logsigmoid(pos)-(weights*F.logsigmoid(-neg)).sum(-1)).mean())


# This function computes the angle loss
def angle_loss(batch, model, cfg=None):
    """
    Returns the mean angle violation of the hierarchical positives of
    `batch` under `model`, or zero if the batch holds none. Negatives are
    not used.

    """

    # Select the hierarchical positives
    hier = model.kinds[batch.rels] != RelationKind.NONE
    if not hier.any():
        return(torch.zeros((), dtype=DTYPE))

    # Return the mean violation
    return(model.angle_violation(batch.heads[hier], batch.rels[hier],
                                 batch.tails[hier]).mean())


# This function computes all loss terms
def loss_terms(batch, model, cfg=None):
    """
    Returns the distance, angle and total loss of `batch` as a
    :obj:`~LossTerms` object. The angle term is skipped for configurations
    that do not use it.

    """

    # Obtain config
    cfg = model.cfg if cfg is None else cfg

    # Compute both terms
    dist = distance_loss(batch, model, cfg)
    if cfg.uses_angle_loss:
        angle = angle_loss(batch, model, cfg)
    else:
        angle = torch.zeros((), dtype=DTYPE)

    # Return terms
    return(LossTerms(dist, angle, dist+cfg.angle_weight*angle))


# This function computes the total loss
def total_loss(batch, model, cfg=None):
    """
    Returns the distance loss of `batch` plus the angle loss weighted by the
    angle weight of `cfg`.

    """

    return(loss_terms(batch, model, cfg).total)
