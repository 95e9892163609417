# -*- coding: utf-8 -*-

"""
Subspaces
=========
Provides the allocation of the frozen subspace masks of all relations.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg.model import VARIANTS, RelationKind
from conekg.utils.exceptions import ConfigError

# All declaration
__all__ = ['MODES', 'allocate_subspaces']

# Set logger
logger = logging.getLogger(__name__)

# Allocation modes
MODES = ('overlapping', 'orthogonal')


# %% FUNCTION DEFINITIONS
# This function allocates the subspace masks of all relations
def allocate_subspaces(kinds, dim, subspace_dim, seed, mode='overlapping',
                       variant='cone', reciprocal=False):
    """
    Allocates a subspace mask for every relation in `kinds`.

    Every hierarchical relation selects `subspace_dim` of all `dim` planes,
    while non-hierarchical relations select none.

    Parameters
    ----------
    kinds : list of :class:`~conekg.model.RelationKind`
        The kinds of all base relations.
    dim : int
        The number of planes `d`.
    subspace_dim : int
        The number of planes `d_s` every hierarchical relation selects.
    seed : int
        The seed of the random selection.

    Optional
    --------
    mode : {'overlapping'; 'orthogonal'}. Default: 'overlapping'
        In 'overlapping' mode, every hierarchical relation draws its planes
        independently. In 'orthogonal' mode, all hierarchical relations get
        disjoint planes.
    variant : {'cone'; 'rotc'; 'no_rotation'}. Default: 'cone'
        The model variant. 'rotc' selects no planes and 'no_rotation' selects
        all planes for every hierarchical relation.
    reciprocal : bool. Default: False
        Whether to append the masks of the reciprocal relations, which equal
        those of their base relations.

    Returns
    -------
    masks : :obj:`~torch.Tensor` object of shape (n_relations, dim)
        The boolean masks of all relations.

    Raises
    ------
    :class:`~conekg.utils.exceptions.ConfigError`
        If `subspace_dim` is not in [1, `dim`] or the orthogonal mode runs
        out of planes.

    """

    # Check input arguments
    if not (0 < subspace_dim <= dim):
        e13.raise_error("Subspace dimension must be in [1, %i], not %r!"
                        % (dim, subspace_dim), ConfigError, logger)
    if mode not in MODES:
        e13.raise_error("Subspace mode must be one of %s, not %r!"
                        % (MODES, mode), ConfigError, logger)
    if variant not in VARIANTS:
        e13.raise_error("Model variant must be one of %s, not %r!"
                        % (VARIANTS, variant), ConfigError, logger)

    # Determine the hierarchical relations
    hier = [i for i, kind in enumerate(kinds)
            if RelationKind(kind).hierarchical]
    masks = torch.zeros(len(kinds), dim, dtype=torch.bool)

    # Select the planes of every hierarchical relation
    if(variant == 'no_rotation'):
        masks[hier] = True
    elif(variant == 'cone' and mode == 'overlapping'):
        gen = torch.Generator().manual_seed(seed)
        for rel in hier:
            planes = torch.randperm(dim, generator=gen)[:subspace_dim]
            masks[rel, planes] = True
    elif(variant == 'cone'):
        if(len(hier)*subspace_dim > dim):
            e13.raise_error("Orthogonal subspaces of %i hierarchical "
                            "relations with dimension %i need %i planes, but "
                            "only %i are available!"
                            % (len(hier), subspace_dim,
                               len(hier)*subspace_dim, dim), ConfigError,
                            logger)
        perm = torch.randperm(dim, generator=torch.Generator().manual_seed(
            seed))
        for i, rel in enumerate(hier):
            masks[rel, perm[i*subspace_dim:(i+1)*subspace_dim]] = True

    # Append the masks of the reciprocal relations
    if reciprocal:
        masks = torch.cat([masks, masks])

    # Return masks
    logger.debug("Allocated %s subspaces of dimension %i for %i hierarchical "
                 "relations.", mode, subspace_dim, len(hier))
    return(masks)
