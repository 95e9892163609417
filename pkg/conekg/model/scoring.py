# -*- coding: utf-8 -*-

"""
Scoring
=======
Provides the triple scoring function, the angle violation of hierarchical
triples and the lowest-common-ancestor score of candidate entities.

All functions take batched :class:`~conekg.model.EntityEmbedding` and
:class:`~conekg.model.RelationEmbedding` views, whose leading axes are
broadcast against each other.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg._globals import DTYPE
from conekg.geometry.cones import _angle_at, _half_aperture
from conekg.geometry.poincare import _distance
from conekg.model.embeddings import RelationKind
from conekg.model.transforms import (
    _restricted_rotate_f2, _rotate_f1, _safe_apex)
from conekg.utils.exceptions import ContractError, DomainError

# All declaration
__all__ = ['angle_violation', 'lca_score', 'plane_distances', 'score']

# Set logger
logger = logging.getLogger(__name__)


# %% DOCSTRINGS
triple_doc =\
    """Parameters
    ----------
    h : :obj:`~conekg.model.EntityEmbedding` object
        The head entities, with planes of shape (..., d, 2).
    r : :obj:`~conekg.model.RelationEmbedding` object
        The relations, with parameters of shape (..., d).
    t : :obj:`~conekg.model.EntityEmbedding` object
        The tail entities, with planes of shape (..., d, 2).
    cfg : :obj:`~conekg.model.ModelConfig` object
        The model configuration providing the aperture constant."""


# %% HELPER DEFINITIONS
# This function checks that all embeddings share the same dimension
def _check_dims(*embeddings):
    dims = {emb.dim for emb in embeddings}
    if(len(dims) != 1):
        e13.raise_error("All embeddings must share the same number of planes, "
                        "not %s!" % (sorted(dims)), DomainError, logger)


# This function checks that all relations are hierarchical
def _check_hierarchical(r):
    if (torch.as_tensor(r.kind) == RelationKind.NONE).any():
        e13.raise_error("This operation is only defined for hierarchical "
                        "relations!", ContractError, logger)


# This function returns the cone owners and children of hierarchical triples
def _parents_children(h, r, t):
    hyper = (r.kind == RelationKind.HYPERNYM)[..., None, None]
    parent = torch.where(hyper, t.planes, h.planes)
    child = torch.where(hyper, h.planes, t.planes)
    return(_safe_apex(parent), child)


# %% KERNEL DEFINITIONS
# Per-plane distances of the transformed head to the tail
def _plane_distances(h, r, t, k):
    # Unmasked planes rotate the head about the origin
    dist = _distance(_rotate_f1(h.planes, r.theta), t.planes)

    # If no plane is masked, return the rotation distances
    if not r.mask.any():
        return(dist)

    # Masked planes rotate inside the cone of the owner towards the other
    hyper = (r.kind == RelationKind.HYPERNYM)[..., None, None]
    src = torch.where(hyper, t.planes, h.planes)
    dst = torch.where(hyper, h.planes, t.planes)
    f2 = _restricted_rotate_f2(src, r.scale, r.theta, k)
    return(torch.where(r.mask, _distance(f2, dst), dist))


# Score without input checks
def _score(h, r, t, k):
    dist = _plane_distances(h, r, t, k)
    return(-dist.mean(-1)+h.bias+t.bias)


# Angle violation without input checks
def _angle_violation(h, r, t, k):
    parent, child = _parents_children(h, r, t)
    excess = _angle_at(parent, child)-_half_aperture(parent, k)
    return((torch.clamp_min(excess, 0)*r.mask.to(DTYPE)).sum(-1))


# LCA score without input checks
def _lca_score(w, u, v, r, k):
    w_planes = _safe_apex(w.planes)
    slack = (2*_half_aperture(w_planes, k)-_angle_at(w_planes, u.planes) -
             _angle_at(w_planes, v.planes))
    return((slack*r.mask.to(DTYPE)).sum(-1))


# %% FUNCTION DEFINITIONS
# This function returns the per-plane distances used by the score
@e13.docstring_substitute(params=triple_doc)
def plane_distances(h, r, t, cfg):
    """
    Returns the hyperbolic distance on every plane between the transformed
    head and the tail of the triples ``(h, r, t)``.

    Masked planes use the restricted rotation, which runs from the tail to
    the head for hypernym relations. All other planes use the rotation about
    the origin.

    %(params)s

    Returns
    -------
    dist : :obj:`~torch.Tensor` of shape (..., d)
        The per-plane distances.

    """

    _check_dims(h, r, t)
    return(_plane_distances(h, r, t, cfg.k))


# This function calculates the score of triples
@e13.docstring_substitute(params=triple_doc)
def score(h, r, t, cfg):
    """
    Returns the plausibility score of the triples ``(h, r, t)``, given by the
    negated mean per-plane distance plus the biases of the head and the tail.

    %(params)s

    Returns
    -------
    psi : :obj:`~torch.Tensor` of shape (...)
        The scores. Higher is more plausible.

    """

    _check_dims(h, r, t)
    return(_score(h, r, t, cfg.k))


# This function calculates the angle violation of hierarchical triples
@e13.docstring_substitute(params=triple_doc)
def angle_violation(h, r, t, cfg):
    """
    Returns by how much the child entities of the hierarchical triples
    ``(h, r, t)`` lie outside of the cones of their parents, summed over all
    masked planes.

    The head owns the cone for hyponym relations and the tail for hypernym
    relations.

    %(params)s

    Returns
    -------
    violation : :obj:`~torch.Tensor` of shape (...)
        The nonnegative violations, which are zero if and only if every child
        lies inside its parent's cone on every masked plane.

    Raises
    ------
    :class:`~conekg.utils.exceptions.ContractError`
        If any relation in `r` is not hierarchical.

    """

    _check_dims(h, r, t)
    _check_hierarchical(r)
    return(_angle_violation(h, r, t, cfg.k))


# This function calculates the LCA score of candidate ancestors
def lca_score(w, u, v, r, cfg):
    """
    Returns how well the candidate entities `w` serve as the lowest common
    ancestor of the entities `u` and `v` under the hierarchical relations
    `r`.

    On every masked plane, the angles at `w` towards `u` and `v` are
    subtracted from twice the half aperture of `w`, and the results are
    summed. Lower apexes have narrower cones and therefore receive higher
    scores when they still contain both entities.

    Parameters
    ----------
    w, u, v : :obj:`~conekg.model.EntityEmbedding` object
        The candidates and the two query entities.
    r : :obj:`~conekg.model.RelationEmbedding` object
        The hierarchical relations whose masks select the planes.
    cfg : :obj:`~conekg.model.ModelConfig` object
        The model configuration.

    Returns
    -------
    phi : :obj:`~torch.Tensor` of shape (...)
        The LCA scores. Higher is better.

    """

    _check_dims(w, u, v, r)
    _check_hierarchical(r)
    return(_lca_score(w, u, v, r, cfg.k))
