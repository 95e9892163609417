# -*- coding: utf-8 -*-

"""
Embeddings
==========
Provides the relation kinds, the model configuration and the lightweight
embedding views that the scoring functions operate on.

"""


# %% IMPORTS
# Built-in imports
from dataclasses import asdict, dataclass
from enum import IntEnum
import logging
from math import pi
from typing import NamedTuple

# Package imports
import e13tools as e13
import torch
from torch.nn import functional as F

# ConeKG imports
from conekg._globals import CONE_K, FLOAT_TYPES, INT_TYPES, STR_TYPES
from conekg.geometry import ConeParams
from conekg.utils.exceptions import ConfigError, DataError

# All declaration
__all__ = ['EntityEmbedding', 'ModelConfig', 'RelationEmbedding',
           'RelationKind', 'VARIANTS', 'scale_from_raw', 'scale_to_raw',
           'wrap_angle']

# Set logger
logger = logging.getLogger(__name__)

# Model variants that can be trained
VARIANTS = ('cone', 'rotc', 'no_rotation')


# %% CLASS DEFINITIONS
# Define enum of all relation kinds
class RelationKind(IntEnum):
    """
    The direction kinds a relation can have.

    A *hyponym* relation ``(h, r, t)`` states that `t` is a child of `h`, so
    `h` owns the cone. A *hypernym* relation states the opposite.

    """

    NONE = 0
    HYPONYM = 1
    HYPERNYM = 2

    # Names accepted by from_name()
    @classmethod
    def from_name(cls, name):
        """
        Returns the :class:`~RelationKind` that belongs to the string `name`.

        Besides the member names, 'non_hierarchical' and 'none' are accepted
        for :attr:`~NONE`.

        """

        # Normalize the name
        key = str(name).strip().lower()
        if key in ('non_hierarchical', 'non-hierarchical', 'false'):
            key = 'none'

        # Return the corresponding kind
        try:
            return(cls[key.upper()])
        except KeyError:
            e13.raise_error("Unknown relation kind %r! Valid kinds are "
                            "'hyponym', 'hypernym' and 'none'." % (name),
                            DataError, logger)

    @property
    def hierarchical(self):
        return(self is not RelationKind.NONE)

    @property
    def reciprocal(self):
        """
        The kind of the reciprocal relation, which swaps the cone owner.

        """

        return({RelationKind.HYPONYM: RelationKind.HYPERNYM,
                RelationKind.HYPERNYM: RelationKind.HYPONYM}.get(
                    self, RelationKind.NONE))

    @property
    def label(self):
        return('none' if self is RelationKind.NONE else self.name.lower())


# Define class holding the hyperparameters of a cone model
@dataclass(frozen=True)
class ModelConfig(object):
    """
    Defines the hyperparameters of a cone model.

    Parameters
    ----------
    dim : int. Default: 500
        The number of hyperbolic planes `d`.
    subspace_dim : int. Default: 100
        The number of planes `d_s` that every hierarchical relation enforces
        cone containment on.
    k : float. Default: 0.1
        The aperture constant of all cones.
    angle_weight : float. Default: 0.5
        The weight `w` of the angle loss.
    adv_temperature : float. Default: 0.5
        The self-adversarial temperature `alpha`.
    negatives : int. Default: 50
        The number of negative samples per positive triple.
    variant : {'cone'; 'rotc'; 'no_rotation'}. Default: 'cone'
        Which model variant to train. 'rotc' zeroes all subspace masks and
        disables the angle loss, while 'no_rotation' makes hierarchical
        relations enforce containment on all planes.

    """

    dim: int = 500
    subspace_dim: int = 100
    k: float = CONE_K
    angle_weight: float = 0.5
    adv_temperature: float = 0.5
    negatives: int = 50
    variant: str = 'cone'

    def __post_init__(self):
        # Check all integer fields
        for name in ('dim', 'subspace_dim', 'negatives'):
            value = getattr(self, name)
            if(not isinstance(value, INT_TYPES) or isinstance(value, bool) or
               value < 1):
                e13.raise_error("Model config field %r must be a positive "
                                "integer, not %r!" % (name, value),
                                ConfigError, logger)

        # Check that the subspace fits in the embedding
        if(self.subspace_dim > self.dim):
            e13.raise_error("Subspace dimension (%i) cannot exceed the "
                            "embedding dimension (%i)!"
                            % (self.subspace_dim, self.dim), ConfigError,
                            logger)

        # Check all real fields
        if not isinstance(self.angle_weight, FLOAT_TYPES) or\
                not (self.angle_weight >= 0):
            e13.raise_error("Angle weight must be nonnegative, not %r!"
                            % (self.angle_weight), ConfigError, logger)
        if not isinstance(self.adv_temperature, FLOAT_TYPES) or\
                not (self.adv_temperature > 0):
            e13.raise_error("Self-adversarial temperature must be positive, "
                            "not %r!" % (self.adv_temperature), ConfigError,
                            logger)
        if not isinstance(self.k, FLOAT_TYPES) or not (self.k > 0):
            e13.raise_error("Aperture constant must be positive, not %r!"
                            % (self.k), ConfigError, logger)

        # Check the variant
        if(not isinstance(self.variant, STR_TYPES) or
           self.variant not in VARIANTS):
            e13.raise_error("Model variant must be one of %s, not %r!"
                            % (VARIANTS, self.variant), ConfigError, logger)

    @property
    def cone_params(self):
        return(ConeParams(self.k))

    @property
    def uses_angle_loss(self):
        return(self.variant != 'rotc' and self.angle_weight > 0)

    def to_dict(self):
        return(asdict(self))

    def replace(self, **kwargs):
        """
        Returns a copy of this configuration with the provided fields
        replaced.

        """

        config = self.to_dict()
        config.update(kwargs)
        return(ModelConfig(**config))


# Define view on the embeddings of a batch of entities
class EntityEmbedding(NamedTuple):
    """
    Embeddings of a batch of entities.

    Attributes
    ----------
    planes : :obj:`~torch.Tensor` of shape (..., d, 2)
        One disk point per hyperbolic plane.
    bias : :obj:`~torch.Tensor` of shape (...)
        The scalar margin of every entity.

    """

    planes: torch.Tensor
    bias: torch.Tensor

    @property
    def dim(self):
        return(self.planes.shape[-2])


# Define view on the transformations of a batch of relations
class RelationEmbedding(NamedTuple):
    """
    Effective transformation parameters of a batch of relations.

    Attributes
    ----------
    scale : :obj:`~torch.Tensor` of shape (..., d)
        The strictly positive scaling `s_i` of every plane.
    theta : :obj:`~torch.Tensor` of shape (..., d)
        The rotation angle of every plane, wrapped to [-pi, pi).
    mask : :obj:`~torch.Tensor` of shape (..., d) and dtype bool
        Which planes use the restricted rotation.
    kind : :obj:`~torch.Tensor` of shape (...) and dtype int64
        The :class:`~RelationKind` values of all relations.

    """

    scale: torch.Tensor
    theta: torch.Tensor
    mask: torch.Tensor
    kind: torch.Tensor

    @property
    def dim(self):
        return(self.scale.shape[-1])

    @classmethod
    def from_raw(cls, scale_raw, theta_raw, mask, kind):
        """
        Creates a :class:`~RelationEmbedding` from unconstrained raw
        parameters, keeping them attached to the autograd graph.

        """

        return(cls(scale_from_raw(scale_raw), wrap_angle(theta_raw),
                   torch.as_tensor(mask, dtype=torch.bool),
                   torch.as_tensor(kind, dtype=torch.int64)))


# %% FUNCTION DEFINITIONS
# This function maps raw scaling parameters onto positive scalings
def scale_from_raw(raw):
    return(F.softplus(raw))


# This function is the inverse of scale_from_raw()
def scale_to_raw(scale):
    scale = torch.as_tensor(scale)
    return(scale+torch.log(-torch.expm1(-scale)))


# This function wraps angles into [-pi, pi)
def wrap_angle(theta):
    return(torch.remainder(theta+pi, 2*pi)-pi)
