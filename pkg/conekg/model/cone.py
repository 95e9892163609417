# -*- coding: utf-8 -*-

"""
Cone Model
==========
Provides the :class:`~ConeModel` class, which holds all trainable embeddings
of a knowledge graph together with the frozen subspace masks of its
relations.

"""


# %% IMPORTS
# Built-in imports
import logging
from math import pi

# Package imports
import e13tools as e13
import torch
from torch import nn

# ConeKG imports
from conekg._globals import BALL_EPS, DTYPE
from conekg.geometry import project_to_ball
from conekg.model.embeddings import (
    EntityEmbedding, ModelConfig, RelationEmbedding, RelationKind,
    scale_to_raw)
from conekg.model.scoring import _angle_violation, _lca_score, _score
from conekg.utils.exceptions import ContractError, DivergenceError

# All declaration
__all__ = ['ConeModel']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define class holding all embeddings of a knowledge graph
class ConeModel(nn.Module):
    """
    Defines the :class:`~ConeModel` class.

    Every entity is embedded as one point in each of `d` Poincaré disks plus
    a scalar bias. Every relation has a positive scaling and a rotation angle
    per plane, together with a frozen boolean mask that selects the planes on
    which it uses the restricted rotation.

    """

    def __init__(self, n_entities, kinds, masks, cfg=None, generator=None):
        """
        Initialize an instance of the :class:`~ConeModel` class.

        Parameters
        ----------
        n_entities : int
            The number of entities to embed.
        kinds : array_like of :class:`~conekg.model.RelationKind`
            The kind of every relation id.
        masks : array_like of shape (n_relations, d) and dtype bool
            The subspace mask of every relation id.

        Optional
        --------
        cfg : :obj:`~conekg.model.ModelConfig` object or None. Default: None
            The model configuration. If *None*, the default configuration is
            used.
        generator : :obj:`~torch.Generator` object or None. Default: None
            The random number generator to initialize all parameters with.

        """

        # Call super constructor
        super().__init__()

        # Save configuration
        self.cfg = ModelConfig() if cfg is None else cfg
        dim = self.cfg.dim

        # Convert and register the relation kinds and masks
        kinds = torch.as_tensor([int(kind) for kind in kinds],
                                dtype=torch.int64)
        masks = torch.as_tensor(masks, dtype=torch.bool).reshape(-1, dim)
        self._check_masks(kinds, masks)
        self.register_buffer('kinds', kinds)
        self.register_buffer('masks', masks)

        # Draw entity planes with uniform directions and norms in [0.2, 0.8]
        angles = 2*pi*torch.rand(n_entities, dim, generator=generator,
                                 dtype=DTYPE)
        radii = 0.2+0.6*torch.rand(n_entities, dim, generator=generator,
                                   dtype=DTYPE)
        planes = torch.stack([radii*torch.cos(angles),
                              radii*torch.sin(angles)], dim=-1)

        # Create all parameters
        n_rel = kinds.shape[0]
        self.entity_planes = nn.Parameter(planes)
        self.entity_bias = nn.Parameter(torch.zeros(n_entities, dtype=DTYPE))
        self.scale_raw = nn.Parameter(
            scale_to_raw(torch.ones(n_rel, dim, dtype=DTYPE)))
        self.theta = nn.Parameter(
            2*pi*torch.rand(n_rel, dim, generator=generator, dtype=DTYPE)-pi)

    # This function checks that the masks agree with the kinds and variant
    def _check_masks(self, kinds, masks):
        # Check the shapes
        if(masks.shape[0] != kinds.shape[0]):
            e13.raise_error("Number of masks (%i) does not match number of "
                            "relations (%i)!" % (masks.shape[0],
                                                 kinds.shape[0]),
                            ContractError, logger)

        # Determine how many planes every hierarchical mask must select
        n_masked = {'cone': self.cfg.subspace_dim, 'rotc': 0,
                    'no_rotation': self.cfg.dim}[self.cfg.variant]
        hier = kinds != RelationKind.NONE
        counts = masks.sum(-1)

        # Check all masks
        if (counts[~hier] != 0).any():
            e13.raise_error("Non-hierarchical relations must have an all-zero "
                            "subspace mask!", ContractError, logger)
        if (counts[hier] != n_masked).any():
            e13.raise_error("Every hierarchical relation must mask exactly %i "
                            "planes for variant %r!"
                            % (n_masked, self.cfg.variant), ContractError,
                            logger)

    # %% PROPERTIES
    @property
    def n_entities(self):
        return(self.entity_planes.shape[0])

    @property
    def n_relations(self):
        return(self.kinds.shape[0])

    @property
    def dim(self):
        return(self.cfg.dim)

    # %% METHODS
    # This function returns the embedding views of the given entity ids
    def entities(self, ids=None):
        """
        Returns the :obj:`~conekg.model.EntityEmbedding` of the entities with
        the provided `ids`, or of all entities if `ids` is *None*.

        """

        if ids is None:
            return(EntityEmbedding(self.entity_planes, self.entity_bias))
        ids = torch.as_tensor(ids, dtype=torch.int64)
        return(EntityEmbedding(self.entity_planes[ids],
                               self.entity_bias[ids]))

    # This function returns the embedding views of the given relation ids
    def relations(self, ids):
        """
        Returns the :obj:`~conekg.model.RelationEmbedding` of the relations
        with the provided `ids`.

        """

        ids = torch.as_tensor(ids, dtype=torch.int64)
        return(RelationEmbedding.from_raw(
            self.scale_raw[ids], self.theta[ids], self.masks[ids],
            self.kinds[ids]))

    # This function scores the given triples
    def forward(self, heads, rels, tails):
        """
        Returns the scores of the triples ``(heads, rels, tails)``.

        If `tails` has one more axis than `heads` and `rels`, the last axis
        of `tails` holds several candidate tails per triple.

        """

        # Convert all ids
        heads = torch.as_tensor(heads, dtype=torch.int64)
        rels = torch.as_tensor(rels, dtype=torch.int64)
        tails = torch.as_tensor(tails, dtype=torch.int64)

        # Add a candidate axis if required
        if(tails.ndim > heads.ndim):
            heads = heads.unsqueeze(-1)
            rels = rels.unsqueeze(-1)

        # Return scores
        return(_score(self.entities(heads), self.relations(rels),
                      self.entities(tails), self.cfg.k))

    # This function scores every entity as the tail of the given queries
    def score_all_tails(self, heads, rels):
        """
        Returns a tensor of shape (n_queries, n_entities) holding the score
        of every entity as the tail of the queries ``(heads, rels, ?)``.

        """

        heads = torch.as_tensor(heads, dtype=torch.int64).unsqueeze(-1)
        rels = torch.as_tensor(rels, dtype=torch.int64).unsqueeze(-1)
        tails = EntityEmbedding(self.entity_planes.unsqueeze(0),
                                self.entity_bias.unsqueeze(0))
        return(_score(self.entities(heads), self.relations(rels), tails,
                      self.cfg.k))

    # This function returns the angle violations of the given triples
    def angle_violation(self, heads, rels, tails):
        """
        Returns the angle violations of the triples ``(heads, rels, tails)``.
        Non-hierarchical triples have an all-zero mask and thus violate
        nothing.

        """

        return(_angle_violation(self.entities(heads), self.relations(rels),
                                self.entities(tails), self.cfg.k))

    # This function returns the LCA score of every entity for a query pair
    def lca_scores(self, u, v, rel):
        """
        Returns a tensor of shape (n_entities,) holding the LCA score of
        every entity for the entities `u` and `v` under relation `rel`.

        """

        if(self.kinds[rel] == RelationKind.NONE):
            e13.raise_error("LCA scores are only defined for hierarchical "
                            "relations!", ContractError, logger)
        return(_lca_score(self.entities(), self.entities([u]),
                          self.entities([v]), self.relations([rel]),
                          self.cfg.k))

    # This function projects all entity planes onto the annulus
    @torch.no_grad()
    def project_(self, eps=BALL_EPS):
        self.entity_planes.copy_(project_to_ball(self.entity_planes, eps))

    # This function scales all entity planes towards the origin
    @torch.no_grad()
    def recover_(self, factor):
        """
        Scales every entity plane by `factor` towards the origin, keeping the
        biases as they are.

        """

        self.entity_planes.mul_(factor)
        self.project_()

    # This function raises an error if any parameter is not finite
    def check_finite(self):
        for name, param in self.named_parameters():
            if not torch.isfinite(param).all():
                e13.raise_error("Parameter %r contains non-finite values!"
                                % (name), DivergenceError, logger)

    # This function returns a copy of this model with other masks and config
    def with_masks(self, masks, cfg):
        """
        Returns a new :class:`~ConeModel` that shares no storage with this
        one, using the provided `masks` and `cfg` but a copy of all current
        parameter values.

        """

        model = ConeModel(self.n_entities, self.kinds.tolist(), masks, cfg,
                          generator=torch.Generator().manual_seed(0))
        model.load_state_dict({key: value.clone()
                               for key, value in self.state_dict().items()
                               if key not in ('masks', 'kinds')},
                              strict=False)
        return(model)
