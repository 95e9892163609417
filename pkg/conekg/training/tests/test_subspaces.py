# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import pytest
import torch

# ConeKG imports
from conekg.model import RelationKind
from conekg.training import allocate_subspaces
from conekg.utils.exceptions import ConfigError

# Kinds of four base relations, three of them hierarchical
KINDS = [RelationKind.HYPONYM, RelationKind.NONE, RelationKind.HYPERNYM,
         RelationKind.HYPONYM]


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for allocate_subspaces
class TestAllocateSubspaces(object):
    # Test that hierarchical relations select exactly d_s planes
    @pytest.mark.parametrize('mode', ['overlapping', 'orthogonal'])
    def test_counts(self, mode):
        masks = allocate_subspaces(KINDS, 12, 4, 0, mode)
        assert masks.dtype == torch.bool
        assert masks.shape == (4, 12)
        assert masks.sum(-1).tolist() == [4, 0, 4, 4]

    # Test that orthogonal subspaces are disjoint
    def test_orthogonal(self):
        masks = allocate_subspaces(KINDS, 12, 4, 3, 'orthogonal')
        assert masks.sum(0).max() == 1

    # Test that orthogonal subspaces cannot exceed the dimension
    def test_orthogonal_capacity(self):
        with pytest.raises(ConfigError):
            allocate_subspaces(KINDS, 11, 4, 0, 'orthogonal')

    # Test that the same seed gives the same masks
    def test_seeded(self):
        first = allocate_subspaces(KINDS, 32, 8, 5)
        assert torch.equal(first, allocate_subspaces(KINDS, 32, 8, 5))
        assert not torch.equal(first, allocate_subspaces(KINDS, 32, 8, 6))

    # Test the masks of the RotC variant
    def test_rotc(self):
        masks = allocate_subspaces(KINDS, 12, 4, 0, variant='rotc')
        assert not masks.any()

    # Test the masks of the variant without rotation
    def test_no_rotation(self):
        masks = allocate_subspaces(KINDS, 12, 4, 0, variant='no_rotation')
        assert masks.sum(-1).tolist() == [12, 0, 12, 12]

    # Test that reciprocal relations share the masks of their base relation
    def test_reciprocal(self):
        masks = allocate_subspaces(KINDS, 12, 4, 0, reciprocal=True)
        assert masks.shape == (8, 12)
        assert torch.equal(masks[:4], masks[4:])

    # Test that invalid arguments are refused
    @pytest.mark.parametrize('kwargs', [
        {'subspace_dim': 0}, {'subspace_dim': 13}, {'mode': 'random'},
        {'variant': 'transe'}])
    def test_invalid(self, kwargs):
        args = dict(kinds=KINDS, dim=12, subspace_dim=4, seed=0)
        args.update(kwargs)
        with pytest.raises(ConfigError):
            allocate_subspaces(**args)
