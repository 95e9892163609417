# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import numpy as np
import pytest
import torch

# ConeKG imports
from conekg.training import TrainingBatch, iterate_batches, sample_negatives
from conekg.utils.exceptions import DataError


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for sample_negatives
class TestSampleNegatives(object):
    # Test the shape of the negatives
    def test_shape(self, gen):
        neg = sample_negatives(torch.tensor([[0, 1, 2], [3, 4, 5]]), 10, 7,
                               gen)
        assert neg.shape == (2, 3, 7)
        assert neg.dtype == torch.int64

    # Test that no negative equals its true tail
    def test_no_collisions(self, gen):
        tails = torch.randint(3, (500,), generator=gen)
        neg = sample_negatives(tails, 3, 20, gen)
        assert not (neg == tails[:, None]).any()
        assert ((neg >= 0) & (neg < 3)).all()

    # Test that two entities always give the other one
    def test_two_entities(self, gen):
        neg = sample_negatives(torch.tensor([0, 1]), 2, 5, gen)
        assert (neg[0] == 1).all() and (neg[1] == 0).all()

    # Test that negatives are uniform over all other entities
    def test_uniform(self, gen):
        neg = sample_negatives(torch.zeros(9000, dtype=torch.int64), 10, 10,
                               gen)
        counts = np.bincount(neg.flatten().numpy(), minlength=10)
        assert counts[0] == 0
        expected = neg.numel()/9
        chi2 = ((counts[1:]-expected)**2/expected).sum()

        # 99.99% quantile of the chi-squared distribution with 8 dof is 31.8
        assert chi2 < 31.8

    # Test that the same generator state gives the same negatives
    def test_seeded(self):
        tails = torch.arange(20)
        first = sample_negatives(tails, 50, 4,
                                 torch.Generator().manual_seed(1))
        second = sample_negatives(tails, 50, 4,
                                  torch.Generator().manual_seed(1))
        assert torch.equal(first, second)

    # Test that invalid arguments are refused
    @pytest.mark.parametrize('entity_count, k', [(1, 5), (10, 0)])
    def test_invalid(self, entity_count, k):
        with pytest.raises(DataError):
            sample_negatives(torch.tensor([0]), entity_count, k)


# Pytest class for iterate_batches
class TestIterateBatches(object):
    # Test that one epoch covers every triple once
    def test_epoch(self, gen):
        triples = torch.stack([torch.arange(25), torch.zeros(25).long(),
                               torch.arange(25).flip(0)], dim=-1)
        batches = list(iterate_batches(triples, 30, 10, 3, gen))
        assert [batch.size for batch in batches] == [10, 10, 5]
        assert all(isinstance(batch, TrainingBatch) for batch in batches)
        heads = torch.cat([batch.heads for batch in batches])
        assert sorted(heads.tolist()) == list(range(25))
        for batch in batches:
            assert batch.negatives.shape == (batch.size, 3)
            assert batch.tail_corrupt.all()
