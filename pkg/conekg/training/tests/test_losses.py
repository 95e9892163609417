# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import pytest
import torch
from torch import nn
import torch.nn.functional as F
from torch.func import functional_call

# ConeKG imports
from conekg.model import ConeModel, ModelConfig, RelationKind
from conekg.training import (
    TrainingBatch, allocate_subspaces, angle_loss, distance_loss, loss_terms,
    sample_negatives, total_loss)
from conekg.utils.exceptions import DataError

# Kinds of the relations of all test models
KINDS = [RelationKind.HYPONYM, RelationKind.NONE, RelationKind.HYPERNYM]


# %% HELPER CLASSES AND FUNCTIONS
# Module wrapping the total loss of a fixed batch
class LossModule(nn.Module):
    def __init__(self, model, batch):
        super().__init__()
        self.model = model
        self.batch = batch

    def forward(self):
        return(total_loss(self.batch, self.model))


def make_model(cfg, seed=0, kinds=KINDS, n_entities=10):
    masks = allocate_subspaces(kinds, cfg.dim, cfg.subspace_dim, seed,
                               variant=cfg.variant)
    return(ConeModel(n_entities, kinds, masks, cfg,
                     torch.Generator().manual_seed(seed)))


def make_batch(n, k, gen, n_entities=10, n_relations=3):
    triples = torch.stack([
        torch.randint(n_entities, (n,), generator=gen),
        torch.randint(n_relations, (n,), generator=gen),
        torch.randint(n_entities, (n,), generator=gen)], dim=-1)
    return(TrainingBatch.from_triples(
        triples, sample_negatives(triples[:, 2], n_entities, k, gen)))


# %% PYTEST FIXTURES
@pytest.fixture
def cfg():
    return(ModelConfig(dim=4, subspace_dim=2, negatives=1))


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for the gradient of the total loss
class TestGradient(object):
    # Test the analytic gradient against central finite differences
    def test_gradcheck(self, cfg, gen):
        model = make_model(cfg)
        batch = make_batch(12, 1, gen)
        module = LossModule(model, batch)
        names = ['model.%s' % (name) for name, _ in model.named_parameters()]

        def func(*params):
            return(functional_call(module, dict(zip(names, params)), ()))

        params = tuple(param.detach().clone().requires_grad_(True)
                       for param in model.parameters())
        assert torch.autograd.gradcheck(func, params, eps=1e-6, atol=1e-8,
                                        rtol=1e-4)

    # Test that every parameter receives a gradient
    def test_all_parameters(self, cfg, gen):
        model = make_model(cfg)
        total_loss(make_batch(30, 1, gen), model).backward()
        for name, param in model.named_parameters():
            assert param.grad is not None, name
            assert torch.isfinite(param.grad).all()


# Pytest class for distance_loss
class TestDistanceLoss(object):
    # Test the loss with a single negative per positive
    def test_single_negative(self, cfg, gen):
        model = make_model(cfg)
        batch = make_batch(8, 1, gen)
        pos = model(batch.heads, batch.rels, batch.tails)
        neg = model(batch.heads, batch.rels, batch.negatives[:, 0])
        expected = (-F.logsigmoid(pos)-F.logsigmoid(-neg)).mean()
        assert torch.allclose(distance_loss(batch, model), expected)

    # Test that negatives are weighted by their softmax
    def test_self_adversarial(self, gen):
        cfg = ModelConfig(dim=4, subspace_dim=2, negatives=3,
                          adv_temperature=2.0)
        model = make_model(cfg)
        batch = make_batch(8, 3, gen)
        pos = model(batch.heads, batch.rels, batch.tails)
        neg = model(batch.heads, batch.rels, batch.negatives)
        weights = torch.softmax(2.0*neg, dim=-1)
        expected = (-F.logsigmoid(pos) -
                    (weights*F.logsigmoid(-neg)).sum(-1)).mean()
        assert torch.allclose(distance_loss(batch, model), expected)

    # Test that head corruptions score the negative as head
    def test_head_corruption(self, cfg, gen):
        model = make_model(cfg)
        triples = torch.tensor([[0, 1, 2], [3, 0, 4]])
        negatives = torch.tensor([[5], [6]])
        batch = TrainingBatch.from_triples(triples, negatives,
                                           torch.tensor([[False], [False]]))
        pos = model(batch.heads, batch.rels, batch.tails)
        neg = model(negatives[:, 0], batch.rels, batch.tails)
        expected = (-F.logsigmoid(pos)-F.logsigmoid(-neg)).mean()
        assert torch.allclose(distance_loss(batch, model), expected)

    # Test that the loss is positive
    def test_positive(self, cfg, gen):
        assert distance_loss(make_batch(8, 1, gen), make_model(cfg)) > 0


# Pytest class for angle_loss
class TestAngleLoss(object):
    # Test that non-hierarchical batches have no angle loss
    def test_non_hierarchical(self, cfg):
        batch = TrainingBatch.from_triples([[0, 1, 2], [3, 1, 4]],
                                           [[5], [6]])
        assert angle_loss(batch, make_model(cfg)) == 0

    # Test that the angle loss is the mean violation of hierarchical triples
    def test_mean_violation(self, cfg):
        model = make_model(cfg)
        batch = TrainingBatch.from_triples(
            [[0, 0, 1], [2, 1, 3], [4, 2, 5]], [[6], [7], [8]])
        violations = model.angle_violation(torch.tensor([0, 4]),
                                           torch.tensor([0, 2]),
                                           torch.tensor([1, 5]))
        assert torch.allclose(angle_loss(batch, model), violations.mean())
        assert angle_loss(batch, model) >= 0


# Pytest class for loss_terms
class TestLossTerms(object):
    # Test that the total loss weighs the angle loss
    def test_total(self, gen):
        cfg = ModelConfig(dim=4, subspace_dim=2, angle_weight=0.7)
        model = make_model(cfg)
        terms = loss_terms(make_batch(20, 2, gen), model)
        assert torch.allclose(terms.total, terms.distance+0.7*terms.angle)

    # Test that RotC models skip the angle loss
    def test_rotc(self, gen):
        cfg = ModelConfig(dim=4, subspace_dim=2, variant='rotc')
        model = make_model(cfg)
        batch = make_batch(20, 2, gen)
        terms = loss_terms(batch, model)
        assert terms.angle == 0
        assert torch.allclose(terms.total, distance_loss(batch, model))


# Pytest class for TrainingBatch
class TestTrainingBatch(object):
    # Test that empty batches are refused
    def test_empty(self):
        with pytest.raises(DataError):
            TrainingBatch.from_triples(torch.zeros(0, 3), torch.zeros(0, 2))

    # Test that negatives equal to their tail are refused
    def test_negative_is_tail(self):
        with pytest.raises(DataError):
            TrainingBatch.from_triples([[0, 0, 1]], [[2, 1]])

    # Test that negatives equal to their head are refused
    def test_negative_is_head(self):
        with pytest.raises(DataError):
            TrainingBatch.from_triples([[0, 0, 1]], [[0]], [[False]])

    # Test that misshapen negatives are refused
    def test_shape(self):
        with pytest.raises(DataError):
            TrainingBatch.from_triples([[0, 0, 1], [1, 0, 2]], [[3, 4]])
