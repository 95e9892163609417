# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import numpy as np
import pytest

# ConeKG imports
from conekg.data import build_ad_testset, build_lca_queries, synthetic_kg
from conekg.eval import ad_predict, lca_predict
from conekg.model import ModelConfig
from conekg.training import TrainSchedule, save_checkpoint, train

# All tests in this module train full models
pytestmark = pytest.mark.slow

# Settings of the synthetic runs
CONFIGS = {
    'cone': ModelConfig(dim=32, subspace_dim=8, angle_weight=0.5),
    'rotc': ModelConfig(dim=32, subspace_dim=8, angle_weight=0,
                        variant='rotc')}
SCHEDULE = TrainSchedule(epochs=200, batch_size=256, lr=0.01, seed=11,
                         deterministic=True)


# %% HELPER FUNCTIONS
# Trains a model of the given variant on the default synthetic graph
def train_variant(variant):
    store = synthetic_kg(rng=np.random.default_rng(2021))
    model, history = train(store, CONFIGS[variant], SCHEDULE)
    return(store, model, history)


# Returns the mAP of the given model at the given inferred fraction
def ad_map(store, model, inferred_fraction):
    pairs = build_ad_testset(store, inferred_fraction, 300,
                             np.random.default_rng(7))
    return(ad_predict(model, pairs, store).map)


# %% PYTEST FIXTURES
@pytest.fixture(scope='module')
def cone_run():
    return(train_variant('cone'))


@pytest.fixture(scope='module')
def rotc_run():
    return(train_variant('rotc'))


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for training on the synthetic graph
class TestSynthetic(object):
    # Test that the angle loss vanishes
    def test_angle_loss(self, cone_run):
        _, _, history = cone_run
        assert history.epochs[-1]['phase'] == 'cone'
        assert history.epochs[-1]['angle'] < 0.01

    # Test the ancestor-descendant prediction on trained pairs
    def test_ad_trained(self, cone_run):
        store, model, _ = cone_run
        assert ad_map(store, model, 0) >= 0.95

    # Test that restricted rotations help on inferred pairs
    def test_ad_inferred(self, cone_run, rotc_run):
        store, model, _ = cone_run
        rotc_store, rotc_model, _ = rotc_run
        assert (ad_map(store, model, 1) >=
                ad_map(rotc_store, rotc_model, 1)+0.05)

    # Test the LCA prediction of 1-hop queries
    def test_lca(self, cone_run):
        store, model, _ = cone_run
        queries = build_lca_queries(store, 1, 200, np.random.default_rng(5))
        assert lca_predict(model, store, queries).hits[1] >= 0.9

    # Test that seeded runs write identical checkpoints and reports
    def test_deterministic(self, cone_run, tmp_path):
        store, model, _ = cone_run
        other_store, other_model, _ = train_variant('cone')
        save_checkpoint(model, tmp_path/'a.cone', store)
        save_checkpoint(other_model, tmp_path/'b.cone', other_store)
        assert ((tmp_path/'a.cone').read_bytes() ==
                (tmp_path/'b.cone').read_bytes())
        assert (ad_map(store, model, 0.5) ==
                ad_map(other_store, other_model, 0.5))
