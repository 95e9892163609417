# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import numpy as np
import pytest
import torch

# ConeKG imports
from conekg.data import AdPair, build_ad_testset
from conekg.eval import ad_predict, pair_scores
from conekg.model import RelationKind
from conekg.utils.exceptions import ContractError, DataError


# %% HELPER FUNCTIONS
# Average precision of distinct scores, averaging the precision at every hit
def brute_force_ap(labels, scores):
    order = np.argsort(-scores, kind='stable')
    hits = np.cumsum(labels[order])
    precision = hits/np.arange(1, len(labels)+1)
    return(precision[labels[order]].mean())


# Probability that a random positive outscores a random negative
def brute_force_auroc(labels, scores):
    pos, neg = scores[labels], scores[~labels]
    wins = (pos[:, None] > neg[None, :]).sum()
    ties = (pos[:, None] == neg[None, :]).sum()
    return((wins+ties/2)/(len(pos)*len(neg)))


# %% PYTEST FIXTURES
@pytest.fixture(scope='module')
def pairs(store):
    return(build_ad_testset(store, 0.5, 40, np.random.default_rng(4)))


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for pair_scores
class TestPairScores(object):
    # Test that hyponym pairs score the ancestor as head
    def test_hyponym(self, model, store, pairs):
        scores = pair_scores(model, pairs, batch_size=9)
        for pair, score in zip(pairs, scores):
            assert store.kinds[pair.relation] == RelationKind.HYPONYM
            expected = model.angle_violation(torch.tensor([pair.ancestor]),
                                             torch.tensor([pair.relation]),
                                             torch.tensor([pair.descendant]))
            assert score == pytest.approx(float(expected), abs=1e-12)

    # Test that hypernym pairs score the descendant as head
    def test_hypernym(self, model, store):
        rel = store.relation_id('hyponym_0_reverse')
        pair = AdPair(3, 7, rel, True, False, 1)
        expected = model.angle_violation(
            torch.tensor([7]), torch.tensor([rel]), torch.tensor([3]))
        assert pair_scores(model, [pair])[0] == pytest.approx(float(expected))

    # Test that non-hierarchical relations are refused
    def test_non_hierarchical(self, model, store):
        rel = store.relation_id('sibling')
        with pytest.raises(ContractError):
            pair_scores(model, [AdPair(0, 1, rel, True, False, 1)])


# Pytest class for ad_predict
class TestAdPredict(object):
    # Test the pooled metrics against exhaustive oracles
    def test_brute_force(self, model, store, pairs):
        report = ad_predict(model, pairs, store)
        labels = np.array([pair.label for pair in pairs])
        scores = -pair_scores(model, pairs)
        assert report.count == len(pairs) == 80
        assert report.map == pytest.approx(brute_force_ap(labels, scores),
                                           abs=1e-12)
        assert report.auroc == pytest.approx(
            brute_force_auroc(labels, scores), abs=1e-12)

    # Test the metrics of every hierarchy gap
    def test_per_gap(self, model, store, pairs):
        report = ad_predict(model, pairs, store)
        scores = -pair_scores(model, pairs)
        gaps = {int(pair.gap) for pair in pairs if pair.label}
        assert set(report.per_gap) <= gaps
        for gap, value in report.per_gap.items():
            idx = [i for i in range(0, len(pairs), 2)
                   if pairs[i].gap == gap]
            idx = np.array(sorted(idx+[i+1 for i in idx]))
            labels = np.array([pairs[i].label for i in idx])
            assert value == pytest.approx(
                brute_force_ap(labels, scores[idx]), abs=1e-12)

    # Test the metrics of every relation
    def test_per_relation(self, model, store, pairs):
        report = ad_predict(model, pairs, store)
        names = {store.relation_names[pair.relation] for pair in pairs}
        assert set(report.per_relation) == names
        assert all(0 <= value <= 1 for value in report.per_relation.values())

    # Test that empty or single-class pairs are refused
    def test_invalid(self, model, pairs):
        with pytest.raises(DataError):
            ad_predict(model, [])
        with pytest.raises(DataError):
            ad_predict(model, pairs[::2])
