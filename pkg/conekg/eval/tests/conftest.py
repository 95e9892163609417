# -*- coding: utf-8 -*-

# %% IMPORTS
# Package imports
import numpy as np
import pytest
import torch

# ConeKG imports
from conekg.data import SyntheticSpec, synthetic_kg
from conekg.model import ConeModel, ModelConfig
from conekg.training import allocate_subspaces


# %% PYTEST FIXTURES
# Small synthetic knowledge graph with reciprocal relations
@pytest.fixture(scope='package')
def store():
    return(synthetic_kg(SyntheticSpec(n_entities=60, depth=3, branching=2,
                                      sibling_links=15),
                        np.random.default_rng(17)))


# Randomly initialized cone model of the store
@pytest.fixture(scope='package')
def model(store):
    cfg = ModelConfig(dim=8, subspace_dim=3)
    masks = allocate_subspaces(store.kinds[:store.n_base_relations], 8, 3, 0,
                               reciprocal=store.reciprocal)
    return(ConeModel(store.n_entities, store.kinds, masks, cfg,
                     torch.Generator().manual_seed(8)))
