# -*- coding: utf-8 -*-

# %% IMPORTS
# Built-in imports
from math import pi

# Package imports
from py.path import local
import pytest
import torch

# ConeKG imports
from conekg._globals import DTYPE


# %% PYTEST CUSTOM CONFIGURATION PLUGINS
# This makes the pytest report header mention the tested ConeKG version
def pytest_report_header(config):
    from conekg.__version__ import __version__
    return("ConeKG: %s" % (__version__))


# This registers the marker used for long end-to-end runs
def pytest_configure(config):
    config.addinivalue_line(
        'markers', "slow: end-to-end training runs taking several minutes")


# %% PYTEST FIXTURES
# Seeded generator shared by all random sweeps of a test
@pytest.fixture
def gen():
    return(torch.Generator().manual_seed(20211013))


# Factory fixture drawing disk points with norms uniform in [r_min, r_max]
@pytest.fixture
def points(gen):
    def factory(n, r_min=0.0, r_max=0.95):
        angles = 2*pi*torch.rand(n, generator=gen, dtype=DTYPE)
        radii = r_min+(r_max-r_min)*torch.rand(n, generator=gen, dtype=DTYPE)
        return(torch.stack([radii*torch.cos(angles),
                            radii*torch.sin(angles)], dim=-1))
    return(factory)


# %% PYTEST SETTINGS
# Set the current working directory to the temporary directory
local.get_temproot().chdir()
