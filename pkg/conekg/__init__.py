# -*- coding: utf-8 -*-

"""
ConeKG
======
Knowledge graph embeddings in hyperbolic cones, modeling hierarchical and
non-hierarchical relations at the same time.

"""


# %% IMPORTS AND DECLARATIONS
# Import globals
from ._globals import *

# Import base modules and definitions
from .__version__ import __version__

# Import subpackages
from . import (
    utils, geometry, model, hierarchy, data, eval, training, config, reports,
    app)

# All declaration
__all__ = ['app', 'config', 'data', 'eval', 'geometry', 'hierarchy', 'model',
           'reports', 'training', 'utils']
