# -*- coding: utf-8 -*-

"""
Hierarchy
=========
Contains the Krackhardt scores of whole graphs and the hierarchical-ness
scores that classify the relations of a knowledge graph.

"""


# %% IMPORTS
# Import core modules
from . import metrics
from .metrics import *
from . import relations
from .relations import *

# All declaration
__all__ = ['metrics', 'relations']
__all__.extend(metrics.__all__)
__all__.extend(relations.__all__)
