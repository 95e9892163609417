# -*- coding: utf-8 -*-

"""
Geometry
========
Contains the numeric kernels of the Poincaré disk that every other part of
*ConeKG* is built upon.

All kernels operate on :obj:`~torch.Tensor` objects of dtype
:obj:`~torch.float64` whose last axis holds the two disk coordinates, and
broadcast over all leading axes.

"""


# %% IMPORTS
# Import core modules
from . import poincare
from .poincare import *
from . import cones
from .cones import *

# All declaration
__all__ = ['cones', 'poincare']
__all__.extend(cones.__all__)
__all__.extend(poincare.__all__)
