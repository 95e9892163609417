# -*- coding: utf-8 -*-

"""
Training
========
Contains the losses, negative sampling, subspace allocation, training loops
and checkpoints of *ConeKG*.

"""


# %% IMPORTS
# Import core modules
from . import losses
from .losses import *
from . import sampling
from .sampling import *
from . import subspaces
from .subspaces import *
from . import checkpoint
from .checkpoint import *
from . import trainer
from .trainer import *

# All declaration
__all__ = ['checkpoint', 'losses', 'sampling', 'subspaces', 'trainer']
__all__.extend(checkpoint.__all__)
__all__.extend(losses.__all__)
__all__.extend(sampling.__all__)
__all__.extend(subspaces.__all__)
__all__.extend(trainer.__all__)
