# -*- coding: utf-8 -*-

"""
Model
=====
Contains the entity and relation parameterization of *ConeKG*, the rotation
and restricted rotation transformations, and the scoring functions built on
top of them.

"""


# %% IMPORTS
# Import core modules
from . import embeddings
from .embeddings import *
from . import transforms
from .transforms import *
from . import scoring
from .scoring import *
from . import cone
from .cone import *

# All declaration
__all__ = ['cone', 'embeddings', 'scoring', 'transforms']
__all__.extend(cone.__all__)
__all__.extend(embeddings.__all__)
__all__.extend(scoring.__all__)
__all__.extend(transforms.__all__)
