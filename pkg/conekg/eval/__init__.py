# -*- coding: utf-8 -*-

"""
Evaluation
==========
Contains the knowledge graph completion, ancestor-descendant and LCA
evaluations of *ConeKG*, and the reports they return.

"""


# %% IMPORTS
# Import core modules
from . import reports
from .reports import *
from . import ranking
from .ranking import *
from . import ancestor
from .ancestor import *
from . import lca
from .lca import *

# All declaration
__all__ = ['ancestor', 'lca', 'ranking', 'reports']
__all__.extend(ancestor.__all__)
__all__.extend(lca.__all__)
__all__.extend(ranking.__all__)
__all__.extend(reports.__all__)
