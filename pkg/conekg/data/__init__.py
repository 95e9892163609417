# -*- coding: utf-8 -*-

"""
Data
====
Contains the triple store of *ConeKG* together with the closures,
ancestor-descendant test sets, LCA queries and synthetic graphs derived from
it.

"""


# %% IMPORTS
# Import core modules
from . import store
from .store import *
from . import closure
from .closure import *
from . import ad_pairs
from .ad_pairs import *
from . import lca_queries
from .lca_queries import *
from . import synthetic
from .synthetic import *

# All declaration
__all__ = ['ad_pairs', 'closure', 'lca_queries', 'store', 'synthetic']
__all__.extend(ad_pairs.__all__)
__all__.extend(closure.__all__)
__all__.extend(lca_queries.__all__)
__all__.extend(store.__all__)
__all__.extend(synthetic.__all__)
