# -*- coding: utf-8 -*-

"""
Configuration
=============
Contains all the configuration sections, presets and the config manager of
*ConeKG*.

"""


# %% IMPORTS
# Import core modules
from . import base
from .base import *
from . import core
from .core import *
from . import manager
from .manager import *

# All declaration
__all__ = ['base', 'core', 'manager']
__all__.extend(base.__all__)
__all__.extend(core.__all__)
__all__.extend(manager.__all__)
