# -*- coding utf-8 -*-

"""
Utils
=====
Contains various utility functions and non-model classes for *ConeKG*.

"""


# %% IMPORTS
# Import base modules
from . import exceptions
from .exceptions import *

# All declaration
__all__ = ['exceptions']
__all__.extend(exceptions.__all__)
