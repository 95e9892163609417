# -*- coding: utf-8 -*-

"""
Application
===========
Contains the command-line interface of *ConeKG*.

"""


# %% IMPORTS
# Import core modules
from . import start
from .start import *

# All declaration
__all__ = ['start']
__all__.extend(start.__all__)
