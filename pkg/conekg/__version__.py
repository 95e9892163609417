# -*- coding: utf-8 -*-

"""
ConeKG Version
==============
Stores the different versions of the *ConeKG* package.

"""


# %% VERSIONS
# Default/Latest/Current version
__version__ = '0.1.0'
