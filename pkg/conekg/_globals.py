# -*- coding: utf-8 -*-

"""
Globals
=======
Provides a collection of all global variables for *ConeKG* that must be
available.

"""


# %% IMPORTS
# Package imports
import numpy as np
import torch

# All declaration
__all__ = ['APP_NAME', 'BALL_EPS', 'CONE_K', 'CONFIG_NAME', 'DTYPE',
           'ENV_THREADS', 'FLOAT_TYPES', 'INT_TYPES', 'MIN_NORM',
           'RECIPROCAL_SUFFIX', 'STR_TYPES']


# %% APPLICATION GLOBALS
APP_NAME = 'ConeKG'                                 # Name of application
CONFIG_NAME = 'conekg.ini'                          # Name of config file
ENV_THREADS = 'CONE_KG_THREADS'                     # Thread count env var
RECIPROCAL_SUFFIX = '_reverse'                      # Reciprocal relations


# %% NUMERIC GLOBALS
DTYPE = torch.float64                               # Dtype of all tensors
BALL_EPS = 1e-5                                     # Ball projection margin
CONE_K = 0.1                                        # Aperture constant K
MIN_NORM = 1e-150                                   # Norm floor in kernels


# %% TYPE GLOBALS
INT_TYPES = (int, np.integer)
FLOAT_TYPES = (float, np.floating, *INT_TYPES)
STR_TYPES = (str,)
