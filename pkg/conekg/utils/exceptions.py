# -*- coding: utf-8 -*-

"""
Exceptions
==========
Provides the exception classes that are raised by *ConeKG*.

Every error is raised through :func:`e13tools.raise_error`, such that it is
logged by the logger of the module that raised it before propagating.

"""


# %% IMPORTS
# Package imports
import e13tools as e13

# All declaration
__all__ = ['CheckpointError', 'ConeKGError', 'ConfigError', 'ContractError',
           'DataError', 'DivergenceError', 'DomainError']


# %% CLASS DEFINITIONS
# Define base exception for all errors raised by ConeKG
class ConeKGError(Exception):
    """
    Base class of all exceptions that are raised deliberately by *ConeKG*.

    """

    pass


# Geometric input outside of the domain of a kernel
class DomainError(ConeKGError, ValueError):
    pass


# Hierarchical-only operation called with a non-hierarchical relation
class ContractError(ConeKGError, ValueError):
    pass


# Malformed input files, unknown entities or unsatisfiable requests
class DataError(ConeKGError, e13.InputError):
    pass


# Invalid configuration values
class ConfigError(ConeKGError, e13.InputError):
    pass


# Unreadable, corrupted or incompatible checkpoint files
class CheckpointError(ConeKGError, IOError):
    pass


# Non-finite losses or parameters during training
class DivergenceError(ConeKGError, FloatingPointError):
    pass
