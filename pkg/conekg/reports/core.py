# -*- coding: utf-8 -*-

"""
Formatters Core
===============
Collects all the registered report formatters into a single dict.

"""


# %% IMPORTS
# Built-in imports
from importlib import import_module
import logging
import os
from os import path

# Package imports
import e13tools as e13
from sortedcontainers import SortedDict as sdict

# ConeKG imports
from conekg.utils.exceptions import ConfigError

# All declaration
__all__ = ['FORMATTERS', 'export_reports', 'import_formatters',
           'register_formatter']

# Set logger
logger = logging.getLogger(__name__)


# %% GLOBALS
# Define dict of report formatters
FORMATTERS = sdict()


# %% FUNCTION DEFINITIONS
# This function registers a report formatter
def register_formatter(formatter_class):
    """
    Registers a provided report formatter `formatter_class` for use in
    *ConeKG*.

    All report formatters must be registered with this function in order to
    be used.

    Parameters
    ----------
    formatter_class : :class:`~conekg.reports.BaseFormatter` subclass
        The formatter class to use for writing reports.

    """

    # Initialize provided Formatter class
    formatter = formatter_class()

    # Register the formatter
    for ext in formatter.exts:
        FORMATTERS[ext] = formatter


# This function imports all pre-defined formatters and registers them
def import_formatters():
    """
    Imports and registers all pre-defined report formatters for use in
    *ConeKG*.

    """

    # Obtain the path to this directory
    dirpath = path.dirname(__file__)

    # Obtain a list of all modules in this directory
    filenames = [filename for filename in next(os.walk(dirpath))[2]
                 if filename.endswith('.py')]

    # Remove __init__.py, base.py and core.py
    filenames.remove('__init__.py')
    filenames.remove('base.py')
    filenames.remove('core.py')

    # Loop over all modules and import their Formatter class
    for filename in sorted(filenames):
        # Obtain full module name
        modname = "%s.%s" % (__package__, filename[:-3])

        # Import this module
        mod = import_module(modname)

        # Register everything in __all__ as a formatter
        for prop in mod.__all__:
            formatter = getattr(mod, prop)
            register_formatter(formatter)


# This function writes reports with the formatter of a file extension
def export_reports(reports, filepath):
    """
    Writes `reports` to `filepath`, using the registered formatter belonging
    to the extension of `filepath`.

    Parameters
    ----------
    reports : report object or list of report objects
        The reports to write.
    filepath : str
        The file to write to.

    """

    # Obtain the formatter
    if not FORMATTERS:
        import_formatters()
    ext = path.splitext(filepath)[1].lower()
    if ext not in FORMATTERS:
        e13.raise_error("No report formatter registered for extension %r! "
                        "Valid extensions are %s."
                        % (ext, list(FORMATTERS)), ConfigError, logger)

    # Export the reports
    if hasattr(reports, 'to_records'):
        reports = [reports]
    FORMATTERS[ext].exporter(list(reports), filepath)
    logger.info("Wrote %s to %r.", FORMATTERS[ext].type, filepath)
