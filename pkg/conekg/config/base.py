# -*- coding: utf-8 -*-

"""
Base Config
===========
Provides a collection of base functions to standardize the configuration of
*ConeKG*.

"""


# %% IMPORTS
# Built-in imports
from ast import literal_eval
import logging

# Package imports
import e13tools as e13
from sortedcontainers import SortedDict as sdict

# ConeKG imports
from conekg.utils.exceptions import ConfigError

# All declaration
__all__ = ['BaseConfigSection']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define base class for making config sections
class BaseConfigSection(object):
    """
    Provides a base class definition that must be subclassed by all config
    sections of *ConeKG*.

    """

    # Define class attributes
    NAME = ''

    # This function parses and processes a config section, and returns it
    def decode_config(self, section_dict):
        """
        Parses a section of the config parser, converting it into the values
        as used by *ConeKG* and returns it.

        Parameters
        ----------
        section_dict : dict
            Dict containing the config section belonging to this config
            section.

        Returns
        -------
        config_dict : dict
            Dict containing the processed config section values.

        Raises
        ------
        :class:`~conekg.utils.exceptions.ConfigError`
            If an option is unknown or its value cannot be parsed.

        """

        # Initialize empty dict of parsed config values
        config_dict = sdict()
        defaults = self.get_default_config()

        # Decode all values in section_dict
        for key, value in section_dict.items():
            # Check that the option exists
            if key not in defaults:
                e13.raise_error("Unknown option %r in config section %r! "
                                "Valid options are %s."
                                % (key, self.NAME, list(defaults)),
                                ConfigError, logger)

            # Add all values to config dict using literal_eval
            try:
                config_dict[key] = literal_eval(value)
            except (ValueError, SyntaxError):
                e13.raise_error("Value %r of option %r in config section %r "
                                "is not a valid literal!"
                                % (value, key, self.NAME), ConfigError,
                                logger)

        # Return config_dict
        return(config_dict)

    # This function returns a dict containing the default config values
    def get_default_config(self):
        """
        Returns the default values for this config section.

        Returns
        -------
        default_dict : dict
            Dict containing the default config section values.

        """

        raise NotImplementedError(self.__class__)

    # This function returns its config section, as required by config parser
    def encode_config(self, config_dict):
        """
        Returns a dict containing the config values for this config section,
        as required by the config parser.

        Parameters
        ----------
        config_dict : dict
            Dict containing the config values belonging to this config
            section as used by *ConeKG*.

        Returns
        -------
        section_dict : dict
            Dict containing the config section. This dict is used by the
            config parser to save config values to file.

        """

        # Initialize empty dict of section config values
        section_dict = sdict()

        # Loop over all arguments in config and encode them in
        for key, value in config_dict.items():
            section_dict[key] = '{!r}'.format(value)

        # Return section_dict
        return(section_dict)
