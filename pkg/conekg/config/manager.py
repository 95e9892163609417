# -*- coding: utf-8 -*-

"""
Config Manager
==============
Provides the config manager that reads and writes INI files, and the run
configuration that combines all config sources of a run.

"""


# %% IMPORTS
# Built-in imports
from configparser import ConfigParser, Error as ParserError
from dataclasses import dataclass
import logging
from os import path

# Package imports
import e13tools as e13
from sortedcontainers import SortedDict as sdict

# ConeKG imports
from conekg.config.core import PRESETS, SECTIONS
from conekg.model import ModelConfig
from conekg.training import TrainSchedule
from conekg.utils.exceptions import ConfigError

# All declaration
__all__ = ['ConfigManager', 'RunConfig']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define config manager
class ConfigManager(object):
    """
    Holds the values of all config sections of *ConeKG*, starting from their
    defaults.

    """

    # Initialize config manager
    def __init__(self):
        # Initialize different configuration dicts and parsers
        self.parser = ConfigParser(interpolation=None)
        self.parser.optionxform = str
        self.config = sdict({name: section.get_default_config()
                             for name, section in SECTIONS.items()})

    # This function returns the value of a specific config
    def get_option(self, section, option):
        return(self.config[section][option])

    # This function updates the values of a config section
    def update_section(self, section, config_dict):
        """
        Updates the values of config `section` with the values in
        `config_dict`, ignoring values that are *None*.

        """

        # Check that the section and all options exist
        if section not in self.config:
            e13.raise_error("Unknown config section %r! Valid sections are "
                            "%s." % (section, list(self.config)),
                            ConfigError, logger)
        unknown = set(config_dict).difference(self.config[section])
        if unknown:
            e13.raise_error("Unknown options %s in config section %r!"
                            % (sorted(unknown), section), ConfigError, logger)

        # Update the section
        self.config[section].update(
            (key, value) for key, value in config_dict.items()
            if value is not None)

    # This function applies a named preset
    def apply_preset(self, name):
        """
        Applies the preset `name` from :obj:`~conekg.config.PRESETS`.

        """

        if name not in PRESETS:
            e13.raise_error("Unknown preset %r! Valid presets are %s."
                            % (name, list(PRESETS)), ConfigError, logger)
        for section, config_dict in PRESETS[name].items():
            self.update_section(section, config_dict)

    # This function reads in a configuration file
    def read_config(self, config_file):
        """
        Reads the configuration file `config_file` and updates all sections
        with the values it holds.

        """

        # Check that the file exists
        if not path.exists(config_file):
            e13.raise_error("Config file %r does not exist!" % (config_file),
                            ConfigError, logger)

        # Read configuration
        try:
            self.parser.read(config_file)
        except ParserError as error:
            e13.raise_error("Config file %r cannot be parsed: %s"
                            % (config_file, error), ConfigError, logger)

        # Decode all sections
        for name in self.parser.sections():
            if name not in SECTIONS:
                e13.raise_error("Unknown config section %r in %r!"
                                % (name, config_file), ConfigError, logger)
            self.update_section(name, SECTIONS[name].decode_config(
                self.parser[name]))

    # This function writes the current config to a configuration file
    def write_config(self, config_file):
        """
        Writes all configuration values in this config manager to the
        configuration file `config_file`.

        """

        # Encode all sections into the parser
        for name, section in SECTIONS.items():
            self.parser[name] = section.encode_config(self.config[name])

        # Write current parser to this file
        with open(config_file, 'w') as file:
            self.parser.write(file)
        logger.info("Wrote config to %r.", config_file)


# Define class holding the resolved configuration of a run
@dataclass
class RunConfig(object):
    """
    The resolved configuration of a run, holding the model configuration,
    the training schedule and the runtime options (paths and data options).

    """

    model: ModelConfig
    schedule: TrainSchedule
    runtime: dict

    # This function resolves a run config from all its sources
    @classmethod
    def resolve(cls, flags=None, config_file=None, checkpoint_config=None,
                preset=None):
        """
        Resolves the configuration of a run. Sources take precedence in the
        order `flags`, `config_file`, `checkpoint_config`, `preset` and the
        defaults.

        Parameters
        ----------
        flags : dict of {str: dict} or None. Default: None
            The values given on the command line per section. Values that
            are *None* are not set.
        config_file : str or None. Default: None
            The INI file to read.
        checkpoint_config : dict of {str: dict} or None. Default: None
            The values stored in a checkpoint per section.
        preset : str or None. Default: None
            The name of the preset to start from.

        Returns
        -------
        run_config : :obj:`~RunConfig` object
            The resolved configuration.

        """

        # Apply all sources from lowest to highest precedence
        manager = ConfigManager()
        if preset is not None:
            manager.apply_preset(preset)
        for section, config_dict in (checkpoint_config or {}).items():
            manager.update_section(section, config_dict)
        if config_file is not None:
            manager.read_config(config_file)
        for section, config_dict in (flags or {}).items():
            manager.update_section(section, config_dict)

        # Create run config
        return(cls.from_manager(manager))

    # This function creates a run config from a config manager
    @classmethod
    def from_manager(cls, manager):
        return(cls(ModelConfig(**manager.config['model']),
                   TrainSchedule(**manager.config['schedule']),
                   dict(manager.config['runtime'])))

    # This function returns a config manager holding this run config
    def to_manager(self):
        manager = ConfigManager()
        manager.update_section('model', self.model.to_dict())
        manager.update_section('schedule', self.schedule.to_dict())
        manager.config['runtime'].update(self.runtime)
        return(manager)

    # This function writes this run config to a configuration file
    def write(self, config_file):
        self.to_manager().write_config(config_file)
