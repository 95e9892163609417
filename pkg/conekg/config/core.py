# -*- coding: utf-8 -*-

"""
Config Core
===========
Provides the config sections of *ConeKG* and the named presets of their
values.

"""


# %% IMPORTS
# Package imports
from sortedcontainers import SortedDict as sdict

# ConeKG imports
from conekg.config.base import BaseConfigSection
from conekg.model import ModelConfig
from conekg.training import TrainSchedule

# All declaration
__all__ = ['PRESETS', 'SECTIONS', 'ModelConfigSection', 'RuntimeConfigSection',
           'ScheduleConfigSection']


# %% CLASS DEFINITIONS
# Define config section holding the model hyperparameters
class ModelConfigSection(BaseConfigSection):
    # Define class attributes
    NAME = 'model'

    # This function returns a dict containing the default config values
    def get_default_config(self):
        return(sdict(ModelConfig().to_dict()))


# Define config section holding the training schedule
class ScheduleConfigSection(BaseConfigSection):
    # Define class attributes
    NAME = 'schedule'

    # This function returns a dict containing the default config values
    def get_default_config(self):
        return(sdict(TrainSchedule().to_dict()))


# Define config section holding the paths and data options of a run
class RuntimeConfigSection(BaseConfigSection):
    # Define class attributes
    NAME = 'runtime'

    # This function returns a dict containing the default config values
    def get_default_config(self):
        # Create default dict
        default_dict = sdict({
            'data': None,
            'synthetic': None,
            'checkpoint': 'model.cone',
            'report': None,
            'history': None,
            'relation_meta': None,
            'unknown': 'skip',
            'reciprocal': True})

        # Return default_dict
        return(default_dict)


# %% GLOBALS
# Define dict of all config sections
SECTIONS = sdict({section.NAME: section for section in (
    ModelConfigSection(), RuntimeConfigSection(), ScheduleConfigSection())})

# Define dict of named presets, holding the best settings per dataset
PRESETS = sdict({
    'wn18rr': {
        'model': {'dim': 500, 'subspace_dim': 100, 'angle_weight': 0.5,
                  'negatives': 50},
        'schedule': {'lr': 0.001, 'batch_size': 1024, 'epochs': 500}},
    'ddb14': {
        'model': {'dim': 500, 'subspace_dim': 50, 'angle_weight': 0.7,
                  'negatives': 50},
        'schedule': {'lr': 0.001, 'batch_size': 1024, 'epochs': 1000}},
    'go21': {
        'model': {'dim': 500, 'subspace_dim': 50, 'angle_weight': 0.1,
                  'negatives': 50},
        'schedule': {'lr': 0.005, 'batch_size': 1024, 'epochs': 100}},
    'fb15k-237': {
        'model': {'dim': 500, 'negatives': 100, 'variant': 'rotc'},
        'schedule': {'lr': 0.0001, 'batch_size': 1024, 'epochs': 600}}})
