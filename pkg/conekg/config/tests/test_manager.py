# -*- coding: utf-8 -*-

# %% IMPORTS
# Built-in imports
from os import path

# Package imports
import pytest

# ConeKG imports
from conekg.config import (
    PRESETS, SECTIONS, ConfigManager, ModelConfigSection, RunConfig)
from conekg.model import ModelConfig
from conekg.training import TrainSchedule
from conekg.utils.exceptions import ConfigError


# %% HELPER FUNCTIONS
def write_ini(tmpdir, text, name='run.ini'):
    filepath = path.join(str(tmpdir), name)
    with open(filepath, 'w') as file:
        file.write(text)
    return(filepath)


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for the config sections
class TestConfigSections(object):
    # Test that the model defaults are the best WN18RR setting
    def test_model_defaults(self):
        config = SECTIONS['model'].get_default_config()
        assert config['dim'] == 500
        assert config['subspace_dim'] == 100
        assert config['angle_weight'] == 0.5
        assert config['negatives'] == 50

    # Test that the schedule defaults are the best WN18RR setting
    def test_schedule_defaults(self):
        config = SECTIONS['schedule'].get_default_config()
        assert config['lr'] == 0.001
        assert config['batch_size'] == 1024
        assert config['epochs'] == 500

    # Test that values are decoded as literals
    def test_decode(self):
        config = ModelConfigSection().decode_config(
            {'dim': '32', 'angle_weight': '0.7', 'variant': "'rotc'"})
        assert config == {'dim': 32, 'angle_weight': 0.7, 'variant': 'rotc'}

    # Test that unknown options are refused
    def test_decode_unknown(self):
        with pytest.raises(ConfigError):
            ModelConfigSection().decode_config({'dims': '32'})

    # Test that invalid literals are refused
    def test_decode_invalid(self):
        with pytest.raises(ConfigError):
            ModelConfigSection().decode_config({'variant': 'rotc'})

    # Test that encoded values decode to the same values
    def test_encode(self):
        section = SECTIONS['runtime']
        config = section.get_default_config()
        assert section.decode_config(section.encode_config(config)) == config


# Pytest class for ConfigManager
class TestConfigManager(object):
    # Test that a written config is read back unchanged
    def test_write_read(self, tmpdir):
        manager = ConfigManager()
        manager.update_section('model', {'dim': 16, 'subspace_dim': 4})
        manager.update_section('runtime', {'synthetic': 'small'})
        filepath = path.join(str(tmpdir), 'conekg.ini')
        manager.write_config(filepath)

        other = ConfigManager()
        other.read_config(filepath)
        assert other.config == manager.config

    # Test that None values do not replace config values
    def test_update_skips_none(self):
        manager = ConfigManager()
        manager.update_section('model', {'dim': None, 'subspace_dim': 10})
        assert manager.get_option('model', 'dim') == 500
        assert manager.get_option('model', 'subspace_dim') == 10

    # Test that unknown sections and options are refused
    def test_update_invalid(self):
        manager = ConfigManager()
        with pytest.raises(ConfigError):
            manager.update_section('optimizer', {'lr': 0.1})
        with pytest.raises(ConfigError):
            manager.update_section('model', {'learning_rate': 0.1})

    # Test that unknown sections in files are refused
    def test_read_unknown_section(self, tmpdir):
        filepath = write_ini(tmpdir, "[optimizer]\nlr = 0.1\n")
        with pytest.raises(ConfigError):
            ConfigManager().read_config(filepath)

    # Test that missing files are refused
    def test_read_missing(self, tmpdir):
        with pytest.raises(ConfigError):
            ConfigManager().read_config(path.join(str(tmpdir), 'none.ini'))

    # Test that unknown presets are refused
    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            ConfigManager().apply_preset('yago3-10')


# Pytest class for RunConfig
class TestRunConfig(object):
    # Test that the defaults give the default configs
    def test_defaults(self):
        rc = RunConfig.resolve()
        assert rc.model == ModelConfig()
        assert rc.schedule == TrainSchedule()
        assert rc.runtime['checkpoint'] == 'model.cone'

    # Test every preset
    @pytest.mark.parametrize('preset', list(PRESETS))
    def test_presets(self, preset):
        rc = RunConfig.resolve(preset=preset)
        for key, value in PRESETS[preset]['model'].items():
            assert getattr(rc.model, key) == value
        for key, value in PRESETS[preset]['schedule'].items():
            assert getattr(rc.schedule, key) == value

    # Test the preset values of DDB14
    def test_ddb14(self):
        rc = RunConfig.resolve(preset='ddb14')
        assert rc.model.subspace_dim == 50
        assert rc.model.angle_weight == 0.7
        assert rc.schedule.epochs == 1000

    # Test the precedence of all sources
    def test_precedence(self, tmpdir):
        filepath = write_ini(tmpdir, "[model]\ndim = 64\nsubspace_dim = 8\n"
                             "[schedule]\nlr = 0.01\n")
        stored = {'model': {'dim': 128, 'subspace_dim': 16, 'k': 0.2}}
        flags = {'model': {'dim': 32}, 'schedule': {'seed': 5}}
        rc = RunConfig.resolve(flags, filepath, stored, preset='go21')
        assert rc.model.dim == 32
        assert rc.model.subspace_dim == 8
        assert rc.model.k == 0.2
        assert rc.model.angle_weight == 0.1
        assert rc.schedule.lr == 0.01
        assert rc.schedule.seed == 5
        assert rc.schedule.epochs == 100

    # Test that invalid resolved values are refused
    def test_invalid(self):
        with pytest.raises(ConfigError):
            RunConfig.resolve({'model': {'dim': 8, 'subspace_dim': 16}})

    # Test that a written run config resolves to the same config
    def test_write(self, tmpdir):
        rc = RunConfig.resolve({'model': {'dim': 20, 'subspace_dim': 5},
                                'runtime': {'synthetic': 'default'}})
        filepath = path.join(str(tmpdir), 'saved.ini')
        rc.write(filepath)
        assert RunConfig.resolve(config_file=filepath) == rc
