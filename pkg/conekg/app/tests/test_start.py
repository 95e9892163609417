# -*- coding: utf-8 -*-

# %% IMPORTS
# Built-in imports
import json
import logging

# Package imports
import pytest

# ConeKG imports
from conekg.__version__ import __version__
from conekg.app import EXIT_UNEXPECTED, create_exception_handler, main
from conekg.app.start import configure_logging, load_store
from conekg.config import RunConfig
from conekg.data import read_relation_meta
from conekg.model import RelationKind
from conekg.utils.exceptions import ConfigError, DataError, DivergenceError

# Flags of a quick training run on the small synthetic graph
TRAIN_FLAGS = ['--synthetic', 'small', '--dim', '8', '--subspace-dim', '4',
               '--epochs', '1', '--neg', '4', '--batch', '64', '--seed', '3']


# %% HELPER FUNCTIONS
# Returns the records of a JSON Lines report
def read_jsonl(filepath):
    with open(filepath, 'r') as file:
        return([json.loads(line) for line in file])


# %% PYTEST FIXTURES
# Checkpoint of a quick training run, shared by all evaluations
@pytest.fixture(scope='module')
def checkpoint(tmp_path_factory):
    filepath = tmp_path_factory.mktemp('train')/'run.cone'
    assert main(['train', *TRAIN_FLAGS, '--checkpoint', str(filepath)]) == 0
    return(filepath)


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for the command-line usage
class TestUsage(object):
    # Test that invalid usage returns exit code 1
    @pytest.mark.parametrize('argv', [
        [], ['fit'], ['train', '--dim', 'abc'], ['eval'],
        ['eval', 'ad', '--inferred', '30'], ['generate']])
    def test_invalid(self, argv):
        assert main(argv) == 1

    # Test that the version is printed
    def test_version(self, capsys):
        assert main(['--version']) == 0
        assert __version__ in capsys.readouterr().out

    # Test that the help is printed
    def test_help(self, capsys):
        assert main(['eval', 'kgc', '--help']) == 0
        assert "--checkpoint" in capsys.readouterr().out


# Pytest class for the exception handler
class TestExceptionHandler(object):
    # Test the exit codes of all handled exceptions
    @pytest.mark.parametrize('error, code', [
        (DivergenceError("NaN loss"), 3),
        (ConfigError("invalid"), 2),
        (DataError("invalid"), 2),
        (FileNotFoundError("missing"), 2)])
    def test_codes(self, error, code):
        assert create_exception_handler()(error) == code

    # Test that other exceptions are logged and return the generic code
    def test_unexpected(self, caplog):
        with caplog.at_level(logging.ERROR, logger='conekg'):
            code = create_exception_handler()(KeyError('key'))
        assert code == EXIT_UNEXPECTED
        record, = caplog.records
        assert record.levelno == logging.ERROR
        assert 'KeyError' in record.getMessage()
        assert record.exc_info is not None


# Pytest function for configure_logging
def test_configure_logging():
    configure_logging(logging.DEBUG)
    configure_logging(logging.WARNING)
    pkg_logger = logging.getLogger('conekg')
    assert pkg_logger.level == logging.WARNING
    assert sum(getattr(handler, 'conekg_cli', False)
               for handler in pkg_logger.handlers) == 1


# Pytest class for load_store
class TestLoadStore(object):
    # Test loading a named synthetic graph
    def test_synthetic(self):
        runtime = RunConfig.resolve(
            {'runtime': {'synthetic': 'small'}}).runtime
        assert load_store(runtime).n_entities == 40

    # Test that exactly one data source is required
    @pytest.mark.parametrize('data, synthetic', [
        (None, None), ('.', 'small')])
    def test_sources(self, data, synthetic):
        runtime = RunConfig.resolve().runtime
        runtime.update(data=data, synthetic=synthetic)
        with pytest.raises(ConfigError):
            load_store(runtime)

    # Test that unknown graphs and directories are refused
    @pytest.mark.parametrize('option, value', [
        ('synthetic', 'huge'), ('data', 'does_not_exist')])
    def test_unknown(self, option, value):
        runtime = RunConfig.resolve().runtime
        runtime[option] = value
        with pytest.raises(ConfigError):
            load_store(runtime)


# Pytest class for the train command
class TestTrain(object):
    # Test that a checkpoint and loss history are written
    def test_outputs(self, checkpoint):
        assert checkpoint.exists()
        assert checkpoint.with_suffix('.history.tsv').exists()

    # Test that seeded runs write identical checkpoints
    def test_deterministic(self, tmp_path):
        files = [tmp_path/'a.cone', tmp_path/'b.cone']
        for filepath in files:
            assert main(['train', *TRAIN_FLAGS, '--deterministic',
                         '--checkpoint', str(filepath)]) == 0
        assert files[0].read_bytes() == files[1].read_bytes()

    # Test that the resolved config can be saved
    def test_save_config(self, tmp_path):
        config_file = tmp_path/'run.ini'
        assert main(['train', *TRAIN_FLAGS, '--epochs', '0',
                     '--checkpoint', str(tmp_path/'run.cone'),
                     '--save-config', str(config_file)]) == 0
        rc = RunConfig.resolve(config_file=str(config_file))
        assert rc.model.dim == 8
        assert rc.schedule.seed == 3

    # Test that an invalid config value returns exit code 2
    def test_invalid_config(self, tmp_path):
        assert main(['train', *TRAIN_FLAGS, '--dim', '2',
                     '--checkpoint', str(tmp_path/'run.cone')]) == 2


# Pytest class for the eval command
class TestEval(object):
    # Test all evaluation tasks
    @pytest.mark.parametrize('task, options, report', [
        ('kgc', [], "KG completion"),
        ('kgc', ['--raw', '--split', 'valid'], "KG completion"),
        ('ad', ['--pairs', '20'], "Ancestor-descendant"),
        ('lca', ['--queries', '10', '--hops', '2'], "LCA prediction")])
    def test_tasks(self, checkpoint, tmp_path, task, options, report):
        prefix = str(tmp_path/task)
        assert main(['eval', task, '--checkpoint', str(checkpoint),
                     '--report', prefix, *options]) == 0
        with open(prefix+'.txt', 'r') as file:
            assert file.read().startswith(report)
        assert read_jsonl(prefix+'.jsonl')

    # Test that the default report prefix follows the checkpoint
    def test_default_prefix(self, checkpoint):
        assert main(['eval', 'kgc', '--checkpoint', str(checkpoint)]) == 0
        assert checkpoint.with_suffix('.kgc.txt').exists()
        assert checkpoint.with_suffix('.kgc.jsonl').exists()

    # Test that the test pairs can be exported
    def test_export_pairs(self, checkpoint, tmp_path):
        pairs_file = tmp_path/'pairs.tsv'
        assert main(['eval', 'ad', '--checkpoint', str(checkpoint),
                     '--pairs', '10', '--report', str(tmp_path/'ad'),
                     '--export-pairs', str(pairs_file)]) == 0
        with open(pairs_file, 'r') as file:
            assert len(file.readlines()) == 21

    # Test that a missing checkpoint returns exit code 2
    def test_missing_checkpoint(self, tmp_path):
        assert main(['eval', 'kgc', '--checkpoint',
                     str(tmp_path/'missing.cone')]) == 2

    # Test that another model size returns exit code 2
    def test_mismatch(self, checkpoint, tmp_path):
        config_file = tmp_path/'other.ini'
        config_file.write_text("[model]\ndim = 16\n")
        assert main(['eval', 'kgc', '--checkpoint', str(checkpoint),
                     '--config', str(config_file)]) == 2


# Pytest class for the analyze and generate commands
class TestAnalyze(object):
    # Test writing and classifying a synthetic dataset
    def test_generate_relations(self, tmp_path):
        data = tmp_path/'small'
        assert main(['generate', '--synthetic', 'small',
                     '--out', str(data)]) == 0
        assert (data/'relations.tsv').exists()

        meta_file = tmp_path/'detected.tsv'
        assert main(['analyze', 'relations', '--data', str(data),
                     '--source', 'all', '--report', str(tmp_path/'rel'),
                     '--write-meta', str(meta_file)]) == 0
        assert read_relation_meta(str(meta_file)) == {
            'hyponym_0': RelationKind.HYPONYM,
            'hyponym_1': RelationKind.HYPONYM,
            'sibling': RelationKind.NONE}
        assert len(read_jsonl(str(tmp_path/'rel.jsonl'))) == 3

    # Test that a high threshold leaves no hierarchical relations
    def test_threshold(self, tmp_path):
        meta_file = tmp_path/'meta.tsv'
        assert main(['analyze', 'relations', '--synthetic', 'small',
                     '--threshold', '9.9', '--report', str(tmp_path/'rel'),
                     '--write-meta', str(meta_file)]) == 0
        kinds = read_relation_meta(str(meta_file)).values()
        assert not any(kind.hierarchical for kind in kinds)

    # Test the Krackhardt scores of a synthetic graph
    def test_krackhardt(self, tmp_path):
        prefix = str(tmp_path/'krackhardt')
        assert main(['analyze', 'krackhardt', '--synthetic', 'small',
                     '--report', prefix]) == 0
        record = read_jsonl(prefix+'.jsonl')[0]
        assert record['report'] == "Krackhardt scores"
        assert 0 <= record['hierarchy'] <= 1

    # Test that two data sources return exit code 2
    def test_two_sources(self, tmp_path):
        assert main(['analyze', 'krackhardt', '--synthetic', 'small',
                     '--data', str(tmp_path)]) == 2
