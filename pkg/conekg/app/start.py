# -*- coding: utf-8 -*-

"""
App Start
=========
Provides the command-line interface of *ConeKG*, which trains cone models,
evaluates them, analyzes the hierarchies of knowledge graphs and generates
synthetic datasets.

"""


# %% IMPORTS
# Built-in imports
import argparse
import logging
import os
from os import path
import sys

# Package imports
import e13tools as e13
import numpy as np

# ConeKG imports
from conekg.__version__ import __version__
from conekg._globals import APP_NAME, CONFIG_NAME
from conekg.config import PRESETS, RunConfig
from conekg.data import (
    SyntheticSpec, build_ad_testset, build_lca_queries, export_ad_pairs,
    load_triples, synthetic_kg, write_relation_meta, write_triples)
from conekg.eval import ad_predict, kg_completion, lca_predict
from conekg.hierarchy import THRESHOLD, classify_all, store_krackhardt
from conekg.model import RelationKind
from conekg.reports import export_reports
from conekg.training import (
    configure_threads, load_checkpoint, save_checkpoint, train)
from conekg.utils.exceptions import (
    CheckpointError, ConeKGError, ConfigError, DivergenceError)

# All declaration
__all__ = ['EXIT_CODES', 'EXIT_UNEXPECTED', 'SYNTHETIC_SPECS',
           'configure_logging', 'create_exception_handler', 'load_store',
           'main', 'make_parser']

# Set logger
logger = logging.getLogger(__name__)


# %% GLOBALS
# Exit code of invalid command-line usage
EXIT_USAGE = 1

# Exit codes of all handled exceptions, checked in order
EXIT_CODES = [(DivergenceError, 3), (ConeKGError, 2), (OSError, 2)]

# Exit code of all other exceptions
EXIT_UNEXPECTED = 4

# Named synthetic knowledge graphs
SYNTHETIC_SPECS = {
    'default': SyntheticSpec(),
    'small': SyntheticSpec(n_entities=40, depth=3, branching=2,
                           sibling_links=10)}

# Config section of every command-line flag
FLAG_SECTIONS = {
    'dim': 'model', 'subspace_dim': 'model', 'k': 'model',
    'angle_weight': 'model', 'adv_temperature': 'model',
    'negatives': 'model', 'variant': 'model',
    'epochs': 'schedule', 'batch_size': 'schedule', 'lr': 'schedule',
    'seed': 'schedule', 'pretrain_epochs': 'schedule',
    'valid_every': 'schedule', 'subspace_mode': 'schedule',
    'deterministic': 'schedule', 'threads': 'schedule',
    'data': 'runtime', 'synthetic': 'runtime', 'relation_meta': 'runtime',
    'checkpoint': 'runtime', 'report': 'runtime', 'history': 'runtime',
    'unknown': 'runtime', 'reciprocal': 'runtime'}

# Runtime options that are stored in checkpoints
DATA_OPTIONS = ('data', 'synthetic', 'relation_meta', 'unknown',
                'reciprocal')


# %% CLASS DEFINITIONS
# Define argument parser that exits with the usage exit code
class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


# %% FUNCTION DEFINITIONS
# This function configures the logger of the package
def configure_logging(level=logging.INFO):
    """
    Attaches a stream handler writing to stderr to the package logger and
    sets its level to `level`. Handlers attached by earlier calls are
    replaced.

    """

    pkg_logger = logging.getLogger(__name__.split('.')[0])
    for handler in list(pkg_logger.handlers):
        if getattr(handler, 'conekg_cli', False):
            pkg_logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(
        "%(asctime)s %(levelname)s %(name)s: %(message)s"))
    handler.conekg_cli = True
    pkg_logger.addHandler(handler)
    pkg_logger.setLevel(level)


# This function factory creates a function for handling exceptions
def create_exception_handler(log=logger):
    """
    Function factory that returns a function definition
    ``handle_exception(error)``.

    Calling the returned definition with an exception returns the exit code
    belonging to its type, as given by :obj:`~EXIT_CODES`. Exceptions of any
    other type are logged with their traceback and return
    :obj:`~EXIT_UNEXPECTED`.

    Optional
    --------
    log : :obj:`~logging.Logger` object. Default: logger of this module
        The logger that reports handled exceptions.

    """

    # This function maps an exception onto an exit code
    def handle_exception(error):
        for err_type, code in EXIT_CODES:
            if isinstance(error, err_type):
                break
        else:
            log.error("Unexpected %s: %s", error.__class__.__name__, error,
                      exc_info=error)
            return(EXIT_UNEXPECTED)

        # Errors of the package were logged when they were raised
        if not isinstance(error, ConeKGError):
            log.error("%s: %s", error.__class__.__name__, error)
        log.debug("Exiting with code %i.", code, exc_info=error)
        return(code)

    # Return function definition
    return(handle_exception)


# This function loads the knowledge graph of a run
def load_store(runtime, seed=0):
    """
    Loads the knowledge graph described by the `runtime` options, which is
    either the dataset directory 'data' or the synthetic graph 'synthetic'
    generated with `seed`.

    """

    # Check that exactly one source was given
    data, synthetic = runtime['data'], runtime['synthetic']
    if((data is None) == (synthetic is None)):
        e13.raise_error("Exactly one of a dataset directory (--data) and a "
                        "synthetic graph (--synthetic) is required!",
                        ConfigError, logger)

    # Generate a synthetic graph
    if synthetic is not None:
        if isinstance(synthetic, dict):
            spec = SyntheticSpec(**synthetic)
        elif synthetic in SYNTHETIC_SPECS:
            spec = SYNTHETIC_SPECS[synthetic]
        else:
            e13.raise_error("Unknown synthetic graph %r! Valid graphs are %s."
                            % (synthetic, list(SYNTHETIC_SPECS)), ConfigError,
                            logger)
        return(synthetic_kg(spec, np.random.default_rng(seed),
                            runtime['reciprocal']))

    # Load a dataset directory
    if not path.isdir(data):
        e13.raise_error("Dataset directory %r does not exist!" % (data),
                        ConfigError, logger)
    return(load_triples(data, runtime['relation_meta'], runtime['unknown'],
                        runtime['reciprocal']))


# %% HELPER DEFINITIONS
# This function collects the config values given as flags
def _flag_config(args):
    flags = {}
    for dest, section in FLAG_SECTIONS.items():
        value = getattr(args, dest, None)
        if value is not None:
            flags.setdefault(section, {})[dest] = value
    return(flags)


# This function returns the config file of a run
def _config_file(args):
    if args.config is not None:
        return(args.config)
    return(CONFIG_NAME if path.exists(CONFIG_NAME) else None)


# This function returns the stem of a file path
def _stem(filepath):
    return(path.splitext(filepath)[0])


# This function writes a report in all formats and prints it
def _emit(report, prefix):
    print(report.to_text())
    for ext in ('.txt', '.jsonl'):
        export_reports(report, prefix+ext)


# This function loads the checkpoint and data of an evaluation
def _load_evaluation(args):
    # Find and load the checkpoint
    flags = _flag_config(args)
    config_file = _config_file(args)
    rc = RunConfig.resolve(flags, config_file)
    ckpt = load_checkpoint(rc.runtime['checkpoint'])

    # Resolve the run config with the stored values
    stored = {'model': ckpt.model.cfg.to_dict()}
    stored.update(ckpt.meta)

    # A data source given to this run replaces the stored one
    if(rc.runtime['data'] is not None or rc.runtime['synthetic'] is not None):
        stored['runtime'] = {key: value for key, value in
                             stored.get('runtime', {}).items()
                             if key not in ('data', 'synthetic')}
    rc = RunConfig.resolve(flags, config_file, stored)
    if(rc.model.dim != ckpt.model.dim or
       rc.model.variant != ckpt.model.cfg.variant):
        e13.raise_error("Checkpoint holds a %r model with d=%i, but a %r "
                        "model with d=%i is configured!"
                        % (ckpt.model.cfg.variant, ckpt.model.dim,
                           rc.model.variant, rc.model.dim), CheckpointError,
                        logger)
    configure_threads(rc.schedule)

    # Load the data with the relation kinds of the model
    store = load_store(rc.runtime, rc.schedule.seed)
    kinds = ckpt.model.kinds[:store.n_base_relations].tolist()
    store = store.with_kinds([RelationKind(kind) for kind in kinds])
    ckpt.check_store(store)
    return(rc, ckpt.model, store)


# %% COMMAND DEFINITIONS
# This function runs the train command
def cmd_train(args):
    """
    Trains a cone model and writes its checkpoint and loss history.

    """

    # Resolve the run config
    rc = RunConfig.resolve(_flag_config(args), _config_file(args),
                           preset=args.preset)
    if args.save_config is not None:
        rc.write(args.save_config)

    # Load the data and train
    store = load_store(rc.runtime, rc.schedule.seed)
    model, history = train(store, rc.model, rc.schedule)

    # Write the checkpoint and history
    runtime = rc.runtime
    meta = {'schedule': rc.schedule.to_dict(),
            'runtime': {key: runtime[key] for key in DATA_OPTIONS}}
    if runtime['data'] is not None:
        meta['runtime']['data'] = path.abspath(runtime['data'])
    save_checkpoint(model, runtime['checkpoint'], store, meta)
    history_file = (runtime['history'] or
                    _stem(runtime['checkpoint'])+'.history.tsv')
    history.to_frame().to_csv(history_file, sep='\t', index=False)
    logger.info("Wrote loss history to %r.", history_file)
    return(0)


# This function runs the eval command
def cmd_eval(args):
    """
    Evaluates a trained cone model and writes the report.

    """

    # Load checkpoint and data
    rc, model, store = _load_evaluation(args)
    rng = np.random.default_rng(rc.schedule.seed)

    # Evaluate the model
    if(args.task == 'kgc'):
        report = kg_completion(model, store, args.split, not args.raw)
    elif(args.task == 'ad'):
        pairs = build_ad_testset(store, args.inferred/100, args.pairs, rng)
        if args.export_pairs is not None:
            export_ad_pairs(pairs, args.export_pairs, store)
        report = ad_predict(model, pairs, store, "Ancestor-descendant (%i%% "
                            "inferred)" % (args.inferred))
    else:
        queries = build_lca_queries(store, args.hops, args.queries, rng)
        report = lca_predict(model, store, queries,
                             "LCA prediction (hops<=%i)" % (args.hops))

    # Write the report
    prefix = rc.runtime['report']
    if prefix is None:
        prefix = "%s.%s" % (_stem(rc.runtime['checkpoint']), args.task)
    _emit(report, prefix)
    return(0)


# This function runs the analyze command
def cmd_analyze(args):
    """
    Computes the hierarchy metrics of a knowledge graph and writes the
    report.

    """

    # Resolve the run config and load the data
    rc = RunConfig.resolve(_flag_config(args), _config_file(args))
    configure_threads(rc.schedule)
    store = load_store(rc.runtime, rc.schedule.seed)

    # Analyze the graph
    if(args.task == 'krackhardt'):
        report = store_krackhardt(store, args.source)
    else:
        report = classify_all(store, args.threshold, args.source)
        if args.write_meta is not None:
            write_relation_meta(report.to_meta(), args.write_meta)
            logger.info("Wrote relation metadata to %r.", args.write_meta)

    # Write the report
    _emit(report, rc.runtime['report'] or args.task)
    return(0)


# This function runs the generate command
def cmd_generate(args):
    """
    Writes a synthetic knowledge graph as a dataset directory, holding the
    triple files of all splits and the relation metadata.

    """

    # Generate the graph
    rc = RunConfig.resolve(_flag_config(args), _config_file(args))
    runtime = dict(rc.runtime, data=None, reciprocal=False)
    runtime['synthetic'] = runtime['synthetic'] or 'default'
    store = load_store(runtime, rc.schedule.seed)

    # Write the dataset directory
    os.makedirs(args.out, exist_ok=True)
    write_triples(store, args.out)
    write_relation_meta(dict(zip(store.relation_names, store.kinds)),
                        path.join(args.out, 'relations.tsv'))
    logger.info("Wrote synthetic dataset to %r.", args.out)
    return(0)


# This function creates the argument parser
def make_parser():
    """
    Returns the :obj:`~argparse.ArgumentParser` object of the command-line
    interface.

    """

    # Options of all commands
    common = _ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', dest='log_level',
                        action='store_const', const=logging.DEBUG,
                        default=logging.INFO, help="Log debug messages")
    common.add_argument('-q', '--quiet', dest='log_level',
                        action='store_const', const=logging.WARNING,
                        help="Only log warnings and errors")
    common.add_argument('--config', help="INI file with config values "
                        "(default: %s if it exists)" % (CONFIG_NAME))
    common.add_argument('--seed', type=int, help="Seed of all randomness")
    common.add_argument('--threads', type=int, help="Number of threads")
    common.add_argument('--deterministic', action='store_true', default=None,
                        help="Use one thread and deterministic algorithms")

    # Options of commands that read a knowledge graph
    data = _ArgumentParser(add_help=False)
    data.add_argument('--data', help="Dataset directory with train, valid "
                      "and test triple files")
    data.add_argument('--synthetic', help="Name of a synthetic graph (%s)"
                      % (', '.join(SYNTHETIC_SPECS)))
    data.add_argument('--relation-meta', help="Relation metadata file")
    data.add_argument('--unknown', choices=['skip', 'error'],
                      help="Handling of unseen names in valid and test")
    data.add_argument('--no-reciprocal', dest='reciprocal',
                      action='store_false', default=None,
                      help="Do not add reciprocal relations")
    data.add_argument('--report', help="Path prefix of the written reports")

    # Main parser
    parser = _ArgumentParser(
        prog='conekg', description="%s: knowledge graph embeddings in "
        "hyperbolic cones." % (APP_NAME))
    parser.add_argument('--version', action='version',
                        version="%s v%s" % (APP_NAME, __version__))
    commands = parser.add_subparsers(dest='command', required=True)

    # Train command
    train_parser = commands.add_parser(
        'train', parents=[common, data], help="Train a cone model")
    train_parser.add_argument('--preset', choices=list(PRESETS),
                              help="Start from the settings of a dataset")
    train_parser.add_argument('--dim', type=int)
    train_parser.add_argument('--subspace-dim', type=int)
    train_parser.add_argument('--k', type=float, help="Aperture constant")
    train_parser.add_argument('--angle-weight', type=float)
    train_parser.add_argument('--temperature', dest='adv_temperature',
                              type=float)
    train_parser.add_argument('--neg', dest='negatives', type=int)
    train_parser.add_argument('--variant',
                              choices=['cone', 'rotc', 'no_rotation'])
    train_parser.add_argument('--epochs', type=int)
    train_parser.add_argument('--pretrain-epochs', type=int)
    train_parser.add_argument('--batch', dest='batch_size', type=int)
    train_parser.add_argument('--lr', type=float)
    train_parser.add_argument('--valid-every', type=int)
    train_parser.add_argument('--subspace-mode',
                              choices=['overlapping', 'orthogonal'])
    train_parser.add_argument('--checkpoint', help="Checkpoint to write")
    train_parser.add_argument('--history', help="Loss history TSV to write")
    train_parser.add_argument('--save-config', help="Write the resolved "
                              "config to this INI file")
    train_parser.set_defaults(func=cmd_train)

    # Eval command
    eval_parser = commands.add_parser('eval', help="Evaluate a cone model")
    tasks = eval_parser.add_subparsers(dest='task', required=True)
    checkpoint = _ArgumentParser(add_help=False)
    checkpoint.add_argument('--checkpoint', help="Checkpoint to evaluate")
    parents = [common, data, checkpoint]
    kgc = tasks.add_parser('kgc', parents=parents,
                           help="Knowledge graph completion")
    kgc.add_argument('--split', choices=['valid', 'test'], default='test')
    kgc.add_argument('--raw', action='store_true',
                     help="Do not filter known triples")
    ad = tasks.add_parser('ad', parents=parents,
                          help="Ancestor-descendant prediction")
    ad.add_argument('--inferred', type=int, choices=[0, 50, 100], default=0,
                    help="Percentage of inferred positives")
    ad.add_argument('--pairs', type=int, default=1000,
                    help="Number of positive pairs")
    ad.add_argument('--export-pairs', help="Write the test pairs to a TSV")
    lca = tasks.add_parser('lca', parents=parents,
                           help="Lowest common ancestor prediction")
    lca.add_argument('--hops', type=int, choices=[1, 2, 3], default=1)
    lca.add_argument('--queries', type=int, default=1000,
                     help="Number of queries")
    eval_parser.set_defaults(func=cmd_eval)

    # Analyze command
    analyze_parser = commands.add_parser(
        'analyze', help="Analyze the hierarchies of a knowledge graph")
    tasks = analyze_parser.add_subparsers(dest='task', required=True)
    krackhardt = tasks.add_parser('krackhardt', parents=[common, data],
                                  help="Krackhardt scores of the whole graph")
    krackhardt.add_argument('--source', choices=['train', 'all'],
                            default='all', help="Splits to analyze")
    relations = tasks.add_parser('relations', parents=[common, data],
                                 help="Classify all relations")
    relations.add_argument('--source', choices=['train', 'all'],
                           default='train', help="Splits to analyze")
    relations.add_argument('--threshold', type=float, default=THRESHOLD)
    relations.add_argument('--write-meta', help="Write relation metadata")
    analyze_parser.set_defaults(func=cmd_analyze)

    # Generate command
    generate_parser = commands.add_parser(
        'generate', parents=[common], help="Write a synthetic dataset")
    generate_parser.add_argument('--synthetic', default='default',
                                 choices=list(SYNTHETIC_SPECS))
    generate_parser.add_argument('--out', required=True,
                                 help="Directory to write to")
    generate_parser.set_defaults(func=cmd_generate)

    # Return parser
    return(parser)


# %% MAIN FUNCTION
def main(argv=None):
    """
    Runs the command-line interface with the arguments `argv` and returns
    the exit code.

    """

    # Parse the arguments
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return(error.code)

    # Run the command
    configure_logging(args.log_level)
    handle_exception = create_exception_handler()
    try:
        return(args.func(args))
    except Exception as error:
        return(handle_exception(error))


# %% MAIN EXECUTION
if(__name__ == '__main__'):
    sys.exit(main())
