# -*- coding: utf-8 -*-

"""
Trainer
=======
Provides the training schedule and the training loops of RotC pretraining
and ConE training.

"""


# %% IMPORTS
# Built-in imports
from copy import deepcopy
from dataclasses import asdict, dataclass, field
import logging
import os
from time import perf_counter
from typing import Optional

# Package imports
import e13tools as e13
import pandas as pd
import torch

# ConeKG imports
from conekg._globals import ENV_THREADS, INT_TYPES
from conekg.eval import kg_completion
from conekg.model import ConeModel, ModelConfig, RelationKind
from conekg.training.losses import loss_terms
from conekg.training.sampling import iterate_batches
from conekg.training.subspaces import MODES, allocate_subspaces
from conekg.utils.exceptions import ConfigError, DivergenceError

# All declaration
__all__ = ['TrainHistory', 'TrainSchedule', 'configure_threads',
           'make_optimizer', 'mean_angle_violation', 'pretrain_rotc',
           'train']

# Set logger
logger = logging.getLogger(__name__)


# %% CLASS DEFINITIONS
# Define class holding the training schedule
@dataclass(frozen=True)
class TrainSchedule(object):
    """
    Defines how a cone model is trained.

    Parameters
    ----------
    epochs : int. Default: 500
        The number of ConE epochs.
    batch_size : int. Default: 1024
        The number of positive triples per batch.
    lr : float. Default: 0.001
        The learning rate of Adam.
    seed : int. Default: 0
        The seed of all random draws of a training run.
    pretrain_epochs : int or None. Default: None
        The number of RotC pretraining epochs. If *None*, 30% of `epochs` is
        used.
    pretrain_recover_factor : float. Default: 0.5
        The factor all pretrained entity planes are scaled by towards the
        origin before ConE training starts.
    valid_every : int. Default: 10
        The number of epochs between two validations.
    subspace_mode : {'overlapping'; 'orthogonal'}. Default: 'overlapping'
        How the subspaces of the hierarchical relations are allocated.
    deterministic : bool. Default: False
        Whether to use a single thread and deterministic algorithms only,
        making runs with the same seed bit-identical.
    threads : int or None. Default: None
        The number of threads. If *None*, the environment variable
        ``CONE_KG_THREADS`` is used if set, and all cores otherwise.

    """

    epochs: int = 500
    batch_size: int = 1024
    lr: float = 0.001
    seed: int = 0
    pretrain_epochs: Optional[int] = None
    pretrain_recover_factor: float = 0.5
    valid_every: int = 10
    subspace_mode: str = 'overlapping'
    deterministic: bool = False
    threads: Optional[int] = None

    def __post_init__(self):
        # Check all counts
        counts = {'epochs': 0, 'batch_size': 1, 'valid_every': 1, 'seed': 0}
        if self.pretrain_epochs is not None:
            counts['pretrain_epochs'] = 0
        if self.threads is not None:
            counts['threads'] = 1
        for name, minimum in counts.items():
            value = getattr(self, name)
            if(not isinstance(value, INT_TYPES) or isinstance(value, bool) or
               value < minimum):
                e13.raise_error("Schedule field %r must be an integer of at "
                                "least %i, not %r!" % (name, minimum, value),
                                ConfigError, logger)

        # Check all reals
        if not (self.lr > 0):
            e13.raise_error("Learning rate must be positive, not %r!"
                            % (self.lr), ConfigError, logger)
        if not (0 < self.pretrain_recover_factor <= 1):
            e13.raise_error("Pretrain recover factor must be in (0, 1], not "
                            "%r!" % (self.pretrain_recover_factor),
                            ConfigError, logger)
        if self.subspace_mode not in MODES:
            e13.raise_error("Subspace mode must be one of %s, not %r!"
                            % (MODES, self.subspace_mode), ConfigError,
                            logger)

    @property
    def n_pretrain_epochs(self):
        if self.pretrain_epochs is None:
            return(int(round(0.3*self.epochs)))
        return(self.pretrain_epochs)

    def to_dict(self):
        return(asdict(self))

    def replace(self, **kwargs):
        schedule = self.to_dict()
        schedule.update(kwargs)
        return(TrainSchedule(**schedule))


# Define class recording the progress of a training run
@dataclass
class TrainHistory(object):
    """
    Records the mean losses of every epoch and the validation MRR of every
    validation of a training run.

    """

    epochs: list = field(default_factory=list)
    validation: list = field(default_factory=list)
    best_epoch: Optional[int] = None
    best_mrr: Optional[float] = None

    # This function returns the mean total losses of a phase
    def losses(self, phase='cone'):
        return([record['loss'] for record in self.epochs
                if record['phase'] == phase])

    # This function returns the history as a data frame
    def to_frame(self):
        """
        Returns a :obj:`~pandas.DataFrame` holding one row per epoch, with
        the validation MRR of the epochs that were validated.

        """

        frame = pd.DataFrame(self.epochs, columns=[
            'phase', 'epoch', 'loss', 'distance', 'angle', 'elapsed'])
        valid = pd.DataFrame(self.validation, columns=['epoch', 'mrr'])
        valid['phase'] = 'cone'
        return(frame.merge(valid, on=['phase', 'epoch'], how='left'))

    # This function returns the history as flat records
    def to_records(self):
        return(self.to_frame().to_dict('records'))


# %% HELPER DEFINITIONS
# This function runs a number of epochs
def _run_epochs(model, triples, schedule, n_epochs, phase, generator,
                history, validate=None):
    # Create optimizer
    optimizer = make_optimizer(model, schedule)

    # Loop over all epochs
    for epoch in range(1, n_epochs+1):
        start = perf_counter()
        sums = torch.zeros(3, dtype=torch.float64)
        count = 0

        # Loop over all batches
        for batch in iterate_batches(triples, model.n_entities,
                                     schedule.batch_size, model.cfg.negatives,
                                     generator):
            optimizer.zero_grad()
            terms = loss_terms(batch, model)

            # Abort if the loss diverged
            if not torch.isfinite(terms.total):
                e13.raise_error("Loss of %s epoch %i diverged to %r!"
                                % (phase, epoch, terms.total.item()),
                                DivergenceError, logger)

            # Take an Adam step and project back onto the ball
            terms.total.backward()
            optimizer.step()
            model.project_()

            # Accumulate the losses
            sums += torch.stack(terms).detach()*batch.size
            count += batch.size

        # Check the parameters and record the epoch
        model.check_finite()
        distance, angle, loss = (sums/max(count, 1)).tolist()
        history.epochs.append({
            'phase': phase, 'epoch': epoch, 'loss': loss,
            'distance': distance, 'angle': angle,
            'elapsed': perf_counter()-start})
        logger.info("%s epoch %i/%i: loss %.6f (distance %.6f, angle %.6f) "
                    "in %.2fs.", phase, epoch, n_epochs, loss, distance,
                    angle, history.epochs[-1]['elapsed'])

        # Validate if required
        if validate is not None and (epoch % schedule.valid_every == 0 or
                                     epoch == n_epochs):
            validate(epoch)


# %% FUNCTION DEFINITIONS
# This function configures the threads of torch
def configure_threads(schedule):
    """
    Configures the number of threads and deterministic algorithms of torch
    according to `schedule`, and returns the number of threads set, or
    *None* if the default is kept.

    """

    # Determine the number of threads
    if schedule.deterministic:
        threads = 1
    elif schedule.threads is not None:
        threads = schedule.threads
    elif os.environ.get(ENV_THREADS):
        try:
            threads = int(os.environ[ENV_THREADS])
        except ValueError:
            e13.raise_error("Environment variable %r must be an integer, not "
                            "%r!" % (ENV_THREADS, os.environ[ENV_THREADS]),
                            ConfigError, logger)
    else:
        threads = None

    # Apply the settings
    if threads is not None:
        torch.set_num_threads(threads)
    torch.use_deterministic_algorithms(schedule.deterministic)
    return(threads)


# This function creates the optimizer of a model
def make_optimizer(model, schedule):
    """
    Returns an :obj:`~torch.optim.Adam` optimizer over all parameters of
    `model` with the learning rate of `schedule`.

    """

    return(torch.optim.Adam(model.parameters(), lr=schedule.lr,
                            betas=(0.9, 0.999), eps=1e-8))


# This function computes the mean angle violation of hierarchical triples
@torch.no_grad()
def mean_angle_violation(model, triples, batch_size=4096):
    """
    Returns the mean angle violation of all hierarchical triples in
    `triples` under `model`, or 0 if there are none.

    """

    triples = torch.as_tensor(triples, dtype=torch.int64)
    total, count = 0.0, 0
    for batch in triples.split(batch_size):
        hier = model.kinds[batch[:, 1]] != RelationKind.NONE
        viol = model.angle_violation(*batch[hier].T)
        total += float(viol.sum())
        count += int(hier.sum())
    return(total/count if count else 0.0)


# This function pretrains a RotC model
def pretrain_rotc(store, cfg=None, schedule=None, generator=None,
                  history=None):
    """
    Trains a RotC model on `store` for the pretraining epochs of `schedule`
    and scales all of its entity planes towards the origin by the recover
    factor, keeping the biases.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store to train on.

    Optional
    --------
    cfg : :obj:`~conekg.model.ModelConfig` object or None. Default: None
        The configuration of the ConE model that is initialized from the
        result. Its variant is replaced by 'rotc'.
    schedule : :obj:`~TrainSchedule` object or None. Default: None
        The training schedule.
    generator : :obj:`~torch.Generator` object or None. Default: None
        The random number generator. If *None*, one seeded with the seed of
        `schedule` is used.
    history : :obj:`~TrainHistory` object or None. Default: None
        The history to record the epochs in.

    Returns
    -------
    model : :obj:`~conekg.model.ConeModel` object
        The pretrained RotC model, with all masks zero.

    """

    # Obtain defaults
    cfg = (ModelConfig() if cfg is None else cfg).replace(variant='rotc')
    schedule = TrainSchedule() if schedule is None else schedule
    if generator is None:
        generator = torch.Generator().manual_seed(schedule.seed)
    history = TrainHistory() if history is None else history

    # Create the RotC model
    base_kinds = store.kinds[:store.n_base_relations]
    masks = allocate_subspaces(base_kinds, cfg.dim, cfg.subspace_dim,
                               schedule.seed, variant='rotc',
                               reciprocal=store.reciprocal)
    model = ConeModel(store.n_entities, store.kinds, masks, cfg, generator)

    # Train it
    logger.info("Pretraining RotC for %i epochs.", schedule.n_pretrain_epochs)
    _run_epochs(model, store.split('train', with_reciprocals=True), schedule,
                schedule.n_pretrain_epochs, 'rotc', generator, history)

    # Recover the entity planes
    model.recover_(schedule.pretrain_recover_factor)
    return(model)


# This function trains a cone model
def train(store, cfg=None, schedule=None):
    """
    Trains a cone model on `store`.

    Unless the schedule has no pretraining epochs, a RotC model is pretrained
    first and its parameters initialize the cone model. After every Adam
    step, all entity planes are projected back onto the ball. If `store` has
    validation triples, the filtered MRR on them is computed regularly and
    the parameters of the best validation are restored at the end.

    Parameters
    ----------
    store : :obj:`~conekg.data.TripleStore` object
        The triple store to train on.

    Optional
    --------
    cfg : :obj:`~conekg.model.ModelConfig` object or None. Default: None
        The model configuration. If *None*, the default is used.
    schedule : :obj:`~TrainSchedule` object or None. Default: None
        The training schedule. If *None*, the default is used.

    Returns
    -------
    model : :obj:`~conekg.model.ConeModel` object
        The trained model.
    history : :obj:`~TrainHistory` object
        The losses and validations of the run.

    Raises
    ------
    :class:`~conekg.utils.exceptions.DivergenceError`
        If the loss or any parameter becomes non-finite.

    """

    # Obtain defaults
    cfg = ModelConfig() if cfg is None else cfg
    schedule = TrainSchedule() if schedule is None else schedule
    configure_threads(schedule)
    generator = torch.Generator().manual_seed(schedule.seed)
    history = TrainHistory()

    # Allocate the subspaces
    masks = allocate_subspaces(store.kinds[:store.n_base_relations],
                               cfg.dim, cfg.subspace_dim, schedule.seed,
                               schedule.subspace_mode, cfg.variant,
                               store.reciprocal)

    # Initialize the model, from a pretrained RotC model if requested
    if schedule.n_pretrain_epochs and schedule.epochs:
        rotc = pretrain_rotc(store, cfg, schedule, generator, history)
        model = rotc.with_masks(masks, cfg)
    else:
        model = ConeModel(store.n_entities, store.kinds, masks, cfg,
                          generator)

    # Prepare the validation
    best = {}

    def validate(epoch):
        mrr = kg_completion(model, store, 'valid').mrr
        history.validation.append({'epoch': epoch, 'mrr': mrr})
        logger.info("Validation MRR after epoch %i: %.4f.", epoch, mrr)
        if history.best_mrr is None or mrr > history.best_mrr:
            history.best_epoch, history.best_mrr = epoch, mrr
            best['state'] = deepcopy(model.state_dict())

    # Train the cone model
    logger.info("Training %s model for %i epochs.", cfg.variant,
                schedule.epochs)
    _run_epochs(model, store.split('train', with_reciprocals=True), schedule,
                schedule.epochs, 'cone', generator, history,
                validate if len(store.valid) else None)

    # Restore the best parameters
    if best:
        model.load_state_dict(best['state'])
        logger.info("Restored parameters of epoch %i.", history.best_epoch)

    # Return model and history
    return(model, history)
