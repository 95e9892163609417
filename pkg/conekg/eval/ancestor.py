# -*- coding: utf-8 -*-

"""
Ancestor-Descendant Prediction
==============================
Provides the evaluation of ancestor-descendant pairs by their angle
violations.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import pandas as pd
from sklearn.metrics import average_precision_score, roc_auc_score
import torch

# ConeKG imports
from conekg.eval.reports import AdReport
from conekg.model import RelationKind
from conekg.utils.exceptions import ContractError, DataError

# All declaration
__all__ = ['ad_predict', 'pair_scores']

# Set logger
logger = logging.getLogger(__name__)


# %% FUNCTION DEFINITIONS
# This function computes the angle violations of ancestor-descendant pairs
@torch.no_grad()
def pair_scores(model, pairs, batch_size=4096):
    """
    Returns the angle violation of every pair in `pairs` under `model`,
    where the ancestor always owns the cone. Lower values mark more likely
    ancestors.

    """

    # Obtain the ids of all pairs
    anc = torch.as_tensor([pair.ancestor for pair in pairs], dtype=torch.int64)
    desc = torch.as_tensor([pair.descendant for pair in pairs],
                           dtype=torch.int64)
    rels = torch.as_tensor([pair.relation for pair in pairs],
                           dtype=torch.int64)

    # Check that all relations are hierarchical
    kinds = model.kinds[rels]
    if (kinds == RelationKind.NONE).any():
        e13.raise_error("Ancestor-descendant pairs must use hierarchical "
                        "relations!", ContractError, logger)

    # Hypernym triples point from the descendant to the ancestor
    hyper = kinds == RelationKind.HYPERNYM
    heads = torch.where(hyper, desc, anc)
    tails = torch.where(hyper, anc, desc)

    # Return violations
    return(torch.cat([
        model.angle_violation(h, r, t) for h, r, t in
        zip(heads.split(batch_size), rels.split(batch_size),
            tails.split(batch_size))]).numpy())


# This function evaluates ancestor-descendant prediction
def ad_predict(model, pairs, store=None, name="Ancestor-descendant"):
    """
    Ranks all `pairs` by their angle violations under `model` and returns
    the average precision and AUROC of the positives.

    Parameters
    ----------
    model : :obj:`~conekg.model.ConeModel` object
        The model to evaluate.
    pairs : list of :obj:`~conekg.data.AdPair`
        The labeled pairs, as returned by
        :func:`~conekg.data.build_ad_testset`.

    Optional
    --------
    store : :obj:`~conekg.data.TripleStore` object or None. Default: None
        The store used to name relations in the report. If *None*, relation
        ids are used.
    name : str. Default: "Ancestor-descendant"
        The name of the report.

    Returns
    -------
    report : :obj:`~conekg.eval.AdReport` object
        The pooled mAP and AUROC, with the mAP per hierarchy gap and per
        relation. Every gap bucket holds the positives with that gap and
        their negatives.

    """

    # Check input arguments
    if not len(pairs):
        e13.raise_error("No ancestor-descendant pairs to evaluate!",
                        DataError, logger)

    # Score all pairs, where higher means more likely
    frame = pd.DataFrame(pairs)
    frame['score'] = -pair_scores(model, pairs)
    frame['label'] = frame['label'].astype(bool)
    if frame['label'].all() or not frame['label'].any():
        e13.raise_error("Ancestor-descendant pairs must hold both positives "
                        "and negatives!", DataError, logger)

    # Compute the pooled metrics
    def ap(df):
        return(float(average_precision_score(df['label'], df['score'])))

    report = AdReport(name, ap(frame),
                      float(roc_auc_score(frame['label'], frame['score'])),
                      len(frame))

    # Assign every negative the gap of the positive before it
    gaps = frame['gap'].where(frame['label']).ffill()
    for gap, df in frame.groupby(gaps.to_numpy()):
        if df['label'].all() or not df['label'].any():
            continue
        report.per_gap[int(gap)] = ap(df)

    # Compute the mAP of every relation
    for rel, df in frame.groupby('relation'):
        if df['label'].all() or not df['label'].any():
            continue
        label = store.relation_names[rel] if store is not None else str(rel)
        report.per_relation[label] = ap(df)

    # Return report
    logger.info("%s: mAP %.4f, AUROC %.4f over %i pairs.", name, report.map,
                report.auroc, report.count)
    return(report)
