# -*- coding: utf-8 -*-

"""
Evaluation Reports
==================
Provides the report classes that all evaluations of *ConeKG* return.

"""


# %% IMPORTS
# Built-in imports
from dataclasses import dataclass, field
import logging
from typing import Dict

# Package imports
import numpy as np
import pandas as pd

# All declaration
__all__ = ['HITS_AT', 'AdReport', 'RankingReport', 'rank_of']

# Set logger
logger = logging.getLogger(__name__)

# Cut-offs of all Hits@N values
HITS_AT = (1, 3, 10)


# %% CLASS DEFINITIONS
# Define class holding the results of a ranking evaluation
@dataclass
class RankingReport(object):
    """
    Holds the mean reciprocal rank and Hits@N of a ranking evaluation,
    together with the same metrics on named groups of its queries.

    """

    name: str
    mrr: float
    hits: Dict[int, float]
    count: int
    groups: Dict[str, 'RankingReport'] = field(default_factory=dict)
    skipped: int = 0

    # This function creates a report from an array of ranks
    @classmethod
    def from_ranks(cls, name, ranks, groups=None, skipped=0):
        """
        Creates a report named `name` from the 1-based `ranks` of all
        queries.

        `groups` optionally maps group names onto boolean or index arrays
        selecting the ranks of every group. Empty groups are left out.

        """

        ranks = np.asarray(ranks, dtype=np.float64)
        report = cls(name, float(np.mean(1/ranks)) if ranks.size else 0.0,
                     {n: float(np.mean(ranks <= n)) if ranks.size else 0.0
                      for n in HITS_AT}, int(ranks.size), skipped=skipped)
        for group, idx in (groups or {}).items():
            sub = ranks[idx]
            if sub.size:
                report.groups[group] = cls.from_ranks(group, sub)
        return(report)

    # This function returns this report as flat records
    def to_records(self):
        """
        Returns a list of dicts, one for all queries and one per group, each
        holding the report name, group, query count and all metrics.

        """

        rows = [('all', self)]+list(self.groups.items())
        records = []
        for group, report in rows:
            record = {'report': self.name, 'group': group,
                      'count': report.count, 'mrr': report.mrr}
            record.update(('hits@%i' % (n), report.hits[n]) for n in HITS_AT)
            records.append(record)
        if self.skipped:
            records[0]['skipped'] = self.skipped
        return(records)

    # This function returns this report as a text table
    def to_text(self):
        frame = pd.DataFrame(self.to_records()).drop(columns='report')
        text = "%s\n%s" % (self.name, frame.to_string(
            index=False, float_format=lambda x: '%.4f' % (x)))
        if self.skipped:
            text += "\n(%i queries skipped)" % (self.skipped)
        return(text)


# Define class holding the results of an ancestor-descendant evaluation
@dataclass
class AdReport(object):
    """
    Holds the average precision and AUROC of an ancestor-descendant
    evaluation, pooled over all pairs, per hierarchy gap and per relation.

    """

    name: str
    map: float
    auroc: float
    count: int
    per_gap: Dict[int, float] = field(default_factory=dict)
    per_relation: Dict[str, float] = field(default_factory=dict)

    # This function returns this report as flat records
    def to_records(self):
        """
        Returns a list of dicts holding the pooled metrics followed by the
        mAP of every hierarchy gap and of every relation.

        """

        records = [{'report': self.name, 'group': 'all', 'count': self.count,
                    'map': self.map, 'auroc': self.auroc}]
        records.extend({'report': self.name, 'group': 'gap=%i' % (gap),
                        'map': value}
                       for gap, value in sorted(self.per_gap.items()))
        records.extend({'report': self.name, 'group': 'relation=%s' % (rel),
                        'map': value}
                       for rel, value in self.per_relation.items())
        return(records)

    # This function returns this report as a text table
    def to_text(self):
        frame = pd.DataFrame(self.to_records()).drop(columns='report')
        return("%s\n%s" % (self.name, frame.to_string(
            index=False, na_rep='', float_format=lambda x: '%.4f' % (x))))


# %% FUNCTION DEFINITIONS
# This function computes the rank of a target score among candidates
def rank_of(scores, target):
    """
    Returns the 1-based rank of the scores `target` among the candidate
    `scores` along their last axis, where higher scores rank first.

    Candidates tied with the target count as half above it, excluding the
    target itself, which must be one of the candidates.

    """

    target = target[..., None]
    greater = (scores > target).sum(-1)
    ties = (scores == target).sum(-1)-1
    return(1+greater+ties/2)
