# -*- coding: utf-8 -*-

"""
Synthetic Graphs
================
Provides a generator of small knowledge graphs holding several overlapping
hyponym forests and a symmetric non-hierarchical relation, with exactly
known ground-truth closures.

"""


# %% IMPORTS
# Built-in imports
from dataclasses import asdict, dataclass
import logging
from typing import Optional

# Package imports
import e13tools as e13
import numpy as np
import pandas as pd

# ConeKG imports
from conekg.data.store import COLUMNS, build_store
from conekg.model import RelationKind
from conekg.utils.exceptions import DataError

# All declaration
__all__ = ['SIBLING', 'SyntheticSpec', 'synthetic_kg']

# Set logger
logger = logging.getLogger(__name__)

# Name of the symmetric relation
SIBLING = 'sibling'


# %% CLASS DEFINITIONS
# Define class describing a synthetic knowledge graph
@dataclass(frozen=True)
class SyntheticSpec(object):
    """
    Describes a synthetic knowledge graph.

    Every hierarchy is a forest of trees with the given `depth` and
    `branching`, laid over its own random permutation of all entities.
    Trees are filled breadth-first, so the last tree of a forest can be
    incomplete.

    Parameters
    ----------
    n_entities : int or None. Default: 300
        The number of entities. Mutually exclusive with `n_trees`.
    n_hierarchies : int. Default: 2
        The number of hyponym relations.
    depth : int. Default: 4
        The largest depth of every tree.
    branching : int. Default: 3
        The number of children of every inner node.
    n_trees : int or None. Default: None
        The number of complete trees per forest, which determines the number
        of entities if `n_entities` is *None*.
    sibling_links : int. Default: 100
        The number of symmetric links between siblings of the first
        hierarchy. Every link adds two triples.
    missing_rate : float. Default: 0.1
        The fraction of all triples that is withheld from the training split
        and divided equally over the valid and test splits.

    """

    n_entities: Optional[int] = 300
    n_hierarchies: int = 2
    depth: int = 4
    branching: int = 3
    n_trees: Optional[int] = None
    sibling_links: int = 100
    missing_rate: float = 0.1

    @property
    def tree_size(self):
        return(sum(self.branching**level for level in range(self.depth+1)))

    @property
    def entity_count(self):
        if self.n_entities is not None:
            return(self.n_entities)
        return(self.n_trees*self.tree_size)

    def to_dict(self):
        return(asdict(self))


# %% HELPER DEFINITIONS
# This function checks that a synthetic spec can be generated
def _check_spec(spec):
    # Check that exactly one size is given
    if((spec.n_entities is None) == (spec.n_trees is None)):
        e13.raise_error("Exactly one of 'n_entities' and 'n_trees' must be "
                        "given!", DataError, logger)

    # Check all counts
    checks = {'n_hierarchies': 1, 'depth': 1, 'branching': 1,
              'sibling_links': 0}
    checks['n_entities' if spec.n_trees is None else 'n_trees'] = 1
    for name, minimum in checks.items():
        value = getattr(spec, name)
        if(int(value) != value or value < minimum):
            e13.raise_error("Synthetic spec field %r must be an integer of at "
                            "least %i, not %r!" % (name, minimum, value),
                            DataError, logger)

    # Check missing rate
    if not (0 <= spec.missing_rate < 1):
        e13.raise_error("Missing rate must be in [0, 1), not %r!"
                        % (spec.missing_rate), DataError, logger)


# This function lays a forest over a permutation of all entities
def _build_forest(perm, depth, branching):
    parents = {}
    i = 0
    while i < len(perm):
        # Start a new tree
        frontier = [perm[i]]
        i += 1

        # Fill the tree breadth-first
        for _ in range(depth):
            level = []
            for parent in frontier:
                for _ in range(branching):
                    if(i == len(perm)):
                        break
                    parents[perm[i]] = parent
                    level.append(perm[i])
                    i += 1
            frontier = level
    return(parents)


# This function computes the closure of a forest from its parent links
def _forest_closure(parents):
    closure = {}
    for child in parents:
        node, gap = child, 0
        while node in parents:
            node, gap = parents[node], gap+1
            closure[node, child] = gap
    return(closure)


# %% FUNCTION DEFINITIONS
# This function generates a synthetic knowledge graph
def synthetic_kg(spec=None, rng=None, reciprocal=True):
    """
    Generates a synthetic knowledge graph described by `spec`.

    The hierarchies are stored as the hyponym relations 'hyponym_<i>' with
    triples ``(parent, hyponym_<i>, child)``, and the symmetric links as the
    non-hierarchical relation 'sibling'. A `missing_rate` share of the
    triples of every relation is withheld from the training split.

    Parameters
    ----------
    spec : :obj:`~SyntheticSpec` object or None. Default: None
        The description of the graph. If *None*, the default spec is used.
    rng : :obj:`~numpy.random.Generator` object or None. Default: None
        The random number generator to use. If *None*, a generator seeded
        with 0 is used.

    Optional
    --------
    reciprocal : bool. Default: True
        Whether the store uses reciprocal relations.

    Returns
    -------
    store : :obj:`~conekg.data.TripleStore` object
        The generated store. Its `truth_closures` attribute maps every
        hyponym relation id onto its exact closure over all splits.

    """

    # Obtain spec and rng
    spec = SyntheticSpec() if spec is None else spec
    rng = np.random.default_rng(0) if rng is None else rng
    _check_spec(spec)
    n = spec.entity_count

    # Lay a forest over a fresh permutation for every hierarchy
    forests = [_build_forest(rng.permutation(n).tolist(), spec.depth,
                             spec.branching)
               for _ in range(spec.n_hierarchies)]
    relations = ['hyponym_%i' % (i) for i in range(spec.n_hierarchies)]
    triples = {name: [(parent, child) for child, parent in forest.items()]
               for name, forest in zip(relations, forests)}

    # Link random pairs of siblings of the first hierarchy
    if spec.sibling_links:
        children = {}
        for child, parent in forests[0].items():
            children.setdefault(parent, []).append(child)
        candidates = [(a, b) for kids in children.values()
                      for i, a in enumerate(kids) for b in kids[i+1:]]
        if(spec.sibling_links > len(candidates)):
            e13.raise_error("Requested %i sibling links, but the first "
                            "hierarchy only holds %i sibling pairs!"
                            % (spec.sibling_links, len(candidates)),
                            DataError, logger)
        idx = rng.choice(len(candidates), spec.sibling_links, replace=False)
        links = [candidates[i] for i in np.sort(idx)]
        triples[SIBLING] = links+[(b, a) for a, b in links]

    # Withhold a share of every relation and split it over valid and test
    names = ['e%i' % (i) for i in range(n)]
    frames = {'train': [], 'valid': [], 'test': []}
    for rel, edges in triples.items():
        edges = np.array(edges, dtype=np.int64)
        order = rng.permutation(len(edges))
        n_missing = int(round(spec.missing_rate*len(edges)))
        n_valid = n_missing//2
        parts = {'valid': order[:n_valid], 'test': order[n_valid:n_missing],
                 'train': np.sort(order[n_missing:])}
        for split, idx in parts.items():
            frames[split].append(pd.DataFrame({
                'head': [names[i] for i in edges[idx, 0]],
                'relation': rel,
                'tail': [names[i] for i in edges[idx, 1]]}, columns=COLUMNS))

    # Build the store
    kinds = {name: RelationKind.HYPONYM for name in relations}
    store = build_store({split: pd.concat(dfs, ignore_index=True)
                         for split, dfs in frames.items()}, kinds,
                        entities=names, reciprocal=reciprocal)

    # Attach the ground-truth closures
    store.truth_closures = {store.relation_id(name): _forest_closure(forest)
                            for name, forest in zip(relations, forests)}

    # Return store
    logger.info("Generated synthetic knowledge graph %s.", spec)
    return(store)
