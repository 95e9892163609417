# -*- coding: utf-8 -*-

"""
Triple Store
============
Provides the :class:`~TripleStore` class and the functions that read and
write knowledge graph triples and relation metadata.

"""


# %% IMPORTS
# Built-in imports
import csv
import logging
from os import path

# Package imports
import e13tools as e13
import networkx as nx
import numpy as np
import pandas as pd

# ConeKG imports
from conekg._globals import RECIPROCAL_SUFFIX
from conekg.hierarchy import classify_all
from conekg.model import RelationKind
from conekg.utils.exceptions import ContractError, DataError

# All declaration
__all__ = ['SPLITS', 'TripleStore', 'build_store', 'load_triples',
           'read_relation_meta', 'write_relation_meta', 'write_triples']

# Set logger
logger = logging.getLogger(__name__)

# Names of all splits and the extensions of their files
SPLITS = ('train', 'valid', 'test')
SPLIT_EXTS = ('.txt', '.tsv')

# Column names of triple files
COLUMNS = ['head', 'relation', 'tail']


# %% CLASS DEFINITIONS
# Define class holding all triples of a knowledge graph
class TripleStore(object):
    """
    Defines the :class:`~TripleStore` class.

    A triple store holds the entity and relation dictionaries, the
    train/valid/test triples as dense ids and the filter index used for
    filtered ranking.

    If reciprocal relations are enabled, every base relation with id `r` has
    a reciprocal relation with id ``r+n_base_relations`` named
    ``<relation>_reverse``, whose triples are the reversed base triples and
    whose kind swaps hyponym and hypernym. The split arrays only hold base
    triples.

    """

    def __init__(self, entities, relations, kinds, train, valid, test,
                 reciprocal=True):
        """
        Initialize an instance of the :class:`~TripleStore` class.

        Parameters
        ----------
        entities : list of str
            The names of all entities, ordered by id.
        relations : list of str
            The names of all base relations, ordered by id.
        kinds : list of :class:`~conekg.model.RelationKind`
            The kind of every base relation.
        train, valid, test : array_like of shape (n, 3)
            The ``(head, relation, tail)`` ids of every split.

        Optional
        --------
        reciprocal : bool. Default: True
            Whether to add a reciprocal relation for every base relation.

        """

        # Save the dictionaries
        self._entities = list(entities)
        self._entity_ids = {name: i for i, name in enumerate(self._entities)}
        self._base_relations = list(relations)
        self._reciprocal = bool(reciprocal)

        # Check that the kinds match the relations
        kinds = [RelationKind(kind) for kind in kinds]
        if(len(kinds) != len(self._base_relations)):
            e13.raise_error("Number of relation kinds (%i) does not match "
                            "number of relations (%i)!"
                            % (len(kinds), len(self._base_relations)),
                            DataError, logger)

        # Add the reciprocal relations
        self._relations = list(self._base_relations)
        self._kinds = list(kinds)
        if self._reciprocal:
            self._relations.extend(name+RECIPROCAL_SUFFIX
                                   for name in self._base_relations)
            self._kinds.extend(kind.reciprocal for kind in kinds)
        self._relation_ids = {name: i
                              for i, name in enumerate(self._relations)}

        # Save the splits
        self._splits = {name: np.array(triples, dtype=np.int64).reshape(
            -1, 3) for name, triples in zip(SPLITS, (train, valid, test))}
        for name, triples in self._splits.items():
            triples.setflags(write=False)
            if triples.size and (
                    triples[:, [0, 2]].max() >= self.n_entities or
                    triples[:, 1].max() >= self.n_base_relations):
                e13.raise_error("Split %r references unknown ids!" % (name),
                                DataError, logger)

        # Build the filter index
        self._build_filter_index()

        # Ground-truth closures are only known for generated graphs
        self.truth_closures = None

    # This function builds the index of known tails and heads
    def _build_filter_index(self):
        # Obtain all triples of all splits
        triples = np.concatenate(list(self._splits.values()))
        n_rel = self.n_relations

        # Build the tail index over all relations, including reciprocals
        tails = pd.DataFrame({'key': triples[:, 0]*n_rel+triples[:, 1],
                              'other': triples[:, 2]})
        heads = pd.DataFrame({'key': triples[:, 2]*n_rel+triples[:, 1],
                              'other': triples[:, 0]})
        if self._reciprocal:
            rec = pd.DataFrame({
                'key': triples[:, 2]*n_rel+triples[:, 1]+self.n_base_relations,
                'other': triples[:, 0]})
            tails = pd.concat([tails, rec], ignore_index=True)

        # Convert the indices to dicts of sorted id arrays
        self._known_tails = {
            key: np.sort(group) for key, group in
            tails.groupby('key')['other'].unique().items()}
        self._known_heads = {
            key: np.sort(group) for key, group in
            heads.groupby('key')['other'].unique().items()}

    # %% DUNDER METHODS
    def __repr__(self):
        return("%s(entities=%i, relations=%i, train=%i, valid=%i, test=%i)"
               % (self.__class__.__name__, self.n_entities,
                  self.n_base_relations, *map(len, self._splits.values())))

    # %% PROPERTIES
    @property
    def n_entities(self):
        return(len(self._entities))

    @property
    def n_relations(self):
        """
        int: The number of relations, including reciprocal relations.

        """

        return(len(self._relations))

    @property
    def n_base_relations(self):
        return(len(self._base_relations))

    @property
    def reciprocal(self):
        return(self._reciprocal)

    @property
    def entity_names(self):
        return(tuple(self._entities))

    @property
    def relation_names(self):
        return(tuple(self._relations))

    @property
    def kinds(self):
        """
        tuple of :class:`~conekg.model.RelationKind`: The kind of every
        relation id, including reciprocal relations.

        """

        return(tuple(self._kinds))

    @property
    def train(self):
        return(self._splits['train'])

    @property
    def valid(self):
        return(self._splits['valid'])

    @property
    def test(self):
        return(self._splits['test'])

    # %% METHODS
    # This function returns the id of an entity
    def entity_id(self, name):
        try:
            return(self._entity_ids[name])
        except KeyError:
            e13.raise_error("Unknown entity %r!" % (name), DataError, logger)

    # This function returns the id of a relation
    def relation_id(self, name):
        try:
            return(self._relation_ids[name])
        except KeyError:
            e13.raise_error("Unknown relation %r!" % (name), DataError, logger)

    # This function returns the triples of a split
    def split(self, name, with_reciprocals=False):
        """
        Returns the triples of split `name` as an array of shape (n, 3).

        If `with_reciprocals` is *True* and this store uses reciprocal
        relations, the reversed triples are appended using the reciprocal
        relation ids.

        """

        # Obtain the triples
        if name not in self._splits:
            e13.raise_error("Unknown split %r! Valid splits are %s."
                            % (name, SPLITS), DataError, logger)
        triples = self._splits[name]

        # Add reciprocal triples if requested
        if with_reciprocals and self._reciprocal:
            rec = triples[:, [2, 1, 0]].copy()
            rec[:, 1] += self.n_base_relations
            triples = np.concatenate([triples, rec])

        # Return triples
        return(triples)

    # This function returns the base relation of a relation id
    def base_relation(self, rel):
        return(int(rel) % self.n_base_relations)

    # This function returns all hierarchical base relation ids
    def hierarchical_relations(self):
        return([rel for rel in range(self.n_base_relations)
                if self._kinds[rel].hierarchical])

    # This function returns all known tails of a query
    def known_tails(self, head, rel):
        """
        Returns the sorted ids of all entities `t` such that ``(head, rel,
        t)`` occurs in any split. Reciprocal relation ids are supported.

        """

        return(self._known_tails.get(int(head)*self.n_relations+int(rel),
                                     np.empty(0, dtype=np.int64)))

    # This function returns all known heads of a query
    def known_heads(self, rel, tail):
        """
        Returns the sorted ids of all entities `h` such that ``(h, rel,
        tail)`` occurs in any split, for a base relation `rel`.

        """

        return(self._known_heads.get(int(tail)*self.n_relations+int(rel),
                                     np.empty(0, dtype=np.int64)))

    # This function returns the edges of a single relation
    def relation_edges(self, rel, source='train', oriented=True):
        """
        Returns the distinct edges of relation `rel` as an array of shape
        (n, 2).

        Parameters
        ----------
        rel : int
            The relation id. Reciprocal ids map onto their base relation.

        Optional
        --------
        source : {'train'; 'all'}. Default: 'train'
            Whether to use the training triples or the triples of all splits.
        oriented : bool. Default: True
            If *True*, edges of hypernym relations are reversed such that
            every edge points from parent to child. If *False*, all edges
            point from head to tail.

        """

        # Obtain the triples of the requested source
        if(source == 'train'):
            triples = self.train
        elif(source == 'all'):
            triples = np.concatenate(list(self._splits.values()))
        else:
            e13.raise_error("Edge source must be 'train' or 'all', not %r!"
                            % (source), DataError, logger)

        # Select the edges of the base relation
        base = self.base_relation(rel)
        edges = triples[triples[:, 1] == base][:, [0, 2]]
        if oriented and self._kinds[base] is RelationKind.HYPERNYM:
            edges = edges[:, ::-1]

        # Return the distinct edges
        return(np.unique(edges, axis=0) if edges.size else
               np.empty((0, 2), dtype=np.int64))

    # This function returns the graph of a single relation
    def relation_graph(self, rel, source='train', oriented=True):
        """
        Returns a :obj:`~networkx.DiGraph` holding the edges of relation
        `rel`. See :meth:`~relation_edges` for the arguments.

        """

        graph = nx.DiGraph()
        graph.add_edges_from(self.relation_edges(rel, source, oriented)
                             .tolist())
        return(graph)

    # This function returns the graph of all relations
    def graph(self, source='train'):
        """
        Returns a :obj:`~networkx.DiGraph` holding one edge per distinct
        ``(head, tail)`` pair of all base relations, using all entities as
        nodes. Every edge stores the set of base relation ids connecting the
        pair in its 'relations' attribute.

        """

        # Create graph with all entities
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n_entities))

        # Add all edges
        for rel in range(self.n_base_relations):
            for head, tail in self.relation_edges(rel, source, False):
                if graph.has_edge(head, tail):
                    graph[head][tail]['relations'].add(rel)
                else:
                    graph.add_edge(head, tail, relations={rel})

        # Return graph
        return(graph)

    # This function returns a copy of this store with other relation kinds
    def with_kinds(self, kinds):
        """
        Returns a new :class:`~TripleStore` holding the same triples, but
        using the provided `kinds` for its base relations.

        """

        store = TripleStore(self._entities, self._base_relations, kinds,
                            *self._splits.values(), self._reciprocal)
        store.truth_closures = self.truth_closures
        return(store)

    # This function checks that a relation is hierarchical
    def check_hierarchical(self, rel):
        if not self._kinds[int(rel)].hierarchical:
            e13.raise_error("Relation %r is not hierarchical!"
                            % (self._relations[int(rel)]), ContractError,
                            logger)

    # This function returns the sizes of this store
    def summary(self):
        """
        Returns a dict with the number of entities, base relations and
        triples per split.

        """

        summary = {'entities': self.n_entities,
                   'relations': self.n_base_relations}
        summary.update({name: len(triples)
                        for name, triples in self._splits.items()})
        return(summary)


# %% FUNCTION DEFINITIONS
# This function reads a single triple file
def _read_triple_file(filepath):
    # Read the file
    try:
        df = pd.read_csv(filepath, sep='\t', header=None, names=COLUMNS,
                         dtype=str, quoting=csv.QUOTE_NONE,
                         keep_default_na=False, skip_blank_lines=False,
                         encoding='utf-8')
    except pd.errors.ParserError as error:
        e13.raise_error("Malformed triple file %r: %s" % (filepath, error),
                        DataError, logger)

    # Drop blank lines and check for lines with missing fields
    missing = df.isna() | (df == '')
    df = df[~missing.all(axis=1)]
    bad = missing.loc[df.index].any(axis=1)
    if bad.any():
        line = bad.index[bad.values][0]+1
        e13.raise_error("Malformed triple file %r: line %i does not hold "
                        "three tab-separated fields!" % (filepath, line),
                        DataError, logger)

    # Return triples
    return(df.reset_index(drop=True))


# This function returns the path of a split file in a data directory
def _split_file(dirpath, split):
    for ext in SPLIT_EXTS:
        filepath = path.join(dirpath, split+ext)
        if path.exists(filepath):
            return(filepath)
    return(None)


# This function reads relation metadata
def read_relation_meta(filepath):
    """
    Reads the relation metadata file `filepath`, holding one
    ``relation<TAB>kind`` line per relation, and returns a dict mapping
    relation names onto :class:`~conekg.model.RelationKind` values.

    """

    # Read the file
    try:
        df = pd.read_csv(filepath, sep='\t', header=None,
                         names=['relation', 'kind'], dtype=str,
                         quoting=csv.QUOTE_NONE, keep_default_na=False)
    except (OSError, pd.errors.ParserError) as error:
        e13.raise_error("Unable to read relation metadata %r: %s"
                        % (filepath, error), DataError, logger)

    # Return the kinds
    return({name: RelationKind.from_name(kind)
            for name, kind in zip(df['relation'], df['kind'])})


# This function writes relation metadata
def write_relation_meta(kinds, filepath):
    """
    Writes the dict `kinds` mapping relation names onto their
    :class:`~conekg.model.RelationKind` to the metadata file `filepath`.

    """

    df = pd.DataFrame({'relation': list(kinds),
                       'kind': [RelationKind(kind).label
                                for kind in kinds.values()]})
    df.to_csv(filepath, sep='\t', header=False, index=False)


# This function writes the triples of a store as TSV files
def write_triples(store, dirpath):
    """
    Writes the train, valid and test triples of `store` as TSV files of
    entity and relation names into the directory `dirpath`.

    """

    entities = np.array(store.entity_names, dtype=object)
    relations = np.array(store.relation_names, dtype=object)
    for name in SPLITS:
        triples = store.split(name)
        df = pd.DataFrame({'head': entities[triples[:, 0]],
                           'relation': relations[triples[:, 1]],
                           'tail': entities[triples[:, 2]]})
        df.to_csv(path.join(dirpath, name+'.txt'), sep='\t', header=False,
                  index=False)


# This function builds a store from data frames of names
def build_store(splits, kinds=None, entities=None, unknown='skip',
                reciprocal=True):
    """
    Builds a :class:`~TripleStore` from data frames of entity and relation
    names.

    Parameters
    ----------
    splits : dict of {str: :obj:`~pandas.DataFrame`}
        The 'head', 'relation' and 'tail' names of every split. The 'valid'
        and 'test' splits are optional.

    Optional
    --------
    kinds : dict of {str: :class:`~conekg.model.RelationKind`} or None. \
        Default: None
        The kind of every relation. Relations without a kind are
        non-hierarchical.
    entities : list of str or None. Default: None
        The names of all entities, ordered by id. If *None*, entities are
        numbered in order of first appearance in the training split.
    unknown : {'skip'; 'error'}. Default: 'skip'
        What to do with valid and test triples that mention entities or
        relations that do not occur in the training split.
    reciprocal : bool. Default: True
        Whether to add reciprocal relations.

    Returns
    -------
    store : :obj:`~TripleStore` object
        The created triple store.

    """

    # Check unknown
    if unknown not in ('skip', 'error'):
        e13.raise_error("Input argument 'unknown' must be 'skip' or 'error', "
                        "not %r!" % (unknown), DataError, logger)

    # Deduplicate all splits
    frames = {}
    for name in SPLITS:
        df = splits.get(name, pd.DataFrame(columns=COLUMNS))[COLUMNS]
        n_dup = int(df.duplicated().sum())
        if n_dup:
            e13.raise_warning("Split %r contains %i duplicate triples, which "
                              "have been removed." % (name, n_dup),
                              UserWarning, logger)
            df = df.drop_duplicates()
        frames[name] = df.reset_index(drop=True)

    # Build the dictionaries
    train = frames['train']
    if entities is None:
        entities = pd.unique(pd.concat([train['head'], train['tail']],
                                       ignore_index=True)).tolist()
    entity_ids = {name: i for i, name in enumerate(entities)}
    relations = pd.unique(train['relation']).tolist()
    relation_ids = {name: i for i, name in enumerate(relations)}

    # Convert all splits to ids
    arrays = {}
    for name, df in frames.items():
        heads = df['head'].map(entity_ids)
        rels = df['relation'].map(relation_ids)
        tails = df['tail'].map(entity_ids)
        known = heads.notna() & rels.notna() & tails.notna()

        # Handle triples with unknown names
        if not known.all():
            msg = ("Split %r contains %i triples with entities or relations "
                   "that do not occur in the training split"
                   % (name, int((~known).sum())))
            if(name == 'train' or unknown == 'error'):
                e13.raise_error(msg+"!", DataError, logger)
            e13.raise_warning(msg+"; they have been skipped.", UserWarning,
                              logger)

        arrays[name] = np.stack([heads[known], rels[known], tails[known]],
                                axis=-1).astype(np.int64).reshape(-1, 3)

    # Obtain the kinds of all relations
    kinds = {} if kinds is None else kinds
    rel_kinds = [RelationKind(kinds.get(name, RelationKind.NONE))
                 for name in relations]

    # Create store
    store = TripleStore(entities, relations, rel_kinds, arrays['train'],
                        arrays['valid'], arrays['test'], reciprocal)
    logger.info("Built %r.", store)

    # Return store
    return(store)


# This function loads the triples of a dataset directory
def load_triples(dirpath, relation_meta=None, unknown='skip',
                 reciprocal=True):
    """
    Loads the knowledge graph stored in the directory `dirpath`, which holds
    the tab-separated ``head<TAB>relation<TAB>tail`` files 'train', 'valid'
    and 'test' with extension '.txt' or '.tsv'.

    Parameters
    ----------
    dirpath : str
        The dataset directory. Only the training file is required.

    Optional
    --------
    relation_meta : str, dict or None. Default: None
        The relation metadata file, or a dict mapping relation names onto
        :class:`~conekg.model.RelationKind` values. If *None*, a file named
        'relations.tsv' in `dirpath` is used if it exists, and the kinds are
        detected from the training graph otherwise.
    unknown : {'skip'; 'error'}. Default: 'skip'
        What to do with valid and test triples mentioning unseen names.
    reciprocal : bool. Default: True
        Whether to add reciprocal relations.

    Returns
    -------
    store : :obj:`~TripleStore` object
        The loaded triple store.

    """

    # Read all split files
    splits = {}
    for name in SPLITS:
        filepath = _split_file(dirpath, name)
        if filepath is not None:
            splits[name] = _read_triple_file(filepath)
        elif(name == 'train'):
            e13.raise_error("Data directory %r does not contain a training "
                            "file!" % (dirpath), DataError, logger)

    # Obtain the relation kinds
    if relation_meta is None:
        meta_file = path.join(dirpath, 'relations.tsv')
        relation_meta = meta_file if path.exists(meta_file) else None
    if isinstance(relation_meta, str):
        relation_meta = read_relation_meta(relation_meta)

    # Build the store
    store = build_store(splits, relation_meta, unknown=unknown,
                        reciprocal=reciprocal)

    # Detect the kinds if no metadata was given
    if relation_meta is None:
        logger.info("No relation metadata found; detecting hierarchical "
                    "relations.")
        kinds = classify_all(store).kinds
        store = store.with_kinds(kinds)

    # Return store
    return(store)
