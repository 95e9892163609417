# -*- coding: utf-8 -*-

"""
Checkpoints
===========
Provides the binary checkpoint format of *ConeKG*.

A checkpoint is a little-endian file laid out as follows:

1. The magic bytes ``b'CONE'`` and the format version as u32;
2. The config block, a u32 length followed by UTF-8 encoded JSON;
3. The entity and relation dictionaries, each a u32 count followed by
   every name as a u32 length and its UTF-8 bytes;
4. The kind of every relation as u8 and the subspace masks as u8 of shape
   (n_relations, d);
5. The parameters as f64 arrays in the order `entity_planes` (n_entities,
   d, 2), `entity_bias` (n_entities), `scale_raw` (n_relations, d) and
   `theta` (n_relations, d);
6. The CRC-64 of all preceding bytes as u64.

"""


# %% IMPORTS
# Built-in imports
import json
import logging
import struct
from typing import NamedTuple, Tuple

# Package imports
import crcmod.predefined
import e13tools as e13
import numpy as np
import torch

# ConeKG imports
from conekg.model import ConeModel, ModelConfig
from conekg.utils.exceptions import CheckpointError

# All declaration
__all__ = ['FORMAT_VERSION', 'MAGIC', 'Checkpoint', 'load_checkpoint',
           'save_checkpoint']

# Set logger
logger = logging.getLogger(__name__)

# Header of every checkpoint
MAGIC = b'CONE'
FORMAT_VERSION = 1

# Order of all stored parameters
PARAMETERS = ('entity_planes', 'entity_bias', 'scale_raw', 'theta')

# CRC-64 of a byte string
_crc64 = crcmod.predefined.mkCrcFun('crc-64')


# %% CLASS DEFINITIONS
# Define class holding a loaded checkpoint
class Checkpoint(NamedTuple):
    """
    A loaded checkpoint, holding the model, its dictionaries and the extra
    metadata it was saved with.

    """

    model: ConeModel
    entity_names: Tuple[str, ...]
    relation_names: Tuple[str, ...]
    meta: dict

    # This function checks that a triple store matches this checkpoint
    def check_store(self, store):
        """
        Raises a :class:`~conekg.utils.exceptions.CheckpointError` if the
        dictionaries of `store` differ from those of this checkpoint.

        """

        if(store.entity_names != self.entity_names or
           store.relation_names != self.relation_names):
            e13.raise_error("Dictionaries of checkpoint (%i entities, %i "
                            "relations) do not match those of the data (%i "
                            "entities, %i relations)!"
                            % (len(self.entity_names),
                               len(self.relation_names), store.n_entities,
                               store.n_relations), CheckpointError, logger)


# Define class reading values from a byte buffer
class _Reader(object):
    def __init__(self, data):
        self._data = data
        self._pos = 0

    def read(self, n):
        if(self._pos+n > len(self._data)):
            e13.raise_error("Checkpoint ends unexpectedly!", CheckpointError,
                            logger)
        chunk = self._data[self._pos:self._pos+n]
        self._pos += n
        return(chunk)

    def u32(self):
        return(struct.unpack('<I', self.read(4))[0])

    def string(self):
        return(self.read(self.u32()).decode('utf-8'))

    def names(self):
        return(tuple(self.string() for _ in range(self.u32())))

    def array(self, dtype, shape):
        dtype = np.dtype(dtype)
        n = int(np.prod(shape))
        return(np.frombuffer(self.read(n*dtype.itemsize), dtype)
               .reshape(shape))

    @property
    def exhausted(self):
        return(self._pos == len(self._data))


# %% HELPER DEFINITIONS
# This function encodes a string with its length
def _pack_string(string):
    data = string.encode('utf-8')
    return(struct.pack('<I', len(data))+data)


# This function encodes a list of names with its count
def _pack_names(names):
    return(struct.pack('<I', len(names)) +
           b''.join(_pack_string(name) for name in names))


# %% FUNCTION DEFINITIONS
# This function saves a model to a checkpoint file
def save_checkpoint(model, filepath, store=None, meta=None):
    """
    Saves `model` to the checkpoint file `filepath`.

    Parameters
    ----------
    model : :obj:`~conekg.model.ConeModel` object
        The model to save.
    filepath : str
        The path of the checkpoint file.

    Optional
    --------
    store : :obj:`~conekg.data.TripleStore` object or None. Default: None
        The store providing the dictionaries. If *None*, entities and
        relations are named by their ids.
    meta : dict or None. Default: None
        Extra JSON-serializable metadata to add to the config block.

    """

    # Obtain the dictionaries
    if store is None:
        entities = ['%i' % (i) for i in range(model.n_entities)]
        relations = ['%i' % (i) for i in range(model.n_relations)]
    else:
        entities, relations = store.entity_names, store.relation_names
    if(len(entities) != model.n_entities or
       len(relations) != model.n_relations):
        e13.raise_error("Dictionaries do not match the size of the model!",
                        CheckpointError, logger)

    # Encode the header, config block and dictionaries
    config = {'model': model.cfg.to_dict(), 'meta': meta or {}}
    parts = [MAGIC, struct.pack('<I', FORMAT_VERSION),
             _pack_string(json.dumps(config, sort_keys=True)),
             _pack_names(entities), _pack_names(relations)]

    # Encode the kinds, masks and parameters
    parts.append(model.kinds.numpy().astype('u1').tobytes())
    parts.append(model.masks.numpy().astype('u1').tobytes())
    for name in PARAMETERS:
        param = getattr(model, name).detach().numpy()
        parts.append(param.astype('<f8').tobytes())

    # Add the checksum
    data = b''.join(parts)
    data += struct.pack('<Q', _crc64(data))

    # Write the file
    try:
        with open(filepath, 'wb') as file:
            file.write(data)
    except OSError as error:
        e13.raise_error("Could not write checkpoint %r: %s"
                        % (str(filepath), error), CheckpointError, logger)
    logger.info("Saved checkpoint to %r.", str(filepath))


# This function loads a model from a checkpoint file
def load_checkpoint(filepath, cfg=None):
    """
    Loads the checkpoint file `filepath`.

    Parameters
    ----------
    filepath : str
        The path of the checkpoint file.

    Optional
    --------
    cfg : :obj:`~conekg.model.ModelConfig` object or None. Default: None
        The configuration the caller expects. If *None*, the configuration
        stored in the checkpoint is used. Otherwise, it must describe the
        same embedding shape as the stored one.

    Returns
    -------
    checkpoint : :obj:`~Checkpoint` object
        The loaded checkpoint.

    Raises
    ------
    :class:`~conekg.utils.exceptions.CheckpointError`
        If the file cannot be read, is not a checkpoint, has another format
        version, fails its checksum or does not match `cfg`.

    """

    # Read the file
    try:
        with open(filepath, 'rb') as file:
            data = file.read()
    except OSError as error:
        e13.raise_error("Could not read checkpoint %r: %s"
                        % (str(filepath), error), CheckpointError, logger)

    # Check the magic bytes and the checksum
    if not data.startswith(MAGIC):
        e13.raise_error("File %r is not a checkpoint!" % (str(filepath)),
                        CheckpointError, logger)
    body, tail = data[:-8], data[-8:]
    if(len(data) < 16 or struct.unpack('<Q', tail)[0] != _crc64(body)):
        e13.raise_error("Checksum of checkpoint %r does not match; the file "
                        "is truncated or corrupted!" % (str(filepath)),
                        CheckpointError, logger)

    # Check the version
    reader = _Reader(body)
    reader.read(len(MAGIC))
    version = reader.u32()
    if(version != FORMAT_VERSION):
        e13.raise_error("Checkpoint has format version %i, but version %i is "
                        "required!" % (version, FORMAT_VERSION),
                        CheckpointError, logger)

    # Read the config block and the dictionaries
    config = json.loads(reader.string())
    stored_cfg = ModelConfig(**config['model'])
    entities = reader.names()
    relations = reader.names()
    n_ent, n_rel, dim = len(entities), len(relations), stored_cfg.dim

    # Check the expected config
    if cfg is not None and (cfg.dim != dim or cfg.variant !=
                            stored_cfg.variant):
        e13.raise_error("Checkpoint holds a %r model with d=%i, but a %r "
                        "model with d=%i is configured!"
                        % (stored_cfg.variant, dim, cfg.variant, cfg.dim),
                        CheckpointError, logger)

    # Read the kinds, masks and parameters
    kinds = reader.array('u1', (n_rel,)).tolist()
    masks = reader.array('u1', (n_rel, dim)).astype(bool)
    shapes = {'entity_planes': (n_ent, dim, 2), 'entity_bias': (n_ent,),
              'scale_raw': (n_rel, dim), 'theta': (n_rel, dim)}
    state = {name: torch.from_numpy(reader.array('<f8', shapes[name])
                                    .astype(np.float64))
             for name in PARAMETERS}
    if not reader.exhausted:
        e13.raise_error("Checkpoint %r holds trailing data!"
                        % (str(filepath)), CheckpointError, logger)

    # Create the model
    model = ConeModel(n_ent, kinds, masks, stored_cfg)
    model.load_state_dict(state, strict=False)

    # Return checkpoint
    logger.info("Loaded checkpoint from %r.", str(filepath))
    return(Checkpoint(model, entities, relations, config['meta']))
