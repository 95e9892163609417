# -*- coding: utf-8 -*-

"""
Cones
=====
Provides the angle and aperture kernels of entailment cones in the Poincaré
disk.

"""


# %% IMPORTS
# Built-in imports
from dataclasses import dataclass
import logging

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg._globals import CONE_K, FLOAT_TYPES
from conekg.geometry.poincare import _check_in_disk, _dot, as_points, norm
from conekg.utils.exceptions import DomainError

# All declaration
__all__ = ['ConeParams', 'angle_at', 'half_aperture', 'min_apex_norm']

# Set logger
logger = logging.getLogger(__name__)

# Largest argument passed to asin, keeping its gradient finite
_MAX_ARG = 1-2**-53


# %% CLASS DEFINITIONS
# Define class holding the parameters of all cones
@dataclass(frozen=True)
class ConeParams(object):
    """
    Defines the parameters shared by every entailment cone of a model.

    Parameters
    ----------
    k : float. Default: :obj:`~conekg._globals.CONE_K`
        The aperture constant. Must be positive.

    """

    k: float = CONE_K

    def __post_init__(self):
        # Check that k is a positive real number
        if not isinstance(self.k, FLOAT_TYPES) or not (self.k > 0):
            e13.raise_error("Aperture constant 'k' must be a positive real "
                            "number, not %r!" % (self.k), DomainError, logger)


# %% KERNEL DEFINITIONS
# Cone angle without input checks
def _angle_at(x, y):
    # Obtain all inner products
    xy = _dot(x, y)
    x2 = _dot(x, x)
    y2 = _dot(y, y)

    # The direction of -x+y at x has these components along and across x
    along = xy*(1+x2)-x2*(1+y2)
    across = (1-x2)*torch.abs(x[..., 0]*y[..., 1]-x[..., 1]*y[..., 0])

    # Both vanish only if y equals x, which has an angle of zero
    same = (along == 0) & (across == 0)
    along = torch.where(same, torch.ones_like(along), along)

    # Return angle
    return(torch.atan2(across, along))


# Half aperture without input checks
def _half_aperture(x, k):
    x_norm = norm(x)
    return(torch.asin((k*(1-x_norm**2)/x_norm).clamp_max(_MAX_ARG)))


# This function raises an error if any apex is the origin
def _check_apex(x, name):
    if (_dot(x, x) == 0).any():
        e13.raise_error("Input argument %r cannot be the origin, as the cone "
                        "at the origin is undefined!" % (name), DomainError,
                        logger)


# %% FUNCTION DEFINITIONS
# This function calculates the angle at x between ox and xy
def angle_at(x, y):
    """
    Returns the angle at the disk point `x` between the half-line extending
    the geodesic from the origin through `x` and the geodesic from `x` to
    `y`.

    An angle of zero means that `y` lies on the outward ray of `x`, while an
    angle of pi means that `y` lies between the origin and `x`.

    Parameters
    ----------
    x : array_like of shape (..., 2)
        The apex points. Cannot be the origin.
    y : array_like of shape (..., 2)
        The points whose angular offset must be measured.

    Returns
    -------
    angle : :obj:`~torch.Tensor` of shape (...)
        The angles in radians, in [0, pi].

    """

    # Convert and check input arguments
    x = as_points(x)
    y = as_points(y)
    _check_in_disk(x, 'x')
    _check_in_disk(y, 'y')
    _check_apex(x, 'x')

    # Return angle
    return(_angle_at(x, y))


# This function calculates the half aperture of the cone at x
def half_aperture(x, params=None):
    """
    Returns the half aperture of the entailment cone with apex `x`, given by
    ``asin(k*(1-|x|**2)/|x|)``.

    Apexes closer to the origin than :func:`~min_apex_norm` all have a half
    aperture of pi/2.

    Parameters
    ----------
    x : array_like of shape (..., 2)
        The apex points. Cannot be the origin.

    Optional
    --------
    params : :obj:`~ConeParams` object or None. Default: None
        The cone parameters to use. If *None*, the default parameters are
        used.

    Returns
    -------
    phi : :obj:`~torch.Tensor` of shape (...)
        The half apertures in radians, in (0, pi/2].

    """

    # Obtain cone parameters
    params = ConeParams() if params is None else params

    # Convert and check input argument
    x = as_points(x)
    _check_in_disk(x, 'x')
    _check_apex(x, 'x')

    # Return half aperture
    return(_half_aperture(x, params.k))


# This function returns the norm below which apertures are clamped
def min_apex_norm(params=None):
    """
    Returns the apex norm at which the half aperture reaches pi/2 for the
    provided `params`.

    """

    k = (ConeParams() if params is None else params).k
    return(float((-1+(1+4*k**2)**0.5)/(2*k)))

