# -*- coding: utf-8 -*-

"""
Transforms
==========
Provides the two relation transformations of a cone model, the rotation
about the origin and the restricted rotation inside a cone, together with the
cone membership test.

"""


# %% IMPORTS
# Built-in imports
import logging
from math import pi

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg._globals import BALL_EPS, DTYPE
from conekg.geometry import ConeParams, as_points, norm
from conekg.geometry.cones import (
    _angle_at, _check_apex, _half_aperture)
from conekg.geometry.poincare import (
    _check_in_disk, _dot, _exp_map, _givens_rotate, _log_map)
from conekg.model.embeddings import wrap_angle
from conekg.utils.exceptions import DomainError

# All declaration
__all__ = ['in_cone', 'restricted_rotate_f2', 'rotate_f1']

# Set logger
logger = logging.getLogger(__name__)


# %% KERNEL DEFINITIONS
# Replaces apexes at the origin by the smallest point on the positive x-axis
def _safe_apex(h):
    origin = torch.zeros_like(h)
    origin[..., 0] = BALL_EPS
    return(torch.where((_dot(h, h) == 0).unsqueeze(-1), origin, h))


# Rotation about the origin without input checks
def _rotate_f1(h, theta):
    zero = torch.zeros_like(h)
    return(_exp_map(zero, _givens_rotate(theta, _log_map(zero, h))))


# Restricted rotation without input checks
def _restricted_rotate_f2(h, s, theta, k):
    # Make sure that no apex lies at the origin
    h = _safe_apex(h)

    # Obtain the outward radial unit tangent at h
    h_bar = h/norm(h).unsqueeze(-1)

    # Rotate the scaled tangent by the fraction of the half aperture
    phi = _half_aperture(h, k)
    v = _givens_rotate(theta*phi/pi, s.unsqueeze(-1)*h_bar)

    # Map the tangent back onto the disk at h
    return(_exp_map(h, v))


# %% FUNCTION DEFINITIONS
# This function applies the rotation transformation
def rotate_f1(h, theta):
    """
    Rotates the disk points `h` about the origin by the angles `theta`.

    The point is mapped to the tangent space at the origin, rotated there
    and mapped back, such that its norm is preserved.

    Parameters
    ----------
    h : array_like of shape (..., 2)
        The points to rotate.
    theta : float or array_like of shape (...)
        The rotation angles in radians.

    Returns
    -------
    h_rot : :obj:`~torch.Tensor` of shape (..., 2)
        The rotated points.

    """

    # Convert and check input arguments
    h = as_points(h)
    _check_in_disk(h, 'h')
    theta = torch.as_tensor(theta, dtype=DTYPE)

    # Return rotated points
    return(_rotate_f1(h, theta))


# This function applies the restricted rotation transformation
def restricted_rotate_f2(h, s, theta, params=None):
    """
    Applies the restricted rotation to the apexes `h`.

    The outward radial unit tangent at `h` is scaled by `s`, rotated by
    ``theta*phi_h/pi`` with `phi_h` the half aperture at `h` and mapped back
    onto the disk at `h`. The result therefore always lies inside the cone
    of `h`, at an apex angle of exactly ``|theta|*phi_h/pi``.

    Parameters
    ----------
    h : array_like of shape (..., 2)
        The apexes to transform. Cannot be the origin.
    s : float or array_like of shape (...)
        The strictly positive scalings.
    theta : float or array_like of shape (...)
        The rotation angles, which are wrapped to [-pi, pi).

    Optional
    --------
    params : :obj:`~conekg.geometry.ConeParams` object or None. Default: None
        The cone parameters to use. If *None*, the default parameters are
        used.

    Returns
    -------
    t : :obj:`~torch.Tensor` of shape (..., 2)
        The transformed points.

    """

    # Obtain cone parameters
    params = ConeParams() if params is None else params

    # Convert and check input arguments
    h = as_points(h)
    _check_in_disk(h, 'h')
    _check_apex(h, 'h')
    s = torch.as_tensor(s, dtype=DTYPE)
    if not (s > 0).all():
        e13.raise_error("Input argument 's' must be strictly positive!",
                        DomainError, logger)
    theta = wrap_angle(torch.as_tensor(theta, dtype=DTYPE))

    # Return transformed points
    return(_restricted_rotate_f2(h, s, theta, params.k))


# This function checks if points lie inside the cones of the given apexes
def in_cone(apex, y, params=None):
    """
    Returns whether the disk points `y` lie inside the entailment cones with
    apexes `apex`.

    Parameters
    ----------
    apex : array_like of shape (..., 2)
        The cone apexes. Cannot be the origin.
    y : array_like of shape (..., 2)
        The points to test.

    Optional
    --------
    params : :obj:`~conekg.geometry.ConeParams` object or None. Default: None
        The cone parameters to use.

    Returns
    -------
    inside : :obj:`~torch.Tensor` of shape (...) and dtype bool
        Whether ``angle_at(apex, y) <= half_aperture(apex)``.

    """

    # Obtain cone parameters
    params = ConeParams() if params is None else params

    # Convert and check input arguments
    apex = as_points(apex)
    y = as_points(y)
    _check_in_disk(apex, 'apex')
    _check_in_disk(y, 'y')
    _check_apex(apex, 'apex')

    # Return membership
    return(_angle_at(apex, y) <= _half_aperture(apex, params.k))
