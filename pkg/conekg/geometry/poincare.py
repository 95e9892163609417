# -*- coding: utf-8 -*-

"""
Poincaré Disk
=============
Provides the Möbius arithmetic, exponential and logarithmic maps, hyperbolic
distance, Givens rotations and ball projection on the Poincaré disk with
curvature -1.

"""


# %% IMPORTS
# Built-in imports
import logging

# Package imports
import e13tools as e13
import torch

# ConeKG imports
from conekg._globals import BALL_EPS, DTYPE, MIN_NORM
from conekg.utils.exceptions import DomainError

# All declaration
__all__ = ['as_points', 'distance', 'exp_map', 'givens_rotate', 'log_map',
           'mobius_add', 'norm', 'project_to_ball']

# Set logger
logger = logging.getLogger(__name__)

# Largest norm that is still passed to atanh
_MAX_TANH = 1-1e-15


# %% HELPER DEFINITIONS
# This function converts array-likes into float64 point tensors
def as_points(x):
    """
    Converts the provided array-like `x` into a :obj:`~torch.Tensor` of dtype
    float64 whose last axis has length 2 and returns it.

    Tensors that already have the correct dtype are returned as-is, such that
    they stay attached to the autograd graph.

    """

    # Convert x to a tensor
    x = torch.as_tensor(x, dtype=DTYPE)

    # Check that the last axis holds two coordinates
    if(x.ndim == 0 or x.shape[-1] != 2):
        e13.raise_error("Input argument must have a last axis of length 2, "
                        "not shape %s!" % (tuple(x.shape),),
                        DomainError, logger)

    # Return x
    return(x)


# This function returns the Euclidean norm along the last axis
def norm(x):
    """
    Returns the Euclidean norm of `x` along its last axis.

    The squared norm is floored at a tiny positive value before taking the
    square root, such that the gradient at the origin is zero instead of
    NaN.

    """

    return(torch.sqrt(torch.clamp_min((x*x).sum(-1), MIN_NORM**2)))


# Inner product along the last axis
def _dot(x, y):
    return((x*y).sum(-1))


# This function raises an error if any point lies outside of the open disk
def _check_in_disk(x, name):
    if (norm(x) >= 1).any():
        e13.raise_error("Input argument %r must lie strictly inside the unit "
                        "disk!" % (name), DomainError, logger)


# %% KERNEL DEFINITIONS
# Möbius addition without input checks
def _mobius_add(x, y):
    # Obtain the inner products
    xy = _dot(x, y)
    x2 = _dot(x, x)
    y2 = _dot(y, y)

    # Calculate numerator and denominator
    num = (1+2*xy+y2).unsqueeze(-1)*x+(1-x2).unsqueeze(-1)*y
    den = 1+2*xy+x2*y2

    # Return sum
    return(num/den.unsqueeze(-1))


# Exponential map without input checks
def _exp_map(base, v):
    # Obtain norm of v and conformal factor of base
    v_norm = norm(v)
    lam = 2/(1-_dot(base, base))

    # Obtain the point that must be Möbius-added to base
    step = (torch.tanh(lam*v_norm/2)/v_norm).unsqueeze(-1)*v

    # Return exponential map
    return(_mobius_add(base, step))


# Logarithmic map without input checks
def _log_map(base, y):
    # Move y to the origin's frame
    sub = _mobius_add(-base, y)
    sub_norm = norm(sub)

    # Calculate the length in the tangent space of base
    length = (1-_dot(base, base))*torch.atanh(sub_norm.clamp_max(_MAX_TANH))

    # Return logarithmic map
    return((length/sub_norm).unsqueeze(-1)*sub)


# Hyperbolic distance without input checks
def _distance(x, y):
    sub_norm = norm(_mobius_add(-x, y))
    return(2*torch.atanh(sub_norm.clamp_max(_MAX_TANH)))


# Givens rotation without input checks
def _givens_rotate(theta, v):
    # Calculate the cosine and sine of all angles
    cos = torch.cos(theta)
    sin = torch.sin(theta)

    # Rotate all vectors
    vx, vy = v[..., 0], v[..., 1]
    return(torch.stack([cos*vx-sin*vy, sin*vx+cos*vy], dim=-1))


# %% FUNCTION DEFINITIONS
# This function performs Möbius addition
def mobius_add(x, y):
    """
    Returns the Möbius sum of the disk points `x` and `y`.

    Möbius addition is not commutative, so the order of the arguments
    matters.

    Parameters
    ----------
    x, y : array_like of shape (..., 2)
        Points strictly inside the unit disk.

    Returns
    -------
    z : :obj:`~torch.Tensor` of shape (..., 2)
        The Möbius sum, which lies strictly inside the unit disk.

    """

    # Convert and check both points
    x = as_points(x)
    y = as_points(y)
    _check_in_disk(x, 'x')
    _check_in_disk(y, 'y')

    # Return Möbius sum
    return(_mobius_add(x, y))


# This function performs the exponential map
def exp_map(base, v):
    """
    Maps the tangent vector `v` at the disk point `base` onto the disk.

    This uses the standard curvature -1 exponential map with conformal factor
    ``2/(1-|base|**2)``, such that :func:`~log_map` is its exact inverse. A
    zero tangent vector returns `base`.

    Parameters
    ----------
    base : array_like of shape (..., 2)
        The base point, strictly inside the unit disk.
    v : array_like of shape (..., 2)
        The tangent vector at `base`.

    Returns
    -------
    y : :obj:`~torch.Tensor` of shape (..., 2)
        The point reached by following the geodesic through `base` in the
        direction of `v`.

    """

    # Convert and check input arguments
    base = as_points(base)
    v = as_points(v)
    _check_in_disk(base, 'base')

    # Check that v is finite
    if not torch.isfinite(v).all():
        e13.raise_error("Input argument 'v' must be finite!", DomainError,
                        logger)

    # Return exponential map
    return(_exp_map(base, v))


# This function performs the logarithmic map
def log_map(base, y):
    """
    Maps the disk point `y` onto the tangent space at the disk point `base`.
    This is the exact inverse of :func:`~exp_map`; equal points map to the
    zero vector.

    """

    # Convert and check input arguments
    base = as_points(base)
    y = as_points(y)
    _check_in_disk(base, 'base')
    _check_in_disk(y, 'y')

    # Return logarithmic map
    return(_log_map(base, y))


# This function calculates the hyperbolic distance
def distance(x, y):
    """
    Returns the hyperbolic distance between the disk points `x` and `y`,
    given by ``2*atanh(|-x (+) y|)``.

    """

    # Convert and check input arguments
    x = as_points(x)
    y = as_points(y)
    _check_in_disk(x, 'x')
    _check_in_disk(y, 'y')

    # Return distance
    return(_distance(x, y))


# This function rotates tangent vectors
def givens_rotate(theta, v):
    """
    Rotates the 2D vectors `v` counter-clockwise by the angles `theta`.

    Parameters
    ----------
    theta : float or array_like
        Rotation angles in radians, broadcast against the leading axes of
        `v`.
    v : array_like of shape (..., 2)
        The vectors to rotate.

    Returns
    -------
    v_rot : :obj:`~torch.Tensor` of shape (..., 2)
        The rotated vectors, with the same norms as `v`.

    """

    # Convert input arguments
    theta = torch.as_tensor(theta, dtype=DTYPE)
    v = as_points(v)

    # Return rotated vectors
    return(_givens_rotate(theta, v))


# This function projects points onto the closed annulus inside the disk
def project_to_ball(x, eps=BALL_EPS):
    """
    Projects the points `x` radially onto the annulus ``eps <= |x| <= 1-eps``.

    Points that already lie inside the annulus are returned unchanged, and
    the origin is mapped to ``(eps, 0)``.

    Parameters
    ----------
    x : array_like of shape (..., 2)
        The points to project.

    Optional
    --------
    eps : float. Default: :obj:`~conekg._globals.BALL_EPS`
        The margin to keep from the origin and from the boundary.

    Returns
    -------
    x_proj : :obj:`~torch.Tensor` of shape (..., 2)
        The projected points.

    """

    # Convert input argument
    x = as_points(x)

    # Obtain the exact norms and the norms they must be clamped to
    x_norm = torch.sqrt(_dot(x, x))
    target = x_norm.clamp(eps, 1-eps)

    # Rescale all points that are outside of the annulus
    inside = (x_norm >= eps) & (x_norm <= 1-eps)
    scale = torch.where(inside, torch.ones_like(x_norm),
                        target/torch.where(x_norm > 0, x_norm,
                                           torch.ones_like(x_norm)))
    x_proj = torch.where(inside.unsqueeze(-1), x, x*scale.unsqueeze(-1))

    # Map points at the origin onto the positive x-axis
    origin = torch.zeros_like(x)
    origin[..., 0] = eps
    x_proj = torch.where((x_norm == 0).unsqueeze(-1), origin, x_proj)

    # Return projected points
    return(x_proj)
