# -*- coding: utf-8 -*-

# %% IMPORTS
# Built-in imports
from math import asin, cos, pi, sin

# Package imports
from hypothesis import given, strategies as st
import pytest
import torch

# ConeKG imports
from conekg._globals import DTYPE
from conekg.geometry.cones import (
    ConeParams, angle_at, half_aperture, min_apex_norm)
from conekg.geometry.poincare import log_map, norm
from conekg.utils.exceptions import DomainError


# %% HELPER FUNCTIONS
def t(*values):
    return(torch.tensor(values, dtype=DTYPE))


# %% PYTEST CLASSES AND FUNCTIONS
# Pytest class for ConeParams
class TestConeParams(object):
    # Test the default aperture constant
    def test_default(self):
        assert ConeParams().k == 0.1

    # Test that invalid constants are refused
    @pytest.mark.parametrize('k', [0, -0.1, 'a', float('nan')])
    def test_invalid(self, k):
        with pytest.raises(DomainError):
            ConeParams(k)


# Pytest class for angle_at
class TestAngleAt(object):
    # Test points on the outward and inward rays
    def test_rays(self):
        assert angle_at(t(0.3, 0), t(0.6, 0)).item() == 0
        assert angle_at(t(0.3, 0), t(0.1, 0)).item() == pytest.approx(
            pi, abs=1e-15)
        assert angle_at(t(0.3, 0), t(0.6, 1e-12)).item() == pytest.approx(
            0, abs=1e-9)

    # Test that the apex itself has a zero angle and a finite gradient
    def test_same_point(self):
        x = t(0.3, 0.4).requires_grad_()
        angle = angle_at(x, x.detach())
        angle.backward()
        assert angle.item() == 0
        assert torch.isfinite(x.grad).all()

    # Test that the origin is refused as an apex
    def test_origin(self):
        with pytest.raises(DomainError):
            angle_at(t(0, 0), t(0.5, 0))

    # Test agreement with the angle between tangent directions at x
    def test_tangent_oracle(self, points):
        x = points(10000, 0.1, 0.9)
        y = points(10000, 0, 0.9)
        keep = norm(x-y) > 1e-2
        x, y = x[keep], y[keep]

        # Outward direction at x is radial, so compare against log_x(y)
        v = log_map(x, y)
        cross = x[:, 0]*v[:, 1]-x[:, 1]*v[:, 0]
        expected = torch.atan2(cross.abs(), (x*v).sum(-1))
        assert torch.allclose(angle_at(x, y), expected, rtol=0, atol=1e-9)

    # Test that all angles lie in [0, pi]
    @given(st.floats(0.01, 0.99), st.floats(-pi, pi), st.floats(0, 0.99),
           st.floats(-pi, pi))
    def test_range(self, rx, ax, ry, ay):
        x = t(rx*cos(ax), rx*sin(ax))
        y = t(ry*cos(ay), ry*sin(ay))
        angle = angle_at(x, y).item()
        assert 0 <= angle <= pi


# Pytest class for half_aperture
class TestHalfAperture(object):
    # Test the direct evaluation
    def test_value(self):
        phi = half_aperture(t(0.5, 0), ConeParams(0.1)).item()
        assert phi == pytest.approx(asin(0.15), abs=1e-15)
        assert phi == pytest.approx(0.150568, abs=1e-6)

    # Test the minimal apex norm
    def test_min_apex_norm(self):
        r_min = min_apex_norm()
        assert r_min == pytest.approx(0.0990195, abs=1e-7)
        assert half_aperture(t(r_min, 0)).item() == pytest.approx(pi/2,
                                                                  abs=1e-6)
        assert half_aperture(t(r_min/2, 0)).item() == pytest.approx(
            pi/2, abs=1e-7)

    # Test that the aperture decreases strictly beyond the minimal norm
    def test_monotonic(self):
        r = torch.linspace(min_apex_norm()+1e-6, 1-1e-6, 1000, dtype=DTYPE)
        x = torch.stack([r, torch.zeros_like(r)], dim=-1)
        assert (torch.diff(half_aperture(x)) < 0).all()

    # Test that the aperture is never NaN inside the disk
    def test_no_nan(self, points):
        phi = half_aperture(points(100000, 1e-12, 1-1e-12))
        assert not phi.isnan().any()
        assert (phi > 0).all() and (phi <= pi/2).all()

    # Test that the origin is refused as an apex
    def test_origin(self):
        with pytest.raises(DomainError):
            half_aperture(t(0, 0))
