# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of the finite difference engine.

"""
import numpy as np
import pytest
import hypothesis.strategies as st
from hypothesis import given

from warpedpy.errors import DomainError, StencilError
from warpedpy.geometry import DiffEngine


def test_quadratic_derivative(engine):
    d = engine.partial(lambda x: x[0]**2, [1.0], 0)
    assert d == pytest.approx(2.0, abs=1e-9)


def test_constant_has_zero_derivative(engine):
    d = engine.derivatives(lambda x: 3.0, [0.2, -0.4])
    np.testing.assert_allclose(d, 0.0, atol=1e-12)


def test_exponential_error_within_step_squared(engine):
    d = engine.partial(lambda x: np.exp(x[0]), [0.0], 0)
    assert abs(d - 1.0) <= engine.step**2


def test_central2_error_shrinks_quadratically():
    errors = []
    for step in (1e-3, 5e-4):
        d = DiffEngine(step=step).partial(lambda x: np.exp(x[0]), [0.0], 0)
        errors.append(abs(d - 1.0))
    assert errors[0] / errors[1] == pytest.approx(4.0, rel=0.1)


@pytest.mark.parametrize('scheme', ['central4', 'richardson'])
def test_fourth_order_schemes_exact_on_quartics(scheme):
    engine = DiffEngine(scheme=scheme, step=1e-3)
    d = engine.partial(lambda x: x[0]**4, [1.0], 0)
    assert d == pytest.approx(4.0, abs=1e-9)
    assert engine.order == 4


@given(st.floats(-2.0, 2.0), st.floats(-2.0, 2.0))
def test_directional_matches_line_derivative(a, b):
    engine = DiffEngine()

    def func(x):
        return np.array([np.sin(x[0]) * x[1], x[0] + x[1]**2])

    coords, direction = np.array([0.3, -0.7]), np.array([a, b])
    np.testing.assert_allclose(
        engine.directional(func, coords, direction),
        engine.line_derivative(func, coords, direction), atol=1e-7)


def test_array_valued_derivatives_keep_shape(engine):
    d = engine.derivatives(lambda x: np.outer(x, x), [1.0, 2.0])
    assert d.shape == (2, 2, 2)
    np.testing.assert_allclose(d[0], [[2.0, 2.0], [2.0, 0.0]], atol=1e-8)


def test_step_shrinks_near_the_boundary(engine):
    d = engine.partial(lambda x: x[0]**2, [1e-6], 0, [0.0], [1.0])
    assert d == pytest.approx(2e-6, abs=1e-12)


def test_stencil_error_too_close_to_the_boundary(engine):
    with pytest.raises(StencilError):
        engine.partial(lambda x: x[0], [1e-12], 0, [0.0], [1.0])


def test_point_outside_the_box(engine):
    with pytest.raises(DomainError):
        engine.partial(lambda x: x[0], [2.0], 0, [0.0], [1.0])
