# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of charts, metrics and gradients.

"""
import numpy as np
import pytest
import hypothesis.strategies as st
from hypothesis import given

from warpedpy.errors import (DegenerateMetricError, DomainError,
                             GradientMismatchError)
from warpedpy.geometry import (ChartManifold, DiffEngine, FieldLibrary,
                               ScalarField, TangentVector, gradient,
                               metric_inner, metric_orthonormalize,
                               metric_projector, partial_derivative)


def test_euclidean_inner_product(plane):
    assert metric_inner(plane, [0.0, 0.0], [1.0, 2.0], [3.0, 4.0]) == 11.0


def test_polar_inner_product(polar):
    assert metric_inner(polar, [2.0, 0.0], [0.0, 1.0], [0.0, 1.0]) == \
        pytest.approx(4.0)


def test_inner_product_rejects_vectors_at_other_points(polar):
    v = TangentVector([1.0, 0.0], [0.0, 1.0])
    with pytest.raises(ValueError):
        metric_inner(polar, [2.0, 0.0], v, v)


@given(st.floats(0.1, 5.0), st.floats(-3.0, 3.0),
       st.lists(st.floats(-10, 10), min_size=4, max_size=4))
def test_polar_inner_product_is_symmetric(r, theta, comps):
    M = ChartManifold(2, lambda x: np.diag([1.0, x[0]**2]),
                      [0.0, -np.pi], [np.inf, np.pi])
    u, v = comps[:2], comps[2:]
    assert metric_inner(M, [r, theta], u, v) == \
        pytest.approx(metric_inner(M, [r, theta], v, u))


def test_point_outside_the_domain(polar):
    with pytest.raises(DomainError):
        polar.metric_at([-1.0, 0.0])
    with pytest.raises(DomainError):
        polar.metric_at([1.0, 0.0, 0.0])


def test_degenerate_metric():
    M = ChartManifold(2, lambda x: np.diag([1.0, 0.0]))
    with pytest.raises(DegenerateMetricError):
        M.metric_at([0.0, 0.0])


def test_asymmetric_metric():
    M = ChartManifold(2, lambda x: np.array([[1.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(DegenerateMetricError):
        M.metric_at([0.0, 0.0])


def test_empty_domain():
    with pytest.raises(ValueError):
        ChartManifold.euclidean(1, [1.0], [0.0])


def test_tangent_vector_shape():
    with pytest.raises(ValueError):
        TangentVector([0.0, 0.0], [1.0, 2.0, 3.0])


def test_metric_derivative(polar, engine):
    d = partial_derivative(engine, polar, [2.0, 0.0], 0)
    np.testing.assert_allclose(d, [[0.0, 0.0], [0.0, 4.0]], atol=1e-9)


def test_euclidean_gradient(plane, engine):
    phi = ScalarField(evaluator=lambda x: x[0], partials=lambda x: [1, 0])
    np.testing.assert_allclose(gradient(plane, engine, phi,
                                        [0.5, 0.5]).components, [1.0, 0.0])


def test_polar_gradient(polar, engine):
    phi = ScalarField(evaluator=lambda x: x[1])
    grad = gradient(polar, engine, phi, [2.0, 0.0]).components
    np.testing.assert_allclose(grad, [0.0, 0.25], atol=1e-9)


def test_warped_line_gradient(warped_line, engine):
    phi = ScalarField(evaluator=lambda x: x[1])
    grad = gradient(warped_line.ambient, engine, phi, [0.0, 0.0]).components
    np.testing.assert_allclose(grad, [0.0, 1.0], atol=1e-9)


@given(st.integers(0, 1000))
def test_gradient_duality(seed):
    """g(D phi, v) equals the directional derivative of phi along v.

    """
    M = ChartManifold(2, lambda x: np.diag([1.0, x[0]**2]),
                      [0.0, -np.pi], [np.inf, np.pi])
    engine = DiffEngine()
    rng = np.random.default_rng(seed)
    phi = FieldLibrary().scalar_field(rng, 2)
    p = rng.uniform([0.5, -2.0], [2.0, 2.0])
    v = rng.uniform(-1.0, 1.0, 2)
    lhs = metric_inner(M, p, gradient(M, engine, phi, p).components, v)
    rhs = engine.directional(phi, p, v)
    assert lhs == pytest.approx(rhs, abs=1e-6 * (1 + abs(rhs)))


def test_analytic_partials_are_checked(engine):
    wrong = ScalarField(evaluator=lambda x: x[0]**2,
                        partials=lambda x: np.array([3 * x[0]]), name='x^2')
    right = ScalarField(evaluator=lambda x: x[0]**2,
                        partials=lambda x: np.array([2 * x[0]]))
    assert right.check_partials(engine, [1.5]) < 1e-8
    with pytest.raises(GradientMismatchError):
        wrong.check_partials(engine, [1.5])


def test_orthonormalize_and_project():
    g = np.array([[2.0, 0.5], [0.5, 1.0]])
    basis = metric_orthonormalize(g, np.array([[1.0], [1.0]]))
    assert (basis.T @ g @ basis)[0, 0] == pytest.approx(1.0)
    P = metric_projector(g, basis)
    np.testing.assert_allclose(P @ P, P, atol=1e-12)
    np.testing.assert_allclose(P @ basis, basis, atol=1e-12)
    # self-adjoint with respect to g
    np.testing.assert_allclose(g @ P, (g @ P).T, atol=1e-12)
