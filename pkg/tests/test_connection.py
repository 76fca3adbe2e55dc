# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of the Levi-Civita connection.

"""
import numpy as np
import pytest

from warpedpy.geometry import (ChartManifold, FieldLibrary, ScalarField,
                               VectorField, build_warped_product, christoffel,
                               covariant_derivative, lie_bracket,
                               second_fundamental_form)


def test_flat_christoffel_symbols(plane, engine):
    gamma = christoffel(plane, engine, [0.3, 0.4]).gamma
    np.testing.assert_allclose(gamma, 0.0, atol=1e-12)


def test_polar_christoffel_symbols(polar, engine):
    gamma = christoffel(polar, engine, [2.0, 0.0])
    assert gamma.gamma[0, 1, 1] == pytest.approx(-2.0, abs=1e-8)
    assert gamma.gamma[1, 0, 1] == pytest.approx(0.5, abs=1e-8)
    assert gamma.gamma[1, 1, 0] == pytest.approx(0.5, abs=1e-8)
    assert gamma.torsion_residual() < 1e-12


def test_warped_line_christoffel_symbols(warped_line, engine):
    gamma = christoffel(warped_line.ambient, engine, [0.0, 0.0]).gamma
    assert gamma[1, 0, 1] == pytest.approx(1.0, abs=1e-8)
    assert gamma[0, 1, 1] == pytest.approx(-1.0, abs=1e-8)


def test_warped_line_covariant_derivatives(warped_line, engine):
    M = warped_line.ambient
    dt, dx = VectorField.coordinate(2, 0), VectorField.coordinate(2, 1)
    np.testing.assert_allclose(
        covariant_derivative(M, engine, dt, dx, [0.0, 0.0]).components,
        [0.0, 1.0], atol=1e-8)
    np.testing.assert_allclose(
        covariant_derivative(M, engine, dx, dx, [0.0, 0.0]).components,
        [-1.0, 0.0], atol=1e-8)


def test_leibniz_rule(polar, engine):
    rng = np.random.default_rng(3)
    library = FieldLibrary()
    X, Y = library.vector_field(rng, 2), library.vector_field(rng, 2)
    phi = library.scalar_field(rng, 2)
    p = np.array([1.5, 0.4])
    phi_y = VectorField(evaluator=lambda x: phi(x) * Y(x))
    lhs = covariant_derivative(polar, engine, X, phi_y, p).components
    rhs = (engine.directional(phi, p, X(p)) * Y(p) +
           phi(p) * covariant_derivative(polar, engine, X, Y, p).components)
    np.testing.assert_allclose(lhs, rhs, atol=1e-6)


def test_torsion_free(polar, engine):
    rng = np.random.default_rng(11)
    library = FieldLibrary()
    X, Y = library.vector_field(rng, 2), library.vector_field(rng, 2)
    p = np.array([1.2, -0.3])
    torsion = (covariant_derivative(polar, engine, X, Y, p).components -
               covariant_derivative(polar, engine, Y, X, p).components -
               lie_bracket(engine, X, Y, p, polar).components)
    np.testing.assert_allclose(torsion, 0.0, atol=1e-6)


def test_lie_bracket_of_rotation_and_translation(engine):
    X = VectorField(evaluator=lambda x: np.array([-x[1], x[0]]))
    Y = VectorField.constant([1.0, 0.0])
    np.testing.assert_allclose(lie_bracket(engine, X, Y, [1.0, 1.0])
                               .components, [0.0, -1.0], atol=1e-9)
    np.testing.assert_allclose(lie_bracket(engine, X, X, [1.0, 1.0])
                               .components, 0.0, atol=1e-12)


def test_coordinate_fields_commute(engine):
    d0, d1 = VectorField.coordinate(3, 0), VectorField.coordinate(3, 1)
    assert not np.any(lie_bracket(engine, d0, d1, [0.1, 0.2, 0.3])
                      .components)


def test_fibre_second_fundamental_form(warped_line, engine):
    form = second_fundamental_form(warped_line, engine, 'fiber', [0.0, 0.0])
    np.testing.assert_allclose(form.values[0, 0], [-1.0, 0.0], atol=1e-8)
    np.testing.assert_allclose(form.mean_curvature, [-1.0, 0.0], atol=1e-8)
    assert form.umbilicity_residual() < 1e-12


def test_leaf_second_fundamental_form(warped_line, engine):
    form = second_fundamental_form(warped_line, engine, 'leaf', [0.4, -0.2])
    np.testing.assert_allclose(form.values, 0.0, atol=1e-10)


def test_unwarped_fibres_are_totally_geodesic(engine):
    one = ScalarField(evaluator=lambda x: 1.0, partials=lambda x: [0.0])
    W = build_warped_product(ChartManifold.euclidean(1),
                             ChartManifold.euclidean(2), one)
    form = second_fundamental_form(W, engine, 'fiber', [0.1, 0.2, 0.3])
    np.testing.assert_allclose(form.values, 0.0, atol=1e-12)


def test_unknown_submanifold(warped_line, engine):
    with pytest.raises(ValueError):
        second_fundamental_form(warped_line, engine, 'slice', [0.0, 0.0])
