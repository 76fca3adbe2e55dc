# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of conformal warped product submersions.

"""
import numpy as np
import pytest

from warpedpy.errors import (ConfigurationError, ConformalityError,
                             RankError, WarpPositivityError)
from warpedpy.geometry import (ChartManifold, ScalarField, SmoothMap,
                               VectorField, build_product_submersion,
                               compatibility, compatibility_report,
                               decomposition_residuals, dilation,
                               fiber_geometry_checks, lift, oneill_A,
                               rescaled_submersion,
                               verify_rescaling_corollary,
                               verify_riemannian_reduction,
                               verify_theorem_item1, verify_theorem_item2)


def constant(value):
    return ScalarField(evaluator=lambda x: value,
                       partials=lambda x: np.zeros(len(x)),
                       name=str(value))


def exponential(rate):
    return ScalarField(evaluator=lambda x: np.exp(rate * x[0]),
                       name=f'exp({rate}x)')


def linear(matrix):
    matrix = np.array(matrix, dtype=float)
    return SmoothMap(source=ChartManifold.euclidean(matrix.shape[1]),
                     target=ChartManifold.euclidean(matrix.shape[0]),
                     mapping=lambda x: matrix @ x,
                     jacobian_fn=lambda x: matrix)


def doubling(rho):
    """(x, y) -> 2x times (u, v) -> 2u over R2 x_{e^2x} R2.

    """
    return build_product_submersion(linear([[2.0, 0.0]]), constant(2.0),
                                    linear([[2.0, 0.0]]), constant(2.0),
                                    exponential(2.0), rho)


@pytest.fixture
def constant_dilation():
    return doubling(exponential(1.0))


@pytest.fixture
def incompatible():
    return doubling(constant(1.0))


@pytest.fixture
def riemannian():
    return build_product_submersion(linear([[1.0, 0.0]]), constant(1.0),
                                    linear([[1.0, 0.0]]), constant(1.0),
                                    exponential(1.0), exponential(1.0))


@pytest.fixture
def varying():
    """phi1(x, y) = x + y^2 / 2, f = 1 / sqrt(1 + y^2), phi2(u, v) = u.

    """
    phi1 = SmoothMap(source=ChartManifold.euclidean(2),
                     target=ChartManifold.euclidean(1),
                     mapping=lambda x: np.array([x[0] + 0.5 * x[1]**2]),
                     jacobian_fn=lambda x: np.array([[1.0, x[1]]]))
    lambda1 = ScalarField(evaluator=lambda x: np.sqrt(1 + x[1]**2))
    f = ScalarField(evaluator=lambda x: 1 / np.sqrt(1 + x[1]**2))
    return build_product_submersion(phi1, lambda1, linear([[1.0, 0.0]]),
                                    constant(1.0), f, constant(1.0))


@pytest.fixture
def samples():
    return np.random.default_rng(5).uniform(-0.5, 0.5, size=(6, 4))


@pytest.fixture
def varying_samples():
    return np.random.default_rng(5).uniform([-0.5, 0.2, -0.5, -0.5],
                                            [0.5, 0.6, 0.5, 0.5],
                                            size=(8, 4))


def test_compatible_ratios(constant_dilation):
    entry = compatibility(constant_dilation, [0.1, 0.2, 0.3, 0.4])
    assert entry.r1 == pytest.approx(4.0)
    assert entry.r2 == pytest.approx(4.0)
    assert entry.conformal_here
    assert entry.lambda_sq == pytest.approx(4.0, rel=1e-8)
    assert entry.anisotropy == pytest.approx(1.0, abs=1e-10)


def test_incompatible_ratios(incompatible):
    p = [0.3, 0.0, 0.0, 0.0]
    entry = compatibility(incompatible, p)
    assert entry.r1 == pytest.approx(4.0)
    assert entry.r2 == pytest.approx(4.0 * np.exp(-1.2))
    assert not entry.conformal_here
    assert entry.anisotropy > 1.5
    with pytest.raises(ConformalityError):
        incompatible.lifted_lambda(p)


def test_compatibility_report(constant_dilation, incompatible, samples):
    assert compatibility_report(constant_dilation, samples).verdict
    report = compatibility_report(incompatible, samples + [1.0, 0, 0, 0])
    assert not report.verdict
    assert report.n_conformal == 0


def test_product_structure(constant_dilation, samples):
    jac = constant_dilation.product_map.jacobian(samples[0])
    assert jac[0, 2:].tolist() == [0.0, 0.0]
    assert jac[1, :2].tolist() == [0.0, 0.0]
    for p in samples:
        residuals = decomposition_residuals(constant_dilation, p)
        assert residuals['jacobian-blocks'] == 0.0
        assert residuals['kernel-dimension'] == 0.0
        assert residuals['vertical-sum'] < 1e-8
        assert residuals['horizontal-sum'] < 1e-8


def test_non_positive_warp_is_rejected():
    with pytest.raises(WarpPositivityError):
        build_product_submersion(linear([[1.0, 0.0]]), constant(1.0),
                                 linear([[1.0, 0.0]]), constant(1.0),
                                 constant(-1.0), constant(1.0),
                                 samples=[np.zeros(4)])


def test_rank_deficient_factor_is_rejected():
    with pytest.raises(RankError):
        build_product_submersion(linear([[0.0, 0.0]]), constant(1.0),
                                 linear([[1.0, 0.0]]), constant(1.0),
                                 constant(1.0), constant(1.0),
                                 samples=[np.zeros(4)])


def test_theorem_item1(constant_dilation, varying, samples, varying_samples,
                       engine):
    for cws, points in ((constant_dilation, samples),
                        (varying, varying_samples)):
        report = verify_theorem_item1(cws, engine, points, seed=3)
        for name in ('theorem-item1', 'theorem-item1-ambient-gradient',
                     'theorem-item1-conventions'):
            assert report[name].n_samples == len(points)
            assert report[name].n_exceeding(1e-5) == 0


def test_theorem_item2_variants_agree_for_equal_dilations(constant_dilation,
                                                          samples, engine):
    report = verify_theorem_item2(constant_dilation, engine, samples)
    assert report.notes['passing-variants'] == 'lambda1,lambda2'
    assert report['theorem-item2-variant-gap'].max_residual < 1e-8


def test_theorem_item2_discriminates_the_variants(varying, varying_samples,
                                                  engine):
    report = verify_theorem_item2(varying, engine, varying_samples, seed=1)
    assert report.notes['passing-variants'] == 'lambda2'
    assert report['theorem-item2-lambda2'].n_exceeding(1e-5) == 0
    assert report['theorem-item2-lambda1'].n_exceeding(1e-5) > 0
    assert report['theorem-item2-variant-gap'].max_residual > 1e-4


def test_second_factor_A_on_the_varying_example(varying, engine):
    """A(X2, Y2) = c^2 y / (1 + y^2)^3 (-y, 1, 0, 0) for X2 = Y2 = c d_u.

    """
    y, c = 0.4, 1.5
    du = lift(varying.source, 'second',
              VectorField.constant([c, 0.0])).ambient_field
    p = np.array([0.1, y, 0.2, -0.3])
    value = oneill_A(varying.context, engine, du, du, p).components
    expected = c**2 * y / (1 + y**2)**3 * np.array([-y, 1.0, 0.0, 0.0])
    np.testing.assert_allclose(value, expected, atol=1e-7)


def test_identities_skip_non_conformal_points(incompatible, samples,
                                              engine):
    points = samples + [1.0, 0, 0, 0]
    report = verify_theorem_item2(incompatible, engine, points)
    entry = report['theorem-item2-lambda2']
    assert entry.n_samples == 0
    assert len(entry.skipped) == len(points)
    assert report.notes['passing-variants'] == 'none'


def test_riemannian_reduction(riemannian, samples, engine):
    report = verify_riemannian_reduction(riemannian, engine, samples)
    assert report['riemannian-dilation'].max_residual < 1e-8
    assert report['riemannian-horizontal-lengths'].max_residual < 1e-8


def test_riemannian_reduction_preconditions(constant_dilation, samples,
                                            engine):
    with pytest.raises(ConfigurationError):
        verify_riemannian_reduction(constant_dilation, engine, samples)


def test_rescaling_to_unit_dilation(constant_dilation, varying, samples,
                                    varying_samples, engine):
    for cws, points in ((constant_dilation, samples),
                        (varying, varying_samples)):
        report = verify_rescaling_corollary(cws, engine, points)
        assert report['rescaling-dilation'].n_exceeding(1e-8) == 0
        assert report['rescaling-perturbation'].n_exceeding(1e-8) == 0
        assert report['rescaling-uniqueness'].n_exceeding(1e-8) == 0
        assert report.notes['unit-dilation-factor'] == 'exp(-2 sigma)'


def test_literal_factor_squares_the_dilation(constant_dilation):
    p = np.array([0.1, 0.2, 0.3, 0.4])
    literal = rescaled_submersion(constant_dilation, lambda x: 0.25)
    assert dilation(literal, p).lambda_sq == pytest.approx(16.0)


def test_perturbed_factor(constant_dilation):
    p = np.array([0.1, 0.2, 0.3, 0.4])
    perturbed = rescaled_submersion(constant_dilation,
                                    lambda x: 4.0 * np.exp(-0.2))
    assert dilation(perturbed, p).lambda_sq == pytest.approx(np.exp(0.2))


def test_fibre_geometry_of_linear_factors(constant_dilation, samples,
                                          engine):
    report = fiber_geometry_checks(constant_dilation, engine, samples)
    assert report['fiber-H1'].n_exceeding(1e-6) == 0
    assert report['fiber-mixed'].n_exceeding(1e-6) == 0
    # the fibres of phi2 are lines in the warped fibres, curved in M
    assert report['fiber-H2'].max_residual > 0.1
