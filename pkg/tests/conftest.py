# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Fixtures shared by the test suite.

"""
import numpy as np
import pytest

from warpedpy.config import VerificationConfig
from warpedpy.geometry import (ChartManifold, DiffEngine, ScalarField,
                               build_warped_product)


@pytest.fixture
def engine():
    return DiffEngine()


@pytest.fixture
def config():
    return VerificationConfig.load()


@pytest.fixture
def plane():
    return ChartManifold.euclidean(2)


@pytest.fixture
def polar():
    """Polar coordinates (r, theta) of the punctured plane.

    """
    return ChartManifold(2, lambda x: np.diag([1.0, x[0]**2]),
                         [0.0, -np.pi], [np.inf, np.pi], name='polar')


@pytest.fixture
def warped_line():
    """R x_f R with f(t) = e^t.

    """
    warp = ScalarField(evaluator=lambda x: np.exp(x[0]),
                       partials=lambda x: np.exp(x), name='exp(t)')
    return build_warped_product(ChartManifold.euclidean(1),
                                ChartManifold.euclidean(1), warp)


@pytest.fixture
def sphere():
    """Round sphere chart (0, pi) x_sin (0, 2 pi).

    """
    warp = ScalarField(evaluator=lambda x: np.sin(x[0]),
                       partials=lambda x: np.cos(x), name='sin(theta)')
    return build_warped_product(ChartManifold.euclidean(1, [0.0], [np.pi]),
                                ChartManifold.euclidean(1, [0.0],
                                                        [2 * np.pi]),
                                warp)
