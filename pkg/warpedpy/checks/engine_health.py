# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Sanity checks of the differentiation engine and of the connection.

"""
import logging

import numpy as np

from ..errors import GeometryError
from ..geometry import (FieldLibrary, ResidualReport, christoffel,
                        covariant_derivative, gradient, lie_bracket, scale_of)
from ..geometry.fields import coefficients
from .base_check import BaseCheck

logger = logging.getLogger(__name__)


class EngineHealthCheck(BaseCheck):
    """Torsion, metric compatibility and gradient duality on random fields.

    """
    id = 'engine-health'

    provides = ('engine-torsion', 'engine-metric-compatibility',
                'engine-gradient-duality', 'engine-christoffel-symmetry')

    def run(self, context):
        M, engine = context.setup.manifold, context.engine
        library = FieldLibrary()
        rng = context.rng()
        report = ResidualReport()
        for p in context.samples:
            X, Y, Z = (library.vector_field(rng, M.dim) for _ in range(3))
            phi = library.scalar_field(rng, M.dim)
            v = coefficients(rng, M.dim)
            try:
                self._run_at(M, engine, p, X, Y, Z, phi, v, report)
            except GeometryError as exc:
                logger.warning('Engine check skipped at %s: %s', p, exc)
                for name in self.provides:
                    report.entry(name).fail(f'{p.tolist()}: {exc}')

        classes = {'engine-torsion': 'torsion',
                   'engine-metric-compatibility': 'engine',
                   'engine-gradient-duality': 'engine',
                   'engine-christoffel-symmetry': 'christoffel'}
        return [self.record(context, report.entry(name), classes[name])
                for name in self.provides]

    # --- Private API ---------------------------------------------------------

    def _run_at(self, M, engine, p, X, Y, Z, phi, v, report):
        gamma = christoffel(M, engine, p)
        g = M.metric_at(p)

        nxy = covariant_derivative(M, engine, X, Y, p, gamma).components
        nyx = covariant_derivative(M, engine, Y, X, p, gamma).components
        bracket = lie_bracket(engine, X, Y, p, M).components
        torsion = nxy - nyx - bracket
        report.entry('engine-torsion').add(float(np.max(np.abs(torsion))),
                                           scale_of(nxy, nyx, bracket))

        def inner(q):
            return Y(q) @ M.raw_metric(q) @ Z(q)

        derivative = float(engine.directional(inner, p, X(p), M.lower,
                                              M.upper))
        nxz = covariant_derivative(M, engine, X, Z, p, gamma).components
        expected = nxy @ g @ Z(p) + Y(p) @ g @ nxz
        report.entry('engine-metric-compatibility').add(
            abs(derivative - expected), scale_of(derivative, expected))

        grad = gradient(M, engine, phi, p).components
        fd = float(engine.directional(phi.evaluator, p, v, M.lower, M.upper))
        report.entry('engine-gradient-duality').add(
            abs(grad @ g @ v - fd), scale_of(grad @ g @ v, fd))

        report.entry('engine-christoffel-symmetry').add(
            gamma.torsion_residual(), scale_of(gamma.gamma))
