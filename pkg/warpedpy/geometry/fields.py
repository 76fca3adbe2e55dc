# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Seeded families of test fields used by the verifiers.

Verifiers never take arbitrary user closures: they draw fields from fixed
families so that residual reports are reproducible from a seed.

"""
import numpy as np
from atom.api import Atom, List, Str

from .core import ScalarField, VectorField

VECTOR_FAMILIES = ('coordinate', 'linear', 'trigonometric')

SCALAR_FAMILIES = ('linear', 'quadratic', 'trigonometric')


def coefficients(rng, dim):
    """Random vector whose entries have magnitude in [0.5, 1.5].

    """
    signs = rng.choice((-1.0, 1.0), size=dim)
    return signs * rng.uniform(0.5, 1.5, size=dim)


class FieldLibrary(Atom):
    """Draw vector and scalar fields from seeded families.

    """
    #: Vector field families to draw from.
    vector_families = List(Str(), list(VECTOR_FAMILIES))

    #: Scalar field families to draw from.
    scalar_families = List(Str(), list(SCALAR_FAMILIES))

    def vector_field(self, rng, dim, family=None):
        """Draw a vector field on a chart of dimension dim.

        """
        family = family or self.vector_families[
            rng.integers(len(self.vector_families))]
        if family == 'coordinate':
            return VectorField.coordinate(dim, int(rng.integers(dim)))

        offset = coefficients(rng, dim)
        if family == 'linear':
            matrix = rng.uniform(-0.5, 0.5, size=(dim, dim))
            return VectorField(evaluator=lambda x: offset + matrix @ x,
                               name='linear')

        if family == 'trigonometric':
            freqs = rng.uniform(-1.0, 1.0, size=(dim, dim))
            phases = rng.uniform(0.0, 2 * np.pi, size=dim)
            return VectorField(
                evaluator=lambda x: offset + 0.5 * np.sin(freqs @ x + phases),
                name='trigonometric')

        raise ValueError(f'Unknown vector field family {family!r}')

    def scalar_field(self, rng, dim, family=None):
        """Draw a scalar field, with analytic partials, on a chart.

        """
        family = family or self.scalar_families[
            rng.integers(len(self.scalar_families))]
        a = coefficients(rng, dim)
        if family == 'linear':
            c = rng.uniform(-1.0, 1.0)
            return ScalarField(evaluator=lambda x: a @ x + c,
                               partials=lambda x: a, name='linear')

        if family == 'quadratic':
            q = rng.uniform(-0.5, 0.5, size=(dim, dim))
            q = q + q.T
            return ScalarField(evaluator=lambda x: 0.5 * x @ q @ x + a @ x,
                               partials=lambda x: q @ x + a,
                               name='quadratic')

        if family == 'trigonometric':
            w = rng.uniform(-1.0, 1.0, size=dim)
            phase = rng.uniform(0.0, 2 * np.pi)
            return ScalarField(
                evaluator=lambda x: np.sin(w @ x + phase) + a @ x,
                partials=lambda x: np.cos(w @ x + phase) * w + a,
                name='trigonometric')

        raise ValueError(f'Unknown scalar field family {family!r}')
