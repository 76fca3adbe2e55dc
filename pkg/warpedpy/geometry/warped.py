# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Warped products M1 x_f M2 and their connection identities.

The ambient coordinates are the concatenation (first factor coordinates,
second factor coordinates) and the metric at (p1, p2) is

    block-diag(g1(p1), f(p1)^2 g2(p2)).

"""
import logging

import numpy as np
from atom.api import Atom, Enum, Typed, Value
from scipy.linalg import block_diag

from ..errors import GeometryError, WarpPositivityError
from .connection import (christoffel, covariant_derivative,
                         second_fundamental_form)
from .core import (ChartManifold, ScalarField, VectorField, as_coords,
                   gradient, metric_projector, scale_of)
from .fields import FieldLibrary
from .residuals import ResidualReport, norm
from .submersion import SmoothMap

logger = logging.getLogger(__name__)

#: Entries produced by verify_warped_lemma, one per item of the lemma.
LEMMA_ITEMS = ('lemma-item1', 'lemma-item2', 'lemma-item3', 'lemma-item4')

#: Entries produced by verify_warped_corollary.
COROLLARY_ITEMS = ('leaf-totally-geodesic', 'fiber-totally-umbilical',
                   'fiber-mean-curvature')


class WarpedProduct(Atom):
    """Warped product of two charts.

    """
    #: Base of the warped product.
    first = Typed(ChartManifold)

    #: Fibre of the warped product.
    second = Typed(ChartManifold)

    #: Strictly positive warping function on the first factor.
    warp = Typed(ScalarField)

    #: Chart of the product carrying the warped metric.
    ambient = Typed(ChartManifold)

    def __init__(self, first, second, warp, name=''):
        super().__init__(first=first, second=second, warp=warp)
        self.ambient = ChartManifold(
            first.dim + second.dim, self._metric,
            np.concatenate((first.lower, second.lower)),
            np.concatenate((first.upper, second.upper)),
            name=name or f'{first.name} x_f {second.name}')

    @property
    def first_block(self):
        return slice(0, self.first.dim)

    @property
    def second_block(self):
        return slice(self.first.dim, self.ambient.dim)

    def block(self, origin):
        """Slice of the ambient coordinates belonging to a factor.

        """
        return self.first_block if origin == 'first' else self.second_block

    def factor(self, origin):
        return self.first if origin == 'first' else self.second

    def split(self, p):
        """Factor coordinates (p1, p2) of an ambient point.

        """
        coords = as_coords(p)
        return coords[self.first_block], coords[self.second_block]

    def join(self, p1, p2):
        return np.concatenate((as_coords(p1), as_coords(p2)))

    def warp_at(self, p1):
        """Value of the warping function, checked to be positive.

        """
        value = self.warp(p1)
        if not value > 0:
            raise WarpPositivityError(self.warp.name or 'f', value, p1)
        return value

    def pad(self, origin, components):
        """Ambient components of a factor vector (zero on the other block).

        """
        out = np.zeros(self.ambient.dim)
        out[self.block(origin)] = components
        return out

    def log_warp(self):
        """ln f as a field on the first factor.

        """
        warp = self.warp
        partials = None
        if warp.partials is not None:
            def partials(x):
                return np.asarray(warp.partials(x), dtype=float) / warp(x)
        return ScalarField(evaluator=lambda x: np.log(warp(x)),
                           partials=partials,
                           name=f'ln {warp.name or "f"}')

    # --- Private API ---------------------------------------------------------

    def _metric(self, coords):
        p1, p2 = self.split(coords)
        f = self.warp_at(p1)
        return block_diag(self.first.raw_metric(p1),
                          f**2 * self.second.raw_metric(p2))


class LiftedField(Atom):
    """A factor field together with its lift to the warped product.

    """
    #: Factor on which the field lives.
    origin = Enum('first', 'second')

    #: The field on the factor (VectorField or ScalarField).
    factor_field = Value()

    #: The lifted field on the product.
    ambient_field = Value()


def build_warped_product(M1, M2, f, samples=(), name=''):
    """Build M1 x_f M2 after checking that f is positive at the samples.

    """
    check_warp(M1, f, samples)
    return WarpedProduct(M1, M2, f, name=name)


def check_warp(M1, f, samples):
    """Raise WarpPositivityError unless f > 0 at every sample of M1.

    """
    for p1 in samples:
        coords = M1.check_point(p1)
        value = f(coords)
        if not value > 0:
            raise WarpPositivityError(f.name or 'f', value, coords)


def lift(W, origin, field):
    """Lift a vector or scalar field from a factor to the product.

    Vector fields are zero padded, scalar fields composed with the
    projection onto their factor.

    """
    block = W.block(origin)
    if isinstance(field, VectorField):
        def evaluator(x):
            return W.pad(origin, field(x[block]))
        lifted = VectorField(evaluator=evaluator,
                             name=f'lift({field.name})')
    elif isinstance(field, ScalarField):
        partials = None
        if field.partials is not None:
            def partials(x):
                return W.pad(origin, field.partials(x[block]))
        lifted = ScalarField(evaluator=lambda x: field(x[block]),
                             partials=partials,
                             name=f'lift({field.name})')
    else:
        raise TypeError(f'Cannot lift a {type(field).__name__}')
    return LiftedField(origin=origin, factor_field=field,
                       ambient_field=lifted)


def project(W, origin, components):
    """Components of pi_{i*} v for an ambient vector v.

    """
    return np.asarray(components, dtype=float)[W.block(origin)].copy()


def projection(W, origin):
    """The projection of the product onto one of its factors.

    """
    block = W.block(origin)
    jac = np.eye(W.ambient.dim)[block]
    return SmoothMap(source=W.ambient, target=W.factor(origin),
                     mapping=lambda x: x[block],
                     jacobian_fn=lambda x: jac,
                     name=f'pi_{1 if origin == "first" else 2}')


def verify_warped_metric(W, samples):
    """Compare the ambient metric with the warped product formula.

    The cross blocks must vanish exactly and the restrictions to leaves and
    fibres must equal g1 and f^2 g2.

    """
    report = ResidualReport()
    b1, b2 = W.first_block, W.second_block
    for p in samples:
        try:
            coords = W.ambient.check_point(p)
            g = W.ambient.metric_at(coords)
            p1, p2 = W.split(coords)
            cross = float(np.max(np.abs(g[b1, b2])))
            report.entry('metric-cross-blocks').add(cross, 1.0)
            g1 = W.first.metric_at(p1)
            g2 = W.warp_at(p1)**2 * W.second.metric_at(p2)
            residual = max(float(np.max(np.abs(g[b1, b1] - g1))),
                           float(np.max(np.abs(g[b2, b2] - g2))))
            report.entry('metric-restrictions').add(residual,
                                                   scale_of(g1, g2))
        except GeometryError as exc:
            logger.warning('Skipping sample %s: %s', p, exc)
            for name in ('metric-cross-blocks', 'metric-restrictions'):
                report.entry(name).fail(f'{np.asarray(p).tolist()}: {exc}')
    return report


def verify_warped_lemma(W, engine, samples, seed=0, library=None):
    """Evaluate the four connection identities of warped products.

    For lifts E1, F1 of fields of M1 and E2, F2 of fields of M2:

    1. nabla_{E1} F1 is the lift of nabla^1_{E1} F1,
    2. nabla_{E1} E2 = nabla_{E2} E1 = (E1(f) / f) E2,
    3. nor(nabla_{E2} F2) = -g(E2, F2) D ln f,
    4. tan(nabla_{E2} F2) is the lift of nabla^2_{E2} F2.

    One set of library fields is drawn per sample point.

    """
    library = library or FieldLibrary()
    rng = np.random.default_rng(seed)
    report = ResidualReport()
    for name in LEMMA_ITEMS:
        report.entry(name)
    m1, m2 = W.first.dim, W.second.dim
    for p in samples:
        fields = (library.vector_field(rng, m1),
                  library.vector_field(rng, m1),
                  library.vector_field(rng, m2),
                  library.vector_field(rng, m2))
        try:
            residuals = _lemma_at(W, engine, as_coords(p), *fields)
        except GeometryError as exc:
            logger.warning('Skipping lemma sample %s: %s', p, exc)
            for name in LEMMA_ITEMS:
                report.entry(name).fail(f'{np.asarray(p).tolist()}: {exc}')
            continue
        for name, (residual, scale) in zip(LEMMA_ITEMS, residuals):
            report.entry(name).add(residual, scale)
    return report


def verify_warped_corollary(W, engine, samples):
    """Leaves are totally geodesic, fibres totally umbilical with H = -D ln f.

    """
    report = ResidualReport()
    lnf = lift(W, 'first', W.log_warp()).ambient_field
    for p in samples:
        try:
            coords = W.ambient.check_point(p)
            leaf = second_fundamental_form(W, engine, 'leaf', coords)
            report.entry('leaf-totally-geodesic').add(
                float(np.max(np.abs(leaf.values))), scale_of(leaf.values))

            fiber = second_fundamental_form(W, engine, 'fiber', coords)
            report.entry('fiber-totally-umbilical').add(
                fiber.umbilicity_residual(),
                scale_of(fiber.values, fiber.mean_curvature))

            expected = -gradient(W.ambient, engine, lnf, coords).components
            report.entry('fiber-mean-curvature').add(
                norm(fiber.mean_curvature - expected),
                scale_of(fiber.mean_curvature, expected))
        except GeometryError as exc:
            logger.warning('Skipping corollary sample %s: %s', p, exc)
            for name in COROLLARY_ITEMS:
                report.entry(name).fail(f'{np.asarray(p).tolist()}: {exc}')
    return report


# --- Private API -------------------------------------------------------------

def _lemma_at(W, engine, coords, E1, F1, E2, F2):
    """Residuals and scales of the four lemma items at one point.

    """
    M = W.ambient
    coords = M.check_point(coords)
    p1, p2 = W.split(coords)
    gamma = christoffel(M, engine, coords)
    e1 = lift(W, 'first', E1).ambient_field
    f1 = lift(W, 'first', F1).ambient_field
    e2 = lift(W, 'second', E2).ambient_field
    f2 = lift(W, 'second', F2).ambient_field

    def nabla(X, Y):
        return covariant_derivative(M, engine, X, Y, coords, gamma).components

    lhs1 = nabla(e1, f1)
    rhs1 = W.pad('first',
                 covariant_derivative(W.first, engine, E1, F1, p1).components)
    item1 = (norm(lhs1 - rhs1), scale_of(lhs1, rhs1))

    f = W.warp_at(p1)
    e1_f = W.warp.differential(engine, p1, W.first) @ E1(p1)
    rhs2 = e1_f / f * e2(coords)
    lhs2a, lhs2b = nabla(e1, e2), nabla(e2, e1)
    item2 = (max(norm(lhs2a - rhs2), norm(lhs2b - rhs2)),
             scale_of(lhs2a, lhs2b, rhs2))

    # The metric is block diagonal, so the g-orthogonal projections onto the
    # fibre and its normal space are the coordinate block projections.
    g = M.metric_at(coords)
    tangent = metric_projector(g, np.eye(M.dim)[:, W.second_block])
    normal = np.eye(M.dim) - tangent
    nabla22 = nabla(e2, f2)
    lnf = lift(W, 'first', W.log_warp()).ambient_field
    dlnf = gradient(M, engine, lnf, coords).components
    lhs3 = normal @ nabla22
    rhs3 = -(e2(coords) @ g @ f2(coords)) * dlnf
    item3 = (norm(lhs3 - rhs3), scale_of(lhs3, rhs3))

    lhs4 = tangent @ nabla22
    rhs4 = W.pad('second', covariant_derivative(W.second, engine, E2, F2,
                                                p2).components)
    item4 = (norm(lhs4 - rhs4), scale_of(lhs4, rhs4))
    return item1, item2, item3, item4
