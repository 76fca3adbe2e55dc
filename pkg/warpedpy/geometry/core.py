# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Coordinate charts, points, tangent vectors and fields.

Every manifold is a single global chart whose domain is an open,
axis-aligned box (bounds may be infinite). Fields are evaluated on
coordinate arrays.

"""
import numpy as np
from atom.api import Atom, Callable, Float, Int, Str, Typed
from scipy.linalg import solve_triangular

from ..errors import (DegenerateMetricError, DomainError,
                      GradientMismatchError)
from .diff import DiffEngine


class Point(Atom):
    """A point of a chart given by its coordinates.

    """
    #: Coordinates of the point.
    coords = Typed(np.ndarray)

    def __init__(self, coords):
        super().__init__(coords=np.array(coords, dtype=float))

    @property
    def dim(self):
        return len(self.coords)


class TangentVector(Atom):
    """A tangent vector given by its components in the coordinate frame.

    """
    #: Point at which the vector is attached.
    base = Typed(Point)

    #: Components along the coordinate vector fields.
    components = Typed(np.ndarray)

    def __init__(self, base, components):
        if not isinstance(base, Point):
            base = Point(base)
        components = np.array(components, dtype=float)
        if components.shape != base.coords.shape:
            raise ValueError(f'A tangent vector at a point of dimension '
                             f'{base.dim} needs {base.dim} components, got '
                             f'{components.shape}')
        super().__init__(base=base, components=components)


def as_coords(p):
    """Coordinates of a Point or of anything numpy can turn into an array.

    """
    if isinstance(p, Point):
        return p.coords
    return np.asarray(p, dtype=float)


def as_components(v):
    """Components of a TangentVector or of an array like.

    """
    if isinstance(v, TangentVector):
        return v.components
    return np.asarray(v, dtype=float)


def scale_of(*quantities):
    """1 + the largest absolute value among the quantities.

    This is the scale used by every tolerance in the package.

    """
    largest = 0.0
    for q in quantities:
        q = np.asarray(q, dtype=float)
        if q.size:
            largest = max(largest, float(np.max(np.abs(q))))
    return 1.0 + largest


class ChartManifold(Atom):
    """Riemannian manifold described by a single chart.

    """
    #: Dimension of the manifold.
    dim = Int()

    #: Lower bounds of the open box domain (may be -inf).
    lower = Typed(np.ndarray)

    #: Upper bounds of the open box domain (may be +inf).
    upper = Typed(np.ndarray)

    #: Callable mapping coordinates to the dim x dim metric matrix.
    metric = Callable()

    #: Smallest eigenvalue accepted for the metric.
    spd_floor = Float(1e-10)

    #: Asymmetry (relative to the metric scale) tolerated before the metric
    #: is declared degenerate. Smaller asymmetries are symmetrized away.
    symmetry_tol = Float(1e-10)

    #: Human readable name used in diagnostics.
    name = Str()

    def __init__(self, dim, metric, lower=None, upper=None, **kwargs):
        dim = int(dim)
        lower = (np.full(dim, -np.inf) if lower is None
                 else np.array(lower, dtype=float).reshape(dim))
        upper = (np.full(dim, np.inf) if upper is None
                 else np.array(upper, dtype=float).reshape(dim))
        if dim < 1:
            raise ValueError(f'A chart needs a positive dimension, not {dim}')
        if np.any(lower >= upper):
            raise ValueError(f'Empty domain box: {lower} - {upper}')
        super().__init__(dim=dim, metric=metric, lower=lower, upper=upper,
                         **kwargs)

    @classmethod
    def euclidean(cls, dim, lower=None, upper=None, name=''):
        """Flat manifold with the identity metric.

        """
        identity = np.eye(dim)
        return cls(dim, lambda x: identity, lower, upper,
                   name=name or f'R{dim}')

    def contains(self, coords):
        """Whether the coordinates lie strictly inside the domain box.

        """
        coords = as_coords(coords)
        return (coords.shape == (self.dim,) and
                bool(np.all(coords > self.lower)) and
                bool(np.all(coords < self.upper)))

    def check_point(self, p):
        """Return the coordinates of p, raising if p is outside the domain.

        """
        coords = as_coords(p)
        if not self.contains(coords):
            raise DomainError(coords, self.lower, self.upper)
        return coords

    def point(self, coords):
        """Build a validated Point of this chart.

        """
        return Point(self.check_point(coords))

    def raw_metric(self, coords):
        """Symmetrized metric without domain or definiteness validation.

        Used inside finite difference stencils.

        """
        g = np.asarray(self.metric(coords), dtype=float)
        return 0.5 * (g + g.T)

    def metric_at(self, p):
        """Validated metric matrix at p.

        """
        coords = self.check_point(p)
        g = np.asarray(self.metric(coords), dtype=float)
        if g.shape != (self.dim, self.dim):
            raise ValueError(f'Metric of {self.name or "chart"} returned '
                             f'shape {g.shape}, expected {(self.dim,) * 2}')
        asym = np.max(np.abs(g - g.T))
        if asym > self.symmetry_tol * scale_of(g):
            raise DegenerateMetricError(coords, np.nan,
                                        f'asymmetry {asym:.3e}')
        g = 0.5 * (g + g.T)
        smallest = np.linalg.eigvalsh(g)[0]
        if not smallest > self.spd_floor:
            raise DegenerateMetricError(coords, smallest)
        return g

    def inverse_metric_at(self, p):
        return np.linalg.inv(self.metric_at(p))


class ScalarField(Atom):
    """Smooth function on a chart, optionally with analytic partials.

    """
    #: Callable mapping coordinates to a real number.
    evaluator = Callable()

    #: Optional callable mapping coordinates to the array of partial
    #: derivatives.
    partials = Callable()

    #: Human readable name used in diagnostics.
    name = Str()

    def __call__(self, p):
        return float(self.evaluator(as_coords(p)))

    def differential(self, engine, p, manifold=None):
        """Partial derivatives at p, analytic when available.

        """
        coords = as_coords(p)
        if self.partials is not None:
            return np.asarray(self.partials(coords), dtype=float)
        return _fd_differential(self, engine, coords, manifold)

    def check_partials(self, engine, p, manifold=None):
        """Compare the analytic partials to finite differences.

        Returns the discrepancy, raises GradientMismatchError when it exceeds
        the engine fd_check_tol (relative to the scale of the partials).

        """
        if self.partials is None:
            return 0.0
        coords = as_coords(p)
        analytic = np.asarray(self.partials(coords), dtype=float)
        numeric = _fd_differential(self, engine, coords, manifold)
        discrepancy = float(np.max(np.abs(analytic - numeric)))
        if discrepancy > engine.fd_check_tol * scale_of(analytic, numeric):
            raise GradientMismatchError(f'gradient of {self.name or "field"}',
                                        discrepancy, engine.fd_check_tol)
        return discrepancy


class VectorField(Atom):
    """Smooth vector field given by its coordinate components.

    """
    #: Callable mapping coordinates to the array of components.
    evaluator = Callable()

    #: Human readable name used in diagnostics.
    name = Str()

    def __call__(self, p):
        return np.asarray(self.evaluator(as_coords(p)), dtype=float)

    @classmethod
    def constant(cls, components, name=''):
        """Field with the same components everywhere.

        """
        components = np.array(components, dtype=float)
        return cls(evaluator=lambda x: components, name=name)

    @classmethod
    def coordinate(cls, dim, axis):
        """The coordinate vector field along an axis.

        """
        components = np.zeros(dim)
        components[axis] = 1.0
        return cls.constant(components, name=f'd{axis}')


def metric_inner(M, p, u, v):
    """Inner product of two tangent vectors at p.

    """
    coords = M.check_point(p)
    for w in (u, v):
        if (isinstance(w, TangentVector) and
                not np.array_equal(w.base.coords, coords)):
            raise ValueError('Tangent vectors must be attached at the point '
                             'where the metric is evaluated')
    return float(as_components(u) @ M.metric_at(coords) @ as_components(v))


def partial_derivative(engine, field, p, axis, manifold=None):
    """Partial derivative of a scalar field, a vector field or a metric.

    Passing a ChartManifold as field differentiates its metric. The manifold
    (when known) keeps the stencil inside the domain.

    """
    coords = as_coords(p)
    if isinstance(field, ChartManifold):
        manifold = field
        func = field.raw_metric
    else:
        func = field
    if manifold is None:
        return engine.partial(func, coords, axis)
    manifold.check_point(coords)
    return engine.partial(func, coords, axis, manifold.lower, manifold.upper)


def gradient(M, engine, phi, p):
    """Riemannian gradient of a scalar field: (D phi)^k = g^kl d_l phi.

    """
    coords = M.check_point(p)
    d = phi.differential(engine, coords, M)
    return TangentVector(coords, np.linalg.solve(M.metric_at(coords), d))


def metric_orthonormalize(g, basis):
    """Orthonormalize the columns of basis with respect to g.

    The returned columns span the same space as the input ones.

    """
    basis = np.asarray(basis, dtype=float)
    if basis.shape[1] == 0:
        return basis.copy()
    gram = basis.T @ g @ basis
    chol = np.linalg.cholesky(0.5 * (gram + gram.T))
    return solve_triangular(chol, basis.T, lower=True).T


def metric_projector(g, basis):
    """g-orthogonal projector onto the span of the columns of basis.

    """
    basis = np.asarray(basis, dtype=float)
    n = g.shape[0]
    if basis.shape[1] == 0:
        return np.zeros((n, n))
    gram = basis.T @ g @ basis
    return basis @ np.linalg.solve(gram, basis.T @ g)


# --- Private API -------------------------------------------------------------

def _fd_differential(field, engine, coords, manifold):
    """Finite difference partials of a scalar field.

    """
    func = field.evaluator
    if manifold is None:
        return engine.derivatives(func, coords)
    return engine.derivatives(func, coords, manifold.lower, manifold.upper)


__all__ = ['ChartManifold', 'DiffEngine', 'Point', 'ScalarField',
           'TangentVector', 'VectorField', 'as_components', 'as_coords',
           'gradient', 'metric_inner', 'metric_orthonormalize',
           'metric_projector', 'partial_derivative', 'scale_of']
