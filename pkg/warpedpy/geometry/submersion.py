# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Smooth maps, vertical/horizontal splitting and O'Neill tensors.

The vertical space of a submersion F at p is ker F_*p and the horizontal
space its g-orthogonal complement, so that T_pM = V_p + H_p. O'Neill's
tensors are

    A_E F = H nabla_{HE} VF + V nabla_{HE} HF,
    T_E F = H nabla_{VE} VF + V nabla_{VE} HF,

where VF and HF are the projected *fields*: the splitting is recomputed at
every stencil point when they are differentiated.

"""
import logging

import numpy as np
from atom.api import Atom, Callable, Float, Int, Str, Typed

from ..errors import ConformalityError, GradientMismatchError, RankError
from .connection import christoffel, lie_bracket
from .core import (ChartManifold, Point, ScalarField, TangentVector,
                   VectorField, as_components, as_coords, gradient,
                   metric_orthonormalize, scale_of)
from .diff import DiffEngine

logger = logging.getLogger(__name__)


class SmoothMap(Atom):
    """Smooth map between two charts.

    """
    #: Manifold on which the map is defined.
    source = Typed(ChartManifold)

    #: Manifold in which the map takes its values.
    target = Typed(ChartManifold)

    #: Callable mapping source coordinates to target coordinates.
    mapping = Callable()

    #: Optional callable returning the (target.dim, source.dim) Jacobian.
    jacobian_fn = Callable()

    #: Engine used when the Jacobian has to be estimated.
    engine = Typed(DiffEngine, ())

    #: Human readable name used in diagnostics.
    name = Str()

    def __call__(self, p):
        return np.asarray(self.mapping(as_coords(p)), dtype=float)

    def apply(self, p):
        """Image of p as a validated Point of the target.

        """
        coords = self.source.check_point(p)
        return self.target.point(self(coords))

    def jacobian(self, p):
        """Jacobian matrix at p, analytic when available.

        """
        coords = as_coords(p)
        if self.jacobian_fn is not None:
            return np.asarray(self.jacobian_fn(coords), dtype=float)
        return self.fd_jacobian(coords)

    def fd_jacobian(self, p):
        """Finite difference estimate of the Jacobian.

        """
        coords = as_coords(p)
        d = self.engine.derivatives(self.mapping, coords, self.source.lower,
                                    self.source.upper)
        return d.T

    def check_jacobian(self, p):
        """Compare the analytic Jacobian with its finite difference estimate.

        """
        if self.jacobian_fn is None:
            return 0.0
        analytic = self.jacobian(p)
        numeric = self.fd_jacobian(p)
        discrepancy = float(np.max(np.abs(analytic - numeric)))
        if discrepancy > self.engine.fd_check_tol * scale_of(analytic,
                                                             numeric):
            raise GradientMismatchError(f'Jacobian of {self.name or "map"}',
                                        discrepancy,
                                        self.engine.fd_check_tol)
        return discrepancy


class SplitAt(Atom):
    """Vertical/horizontal splitting of the tangent space at a point.

    """
    #: Point at which the splitting was computed.
    point = Typed(Point)

    #: Metric of the source at the point.
    metric = Typed(np.ndarray)

    #: Jacobian of the map at the point.
    jacobian = Typed(np.ndarray)

    #: g-orthonormal basis of the vertical space, as columns.
    vertical = Typed(np.ndarray)

    #: g-orthonormal basis of the horizontal space, as columns.
    horizontal = Typed(np.ndarray)

    #: Numerical rank of the Jacobian.
    rank = Int()

    #: Singular values of the Jacobian.
    singular_values = Typed(np.ndarray)

    @property
    def vertical_projector(self):
        return self.vertical @ self.vertical.T @ self.metric

    @property
    def horizontal_projector(self):
        return self.horizontal @ self.horizontal.T @ self.metric


class SubmersionContext(Atom):
    """A smooth map together with its pointwise splitting machinery.

    """
    #: Map whose vertical and horizontal spaces we study.
    map = Typed(SmoothMap)

    #: Singular values below rank_tol * largest are treated as zero.
    rank_tol = Float(1e-8)

    #: Tolerance on anisotropy - 1 for the map to count as conformal.
    conf_tol = Float(1e-6)

    @property
    def source(self):
        return self.map.source

    @property
    def target(self):
        return self.map.target

    def split_at(self, p):
        """Compute the vertical and horizontal bases at p.

        """
        coords = self.source.check_point(p)
        g = self.source.metric_at(coords)
        jac = self.map.jacobian(coords)
        _, sv, vt = np.linalg.svd(jac)
        threshold = self.rank_tol * (sv[0] if len(sv) else 0.0)
        rank = int(np.sum(sv > threshold))
        if rank < self.target.dim:
            raise RankError(coords, rank, self.target.dim, sv)
        kernel = vt[rank:].T
        vertical = metric_orthonormalize(g, kernel)
        # g-orthogonal complement of ker J is the range of g^-1 J^T
        horizontal = metric_orthonormalize(g, np.linalg.solve(g, jac.T))
        return SplitAt(point=Point(coords), metric=g, jacobian=jac,
                       vertical=vertical, horizontal=horizontal, rank=rank,
                       singular_values=sv)

    def vertical_part(self, v, p):
        """Components of the vertical projection of v at p.

        """
        return self.split_at(p).vertical_projector @ as_components(v)

    def horizontal_part(self, v, p):
        """Components of the horizontal projection of v at p.

        """
        return self.split_at(p).horizontal_projector @ as_components(v)

    def vertical_field(self, field):
        """The field q -> V_q field(q).

        """
        return VectorField(evaluator=lambda q: self.vertical_part(field(q), q),
                           name=f'V({field.name})')

    def horizontal_field(self, field):
        """The field q -> H_q field(q).

        """
        return VectorField(
            evaluator=lambda q: self.horizontal_part(field(q), q),
            name=f'H({field.name})')

    def projected_field(self, components, offset=None, which='vertical'):
        """Extend a vector at a point to a vertical or horizontal field.

        The extension has constant coordinate components (plus an optional
        linear term offset(q)) and is projected at every point.

        """
        components = np.array(components, dtype=float)
        if offset is None:
            base = VectorField.constant(components)
        else:
            base = VectorField(evaluator=lambda q: components + offset(q))
        if which == 'vertical':
            return self.vertical_field(base)
        return self.horizontal_field(base)

    def dilation_sq_field(self):
        """Scalar field q -> estimated squared dilation at q.

        """
        return ScalarField(evaluator=lambda q: dilation(self, q).lambda_sq,
                           name='lambda_sq')


class DilationEstimate(Atom):
    """Estimated dilation of a map at a point.

    """
    #: Point at which the estimate was computed.
    point = Typed(Point)

    #: Mean Rayleigh quotient of the pullback metric on the horizontal space.
    lambda_sq = Float()

    #: Ratio of the extreme Rayleigh quotients.
    anisotropy = Float()

    #: All Rayleigh quotients (eigenvalues of the pulled back metric in a
    #: g-orthonormal horizontal basis).
    quotients = Typed(np.ndarray)

    #: Tolerance used for the conformality verdict.
    conf_tol = Float(1e-6)

    @property
    def is_conformal(self):
        return self.anisotropy - 1.0 <= self.conf_tol

    def is_riemannian(self, tolerance):
        """Conformal with unit dilation.

        """
        return self.is_conformal and abs(self.lambda_sq - 1.0) <= tolerance


def pushforward(F, p, v):
    """F_* v = J(p) v, attached at F(p).

    """
    coords = F.source.check_point(p)
    value = F.jacobian(coords) @ as_components(v)
    return TangentVector(F(coords), value)


def split(ctx, p, v):
    """Vertical and horizontal parts of v at p.

    """
    coords = as_coords(p)
    s = ctx.split_at(coords)
    comps = as_components(v)
    return (TangentVector(coords, s.vertical_projector @ comps),
            TangentVector(coords, s.horizontal_projector @ comps))


def dilation(ctx, p):
    """Estimate the squared dilation and the anisotropy of the map at p.

    """
    coords = as_coords(p)
    s = ctx.split_at(coords)
    gn = ctx.target.metric_at(ctx.map(coords))
    pushed = s.jacobian @ s.horizontal
    pulled = pushed.T @ gn @ pushed
    quotients = np.linalg.eigvalsh(0.5 * (pulled + pulled.T))
    lambda_sq = float(np.trace(pulled)) / pulled.shape[0]
    anisotropy = float(quotients[-1] / quotients[0])
    return DilationEstimate(point=Point(coords), lambda_sq=lambda_sq,
                            anisotropy=anisotropy, quotients=quotients,
                            conf_tol=ctx.conf_tol)


def oneill_A(ctx, engine, E, F, p):
    """A_E F = H nabla_{HE} VF + V nabla_{HE} HF at p.

    """
    coords = as_coords(p)
    s = ctx.split_at(coords)
    direction = s.horizontal_projector @ E(coords)
    nabla_v, nabla_h = _projected_derivatives(ctx, engine, direction, F,
                                              coords)
    value = (s.horizontal_projector @ nabla_v +
             s.vertical_projector @ nabla_h)
    return TangentVector(coords, value)


def oneill_T(ctx, engine, E, F, p):
    """T_E F = H nabla_{VE} VF + V nabla_{VE} HF at p.

    """
    coords = as_coords(p)
    s = ctx.split_at(coords)
    direction = s.vertical_projector @ E(coords)
    nabla_v, nabla_h = _projected_derivatives(ctx, engine, direction, F,
                                              coords)
    value = (s.horizontal_projector @ nabla_v +
             s.vertical_projector @ nabla_h)
    return TangentVector(coords, value)


def vertical_gradient(ctx, engine, phi, p):
    """Vertical part of the gradient of phi at p.

    """
    coords = as_coords(p)
    grad = gradient(ctx.source, engine, phi, coords).components
    return TangentVector(coords, ctx.vertical_part(grad, coords))


def mean_curvature(ctx, engine, p, vertical_basis=None):
    """Mean curvature vector of the fibre through p.

    H = 1/k sum_a T(e_a, e_a) over a g-orthonormal basis of the vertical
    space (or of the subspace spanned by vertical_basis).

    """
    coords = as_coords(p)
    if vertical_basis is None:
        vertical_basis = ctx.split_at(coords).vertical
    k = vertical_basis.shape[1]
    total = np.zeros(ctx.source.dim)
    if k == 0:
        return TangentVector(coords, total)
    for a in range(k):
        e = ctx.projected_field(vertical_basis[:, a])
        total += oneill_T(ctx, engine, e, e, coords).components
    return TangentVector(coords, total / k)


def conformal_A_formula(ctx, engine, X, Y, p, dilation_field=None):
    """1/2 {V[X, Y] - lambda^2 g(X, Y) grad_V(1 / lambda^2)} at p.

    X and Y are replaced by their horizontal parts. lambda is the given
    dilation_field when provided, the estimated dilation of the map
    otherwise.

    """
    coords = as_coords(p)
    estimate = dilation(ctx, coords)
    if not estimate.is_conformal:
        raise ConformalityError(coords, estimate.anisotropy, ctx.conf_tol)

    hx, hy = ctx.horizontal_field(X), ctx.horizontal_field(Y)
    bracket = lie_bracket(engine, hx, hy, coords, ctx.source).components
    if dilation_field is None:
        lambda_sq = estimate.lambda_sq
        est = ctx.dilation_sq_field()
        inverse = ScalarField(evaluator=lambda q: 1.0 / est(q),
                              name='1/lambda_sq')
    else:
        lambda_sq = dilation_field(coords)**2
        inverse = ScalarField(evaluator=lambda q: dilation_field(q)**-2,
                              name='1/lambda_sq')
    g = ctx.source.metric_at(coords)
    inner = hx(coords) @ g @ hy(coords)
    grad_v = vertical_gradient(ctx, engine, inverse, coords).components
    value = 0.5 * (ctx.vertical_part(bracket, coords) -
                   lambda_sq * inner * grad_v)
    return TangentVector(coords, value)


# --- Private API -------------------------------------------------------------

def _projected_derivatives(ctx, engine, direction, F, coords):
    """nabla_direction VF and nabla_direction HF at coords.

    Both projections are differentiated from a single sweep of the stencil.

    """
    M = ctx.source
    n = M.dim

    def stacked(q):
        s = ctx.split_at(q)
        value = F(q)
        return np.concatenate((s.vertical_projector @ value,
                               s.horizontal_projector @ value))

    gamma = christoffel(M, engine, coords)
    d = engine.directional(stacked, coords, direction, M.lower, M.upper)
    at_p = stacked(coords)
    nabla_v = d[:n] + gamma.contract(direction, at_p[:n])
    nabla_h = d[n:] + gamma.contract(direction, at_p[n:])
    return nabla_v, nabla_h
