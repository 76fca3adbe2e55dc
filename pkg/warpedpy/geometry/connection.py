# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Levi-Civita connection of a chart.

"""
import numpy as np
from atom.api import Atom, Typed

from .core import Point, TangentVector, as_coords, metric_projector


class ChristoffelAt(Atom):
    """Christoffel symbols of the second kind at a point.

    gamma[k, i, j] is Gamma^k_ij.

    """
    #: Point at which the symbols were computed.
    point = Typed(Point)

    #: Array of shape (dim, dim, dim).
    gamma = Typed(np.ndarray)

    def contract(self, u, v):
        """Gamma^k_ij u^i v^j.

        """
        return np.einsum('kij,i,j->k', self.gamma, u, v)

    def torsion_residual(self):
        """Largest asymmetry in the lower indices.

        """
        return float(np.max(np.abs(self.gamma -
                                   np.swapaxes(self.gamma, 1, 2))))


def christoffel(M, engine, p):
    """Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij) at p.

    """
    coords = M.check_point(p)
    ginv = np.linalg.inv(M.metric_at(coords))
    # dg[l, i, j] = d_l g_ij
    dg = engine.derivatives(M.raw_metric, coords, M.lower, M.upper)
    # lowered[i, j, l] = d_i g_jl + d_j g_il - d_l g_ij
    lowered = dg + np.swapaxes(dg, 0, 1) - np.transpose(dg, (1, 2, 0))
    gamma = 0.5 * np.einsum('kl,ijl->kij', ginv, lowered)
    return ChristoffelAt(point=Point(coords), gamma=gamma)


def covariant_derivative(M, engine, X, Y, p, gamma=None):
    """(nabla_X Y)^k = X^i d_i Y^k + Gamma^k_ij X^i Y^j at p.

    Only the value of X at p enters. A precomputed ChristoffelAt may be
    passed to avoid differentiating the metric again.

    """
    coords = M.check_point(p)
    x = X(coords) if callable(X) else np.asarray(X, dtype=float)
    if gamma is None:
        gamma = christoffel(M, engine, coords)
    dy = engine.directional(Y, coords, x, M.lower, M.upper)
    return TangentVector(coords, dy + gamma.contract(x, Y(coords)))


def lie_bracket(engine, X, Y, p, manifold=None):
    """[X, Y]^k = X^i d_i Y^k - Y^i d_i X^k at p.

    """
    coords = as_coords(p)
    lower = upper = None
    if manifold is not None:
        manifold.check_point(coords)
        lower, upper = manifold.lower, manifold.upper
    x, y = X(coords), Y(coords)
    value = (engine.directional(Y, coords, x, lower, upper) -
             engine.directional(X, coords, y, lower, upper))
    return TangentVector(coords, value)


class SecondFundamentalFormAt(Atom):
    """Second fundamental form of a submanifold spanned by coordinate axes.

    """
    #: Point at which the form was computed.
    point = Typed(Point)

    #: Ambient components of the vectors spanning the tangent space of the
    #: submanifold, as columns.
    tangent_basis = Typed(np.ndarray)

    #: values[a, b] is the ambient normal vector II(e_a, e_b).
    values = Typed(np.ndarray)

    #: Induced metric on the tangent basis.
    induced_metric = Typed(np.ndarray)

    #: Mean curvature vector.
    mean_curvature = Typed(np.ndarray)

    def evaluate(self, u, w):
        """II(u, w) for vectors given in the tangent basis.

        """
        return np.einsum('a,b,abk->k', u, w, self.values)

    def umbilicity_residual(self):
        """max over the basis of |II(e_a, e_b) - h(e_a, e_b) H|.

        """
        expected = np.einsum('ab,k->abk', self.induced_metric,
                             self.mean_curvature)
        return float(np.max(np.linalg.norm(self.values - expected, axis=-1)))


def submanifold_form(M, engine, tangent_axes, p):
    """Second fundamental form of the coordinate slice through p.

    The slice is spanned by the coordinate axes in tangent_axes, all other
    coordinates being frozen. II(d_a, d_b) is the g-orthogonal projection of
    nabla_{d_a} d_b = Gamma^k_ab onto the normal space.

    """
    coords = M.check_point(p)
    g = M.metric_at(coords)
    basis = np.eye(M.dim)[:, list(tangent_axes)]
    normal = np.eye(M.dim) - metric_projector(g, basis)
    gamma = christoffel(M, engine, coords).gamma
    sub = gamma[:, tangent_axes][:, :, tangent_axes]
    values = np.einsum('kl,lab->abk', normal, sub)
    induced = basis.T @ g @ basis
    hinv = np.linalg.inv(induced)
    mean = np.einsum('ab,abk->k', hinv, values) / len(tangent_axes)
    return SecondFundamentalFormAt(point=Point(coords), tangent_basis=basis,
                                   values=values, induced_metric=induced,
                                   mean_curvature=mean)


def second_fundamental_form(W, engine, which, p):
    """Second fundamental form of the leaf or the fibre of W through p.

    Leaves are the slices M1 x {q} (first block of coordinates), fibres the
    slices {q} x M2 (second block).

    """
    m1, m2 = W.first.dim, W.second.dim
    if which == 'leaf':
        axes = list(range(m1))
    elif which == 'fiber':
        axes = list(range(m1, m1 + m2))
    else:
        raise ValueError(f"which must be 'leaf' or 'fiber', not {which!r}")
    return submanifold_form(W.ambient, engine, axes, p)
