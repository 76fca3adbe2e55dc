# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Conformal warped product submersions.

Given conformal submersions phi1: M1 -> N1 and phi2: M2 -> N2 with
dilations lambda1 and lambda2, and warping functions f on M1 and rho on N1,
the product map

    phi1 x phi2: M1 x_f M2 -> N1 x_rho N2,  (p1, p2) -> (phi1(p1), phi2(p2))

pulls the target metric back, on horizontal vectors (X1, X2), to

    lambda1^2 g1(X1, X1) + rho(phi1(p1))^2 lambda2^2 g2(X2, X2).

It is conformal at p exactly when r1 = lambda1^2(p1) equals
r2 = rho(phi1(p1))^2 lambda2^2(p2) / f(p1)^2, and the dilation of the
product is then lambda^2 = r1 = r2. This lifted dilation is undefined where
the two ratios disagree.

"""
import logging

import numpy as np
from atom.api import Atom, Bool, Float, List, Str, Typed
from scipy.linalg import block_diag

from ..errors import (ConfigurationError, ConformalityError,
                      DecompositionError, GeometryError, WarpPositivityError)
from .connection import lie_bracket
from .core import (ChartManifold, Point, ScalarField, as_coords,
                   metric_projector, scale_of)
from .fields import FieldLibrary
from .residuals import ResidualReport, norm
from .submersion import (SmoothMap, SubmersionContext, conformal_A_formula,
                         dilation, mean_curvature, oneill_A, oneill_T,
                         vertical_gradient)
from .warped import WarpedProduct, build_warped_product, check_warp, lift

logger = logging.getLogger(__name__)

#: Residual above which the structural decomposition of the product map is
#: considered broken.
DECOMPOSITION_TOL = 1e-8


class ConformalWarpedSubmersion(Atom):
    """Product of two conformal submersions between warped products.

    """
    #: First factor submersion phi1: M1 -> N1.
    phi1 = Typed(SubmersionContext)

    #: Second factor submersion phi2: M2 -> N2.
    phi2 = Typed(SubmersionContext)

    #: Dilation of phi1, a field on M1.
    lambda1 = Typed(ScalarField)

    #: Dilation of phi2, a field on M2.
    lambda2 = Typed(ScalarField)

    #: Source warped product M1 x_f M2.
    source = Typed(WarpedProduct)

    #: Target warped product N1 x_rho N2.
    target = Typed(WarpedProduct)

    #: The product map phi1 x phi2.
    product_map = Typed(SmoothMap)

    #: Splitting machinery of the product map.
    context = Typed(SubmersionContext)

    #: Human readable name used in diagnostics.
    name = Str()

    @property
    def f(self):
        return self.source.warp

    @property
    def rho(self):
        return self.target.warp

    @property
    def conf_tol(self):
        return self.context.conf_tol

    def ratios(self, p):
        """The two candidate squared dilations (r1, r2) at p.

        """
        p1, p2 = self.source.split(as_coords(p))
        r1 = self.lambda1(p1)**2
        rho = self.target.warp_at(self.phi1.map(p1))
        r2 = rho**2 * self.lambda2(p2)**2 / self.source.warp_at(p1)**2
        return r1, r2

    def lambda_sq_at(self, p):
        """Squared lifted dilation at p.

        Raises ConformalityError where the product map is not conformal.

        """
        coords = as_coords(p)
        r1, r2 = self.ratios(coords)
        if abs(r1 / r2 - 1.0) > self.conf_tol:
            raise ConformalityError(coords, r1 / r2, self.conf_tol)
        return r1

    @property
    def lifted_lambda(self):
        """The lifted dilation as a scalar field on the source.

        """
        return ScalarField(evaluator=lambda x: np.sqrt(self.lambda_sq_at(x)),
                           name='lambda')


class CompatibilityEntry(Atom):
    """Compatibility of the factor dilations at one point.

    """
    #: Point of the source.
    point = Typed(Point)

    #: lambda1^2(p1).
    r1 = Float()

    #: rho^2(phi1(p1)) lambda2^2(p2) / f^2(p1).
    r2 = Float()

    #: Whether |r1 / r2 - 1| <= conf_tol.
    conformal_here = Bool()

    #: Squared dilation estimated from the product map.
    lambda_sq = Float()

    #: Anisotropy estimated from the product map.
    anisotropy = Float()


class CompatibilityReport(Atom):
    """Compatibility entries over a sample.

    """
    #: One entry per sampled point.
    entries = List(Typed(CompatibilityEntry))

    @property
    def verdict(self):
        return bool(self.entries) and all(e.conformal_here
                                          for e in self.entries)

    @property
    def n_conformal(self):
        return sum(1 for e in self.entries if e.conformal_here)


def build_product_submersion(phi1, lambda1, phi2, lambda2, f, rho,
                             samples=(), rank_tol=1e-8, conf_tol=1e-6,
                             name=''):
    """Build phi1 x phi2 between M1 x_f M2 and N1 x_rho N2.

    phi1 and phi2 are SmoothMaps or SubmersionContexts. The positivity of
    the warps and dilations, the rank of the factors and the decomposition
    of the vertical and horizontal spaces of the product are checked at the
    sampled source points.

    """
    ctx1, ctx2 = (phi if isinstance(phi, SubmersionContext) else
                  SubmersionContext(map=phi, rank_tol=rank_tol,
                                    conf_tol=conf_tol)
                  for phi in (phi1, phi2))
    m1 = ctx1.source.dim
    source = build_warped_product(ctx1.source, ctx2.source, f)
    target = build_warped_product(ctx1.target, ctx2.target, rho)

    def mapping(x):
        return np.concatenate((ctx1.map(x[:m1]), ctx2.map(x[m1:])))

    def jacobian(x):
        return block_diag(ctx1.map.jacobian(x[:m1]),
                          ctx2.map.jacobian(x[m1:]))

    product = SmoothMap(source=source.ambient, target=target.ambient,
                        mapping=mapping, jacobian_fn=jacobian,
                        engine=ctx1.map.engine,
                        name=f'{ctx1.map.name} x {ctx2.map.name}')
    cws = ConformalWarpedSubmersion(
        phi1=ctx1, phi2=ctx2, lambda1=lambda1, lambda2=lambda2,
        source=source, target=target, product_map=product,
        context=SubmersionContext(map=product, rank_tol=rank_tol,
                                  conf_tol=conf_tol),
        name=name)
    check_product_submersion(cws, samples)
    return cws


def check_product_submersion(cws, samples):
    """Check the positivity, rank and decomposition invariants at samples.

    Raise WarpPositivityError when f, rho o phi1 or a dilation is not
    strictly positive, RankError when a factor map drops rank and
    DecompositionError when the vertical and horizontal spaces of the
    product are not the products of those of the factors.

    """
    m1 = cws.source.first.dim
    samples = [as_coords(p) for p in samples]
    for p in samples:
        p1, p2 = p[:m1], p[m1:]
        for field, at in ((cws.lambda1, p1), (cws.lambda2, p2)):
            value = field(at)
            if not value > 0:
                raise WarpPositivityError(field.name or 'field', value, at)
    check_warp(cws.source.first, cws.f, [p[:m1] for p in samples])
    check_warp(cws.target.first, cws.rho,
               [cws.phi1.map(p[:m1]) for p in samples])
    for p in samples:
        residuals = decomposition_residuals(cws, p)
        broken = {k: v for k, v in residuals.items() if v > DECOMPOSITION_TOL}
        if broken:
            raise DecompositionError(
                f'Product map {cws.product_map.name} at {p.tolist()}: '
                f'{broken}')
    logger.debug('Checked %s on %d samples', cws.name or cws.product_map.name,
                 len(samples))


def decomposition_residuals(cws, p):
    """Structural invariants of the product map at p.

    - jacobian-blocks: largest off diagonal Jacobian entry (exactly zero),
    - kernel-dimension: |dim ker phi - dim ker phi1 - dim ker phi2|,
    - vertical-sum / horizontal-sum: distance between the projectors of the
      product and those of the padded factor spaces.

    """
    W = cws.source
    coords = W.ambient.check_point(p)
    p1, p2 = W.split(coords)
    b1, b2 = W.first_block, W.second_block
    s = cws.context.split_at(coords)
    s1, s2 = cws.phi1.split_at(p1), cws.phi2.split_at(p2)
    jac = s.jacobian
    n1 = cws.target.first.dim
    off = max(float(np.max(np.abs(jac[:n1, b2]), initial=0.0)),
              float(np.max(np.abs(jac[n1:, b1]), initial=0.0)))
    kernel = abs(s.vertical.shape[1] - s1.vertical.shape[1] -
                 s2.vertical.shape[1])

    g = s.metric
    vertical = np.hstack((_padded_basis(W, 'first', s1.vertical),
                          _padded_basis(W, 'second', s2.vertical)))
    horizontal = np.hstack((_padded_basis(W, 'first', s1.horizontal),
                            _padded_basis(W, 'second', s2.horizontal)))
    return {
        'jacobian-blocks': off,
        'kernel-dimension': float(kernel),
        'vertical-sum': float(np.max(np.abs(
            metric_projector(g, vertical) - s.vertical_projector))),
        'horizontal-sum': float(np.max(np.abs(
            metric_projector(g, horizontal) - s.horizontal_projector))),
    }


def compatibility(cws, p):
    """Compare r1, r2 and the dilation estimated from the product map at p.

    """
    coords = as_coords(p)
    r1, r2 = cws.ratios(coords)
    estimate = dilation(cws.context, coords)
    return CompatibilityEntry(point=Point(coords), r1=r1, r2=r2,
                              conformal_here=abs(r1 / r2 - 1.0) <=
                              cws.conf_tol,
                              lambda_sq=estimate.lambda_sq,
                              anisotropy=estimate.anisotropy)


def compatibility_report(cws, samples):
    return CompatibilityReport(entries=[compatibility(cws, p)
                                        for p in samples])


def verify_theorem_item1(cws, engine, samples, seed=0, library=None):
    """A(X1, Y1) against the conformal A formula of phi1.

    X1 and Y1 are horizontal fields of phi1 lifted to the product. Two
    conventions are evaluated for the right hand side:

    - theorem-item1: the formula computed on M1 (gradient of 1 / lambda1^2
      and vertical part taken in M1) and lifted,
    - theorem-item1-ambient-gradient: bracket, gradient and vertical part
      taken in M for the lifted fields and the lifted lambda1.

    theorem-item1-conventions holds the distance between the two right
    hand sides.

    """
    library = library or FieldLibrary()
    rng = np.random.default_rng(seed)
    names = ('theorem-item1', 'theorem-item1-ambient-gradient',
             'theorem-item1-conventions')
    report = ResidualReport()
    for name in names:
        report.entry(name)
    W, ctx, m1 = cws.source, cws.context, cws.source.first.dim
    inverse = ScalarField(evaluator=lambda x: cws.lambda1(x)**-2,
                          name='1/lambda1^2')
    lifted_inverse = lift(W, 'first', inverse).ambient_field
    for p in samples:
        X1, Y1 = library.vector_field(rng, m1), library.vector_field(rng, m1)
        coords = as_coords(p)
        if not _conformal_at(cws, coords, report, names):
            continue
        try:
            p1 = W.split(coords)[0]
            hx = lift(W, 'first', cws.phi1.horizontal_field(X1)).ambient_field
            hy = lift(W, 'first', cws.phi1.horizontal_field(Y1)).ambient_field
            lhs = oneill_A(ctx, engine, hx, hy, coords).components

            factor = conformal_A_formula(cws.phi1, engine, X1, Y1, p1,
                                         cws.lambda1).components
            rhs = W.pad('first', factor)

            bracket = lie_bracket(engine, hx, hy, coords, W.ambient)
            inner = hx(coords) @ ctx.split_at(coords).metric @ hy(coords)
            grad_v = vertical_gradient(ctx, engine, lifted_inverse,
                                       coords).components
            ambient = 0.5 * (ctx.vertical_part(bracket, coords) -
                             cws.lambda1(p1)**2 * inner * grad_v)
        except GeometryError as exc:
            _record_failure(report, names, coords, exc)
            continue
        report.entry('theorem-item1').add(norm(lhs - rhs),
                                          scale_of(lhs, rhs))
        report.entry('theorem-item1-ambient-gradient').add(
            norm(lhs - ambient), scale_of(lhs, ambient))
        report.entry('theorem-item1-conventions').add(
            norm(rhs - ambient), scale_of(rhs, ambient))
    return report


def verify_theorem_item2(cws, engine, samples, seed=0, library=None,
                         tolerance=1e-5):
    """A(X2, Y2) against both forms of the second factor identity.

    The right hand side is

        1/2 {A2(X2, Y2) - A2(Y2, X2)
             - lambda2^2 g2(X2, Y2) grad_V(f^2 / lambda_d^2)}

    with lambda_d = lambda1 (theorem-item2-lambda1) or lambda2
    (theorem-item2-lambda2). A2 is the O'Neill tensor of phi2 on M2, lifted.
    The variants whose residuals stay within tolerance are named in the
    passing-variants note; theorem-item2-variant-gap holds the distance
    between the two right hand sides.

    """
    library = library or FieldLibrary()
    rng = np.random.default_rng(seed)
    variants = ('lambda1', 'lambda2')
    names = tuple(f'theorem-item2-{v}' for v in variants) + \
        ('theorem-item2-variant-gap',)
    report = ResidualReport()
    for name in names:
        report.entry(name)
    W, ctx = cws.source, cws.context
    m1, m2 = W.first.dim, W.second.dim
    quotients = {
        'lambda1': ScalarField(
            evaluator=lambda x: cws.f(x[:m1])**2 / cws.lambda1(x[:m1])**2,
            name='f^2/lambda1^2'),
        'lambda2': ScalarField(
            evaluator=lambda x: cws.f(x[:m1])**2 / cws.lambda2(x[m1:])**2,
            name='f^2/lambda2^2'),
    }
    for p in samples:
        X2, Y2 = library.vector_field(rng, m2), library.vector_field(rng, m2)
        coords = as_coords(p)
        if not _conformal_at(cws, coords, report, names):
            continue
        try:
            p2 = W.split(coords)[1]
            hx2 = cws.phi2.horizontal_field(X2)
            hy2 = cws.phi2.horizontal_field(Y2)
            hx = lift(W, 'second', hx2).ambient_field
            hy = lift(W, 'second', hy2).ambient_field
            lhs = oneill_A(ctx, engine, hx, hy, coords).components

            a_xy = oneill_A(cws.phi2, engine, hx2, hy2, p2).components
            a_yx = oneill_A(cws.phi2, engine, hy2, hx2, p2).components
            g2 = cws.phi2.split_at(p2).metric
            weight = cws.lambda2(p2)**2 * (hx2(p2) @ g2 @ hy2(p2))
            rhs = {}
            for variant in variants:
                grad_v = vertical_gradient(ctx, engine, quotients[variant],
                                           coords).components
                rhs[variant] = 0.5 * (W.pad('second', a_xy - a_yx) -
                                      weight * grad_v)
        except GeometryError as exc:
            _record_failure(report, names, coords, exc)
            continue
        for variant in variants:
            report.entry(f'theorem-item2-{variant}').add(
                norm(lhs - rhs[variant]), scale_of(lhs, rhs[variant]))
        report.entry('theorem-item2-variant-gap').add(
            norm(rhs['lambda1'] - rhs['lambda2']),
            scale_of(rhs['lambda1'], rhs['lambda2']))

    passing = [v for v in variants
               if report[f'theorem-item2-{v}'].n_samples and
               report[f'theorem-item2-{v}'].n_exceeding(tolerance) == 0]
    report.notes['passing-variants'] = ','.join(passing) or 'none'
    logger.info('%s: theorem item 2 variants within %.1e: %s', cws.name,
                tolerance, report.notes['passing-variants'])
    return report


def verify_riemannian_reduction(cws, engine, samples, tolerance=1e-8):
    """With lambda1 = lambda2 = 1 and rho o phi1 = f the product map is a
    Riemannian submersion.

    Raises ConfigurationError when the preconditions fail at a sample.

    """
    W = cws.source
    for p in samples:
        p1, p2 = W.split(as_coords(p))
        l1, l2 = cws.lambda1(p1), cws.lambda2(p2)
        f, rho = cws.f(p1), cws.rho(cws.phi1.map(p1))
        if (abs(l1 - 1) > tolerance or abs(l2 - 1) > tolerance or
                abs(rho - f) > tolerance * scale_of(f, rho)):
            raise ConfigurationError(
                f'{cws.name}: the Riemannian reduction needs unit dilations '
                f'and rho o phi1 = f, got lambda1={l1}, lambda2={l2}, '
                f'f={f}, rho={rho} at {np.asarray(p).tolist()}')

    names = ('riemannian-dilation', 'riemannian-horizontal-lengths')
    report = ResidualReport()
    ctx = cws.context
    for p in samples:
        coords = as_coords(p)
        try:
            estimate = dilation(ctx, coords)
            s = ctx.split_at(coords)
            gn = ctx.target.metric_at(ctx.map(coords))
            pushed = s.jacobian @ s.horizontal
            # the horizontal basis is g-orthonormal
            lengths = np.einsum('ia,ij,ja->a', pushed, gn, pushed)
        except GeometryError as exc:
            _record_failure(report, names, coords, exc)
            continue
        report.entry('riemannian-dilation').add(
            max(abs(estimate.lambda_sq - 1.0), estimate.anisotropy - 1.0))
        report.entry('riemannian-horizontal-lengths').add(
            float(np.max(np.abs(lengths - 1.0), initial=0.0)))
    return report


def rescaled_submersion(cws, factor, name=''):
    """The product map with the source metric multiplied by factor(x).

    """
    M = cws.source.ambient
    rescaled = ChartManifold(M.dim, lambda x: factor(x) * M.raw_metric(x),
                             M.lower, M.upper, name=name or f'{M.name}*')
    product = cws.product_map
    return SubmersionContext(
        map=SmoothMap(source=rescaled, target=product.target,
                      mapping=product.mapping,
                      jacobian_fn=product.jacobian_fn,
                      engine=product.engine, name=product.name),
        rank_tol=cws.context.rank_tol, conf_tol=cws.context.conf_tol)


def verify_rescaling_corollary(cws, engine, samples, offset=0.1):
    """Rescale the source metric to turn the product map Riemannian.

    With lambda = exp(-sigma) the lifted dilation:

    - rescaling-dilation: under lambda^2 g = exp(-2 sigma) g the dilation
      squared is 1,
    - rescaling-literal-factor: under exp(2 sigma) g it is lambda^4,
    - rescaling-perturbation: under exp(-2 (sigma + offset)) g it is
      exp(2 offset),
    - rescaling-uniqueness: the factor exp(2 tau) recovered from the
      unscaled map, tau = ln(lambda_est), matches ln(lambda).

    """
    names = ('rescaling-dilation', 'rescaling-literal-factor',
             'rescaling-perturbation', 'rescaling-uniqueness')
    report = ResidualReport()
    lam_sq = cws.lambda_sq_at
    operative = rescaled_submersion(cws, lam_sq, 'operative')
    literal = rescaled_submersion(cws, lambda x: 1.0 / lam_sq(x), 'literal')
    perturbed = rescaled_submersion(
        cws, lambda x: lam_sq(x) * np.exp(-2 * offset), 'perturbed')
    expected = np.exp(2 * offset)
    for p in samples:
        coords = as_coords(p)
        if not _conformal_at(cws, coords, report, names):
            continue
        try:
            lsq = lam_sq(coords)
            rescaled = dilation(operative, coords).lambda_sq
            literal_sq = dilation(literal, coords).lambda_sq
            perturbed_sq = dilation(perturbed, coords).lambda_sq
            tau = 0.5 * np.log(dilation(cws.context, coords).lambda_sq)
        except GeometryError as exc:
            _record_failure(report, names, coords, exc)
            continue
        report.entry('rescaling-dilation').add(abs(rescaled - 1.0))
        report.entry('rescaling-literal-factor').add(abs(literal_sq - 1.0),
                                                     scale_of(lsq**2))
        report.entry('rescaling-perturbation').add(
            abs(perturbed_sq - expected), expected)
        report.entry('rescaling-uniqueness').add(
            abs(tau - 0.5 * np.log(lsq)), scale_of(np.log(lsq)))

    literal_entry = report['rescaling-literal-factor']
    report.notes['unit-dilation-factor'] = (
        'exp(2 sigma)' if literal_entry.n_samples and
        literal_entry.n_exceeding(1e-8) == 0 else 'exp(-2 sigma)')
    report.notes['perturbation-offset'] = repr(offset)
    return report


def fiber_geometry_checks(cws, engine, samples):
    """Mean curvatures of the two vertical parts and mixed T.

    The vertical space of the product splits into the lifts V1 of ker phi1*
    and V2 of ker phi2*. fiber-H1 and fiber-H2 are the norms of the mean
    curvature vectors of those parts (zero for M_i-minimal fibres),
    fiber-mixed the largest |T(E, F)| for E in V1, F in V2 (zero for mixed
    totally geodesic fibres).

    """
    names = ('fiber-H1', 'fiber-H2', 'fiber-mixed')
    report = ResidualReport()
    W, ctx = cws.source, cws.context
    for p in samples:
        coords = as_coords(p)
        try:
            p1, p2 = W.split(coords)
            v1 = _padded_basis(W, 'first', cws.phi1.split_at(p1).vertical)
            # g2-orthonormal vectors have length f in M
            v2 = _padded_basis(W, 'second', cws.phi2.split_at(p2).vertical,
                               1.0 / W.warp_at(p1))
            h1 = mean_curvature(ctx, engine, coords, v1).components
            h2 = mean_curvature(ctx, engine, coords, v2).components
            mixed = 0.0
            for a in range(v1.shape[1]):
                for b in range(v2.shape[1]):
                    e = ctx.projected_field(v1[:, a])
                    g = ctx.projected_field(v2[:, b])
                    mixed = max(mixed, norm(
                        oneill_T(ctx, engine, e, g, coords).components))
        except GeometryError as exc:
            _record_failure(report, names, coords, exc)
            continue
        report.entry('fiber-H1').add(norm(h1), scale_of(h1))
        report.entry('fiber-H2').add(norm(h2), scale_of(h2))
        report.entry('fiber-mixed').add(mixed)
    return report


# --- Private API -------------------------------------------------------------

def _conformal_at(cws, coords, report, names):
    """Whether the identity applies at coords, recording a skip otherwise.

    """
    try:
        r1, r2 = cws.ratios(coords)
    except GeometryError as exc:
        _record_failure(report, names, coords, exc)
        return False
    if abs(r1 / r2 - 1.0) <= cws.conf_tol:
        return True
    message = (f'{coords.tolist()}: not conformal (r1={r1:.6g}, '
               f'r2={r2:.6g})')
    logger.warning('%s: skipping sample, %s', cws.name, message)
    for name in names:
        report.entry(name).skip(message)
    return False


def _record_failure(report, names, coords, exc):
    logger.warning('Sample %s could not be evaluated: %s', coords.tolist(),
                   exc)
    for name in names:
        report.entry(name).fail(f'{coords.tolist()}: {exc}')


def _padded_basis(W, origin, basis, factor=1.0):
    """Ambient columns of a factor basis, zero on the other block.

    """
    out = np.zeros((W.ambient.dim, basis.shape[1]))
    out[W.block(origin)] = factor * basis
    return out
