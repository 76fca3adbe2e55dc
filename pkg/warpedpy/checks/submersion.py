# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Checks of the splitting, dilation and O'Neill tensors of maps.

Every map of the scenario is checked separately, the check ids carry the
name of the map after a colon.

"""
import logging

import numpy as np

from ..errors import GeometryError
from ..geometry import (FieldLibrary, ResidualReport, conformal_A_formula,
                        dilation, mean_curvature, oneill_A, oneill_T,
                        scale_of)
from ..geometry.fields import coefficients
from ..geometry.residuals import norm
from .base_check import BaseCheck

logger = logging.getLogger(__name__)


class DilationCheck(BaseCheck):
    """Splitting invariants, conformality and dilation of every map.

    """
    id = 'dilation'

    provides = ('splitting-sum', 'splitting-orthogonal', 'splitting-kernel',
                'conformality', 'dilation-oracle', 'jacobian-check')

    def run(self, context):
        records = []
        for case in context.setup.maps:
            records.extend(self._run_map(context, case))
        return records

    # --- Private API ---------------------------------------------------------

    def _run_map(self, context, case):
        ctx = case.context
        dim = ctx.source.dim
        rng = context.rng()
        report = ResidualReport()
        names = [f'{n}:{case.name}' for n in self.provides]
        for p in context.samples:
            q = case.restrict(p)
            v = coefficients(rng, dim)
            try:
                s = ctx.split_at(q)
                vv = s.vertical_projector @ v
                hv = s.horizontal_projector @ v
                report.entry(names[0]).add(norm(v - vv - hv), scale_of(v))
                report.entry(names[1]).add(abs(vv @ s.metric @ hv),
                                           scale_of(vv, hv))
                report.entry(names[2]).add(norm(s.jacobian @ vv),
                                           scale_of(s.jacobian, v))

                estimate = dilation(ctx, q)
                report.entry(names[3]).add(estimate.anisotropy - 1.0)
                if case.dilation is not None:
                    expected = case.dilation(q)**2
                    report.entry(names[4]).add(
                        abs(estimate.lambda_sq - expected), expected)
                if case.analytic:
                    analytic = ctx.map.jacobian(q)
                    numeric = ctx.map.fd_jacobian(q)
                    report.entry(names[5]).add(
                        float(np.max(np.abs(analytic - numeric))),
                        scale_of(analytic, numeric))
            except GeometryError as exc:
                logger.warning('%s skipped at %s: %s', case.name, q, exc)
                for name in names:
                    report.entry(name).fail(f'{np.asarray(q).tolist()}: '
                                            f'{exc}')

        oracle = 'oracle' if case.analytic else 'oracle_fd'
        records = [
            self.record(context, report.entry(names[0]), 'splitting'),
            self.record(context, report.entry(names[1]), 'splitting'),
            self.record(context, report.entry(names[2]), 'splitting'),
            self.record(context, report.entry(names[3]), oracle,
                        kind='check' if case.conformal else 'expected_fail'),
        ]
        if case.dilation is not None and case.conformal:
            records.append(self.record(context, report.entry(names[4]),
                                       oracle))
        if case.analytic:
            records.append(self.record(context, report.entry(names[5]),
                                       'engine'))
        return records


class ONeillCheck(BaseCheck):
    """O'Neill tensors of the conformal maps of the scenario.

    - oneill-conformal-a: A against the conformal A formula on library fields,
    - oneill-extension: A and the formula do not depend on the extension of
      horizontal vectors to fields,
    - oneill-antisymmetry: A_X Y = -A_Y X on Riemannian maps,
    - oneill-umbilic: T_U W = g(U, W) H for maps with umbilical fibres.

    """
    id = 'oneill'

    provides = ('oneill-conformal-a', 'oneill-extension', 'oneill-antisymmetry',
                'oneill-umbilic')

    def run(self, context):
        records = []
        for case in context.setup.maps:
            if case.conformal:
                records.extend(self._run_map(context, case))
        return records

    # --- Private API ---------------------------------------------------------

    def _run_map(self, context, case):
        ctx, engine = case.context, context.engine
        dim = ctx.source.dim
        library = FieldLibrary()
        rng = context.rng()
        report = ResidualReport()
        names = [f'{n}:{case.name}' for n in self.provides]
        if not case.riemannian:
            names[2] = None
        if not case.umbilic_fibers:
            names[3] = None
        for p in context.samples:
            q = np.asarray(case.restrict(p), dtype=float)
            X, Y = library.vector_field(rng, dim), library.vector_field(rng, dim)
            x, y = coefficients(rng, dim), coefficients(rng, dim)
            mx = rng.uniform(-0.5, 0.5, size=(dim, dim))
            my = rng.uniform(-0.5, 0.5, size=(dim, dim))
            u, w = coefficients(rng, dim), coefficients(rng, dim)
            try:
                hx, hy = ctx.horizontal_field(X), ctx.horizontal_field(Y)
                a = oneill_A(ctx, engine, hx, hy, q).components
                formula = conformal_A_formula(ctx, engine, X, Y, q,
                                              case.dilation).components
                report.entry(names[0]).add(norm(a - formula),
                                           scale_of(a, formula))

                extensions = [
                    (ctx.projected_field(x, which='horizontal'),
                     ctx.projected_field(y, which='horizontal')),
                    (ctx.projected_field(x, lambda r: mx @ (r - q),
                                         'horizontal'),
                     ctx.projected_field(y, lambda r: my @ (r - q),
                                         'horizontal'))]
                values = [
                    (oneill_A(ctx, engine, e, f, q).components,
                     conformal_A_formula(ctx, engine, e, f, q,
                                         case.dilation).components)
                    for e, f in extensions]
                (a1, c1), (a2, c2) = values
                report.entry(names[1]).add(
                    max(norm(a1 - a2), norm(c1 - c2)),
                    scale_of(a1, a2, c1, c2))

                if names[2]:
                    ayx = oneill_A(ctx, engine, hy, hx, q).components
                    report.entry(names[2]).add(norm(a + ayx),
                                               scale_of(a, ayx))

                if names[3]:
                    self._umbilic_at(ctx, engine, q, u, w,
                                     report.entry(names[3]))
            except GeometryError as exc:
                logger.warning('%s skipped at %s: %s', case.name, q, exc)
                for name in filter(None, names):
                    report.entry(name).fail(f'{q.tolist()}: {exc}')

        classes = ('oneill', 'oneill', 'oneill', 'umbilic')
        return [self.record(context, report.entry(name), cls)
                for name, cls in zip(names, classes) if name]

    def _umbilic_at(self, ctx, engine, q, u, w, entry):
        """Compare T_U W with g(U, W) H for vertical U and W.

        """
        s = ctx.split_at(q)
        k = s.vertical.shape[1]
        if k == 0:
            entry.skip(f'{q.tolist()}: no vertical space')
            return
        u = s.vertical_projector @ u
        w = s.vertical_projector @ w
        h = mean_curvature(ctx, engine, q).components
        t = oneill_T(ctx, engine, ctx.projected_field(u),
                     ctx.projected_field(w), q).components
        expected = (u @ s.metric @ w) * h
        entry.add(norm(t - expected), scale_of(t, expected))
