# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Checks of warped product metrics, connections and submanifolds.

"""
from ..geometry import (FieldLibrary, verify_warped_corollary,
                        verify_warped_lemma, verify_warped_metric)
from .base_check import BaseCheck


class WarpedMetricCheck(BaseCheck):
    """Block structure of the warped metric.

    """
    id = 'warped-metric'

    provides = ('metric-cross-blocks', 'metric-restrictions')

    def run(self, context):
        report = verify_warped_metric(context.setup.warped, context.samples)
        return [self.record(context, report.entry('metric-cross-blocks'),
                            'exact'),
                self.record(context, report.entry('metric-restrictions'),
                            'restriction')]


class WarpedLemmaCheck(BaseCheck):
    """The four connection identities of warped products.

    """
    id = 'warped-lemma'

    provides = ('lemma-item1', 'lemma-item2', 'lemma-item3', 'lemma-item4')

    def run(self, context):
        report = verify_warped_lemma(context.setup.warped, context.engine,
                                     context.samples, context.seed,
                                     FieldLibrary())
        return [self.record(context, report.entry(name), 'lemma')
                for name in self.provides]


class WarpedCorollaryCheck(BaseCheck):
    """Totally geodesic leaves and totally umbilical fibres.

    """
    id = 'warped-corollary'

    provides = ('leaf-totally-geodesic', 'fiber-totally-umbilical',
                'fiber-mean-curvature')

    def run(self, context):
        report = verify_warped_corollary(context.setup.warped,
                                         context.engine, context.samples)
        return [self.record(context, report.entry('leaf-totally-geodesic'),
                            'leaf'),
                self.record(context, report.entry('fiber-totally-umbilical'),
                            'umbilic'),
                self.record(context, report.entry('fiber-mean-curvature'),
                            'umbilic')]
