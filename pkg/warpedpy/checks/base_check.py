# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Base class for all the check suites.

"""
import numpy as np
from atom.api import Atom, Int, Typed

from ..config import VerificationConfig
from ..geometry import DiffEngine
from ..report import CheckRecord
from ..scenarios import Scenario, ScenarioSetup


class CheckContext(Atom):
    """Everything a suite needs to run on a scenario.

    """
    #: Scenario being verified.
    scenario = Typed(Scenario)

    #: Objects built by the scenario.
    setup = Typed(ScenarioSetup)

    #: Configuration of the run.
    config = Typed(VerificationConfig)

    #: Differentiation engine built from the configuration.
    engine = Typed(DiffEngine)

    #: Sampled points, one per row.
    samples = Typed(np.ndarray)

    #: Seed of the test field draws.
    seed = Int()

    def rng(self):
        """Fresh generator, so that every suite draws the same fields
        whatever the suites run before it.

        """
        return np.random.default_rng(self.seed)


class BaseCheck(Atom):
    """Base class for all suites.

    """
    #: Identifier of the suite, used in the scenario definitions.
    id = ''

    #: Prefixes of the check ids the suite produces.
    provides = ()

    def run(self, context):
        """Run the suite and return a list of CheckRecord.

        """
        raise NotImplementedError()

    def record(self, context, entry, tolerance_class='', kind='check',
               check=None, tolerance=None, notes=None):
        """Turn a residual entry into a check record.

        The tolerance is read from the configuration for the given class
        unless given explicitly. Checks listed as expected failures by the
        scenario are recorded as such.

        """
        check = check or entry.name
        if tolerance is None and tolerance_class:
            tolerance = context.config.tolerance(tolerance_class)
        base = check.split(':')[0]
        if kind == 'check' and (check in context.scenario.expected_fail or
                                base in context.scenario.expected_fail):
            kind = 'expected_fail'

        notes = dict(notes or {})
        n_errors = len(entry.failures)
        n_failed = n_errors
        if tolerance is not None:
            n_failed += entry.n_exceeding(tolerance)
        total = entry.n_samples + n_errors
        if entry.failures:
            notes['first-error'] = entry.failures[0]

        if kind != 'informational' and total == 0:
            kind = 'informational'
            notes['status'] = 'no applicable sample'
        if kind == 'check':
            passed = n_failed == 0
        elif kind == 'expected_fail':
            fraction = context.config.expected_fail_fraction
            passed = n_failed >= fraction * total
        else:
            passed = True

        return CheckRecord(check=check, kind=kind,
                           tolerance_class=tolerance_class,
                           tolerance=tolerance, n_samples=entry.n_samples,
                           n_failed=n_failed, n_skipped=len(entry.skipped),
                           max_residual=entry.max_residual,
                           max_normalized=entry.max_normalized,
                           passed=passed, notes=notes)
