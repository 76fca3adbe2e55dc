# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Execution of the check suites of a scenario.

"""
import logging
import time

from .checks import CHECKS, CheckContext
from .errors import ConfigurationError, GeometryError
from .report import CheckRecord, VerificationReport
from .scenarios import get_scenario, sample_points

logger = logging.getLogger(__name__)

#: Conventions used by the conformal warped product suites, echoed in the
#: reports.
LIFTED_DILATION_NOTES = {
    'lifted-dilation': 'lambda^2 = lambda1^2(p1) where it equals '
                       'rho^2(phi1(p1)) lambda2^2(p2) / f^2(p1), undefined '
                       'elsewhere (decision)',
    'theorem-item1-gradient': 'vertical gradient of 1 / lambda1^2 taken on '
                              'M1 and lifted, the ambient convention is '
                              'reported alongside',
}


def run_scenario(scenario, config):
    """Run every suite of a scenario and collect the records in a report.

    scenario is a Scenario or the id of one. Failing to build the scenario
    yields a report with a single failed scenario-build record.

    """
    if isinstance(scenario, str):
        scenario = get_scenario(scenario)
    engine = config.make_engine()
    report = VerificationReport(scenario=scenario.id,
                                description=scenario.description,
                                config=config.echo())
    start = time.perf_counter()
    try:
        setup = scenario.build(config)
    except GeometryError as exc:
        logger.error('Cannot build %s: %s', scenario.id, exc)
        report.records = [CheckRecord(check='scenario-build', passed=False,
                                      n_failed=1,
                                      notes={'error': str(exc)})]
        return report

    if setup.cws is not None:
        report.notes.update(LIFTED_DILATION_NOTES)
    margin = 4 * config.fd_step * engine.reach
    samples = sample_points(scenario.box(config),
                            scenario.n_samples(config), config.seed, margin)
    context = CheckContext(scenario=scenario, setup=setup, config=config,
                           engine=engine, samples=samples, seed=config.seed)
    records = []
    for suite in scenario.suites:
        try:
            check = CHECKS[suite]()
        except KeyError:
            raise ConfigurationError(f'Scenario {scenario.id} lists the '
                                     f'unknown suite {suite!r}')
        logger.debug('%s: running %s', scenario.id, suite)
        records.extend(check.run(context))
    report.records = records

    elapsed = time.perf_counter() - start
    logger.info('%s: %s (%d checks, %.1f s)', scenario.id,
                'pass' if report.passed else 'FAIL', len(records), elapsed)
    return report
