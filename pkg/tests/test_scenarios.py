# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of the scenario catalog and of the check suites.

"""
import numpy as np
import pytest

from warpedpy.checks import CHECKS, BaseCheck, CheckContext
from warpedpy.checks import conformal_warped as conformal_checks
from warpedpy.errors import (ConfigurationError, RankError,
                             UnknownScenarioError, WarpPositivityError)
from warpedpy.geometry import (ChartManifold, CompatibilityEntry,
                               ResidualEntry, ScalarField, SmoothMap,
                               SubmersionContext, build_warped_product)
from warpedpy.scenarios import (COVERAGE, MapCase, Scenario, ScenarioSetup,
                                get_scenario, list_scenarios, sample_points)
from warpedpy.suite import run_scenario

SCENARIO_IDS = [s.id for s in list_scenarios()]


def test_catalog():
    assert SCENARIO_IDS == ['paper-example-r4', 'paper-example-r4-fd',
                            'warped-line', 'sphere-warped',
                            'cws-constant-dilation', 'cws-incompatible',
                            'cws-riemannian', 'cws-varying-dilation',
                            'cws-r4-lift']
    for scenario in list_scenarios():
        assert set(scenario.suites) <= set(CHECKS)


def test_unknown_scenario():
    with pytest.raises(UnknownScenarioError):
        get_scenario('nonexistent')


def test_every_identity_is_covered():
    provided = set()
    for check in CHECKS.values():
        provided.update(check.provides)
    for identity, checks in COVERAGE.items():
        assert set(checks) <= provided, identity


def test_sampling_is_deterministic():
    box = ([0.0, -1.0], [1.0, 1.0])
    a = sample_points(box, 10, seed=3, margin=0.1)
    np.testing.assert_array_equal(a, sample_points(box, 10, seed=3,
                                                   margin=0.1))
    assert np.all(a[:, 0] >= 0.1) and np.all(a[:, 0] <= 0.9)


@pytest.mark.parametrize('box, n', [(([0.0], [0.0]), 3),
                                    (([0.0], [np.inf]), 3),
                                    (([0.0], [1.0]), 0)])
def test_degenerate_sampling(box, n):
    with pytest.raises(ConfigurationError):
        sample_points(box, n, seed=0)


def test_box_overrides(config):
    scenario = get_scenario('sphere-warped')
    config.scenario_params = {'sphere-warped': {'lower': [1.0, 1.0],
                                                'upper': [2.0, 2.0],
                                                'samples': 3}}
    lower, upper = scenario.box(config)
    assert lower.tolist() == [1.0, 1.0]
    assert scenario.n_samples(config) == 3


def test_box_outside_the_domain(config):
    config.scenario_params = {'sphere-warped': {'lower': [-1.0, 1.0],
                                                'upper': [2.0, 2.0]}}
    with pytest.raises(ConfigurationError):
        get_scenario('sphere-warped').build(config)


@pytest.mark.parametrize('scenario_id', SCENARIO_IDS)
def test_every_scenario_passes(scenario_id, config):
    config.samples = 4
    report = run_scenario(scenario_id, config)
    failed = [r.check for r in report.records
              if r.kind != 'informational' and not r.passed]
    assert not failed
    assert report.passed


def test_incompatible_scenario_fails_as_expected(config):
    config.samples = 4
    report = run_scenario('cws-incompatible', config)
    ratio = report.record('compatibility-ratio')
    assert ratio.kind == 'expected_fail'
    assert ratio.n_failed == 4
    assert ratio.passed
    assert report.record('compatibility-dilation').kind == 'informational'


def test_varying_dilation_adjudication(config):
    config.samples = 6
    report = run_scenario('cws-varying-dilation', config)
    adjudication = report.record('theorem-item2-adjudication')
    assert adjudication.notes['passing-variants'] == 'lambda2'
    assert adjudication.passed
    assert report.record('theorem-item2-discrimination').passed
    assert '(decision)' in report.notes['lifted-dilation']


def test_runs_are_reproducible(config):
    config.samples = 3
    first = run_scenario('cws-constant-dilation', config).to_dict()
    second = run_scenario('cws-constant-dilation', config).to_dict()
    assert first == second


def context(config, expected_fail=()):
    scenario = Scenario(id='test', expected_fail=list(expected_fail))
    return CheckContext(scenario=scenario, config=config)


def entry(residuals, scale=1.0):
    e = ResidualEntry(name='sample-check')
    for r in residuals:
        e.add(r, scale)
    return e


def test_check_record(config):
    record = BaseCheck().record(context(config), entry([1e-9, 2e-9]),
                                'oracle')
    assert record.passed
    assert record.tolerance == pytest.approx(1e-8)
    record = BaseCheck().record(context(config), entry([1e-9, 1e-3]),
                                'oracle')
    assert not record.passed
    assert record.n_failed == 1


def test_nan_residuals_fail(config):
    record = BaseCheck().record(context(config), entry([np.nan]), 'oracle')
    assert not record.passed


def test_expected_failure_record(config):
    ctx = context(config, ['sample-check'])
    record = BaseCheck().record(ctx, entry([1.0] * 10), 'oracle')
    assert record.kind == 'expected_fail'
    assert record.passed
    record = BaseCheck().record(ctx, entry([1.0] * 5 + [0.0] * 5), 'oracle')
    assert not record.passed


def test_record_without_samples_is_informational(config):
    e = entry([])
    e.skip('not conformal')
    record = BaseCheck().record(context(config), e, 'oracle')
    assert record.kind == 'informational'
    assert record.n_skipped == 1
    assert record.notes['status'] == 'no applicable sample'


def test_evaluation_errors_count_as_failures(config):
    e = entry([0.0])
    e.fail('rank deficient')
    record = BaseCheck().record(context(config), e, 'oracle')
    assert record.n_failed == 1
    assert not record.passed
    assert record.notes['first-error'] == 'rank deficient'


def test_list_scenarios_filter():
    assert list_scenarios('') == list_scenarios(None) == list_scenarios()
    assert [s.id for s in list_scenarios('paper-example')] == [
        'paper-example-r4', 'paper-example-r4-fd']
    assert [s.id for s in list_scenarios('riemannian-reduction')] == [
        'cws-riemannian']
    assert len(list_scenarios('cws-')) == 5
    assert list_scenarios('nothing-matches') == []


def negative_warp(config):
    """R x_t R sampled where t < 0.

    """
    warp = ScalarField(evaluator=lambda x: x[0], name='t')
    W = build_warped_product(ChartManifold.euclidean(1),
                             ChartManifold.euclidean(1), warp)
    return ScenarioSetup(manifold=W.ambient, warped=W)


def collapsing_map(config):
    """(x, y) -> (x, x), of rank one everywhere.

    """
    R2 = ChartManifold.euclidean(2)
    F = SmoothMap(source=R2, target=ChartManifold.euclidean(2),
                  mapping=lambda x: np.array([x[0], x[0]]),
                  jacobian_fn=lambda x: np.array([[1.0, 0.0], [1.0, 0.0]]),
                  engine=config.make_engine(), name='collapse')
    case = MapCase(name='collapse', context=SubmersionContext(map=F))
    return ScenarioSetup(manifold=R2, maps=[case])


def test_non_positive_warp_fails_at_build(config):
    scenario = Scenario(id='negative-warp', builder=negative_warp,
                        lower=[-1.0, -1.0], upper=[-0.1, 1.0],
                        suites=['warped-metric'])
    with pytest.raises(WarpPositivityError):
        scenario.build(config)
    report = run_scenario(scenario, config)
    assert [r.check for r in report.records] == ['scenario-build']
    assert not report.passed


def test_rank_deficient_map_fails_at_build(config):
    scenario = Scenario(id='collapse', builder=collapsing_map,
                        lower=[-1.0, -1.0], upper=[1.0, 1.0],
                        suites=['dilation'])
    with pytest.raises(RankError):
        scenario.build(config)


def test_compatibility_dilation_is_an_absolute_residual(config, monkeypatch):
    scenario = get_scenario('cws-constant-dilation')
    setup = scenario.build(config)
    samples = sample_points(scenario.box(config), 3, seed=0)

    def shifted(lambda_sq):
        def compatibility(cws, p):
            return CompatibilityEntry(r1=4.0, r2=4.0, conformal_here=True,
                                      lambda_sq=lambda_sq, anisotropy=1.0)
        return compatibility

    ctx = CheckContext(scenario=scenario, setup=setup, config=config,
                       engine=config.make_engine(), samples=samples)
    check = CHECKS['compatibility']()

    # 2e-8 on a squared dilation of 4 is within 1e-8 relatively, not
    # absolutely
    monkeypatch.setattr(conformal_checks, 'compatibility', shifted(4 + 2e-8))
    records = {r.check: r for r in check.run(ctx)}
    record = records['compatibility-dilation']
    assert record.max_residual == pytest.approx(2e-8, rel=1e-6)
    assert record.tolerance == pytest.approx(1e-8)
    assert not record.passed

    monkeypatch.setattr(conformal_checks, 'compatibility', shifted(4 + 5e-9))
    records = {r.check: r for r in check.run(ctx)}
    assert records['compatibility-dilation'].passed
