# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Tests of the multi process runner.

"""
import os

import pytest

from warpedpy.report import to_json
from warpedpy.runner import ScenarioWorker, WorkerCrashedError, run_scenarios

IDS = ['warped-line', 'cws-constant-dilation', 'cws-incompatible']


def test_parallel_run_matches_sequential_run(config):
    config.samples = 2
    sequential = run_scenarios(IDS, config, jobs=1)
    parallel = run_scenarios(IDS, config, jobs=2)
    assert [r.scenario for r in parallel] == IDS
    assert to_json(parallel) == to_json(sequential)


def test_jobs_are_capped_by_the_number_of_scenarios(config):
    config.samples = 2
    reports = run_scenarios(['warped-line'], config, jobs=4)
    assert len(reports) == 1
    assert reports[0].passed


class VanishingWorker(ScenarioWorker):
    """Worker killed before it can report anything.

    """
    def run(self):
        os._exit(3)


def test_dead_workers_are_detected(config):
    config.samples = 2
    with pytest.raises(WorkerCrashedError) as info:
        run_scenarios(IDS, config, jobs=2, worker_class=VanishingWorker)
    assert 'exit codes [3, 3]' in str(info.value)
