# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Execution of several scenarios in worker processes.

"""
import logging
import queue as queues
import traceback
from multiprocessing import Event, Process, Queue

from .config import VerificationConfig
from .report import VerificationReport
from .suite import run_scenario

logger = logging.getLogger(__name__)

#: Seconds between two checks that the workers are still alive.
POLL_INTERVAL = 0.5


class ScenarioWorker(Process):
    """Subprocess running a share of the scenarios.

    Each report is posted on the queue as (index, report dict); the worker
    posts (None, None) once done.

    """
    def __init__(self, jobs, preferences, queue, crashed_event):

        super().__init__(daemon=True)
        self.jobs = jobs
        self.preferences = preferences
        self.queue = queue
        self.crashed_event = crashed_event

    def run(self):
        """Run the scenarios assigned to this worker.

        """
        try:
            config = VerificationConfig()
            config.update(self.preferences)
            for index, scenario_id in self.jobs:
                report = run_scenario(scenario_id, config)
                self.queue.put((index, report.to_dict()))

        except Exception:
            self.crashed_event.set()
            self.queue.put((-1, traceback.format_exc()))

        finally:
            self.queue.put((None, None))


class WorkerCrashedError(RuntimeError):
    """A worker process died while running scenarios.

    """
    pass


def run_scenarios(scenario_ids, config, jobs=1, worker_class=None):
    """Run the scenarios and return their reports in the order of the ids.

    Raise WorkerCrashedError when a worker fails or dies before reporting
    all its scenarios.

    """
    scenario_ids = list(scenario_ids)
    jobs = max(1, min(jobs, len(scenario_ids)))
    if jobs == 1:
        return [run_scenario(s, config) for s in scenario_ids]

    queue = Queue()
    crashed_event = Event()
    shares = [[] for _ in range(jobs)]
    for index, scenario_id in enumerate(scenario_ids):
        shares[index % jobs].append((index, scenario_id))
    preferences = config.get_preferences_from_members()
    worker_class = worker_class or ScenarioWorker
    workers = [worker_class(share, preferences, queue, crashed_event)
               for share in shares]
    for w in workers:
        w.start()
    logger.info('Running %d scenarios in %d processes', len(scenario_ids),
                jobs)

    reports = {}
    errors = []
    running = len(workers)
    while running:
        try:
            index, payload = queue.get(timeout=POLL_INTERVAL)
        except queues.Empty:
            if any(w.is_alive() for w in workers):
                continue
            # Whatever the dead workers posted is already in the pipe.
            try:
                index, payload = queue.get(timeout=POLL_INTERVAL)
            except queues.Empty:
                crashed_event.set()
                codes = [w.exitcode for w in workers]
                errors.append(f'{running} worker(s) exited without '
                              f'reporting (exit codes {codes})')
                break
        if index is None:
            running -= 1
        elif index < 0:
            errors.append(payload)
        else:
            reports[index] = VerificationReport.from_dict(payload)
    for w in workers:
        w.join()

    if crashed_event.is_set():
        raise WorkerCrashedError('\n'.join(errors))
    return [reports[i] for i in range(len(scenario_ids))]
