# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Verification reports and their serialization.

JSON document layout (field names are part of the public contract)::

    {
      "version": <package version>,
      "passed": <bool, all scenarios passed>,
      "scenarios": [
        {
          "scenario": <id>,
          "description": <str>,
          "passed": <bool>,
          "config": {<echo of the configuration>},
          "notes": {<str>: <str>},
          "checks": [
            {"check": <id>, "kind": "check" | "expected_fail" |
             "informational", "tolerance_class": <str>, "tolerance": <float
             or null>, "n_samples": <int>, "n_failed": <int>,
             "n_skipped": <int>, "max_residual": <float>,
             "max_normalized": <float>, "passed": <bool>,
             "notes": {<str>: <str>}}
          ]
        }
      ]
    }

Checks are sorted by id so the document does not depend on the order in
which they were run.

"""
import json

from atom.api import Atom, Bool, Dict, Enum, Float, Int, List, Str, Typed, \
    Value

from .preferences import HasPreferences
from .version import __version__


class CheckRecord(HasPreferences):
    """Outcome of one check on one scenario.

    """
    #: Identifier of the check.
    check = Str().tag(pref=True)

    #: How the outcome enters the verdict of the scenario.
    #: - check: passes when no sample exceeds the tolerance
    #: - expected_fail: passes when (almost) every sample exceeds it
    #: - informational: never affects the verdict
    kind = Enum('check', 'expected_fail', 'informational').tag(pref=True)

    #: Tolerance class the tolerance comes from.
    tolerance_class = Str().tag(pref=True)

    #: Effective tolerance, None for informational records without one.
    tolerance = Value().tag(pref=True)

    #: Number of evaluated samples.
    n_samples = Int().tag(pref=True)

    #: Number of samples exceeding the tolerance or failing to evaluate.
    n_failed = Int().tag(pref=True)

    #: Number of samples where the identity does not apply.
    n_skipped = Int().tag(pref=True)

    #: Largest residual.
    max_residual = Float().tag(pref=True)

    #: Largest residual divided by the scale of its sample.
    max_normalized = Float().tag(pref=True)

    #: Verdict of the check.
    passed = Bool().tag(pref=True)

    #: Additional information (adjudications, conventions...).
    notes = Dict(Str(), Str()).tag(pref=True)

    def to_dict(self):
        return self.get_preferences_from_members()

    @classmethod
    def from_dict(cls, values):
        return cls(**values)


class VerificationReport(Atom):
    """Outcome of all the checks run on a scenario.

    """
    #: Identifier of the scenario.
    scenario = Str()

    #: Description of the scenario.
    description = Str()

    #: Records of the checks.
    records = List(Typed(CheckRecord))

    #: Echo of the configuration used.
    config = Dict()

    #: Notes about the scenario as a whole.
    notes = Dict(Str(), Str())

    @property
    def passed(self):
        return all(r.passed for r in self.records
                   if r.kind != 'informational')

    def record(self, check):
        for r in self.records:
            if r.check == check:
                return r
        raise KeyError(check)

    def to_dict(self):
        return {'scenario': self.scenario,
                'description': self.description,
                'passed': self.passed,
                'config': dict(self.config),
                'notes': dict(self.notes),
                'checks': [r.to_dict() for r in
                           sorted(self.records, key=lambda r: r.check)]}

    @classmethod
    def from_dict(cls, values):
        return cls(scenario=values['scenario'],
                   description=values['description'],
                   config=values['config'], notes=values['notes'],
                   records=[CheckRecord.from_dict(c)
                            for c in values['checks']])

    def to_text(self):
        """Human readable summary.

        """
        lines = [f'{self.scenario}: {"PASS" if self.passed else "FAIL"}']
        for r in sorted(self.records, key=lambda r: r.check):
            status = ('info' if r.kind == 'informational' else
                      'pass' if r.passed else 'FAIL')
            tol = '-' if r.tolerance is None else f'{r.tolerance:.1e}'
            line = (f'  [{status:4}] {r.check:<44} max {r.max_residual:.3e}'
                    f'  tol {tol}  n={r.n_samples}')
            if r.n_failed:
                line += f' failed={r.n_failed}'
            if r.n_skipped:
                line += f' skipped={r.n_skipped}'
            if r.kind == 'expected_fail':
                line += ' (expected failure)'
            lines.append(line)
            for key in sorted(r.notes):
                lines.append(f'         {key}: {r.notes[key]}')
        for key in sorted(self.notes):
            lines.append(f'  {key}: {self.notes[key]}')
        return '\n'.join(lines)


def to_json(reports):
    """Serialize reports into the JSON document described above.

    """
    document = {'version': __version__,
                'passed': all(r.passed for r in reports),
                'scenarios': [r.to_dict() for r in reports]}
    return json.dumps(document, indent=2, sort_keys=True)


def from_json(text):
    """Reports stored in a JSON document.

    """
    return [VerificationReport.from_dict(s)
            for s in json.loads(text)['scenarios']]


def to_text(reports):
    verdict = 'PASS' if all(r.passed for r in reports) else 'FAIL'
    return '\n\n'.join([r.to_text() for r in reports] +
                       [f'overall: {verdict}'])

