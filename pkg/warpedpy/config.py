# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Configuration of a verification run.

Defaults ship with the package in default_config.json. A user file only
needs to contain the values it changes; command line flags take precedence
over both.

"""
import json
import logging
import os

from atom.api import Dict, Enum, Float, Int, Str

from .errors import ConfigurationError
from .geometry.diff import DiffEngine
from .preferences import HasPreferences

logger = logging.getLogger(__name__)

#: Path of the configuration shipped with the package.
DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__),
                                   'default_config.json')

#: Keys accepted in the per scenario parameters.
SCENARIO_PARAMS = ('samples', 'lower', 'upper')


class VerificationConfig(HasPreferences):
    """Parameters shared by every check of a run.

    """
    #: Finite difference scheme.
    scheme = Enum('central2', 'central4', 'richardson').tag(pref=True)

    #: Nominal finite difference step.
    fd_step = Float(1e-5).tag(pref=True)

    #: Seed of the point sampling and of the test field draws.
    seed = Int(42).tag(pref=True)

    #: Number of sampled points per scenario.
    samples = Int(25).tag(pref=True)

    #: Factor applied to every tolerance.
    tolerance_scale = Float(1.0).tag(pref=True)

    #: Smallest eigenvalue accepted for a metric.
    spd_floor = Float(1e-10).tag(pref=True)

    #: Relative singular value threshold used to compute Jacobian ranks.
    rank_tol = Float(1e-8).tag(pref=True)

    #: Tolerance on anisotropy - 1 (and on r1 / r2 - 1) for conformality.
    conf_tol = Float(1e-6).tag(pref=True)

    #: Tolerance used when comparing analytic derivatives with finite
    #: differences.
    fd_check_tol = Float(1e-5).tag(pref=True)

    #: Fraction of failing samples above which an expected failure passes.
    expected_fail_fraction = Float(0.9).tag(pref=True)

    #: Tolerance of every tolerance class.
    tolerances = Dict(Str(), Float()).tag(pref=True)

    #: Per scenario overrides of the number of samples and of the sample box.
    scenario_params = Dict(Str(), Dict()).tag(pref=True)

    @classmethod
    def load(cls, path=None, **overrides):
        """Load the defaults, then the user file at path, then overrides.

        Overrides whose value is None are ignored.

        """
        config = cls()
        config.update(_read(DEFAULT_CONFIG_PATH))
        if path:
            config.update(_read(path))
        config.update({k: v for k, v in overrides.items() if v is not None})
        config.validate()
        return config

    def update(self, values):
        """Set preferences from a dict, rejecting unknown keys.

        Tolerances are merged into the current table.

        """
        prefs = self.get_preferences_from_members()
        unknown = sorted(set(values) - set(prefs))
        if unknown:
            raise ConfigurationError(f'Unknown configuration keys: {unknown}')
        for name, value in values.items():
            if name == 'tolerances':
                value = dict(self.tolerances, **value)
            try:
                setattr(self, name, value)
            except (TypeError, ValueError) as exc:
                raise ConfigurationError(
                    f'Invalid value {value!r} for {name}: {exc}') from exc

    def validate(self):
        """Check the consistency of the parameters.

        """
        if self.samples < 1:
            raise ConfigurationError(f'samples must be positive, not '
                                     f'{self.samples}')
        for name in ('fd_step', 'tolerance_scale', 'rank_tol', 'conf_tol',
                     'fd_check_tol', 'spd_floor'):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f'{name} must be positive, not '
                                         f'{getattr(self, name)}')
        if not 0 < self.expected_fail_fraction <= 1:
            raise ConfigurationError('expected_fail_fraction must lie in '
                                     '(0, 1]')
        negative = {k: v for k, v in self.tolerances.items() if v < 0}
        if negative:
            raise ConfigurationError(f'Negative tolerances: {negative}')
        for scenario, params in self.scenario_params.items():
            unknown = sorted(set(params) - set(SCENARIO_PARAMS))
            if unknown:
                raise ConfigurationError(f'Unknown parameters {unknown} for '
                                         f'scenario {scenario}')

    def save(self, path):
        """Save the preferences to a JSON file.

        """
        with open(path, 'w') as f:
            json.dump(self.get_preferences_from_members(), f, indent=4,
                      sort_keys=True)
        logger.info('Configuration saved to %s', path)

    def tolerance(self, kind):
        """Effective tolerance of a tolerance class.

        """
        try:
            return self.tolerances[kind] * self.tolerance_scale
        except KeyError:
            raise ConfigurationError(f'Unknown tolerance class {kind!r}')

    def make_engine(self):
        """Differentiation engine matching the configuration.

        """
        return DiffEngine(scheme=self.scheme, step=self.fd_step,
                          fd_check_tol=self.fd_check_tol)

    def echo(self):
        """Parameters reproduced in the reports.

        """
        prefs = self.get_preferences_from_members()
        del prefs['scenario_params']
        return prefs


# --- Private API -------------------------------------------------------------

def _read(path):
    try:
        with open(path) as f:
            values = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationError(f'Cannot read configuration {path}: '
                                 f'{exc}') from exc
    if not isinstance(values, dict):
        raise ConfigurationError(f'Configuration {path} must hold an object')
    return values
