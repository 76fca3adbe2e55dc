# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Exceptions raised by the geometry engine and the verification tooling.

"""
import numpy as np


class GeometryError(Exception):
    """Base class for all errors raised while evaluating geometric objects.

    """
    pass


class DomainError(GeometryError, ValueError):
    """A point lies outside the open box of a chart.

    """
    def __init__(self, coords, lower, upper):
        self.coords = np.asarray(coords, dtype=float)
        self.lower = lower
        self.upper = upper
        super().__init__(f'Point {self.coords.tolist()} lies outside the '
                         f'open box {np.asarray(lower).tolist()} - '
                         f'{np.asarray(upper).tolist()}')


class DegenerateMetricError(GeometryError):
    """The metric is not symmetric positive definite at a point.

    """
    def __init__(self, coords, smallest_eigenvalue, reason=''):
        self.coords = np.asarray(coords, dtype=float)
        self.smallest_eigenvalue = float(smallest_eigenvalue)
        msg = (f'Degenerate metric at {self.coords.tolist()}: smallest '
               f'eigenvalue {self.smallest_eigenvalue:.3e}')
        if reason:
            msg += f' ({reason})'
        super().__init__(msg)


class StencilError(GeometryError):
    """A finite difference stencil cannot fit in the chart domain.

    """
    def __init__(self, coords, axis, distance):
        self.coords = np.asarray(coords, dtype=float)
        self.axis = axis
        self.distance = distance
        super().__init__(f'No stencil fits along axis {axis} at '
                         f'{self.coords.tolist()}: only {distance:.3e} to '
                         'the domain boundary')


class GradientMismatchError(GeometryError):
    """An analytic derivative disagrees with its finite difference estimate.

    """
    def __init__(self, what, discrepancy, tolerance):
        self.discrepancy = float(discrepancy)
        self.tolerance = float(tolerance)
        super().__init__(f'Analytic {what} differs from the finite '
                         f'difference estimate by {self.discrepancy:.3e} '
                         f'(tolerance {self.tolerance:.1e})')


class WarpPositivityError(GeometryError):
    """A warping function or a dilation is not strictly positive.

    """
    def __init__(self, name, value, coords):
        self.value = float(value)
        self.coords = np.asarray(coords, dtype=float)
        super().__init__(f'{name} must be strictly positive but is '
                         f'{self.value:.3e} at {self.coords.tolist()}')


class RankError(GeometryError):
    """The differential of a map does not have maximal rank.

    """
    def __init__(self, coords, rank, expected, singular_values):
        self.coords = np.asarray(coords, dtype=float)
        self.rank = rank
        self.expected = expected
        self.singular_values = np.asarray(singular_values)
        super().__init__(f'Jacobian at {self.coords.tolist()} has numerical '
                         f'rank {rank} instead of {expected} (singular '
                         f'values {self.singular_values.tolist()})')


class ConformalityError(GeometryError):
    """A map is not conformal where conformality is required.

    """
    def __init__(self, coords, anisotropy, tolerance):
        self.coords = np.asarray(coords, dtype=float)
        self.anisotropy = float(anisotropy)
        self.tolerance = float(tolerance)
        super().__init__(f'Map is not conformal at {self.coords.tolist()}: '
                         f'anisotropy {self.anisotropy:.6e} exceeds '
                         f'1 + {self.tolerance:.1e}')


class DecompositionError(GeometryError):
    """A structural invariant of a product submersion does not hold.

    """
    pass


class ConfigurationError(ValueError):
    """Invalid configuration or unmet precondition of a verifier.

    """
    pass


class UnknownScenarioError(ConfigurationError):
    """The requested scenario does not exist in the catalog.

    """
    def __init__(self, scenario_id, known):
        self.scenario_id = scenario_id
        super().__init__(f'Unknown scenario {scenario_id!r}. Known '
                         f'scenarios are {list(known)}')
