# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Finite difference engine backing every derivative in the package.

All derivatives are central differences. Near the boundary of a chart the
step is shrunk so that every stencil point stays strictly inside the open
box of the chart.

"""
import numpy as np
from atom.api import Atom, Enum, Float

from ..errors import DomainError, StencilError

#: Stencils as (offset in units of h, weight in units of 1/h).
STENCILS = {
    'central2': ((-1.0, -0.5), (1.0, 0.5)),
    'central4': ((-2.0, 1/12), (-1.0, -8/12), (1.0, 8/12), (2.0, -1/12)),
    # Richardson extrapolation of the central2 scheme between h and h/2:
    # (4 D(h/2) - D(h)) / 3
    'richardson': ((-1.0, 1/6), (-0.5, -4/3), (0.5, 4/3), (1.0, -1/6)),
}

#: Formal order of accuracy of each scheme.
ORDERS = {'central2': 2, 'central4': 4, 'richardson': 4}


class DiffEngine(Atom):
    """Central finite difference differentiation of arbitrary array fields.

    """
    #: Finite difference scheme.
    scheme = Enum('central2', 'central4', 'richardson')

    #: Nominal step.
    step = Float(1e-5)

    #: Smallest step we accept when shrinking the stencil near a boundary.
    min_step = Float(1e-9)

    #: Tolerance used when comparing analytic derivatives to their finite
    #: difference estimates.
    fd_check_tol = Float(1e-5)

    @property
    def reach(self):
        """Largest stencil offset in units of the step.

        """
        return max(abs(o) for o, _ in STENCILS[self.scheme])

    @property
    def order(self):
        return ORDERS[self.scheme]

    def fit_step(self, room, coords, axis=-1):
        """Largest step not exceeding `step` whose stencil fits in `room`.

        """
        if room <= 0:
            raise StencilError(coords, axis, room)
        reach = self.reach
        if reach * self.step < room:
            return self.step
        h = 0.5 * room / reach
        if h < self.min_step:
            raise StencilError(coords, axis, room)
        return h

    def partial(self, func, coords, axis, lower=None, upper=None):
        """Derivative of func along a coordinate axis.

        func maps a coordinate array to a scalar or an array, the result has
        the same shape as the value of func.

        """
        coords = np.asarray(coords, dtype=float)
        direction = np.zeros_like(coords)
        direction[axis] = 1.0
        room = _room(coords, direction, lower, upper)
        h = self.fit_step(room, coords, axis)
        return self._apply(func, coords, direction, h)

    def derivatives(self, func, coords, lower=None, upper=None):
        """All partial derivatives, stacked along a new leading axis.

        """
        coords = np.asarray(coords, dtype=float)
        return np.stack([self.partial(func, coords, i, lower, upper)
                         for i in range(len(coords))])

    def directional(self, func, coords, direction, lower=None, upper=None):
        """Sum of direction[i] times the partial derivative along axis i.

        Axes along which direction vanishes are not evaluated.

        """
        coords = np.asarray(coords, dtype=float)
        result = None
        for i, c in enumerate(direction):
            if c == 0.0:
                continue
            term = c * self.partial(func, coords, i, lower, upper)
            result = term if result is None else result + term
        if result is None:
            return np.zeros_like(np.asarray(func(coords), dtype=float))
        return result

    def line_derivative(self, func, coords, direction, lower=None,
                        upper=None):
        """Derivative of t -> func(coords + t direction) at t = 0.

        Unlike `directional` this uses a single stencil along the line.

        """
        coords = np.asarray(coords, dtype=float)
        direction = np.asarray(direction, dtype=float)
        if not np.any(direction):
            return np.zeros_like(np.asarray(func(coords), dtype=float))
        room = _room(coords, direction, lower, upper)
        h = self.fit_step(room, coords)
        return self._apply(func, coords, direction, h)

    # --- Private API ---------------------------------------------------------

    def _apply(self, func, coords, direction, h):
        """Evaluate the stencil of the current scheme.

        """
        total = None
        for offset, weight in STENCILS[self.scheme]:
            value = np.asarray(func(coords + offset * h * direction),
                               dtype=float)
            term = weight * value
            total = term if total is None else total + term
        return total / h


def _room(coords, direction, lower, upper):
    """Largest t such that coords +/- t direction stays inside the box.

    """
    if lower is None and upper is None:
        return np.inf
    lower = np.full_like(coords, -np.inf) if lower is None else lower
    upper = np.full_like(coords, np.inf) if upper is None else upper
    if np.any(coords <= lower) or np.any(coords >= upper):
        raise DomainError(coords, lower, upper)
    room = np.inf
    for x, d, lo, hi in zip(coords, direction, lower, upper):
        if d == 0.0:
            continue
        room = min(room, (x - lo) / abs(d), (hi - x) / abs(d))
    return room
