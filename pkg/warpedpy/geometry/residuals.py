# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Residual bookkeeping shared by all verifiers.

A verifier evaluates an identity at many sample points and records, for each
of them, the residual |LHS - RHS| and the scale of the quantities involved.
Whether the identity holds is decided later against a tolerance.

"""
import numpy as np
from atom.api import Atom, Dict, Float, List, Str, Typed


class ResidualEntry(Atom):
    """Per-sample residuals of one identity.

    """
    #: Identifier of the identity.
    name = Str()

    #: Residual of every evaluated sample.
    residuals = List(Float())

    #: Scale of every evaluated sample.
    scales = List(Float())

    #: Diagnostics of the samples that could not be evaluated.
    failures = List(Str())

    #: Samples left out because a precondition of the identity does not hold
    #: there (they do not count as failures).
    skipped = List(Str())

    def add(self, residual, scale=1.0):
        """Record the residual of one sample.

        """
        self.residuals.append(float(residual))
        self.scales.append(float(scale))

    def fail(self, message):
        """Record a sample that could not be evaluated.

        """
        self.failures.append(str(message))

    def skip(self, message):
        """Record a sample where the identity does not apply.

        """
        self.skipped.append(str(message))

    @property
    def n_samples(self):
        return len(self.residuals)

    @property
    def max_residual(self):
        return max(self.residuals, default=0.0)

    @property
    def max_normalized(self):
        """Largest residual / scale ratio.

        """
        return max((r / s for r, s in zip(self.residuals, self.scales)),
                   default=0.0)

    def n_exceeding(self, tolerance):
        """Number of samples whose residual exceeds tolerance * scale.

        NaN residuals always count as exceeding.

        """
        return sum(1 for r, s in zip(self.residuals, self.scales)
                   if not r <= tolerance * s)


class ResidualReport(Atom):
    """Collection of residual entries produced by a verifier.

    """
    #: Entries by identity name.
    entries = Dict(Str(), Typed(ResidualEntry))

    #: Free-form notes (adjudications, conventions in use...).
    notes = Dict(Str())

    def entry(self, name):
        """Entry of the given name, created on first access.

        """
        if name not in self.entries:
            self.entries[name] = ResidualEntry(name=name)
        return self.entries[name]

    def __getitem__(self, name):
        return self.entries[name]

    def __contains__(self, name):
        return name in self.entries

    def merge(self, other):
        """Add the entries and notes of another report to this one.

        """
        for name, entry in other.entries.items():
            target = self.entry(name)
            for r, s in zip(entry.residuals, entry.scales):
                target.add(r, s)
            for f in entry.failures:
                target.fail(f)
            for s in entry.skipped:
                target.skip(s)
        self.notes.update(other.notes)
        return self


def norm(vector):
    """Euclidean norm of the components of a vector.

    """
    return float(np.linalg.norm(np.asarray(vector, dtype=float)))
