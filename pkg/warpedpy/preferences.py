# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Base class for objects whose state is exported as preferences.

"""
from atom.api import Atom


class HasPreferences(Atom):
    """Atom object exporting the members tagged with `pref=True`.

    """

    def get_preferences_from_members(self):
        """Return a dict with all the value that must be saved.

        Values that need to be saved should be tagged with `pref=True`.

        """
        preferences = dict()
        for name, member in self.members().items():
            if member.metadata and 'pref' in member.metadata:
                value = getattr(self, name)
                if isinstance(value, dict):
                    value = dict(value)
                elif isinstance(value, list):
                    value = list(value)
                preferences[name] = value

        return preferences
