# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Release number of warpedpy, also written in every verification report.

"""
from collections import namedtuple

#: (major, minor, micro, status); status is empty for final releases.
version_info = namedtuple('version_info', 'major minor micro status')(
    0, 1, 0, 'dev')

__version__ = '.'.join(str(part) for part in version_info if part != '')
