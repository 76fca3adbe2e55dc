# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
from .base_check import BaseCheck, CheckContext
from .conformal_warped import (CompatibilityCheck, FiberGeometryCheck,
                               RescalingCheck, RiemannianReductionCheck,
                               TheoremItem1Check, TheoremItem2Check)
from .engine_health import EngineHealthCheck
from .submersion import DilationCheck, ONeillCheck
from .warped import WarpedCorollaryCheck, WarpedLemmaCheck, WarpedMetricCheck

CHECKS = {c.id: c for c in (EngineHealthCheck, WarpedMetricCheck,
                            WarpedLemmaCheck, WarpedCorollaryCheck,
                            DilationCheck, ONeillCheck, CompatibilityCheck,
                            TheoremItem1Check, TheoremItem2Check,
                            RiemannianReductionCheck, RescalingCheck,
                            FiberGeometryCheck)}
