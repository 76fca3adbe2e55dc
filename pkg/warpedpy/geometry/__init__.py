# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
# Copyright 2026 by WarpedPy Authors, see AUTHORS for more details.
#
# Distributed under the terms of the BSD 3-Clause license.
#
# The full license is in the file LICENCE, distributed with this software.
# -----------------------------------------------------------------------------
"""Numerical differential geometry of warped products and submersions.

"""
from .connection import (ChristoffelAt, SecondFundamentalFormAt, christoffel,
                         covariant_derivative, lie_bracket,
                         second_fundamental_form, submanifold_form)
from .conformal_warped import (CompatibilityEntry, CompatibilityReport,
                               ConformalWarpedSubmersion,
                               build_product_submersion,
                               check_product_submersion, compatibility,
                               compatibility_report, decomposition_residuals,
                               fiber_geometry_checks, rescaled_submersion,
                               verify_rescaling_corollary,
                               verify_riemannian_reduction,
                               verify_theorem_item1, verify_theorem_item2)
from .core import (ChartManifold, Point, ScalarField, TangentVector,
                   VectorField, gradient, metric_inner, metric_orthonormalize,
                   metric_projector, partial_derivative, scale_of)
from .diff import DiffEngine
from .fields import FieldLibrary
from .residuals import ResidualEntry, ResidualReport
from .submersion import (DilationEstimate, SmoothMap, SplitAt,
                         SubmersionContext, conformal_A_formula, dilation,
                         mean_curvature, oneill_A, oneill_T, pushforward,
                         split, vertical_gradient)
from .warped import (LiftedField, WarpedProduct, build_warped_product,
                     check_warp, lift, project, projection,
                     verify_warped_corollary, verify_warped_lemma,
                     verify_warped_metric)
