"""Verification layer: printed-form audits, recurrence checks, closed-form checks."""

from .chebyshev import path_gf_chebyshev
from .lemmas import recurrence_residuals
from .reference import (
    REFERENCE_GFS,
    ReferenceAudit,
    ReferenceGF,
    UnknownReferenceError,
    kg3_binet,
    kg3_binet_integer,
    reference_gf,
)
from .reports import SuiteResult, VerificationReport, render_text_table
from .suites import SUITE_NAMES, run_suite
from .theorems import (
    RootBranchError,
    VanishingFactorError,
    check_closed_form,
    closed_form_roots,
    closed_form_value,
    family_x_max,
    kernel_residual,
    series_partial_sum,
    swap_invariance_delta,
)

__all__ = [
    "REFERENCE_GFS",
    "ReferenceAudit",
    "ReferenceGF",
    "RootBranchError",
    "SUITE_NAMES",
    "SuiteResult",
    "UnknownReferenceError",
    "VanishingFactorError",
    "VerificationReport",
    "check_closed_form",
    "closed_form_roots",
    "closed_form_value",
    "family_x_max",
    "kernel_residual",
    "kg3_binet",
    "kg3_binet_integer",
    "path_gf_chebyshev",
    "recurrence_residuals",
    "reference_gf",
    "render_text_table",
    "run_suite",
    "series_partial_sum",
    "swap_invariance_delta",
]
