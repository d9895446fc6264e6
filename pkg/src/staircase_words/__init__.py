"""Staircase graph words: exact counting, generating functions, verification."""

from .algebra import (
    Poly,
    PowerSeries,
    RationalFunction,
    Recurrence,
    cheb_u,
    det_poly,
    minimal_recurrence,
    parse_poly,
    parse_rational_function,
    rf_normalize,
    series_expand,
)
from .families import (
    Family,
    FamilySpec,
    GraphInstance,
    RefinedTable,
    WordAssignment,
    build_graph,
    column_states,
    letter_states,
    staircase_check,
)
from .oracle import DEFAULT_BUDGET, OracleBudgetError, enumerate_count, refined_oracle
from .transfer import (
    TransferMatrix,
    cofactor_gf,
    cycle_count,
    transfer_count,
    transfer_gf,
    transfer_matrix,
    transfer_refined,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "Family",
    "FamilySpec",
    "GraphInstance",
    "OracleBudgetError",
    "Poly",
    "PowerSeries",
    "RationalFunction",
    "Recurrence",
    "RefinedTable",
    "TransferMatrix",
    "WordAssignment",
    "build_graph",
    "cheb_u",
    "cofactor_gf",
    "column_states",
    "cycle_count",
    "det_poly",
    "enumerate_count",
    "letter_states",
    "minimal_recurrence",
    "parse_poly",
    "parse_rational_function",
    "refined_oracle",
    "rf_normalize",
    "series_expand",
    "staircase_check",
    "transfer_count",
    "transfer_gf",
    "transfer_matrix",
    "transfer_refined",
    "__version__",
]
