"""Coefficient-level checks of the column-extension recurrences.

Each two-row family satisfies per-state recurrences: the count of length-n
words with a given first column equals the sum of length-(n-1) counts over
the admissible second columns, plus 1 at n = 1. The diagonal-state and
off-diagonal-state identities below spell out those sums (for the grid and
king families the two mixed states merge into a factor-2 term via row-swap
symmetry). The aggregation identity recovers the total count from the
refined ones.
"""
from __future__ import annotations

from ..families import Family, RefinedTable, TWO_ROW_FAMILIES
from ..transfer import refined_sweep
from .reports import VerificationReport

# (weight, row offset, col offset) applied to the previous length's table.
_DIAG_TERMS = {
    Family.KG: [(1, -1, -1), (2, 0, -1), (1, 0, 0), (2, 1, 0), (1, 1, 1)],
    Family.GRID: [(1, -1, -1), (2, 0, -1), (1, 0, 0), (2, 1, 0), (1, 1, 1)],
    Family.RT: [
        (1, -1, -1), (1, 0, -1), (1, -1, 0), (1, 0, 0),
        (1, 1, 0), (1, 0, 1), (1, 1, 1),
    ],
}
_LOWER_TERMS = {
    # first column (i+1, i); offsets are relative to (i, i)
    Family.KG: [(1, 0, 0), (2, 1, 0), (1, 1, 1)],
    Family.GRID: [(1, 0, -1), (1, 0, 0), (2, 1, 0), (1, 1, 1), (1, 2, 1)],
    Family.RT: [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (1, 2, 1)],
}
_UPPER_TERMS = {
    # first column (i, i+1); only the rectangle-triangular family needs it
    Family.RT: [(1, -1, 0), (1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)],
}


def _weighted_sum(table: RefinedTable, i: int, terms) -> int:
    return sum(w * table.get((i + dr, i + dc)) for w, dr, dc in terms)


def _aggregate(table: RefinedTable) -> int:
    k = table.k
    if table.family is Family.RT:
        return (
            sum(table.get((i, i)) for i in range(1, k + 1))
            + sum(table.get((i + 1, i)) for i in range(1, k))
            + sum(table.get((i, i + 1)) for i in range(1, k))
        )
    return sum(table.get((i, i)) for i in range(1, k + 1)) + 2 * sum(
        table.get((i + 1, i)) for i in range(1, k)
    )


def recurrence_residuals(family: Family, k: int, n_max: int) -> VerificationReport:
    """Check every column-extension identity for 1 <= n <= n_max.

    Violations are report content: the operation always succeeds and returns
    the list of failing identities (empty on a clean sweep).
    """
    if family not in TWO_ROW_FAMILIES:
        raise ValueError(f"column recurrences apply to two-row families, not {family.value}")
    if k < 2:
        raise ValueError(f"alphabet size must be >= 2, got {k}")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")

    tables = refined_sweep(family, k, n_max)
    violations: list[str] = []

    for n in range(1, n_max + 1):
        table = tables[n - 1]
        prev = tables[n - 2] if n >= 2 else None

        def expect(state, rhs):
            lhs = table.get(state)
            if lhs != rhs:
                violations.append(
                    f"n={n} first-column={state}: {lhs} != {rhs}"
                )

        for i in range(1, k + 1):
            rhs = 1 if n == 1 else _weighted_sum(prev, i, _DIAG_TERMS[family])
            expect((i, i), rhs)
        for i in range(1, k):
            rhs = 1 if n == 1 else _weighted_sum(prev, i, _LOWER_TERMS[family])
            expect((i + 1, i), rhs)
        if family is Family.RT:
            for i in range(1, k):
                rhs = 1 if n == 1 else _weighted_sum(prev, i, _UPPER_TERMS[family])
                expect((i, i + 1), rhs)

        total = table.total()
        aggregated = _aggregate(table)
        if aggregated != total:
            violations.append(f"n={n} aggregation: {aggregated} != {total}")

    return VerificationReport(
        subject=f"column-recurrences:{family.value}:k={k}",
        params={"family": family.value, "k": k, "n_max": n_max},
        expected="0 violations",
        observed=f"{len(violations)} violations",
        residual=len(violations),
        passed=not violations,
        notes="; ".join(violations[:5]),
    )
