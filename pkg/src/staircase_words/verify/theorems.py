"""Numeric verification of the closed-form expressions against exact counts.

All comparisons run in mpmath arbitrary-precision arithmetic. Kernel roots
come from the cataloged radicals, gated by the kernel residual: a candidate
is accepted only if |K(t)| clears a tight threshold, which makes the branch
selection self-correcting.
"""
from __future__ import annotations

from fractions import Fraction

from mpmath import fabs, mp, mpf, polyroots, workdps

from ..families import Family, TWO_ROW_FAMILIES
from ..transfer import transfer_count, transfer_gf
from . import closedform
from .reports import VerificationReport

DEFAULT_PRECISION = 60
DEFAULT_ROOT_RESIDUAL = mpf(10) ** -40
DEFAULT_DEDUPE = mpf(10) ** -30


class RootBranchError(ArithmeticError):
    """No sign branch of the cataloged radicals passed the residual gate."""


class VanishingFactorError(ArithmeticError):
    """A denominator factor of a closed form vanished at the evaluation point."""

    def __init__(self, factor_name: str, value):
        self.factor_name = factor_name
        self.value = value
        super().__init__(f"denominator factor {factor_name} vanishes (|value|={value})")


_X_MAX_CACHE: dict[Family, Fraction] = {}


def family_x_max(family: Family) -> Fraction:
    """Safe upper bound for numeric x: half the smallest positive pole at k=3."""
    if family not in _X_MAX_CACHE:
        den = transfer_gf(family, 3).den
        with workdps(40):
            roots = polyroots([float(c) for c in reversed(den.coeffs)], maxsteps=200)
            positive = [r.real for r in roots if abs(r.imag) < 1e-20 and r.real > 0]
            if not positive:
                raise ArithmeticError(f"no positive pole found for {family.value}")
            _X_MAX_CACHE[family] = Fraction(str(min(positive) / 2))
    return _X_MAX_CACHE[family]


def kernel_residual(family: Family, t, x):
    """|K(t)| at the given numeric point, at the current working precision."""
    return fabs(closedform.kernel_value(family, x, t))


def closed_form_roots(
    family: Family,
    x,
    residual_tol=DEFAULT_ROOT_RESIDUAL,
    dedupe_tol=DEFAULT_DEDUPE,
) -> list:
    """Residual-verified, deduplicated kernel roots from the cataloged radicals."""
    verified = []
    for candidate in closedform.root_candidates(family, x):
        if kernel_residual(family, candidate, x) < residual_tol:
            if all(fabs(candidate - seen) > dedupe_tol for seen in verified):
                verified.append(candidate)
    expected = closedform.ROOT_COUNT[family]
    if len(verified) != expected:
        raise RootBranchError(
            f"root formula failed at x={x}: {len(verified)} of {expected} "
            f"branches passed the residual gate for {family.value}"
        )
    return verified


def _needs_double_precision(roots, k: int) -> bool:
    return any(fabs(t) ** k > mpf(10) ** 20 for t in roots)


def _evaluate(family: Family, k: int, x, swap: bool = False):
    roots = closed_form_roots(family, x)
    if family is Family.KG:
        num, factors = closedform.kg_closed_form(x, roots[0], k)
    else:
        t1, t2 = roots
        if swap:
            t1, t2 = t2, t1
        builder = (
            closedform.grid_closed_form
            if family is Family.GRID
            else closedform.rt_closed_form
        )
        num, factors = builder(x, t1, t2, k)
    den = mpf(1)
    tiny = mpf(10) ** (-mp.dps // 2)
    for name, value in factors:
        if fabs(value) < tiny:
            raise VanishingFactorError(name, fabs(value))
        den *= value
    return num / den


def closed_form_value(
    family: Family, k: int, x, precision: int = DEFAULT_PRECISION, swap: bool = False
):
    """Closed-form S_k value at numeric x via the cataloged kernel roots.

    Working precision doubles automatically when any |root|^k exceeds 1e20,
    which keeps the large-root cancellations below the comparison tolerances.
    """
    if family not in TWO_ROW_FAMILIES:
        raise ValueError(f"no closed form is cataloged for family {family.value}")
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    x = _to_mpf(x, precision)
    with workdps(precision):
        roots = closed_form_roots(family, x)
        dps = precision * 2 if _needs_double_precision(roots, k) else precision
    with workdps(dps):
        return _evaluate(family, k, _to_mpf(x, dps), swap=swap)


def _to_mpf(x, precision: int):
    with workdps(precision):
        if isinstance(x, Fraction):
            return mpf(x.numerator) / mpf(x.denominator)
        return mpf(x)


def series_partial_sum(family: Family, k: int, x, order: int):
    """Sum of c_n x^n for n = 1..order with exact integer coefficients."""
    acc = mpf(0)
    for n in range(order, 0, -1):
        acc = acc * x + transfer_count(family, k, n)
    return acc * x


def check_closed_form(
    family: Family,
    k: int,
    x,
    series_order: int = 120,
    tol=mpf(10) ** -20,
    precision: int = DEFAULT_PRECISION,
) -> VerificationReport:
    """Compare the closed form against the truncated counting series.

    The truncation must be negligible: the last retained term c_N x^N has to
    sit below tol/10, otherwise the comparison is rejected with advice to
    shrink x or raise the order.
    """
    x_frac = Fraction(x) if not isinstance(x, Fraction) else x
    with workdps(precision):
        tol = _to_mpf(tol, precision)
        xm = _to_mpf(x_frac, precision)
        tail_term = mpf(transfer_count(family, k, series_order)) * xm**series_order
        if not tail_term < tol / 10:
            raise ValueError(
                f"tail bound unsatisfied: c_N x^N = {tail_term} >= tol/10; "
                "use a smaller x or a larger series order"
            )
        observed = closed_form_value(family, k, x_frac, precision=precision)
        expected = series_partial_sum(family, k, xm, series_order)
        rel_err = fabs(observed - expected) / fabs(expected)
        passed = bool(rel_err < tol)
        return VerificationReport(
            subject=f"closed-form:{family.value}:k={k}:x={x_frac}",
            params={
                "family": family.value,
                "k": k,
                "x": str(x_frac),
                "series_order": series_order,
                "tol": str(tol),
                "precision": precision,
            },
            expected=str(expected),
            observed=str(observed),
            residual=str(rel_err),
            passed=passed,
            notes="" if passed else "closed form disagrees with the counting series",
        )


def swap_invariance_delta(
    family: Family, k: int, x, precision: int = DEFAULT_PRECISION
):
    """|value(t1, t2) - value(t2, t1)|; the closed forms must not care."""
    if family is Family.KG:
        raise ValueError("the king-graph form has a single root; nothing to swap")
    with workdps(precision):
        a = closed_form_value(family, k, x, precision=precision)
        b = closed_form_value(family, k, x, precision=precision, swap=True)
        return fabs(a - b)
