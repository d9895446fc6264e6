import hashlib
from fractions import Fraction
from pathlib import Path

import pytest
from mpmath import fabs, mpf, workdps

from staircase_words import Family
from staircase_words.verify import (
    RootBranchError,
    check_closed_form,
    closed_form_roots,
    closed_form_value,
    family_x_max,
    kernel_residual,
    series_partial_sum,
    swap_invariance_delta,
)
from staircase_words.verify.closedform import KERNEL_COEFFS, kernel_value

CLOSEDFORM_SHA256 = "4f0d980cc8eaefcac4ed0656a28ccee63b130c555426e9c7dadd6fbeae2552bd"


def test_closedform_transcription_checksum():
    """The coefficient tables are reviewed data; edits must be deliberate."""
    source = (
        Path(__file__).resolve().parents[1]
        / "src" / "staircase_words" / "verify" / "closedform.py"
    ).read_bytes()
    assert hashlib.sha256(source).hexdigest() == CLOSEDFORM_SHA256


def test_kernels_are_palindromic():
    for family, coeffs in KERNEL_COEFFS.items():
        assert list(coeffs) == list(reversed(coeffs)), family


def test_kernel_constant_term():
    with workdps(40):
        x = mpf("0.1")
        assert abs(kernel_value(Family.KG, x, mpf(0)) - x) < mpf(10) ** -35
        for family in (Family.GRID, Family.RT):
            assert abs(kernel_value(family, x, mpf(0)) - x**2) < mpf(10) ** -35


def test_kg_root_value_and_residual():
    with workdps(60):
        x = mpf("0.1")
        roots = closed_form_roots(Family.KG, x)
        assert len(roots) == 1
        assert abs(roots[0] - mpf("0.150385")) < 1e-5
        assert kernel_residual(Family.KG, roots[0], x) < mpf(10) ** -30


def test_kg_root_small_x_behaviour():
    with workdps(60):
        roots = closed_form_roots(Family.KG, mpf("0.001"))
        assert roots[0] < mpf("0.002")


def test_grid_roots_are_large_and_verified():
    with workdps(60):
        x = mpf("0.05")
        roots = closed_form_roots(Family.GRID, x)
        assert len(roots) == 2
        for t in roots:
            assert fabs(t) > 1
            assert kernel_residual(Family.GRID, t, x) < mpf(10) ** -40


def test_reciprocal_of_a_root_is_a_root():
    import random

    rng = random.Random(404)
    with workdps(80):
        for family in (Family.KG, Family.GRID, Family.RT):
            ceiling = family_x_max(family)
            xs = [mpf(1) / 64] + [
                mpf(rng.randint(1, ceiling.numerator * 10**6))
                / mpf(ceiling.denominator * 10**6)
                for _ in range(20)
            ]
            for x in xs:
                for t in closed_form_roots(family, x):
                    assert kernel_residual(family, 1 / t, x) < mpf(10) ** -40


def test_root_gate_rejects_out_of_range_x():
    # inside (0.17, 0.5) the radicand is negative and no real branch exists
    with workdps(60):
        with pytest.raises(RootBranchError):
            closed_form_roots(Family.KG, mpf("0.3"))


def test_x_max_bounds():
    assert Fraction(1, 64) < family_x_max(Family.KG)
    assert Fraction(1, 64) < family_x_max(Family.GRID)
    assert Fraction(1, 64) < family_x_max(Family.RT)
    assert family_x_max(Family.KG) < Fraction(12, 100)
    assert family_x_max(Family.GRID) < Fraction(10, 100)


def test_kg3_value_matches_corrected_closed_form():
    with workdps(60):
        x = mpf("0.05")
        value = closed_form_value(Family.KG, 3, Fraction(1, 20))
        reference = x * (7 + 3 * x) / (1 - 4 * x - 3 * x**2)
        assert fabs(value - reference) < mpf(10) ** -25
        assert abs(value - mpf("0.451104")) < 1e-6


def test_kg1_degenerates_to_geometric_series():
    value = closed_form_value(Family.KG, 1, Fraction(1, 10))
    with workdps(60):
        assert fabs(value - mpf(1) / 9) < mpf(10) ** -30


def test_grid_value_matches_series():
    with workdps(60):
        x = Fraction(1, 50)
        value = closed_form_value(Family.GRID, 3, x)
        partial = series_partial_sum(Family.GRID, 3, mpf(1) / 50, 60)
        assert fabs(value - partial) / partial < mpf(10) ** -20


def test_check_closed_form_passes_for_kg_and_grid():
    for family in (Family.KG, Family.GRID):
        for k in (3, 4, 5):
            report = check_closed_form(family, k, Fraction(1, 64))
            assert report.passed, (family, k, report.residual)


def test_rt_closed_form_defect_is_stable():
    # the cataloged expression genuinely disagrees with the counts at ~3e-11
    report = check_closed_form(Family.RT, 3, Fraction(1, 64))
    assert not report.passed
    residual = mpf(report.residual)
    assert mpf(10) ** -12 < residual < mpf(10) ** -10


def test_swap_invariance():
    for family in (Family.GRID, Family.RT):
        for k in (3, 5):
            delta = swap_invariance_delta(family, k, Fraction(1, 64))
            assert delta < mpf(10) ** -30, (family, k)
    with pytest.raises(ValueError):
        swap_invariance_delta(Family.KG, 3, Fraction(1, 64))


def test_precision_doubling_keeps_large_k_accurate():
    # at x=1/128, k=5 the grid root powers pass 1e20 and precision doubles
    report = check_closed_form(Family.GRID, 5, Fraction(1, 128))
    assert report.passed
    assert mpf(report.residual) < mpf(10) ** -40


def test_tail_bound_rejection():
    with pytest.raises(ValueError, match="tail bound"):
        check_closed_form(Family.GRID, 3, Fraction(1, 8), series_order=20)


def test_vanishing_factor_is_named():
    # at x = (sqrt(33) - 5)/4 the kernel pair degenerates to the double root
    # t = 1; both (t1 - 1) and the quadratic prefactor collapse there, and the
    # rejection names the offending factor
    from mpmath import nstr, sqrt as msqrt

    from staircase_words.verify import VanishingFactorError

    with workdps(80):
        x_star = Fraction(nstr((msqrt(mpf(33)) - 5) / 4, 70))
    with pytest.raises(VanishingFactorError, match="vanishes") as excinfo:
        closed_form_value(Family.KG, 3, x_star)
    assert excinfo.value.factor_name in ("1 - 5*x - 2*x^2", "t1 - 1")


def test_rt4_check_runs_and_reports():
    # no printed closed form exists at k=4; the check is expression vs series
    report = check_closed_form(Family.RT, 4, Fraction(1, 100), series_order=150)
    assert report.params["k"] == 4
    assert mpf(report.residual) < mpf(10) ** -10
