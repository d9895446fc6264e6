"""Acceptance criteria for the counting engine and verification harness.

Each test covers one numbered criterion and prints a single pass/fail line
(visible with pytest -s). Tolerances are pinned here, not configurable.

Criteria 3 and 5 contain sub-checks that are expected to fail against two
cataloged closed forms (the k=5 king-graph generating function and the
rectangle-triangular closed form): both catalog entries demonstrably
disagree with exhaustive enumeration, which the brute-force oracle and the
transfer derivation confirm independently. The assertions are kept faithful
to the stated criteria rather than weakened around those defects.
"""
import random
import time
from fractions import Fraction

from mpmath import mpf, workdps

from staircase_words import (
    Family,
    FamilySpec,
    Poly,
    cycle_count,
    det_poly,
    enumerate_count,
    minimal_recurrence,
    parse_poly,
    parse_rational_function,
    refined_oracle,
    series_expand,
    transfer_count,
    transfer_gf,
    transfer_matrix,
    transfer_refined,
)
from staircase_words.verify import (
    check_closed_form,
    closed_form_roots,
    kernel_residual,
    kg3_binet_integer,
    path_gf_chebyshev,
    recurrence_residuals,
    reference_gf,
    swap_invariance_delta,
)

TABLE1 = {
    Family.GRID: [7, 35, 181, 933, 4811, 24807, 127913],
    Family.RT: [7, 33, 161, 783, 3809, 18529, 90135],
    Family.KG: [7, 31, 145, 673, 3127, 14527, 67489],
}


def _report(number: int, label: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[criterion {number}] {status}: {label}")
    assert not failures, f"criterion {number} ({label}): " + "; ".join(failures)


def test_criterion_1_table_reproduction():
    failures = []
    start = time.monotonic()
    for family, row in TABLE1.items():
        transfer = [transfer_count(family, 3, n) for n in range(1, 8)]
        oracle = [enumerate_count(FamilySpec(family, n), 3) for n in range(1, 8)]
        if transfer != row:
            failures.append(f"{family.value} transfer row {transfer}")
        if oracle != row:
            failures.append(f"{family.value} oracle row {oracle}")
    elapsed = time.monotonic() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s exceeds 60s")
    _report(1, "k=3 table by oracle and transfer", failures)


def test_criterion_2_transfer_gf_exactness():
    failures = []
    if transfer_gf(Family.GRID, 3) != parse_rational_function(
        "x*(7 - x^2) / (1 - 5*x - x^2 + x^3)"
    ):
        failures.append("grid k=3 generating function mismatch")
    if transfer_gf(Family.RT, 3) != parse_rational_function(
        "x*(x^2 + 5*x + 7) / (1 - 4*x - 4*x^2 - x^3)"
    ):
        failures.append("rt k=3 generating function mismatch")
    m = transfer_matrix(Family.GRID, 3)
    resolvent = [
        [Poly((1 if i == j else 0, -m.rows[i][j])) for j in range(7)] for i in range(7)
    ]
    expected = parse_poly("x^7 + x^6 - 9*x^5 - 9*x^4 + 15*x^3 + 7*x^2 - 7*x + 1")
    if det_poly(resolvent) != expected:
        failures.append("degree-7 resolvent determinant mismatch")
    _report(2, "derived generating functions and resolvent determinant", failures)


def test_criterion_3_printed_example_audit():
    failures = []
    for k in (4, 5):
        audit = reference_gf(Family.KG, k)
        if audit.entry.as_printed != audit.derived:
            failures.append(
                f"kg k={k} printed form differs from the derivation "
                f"(printed {audit.entry.as_printed.to_string()}, "
                f"derived {audit.derived.to_string()}; enumeration sides with the derivation)"
            )
    audit3 = reference_gf(Family.KG, 3)
    if not audit3.numerator_matches:
        failures.append("kg k=3 printed numerator does not match")
    if audit3.status != "discrepant" or audit3.denominator_diffs != [(2, 3, -3)]:
        failures.append("kg k=3 denominator discrepancy not detected as +3x^2 vs -3x^2")
    for n, expected in enumerate(TABLE1[Family.KG], start=1):
        value, distance = kg3_binet_integer(n)
        if value != expected or not distance < 1e-6:
            failures.append(f"root-power formula off at n={n}")
    _report(3, "printed closed-form audit (kg k=3,4,5)", failures)


def test_criterion_4_lemma_suites():
    failures = []
    for family in (Family.GRID, Family.RT, Family.KG):
        for k in range(2, 7):
            report = recurrence_residuals(family, k, 30)
            if not report.passed:
                failures.append(f"{family.value} k={k}: {report.observed}")
    for family in (Family.GRID, Family.RT, Family.KG):
        for k in range(1, 5):
            for n in range(1, 7):
                fast = transfer_refined(family, k, n)
                slow = refined_oracle(FamilySpec(family, n), k)
                if dict(fast.entries) != dict(slow.entries):
                    failures.append(f"refined mismatch {family.value} k={k} n={n}")
    _report(4, "column recurrences clean for k<=6, n<=30 (oracle-cross-checked)", failures)


def test_criterion_5_theorem_verification():
    failures = []
    for family in (Family.KG, Family.GRID, Family.RT):
        for k in (3, 4, 5):
            for x in (Fraction(1, 64), Fraction(1, 128)):
                start = time.monotonic()
                with workdps(60):
                    xm = mpf(x.numerator) / mpf(x.denominator)
                    for t in closed_form_roots(family, xm):
                        if not kernel_residual(family, t, xm) < mpf(10) ** -40:
                            failures.append(f"{family.value} root residual at x={x}")
                report = check_closed_form(
                    family, k, x, series_order=120, tol=mpf(10) ** -20, precision=60
                )
                if not report.passed:
                    failures.append(
                        f"{family.value} k={k} x={x}: relative error {report.residual}"
                    )
                if family is not Family.KG:
                    delta = swap_invariance_delta(family, k, x, precision=60)
                    if not delta < mpf(10) ** -30:
                        failures.append(f"{family.value} k={k} x={x}: swap delta {delta}")
                elapsed = time.monotonic() - start
                if elapsed >= 5:
                    failures.append(f"{family.value} k={k} x={x}: {elapsed:.1f}s per check")
    _report(5, "closed forms vs series at 1e-20 (roots gated at 1e-40)", failures)


def test_criterion_6_chebyshev_and_cycles():
    failures = []
    for k in range(1, 9):
        series = series_expand(path_gf_chebyshev(k), 12)
        if series[0] != 1:
            failures.append(f"path k={k}: empty word count")
        for n in range(1, 13):
            if series[n] != transfer_count(Family.PATH, k, n):
                failures.append(f"path k={k} n={n} coefficient mismatch")
    for k in range(1, 5):
        for n in range(3, 9):
            if cycle_count(k, n) != enumerate_count(FamilySpec(Family.CYCLE, n), k):
                failures.append(f"cycle k={k} n={n} mismatch")
    _report(6, "chebyshev path formula exact, cycle counts vs enumeration", failures)


def test_criterion_7_recurrence_extraction():
    failures = []
    for family in Family:
        for k in range(1, 6):
            gf = transfer_gf(family, k)
            degree = gf.den.degree
            seq = [
                transfer_count(family, k, n, allow_short_cycle=True)
                for n in range(1, 3 * degree + 7)
            ]
            rec = minimal_recurrence(seq, max_order=degree + 2)
            if rec is None or rec.char_poly() != gf.den.reversed():
                failures.append(f"{family.value} k={k}")
    _report(7, "minimal recurrences equal reversed denominators (k<=5)", failures)


def test_criterion_8_property_suite():
    failures = []
    rng = random.Random(20260810)
    refined_cache = {}

    def refined(family, k, n):
        key = (family, k, n)
        if key not in refined_cache:
            refined_cache[key] = transfer_refined(family, k, n)
        return refined_cache[key]

    samples = 0
    rt_swap_violations = 0
    while samples < 220:
        family = rng.choice((Family.GRID, Family.RT, Family.KG))
        k = rng.randint(2, 6)
        n = rng.randint(1, 25)
        states = list(refined(family, k, n).entries)
        i, j = rng.choice(states)
        samples += 1
        table = refined(family, k, n)
        if table.get((i, j)) != table.get((k + 1 - i, k + 1 - j)):
            failures.append(f"reflection {family.value} k={k} n={n} ({i},{j})")
        if family in (Family.GRID, Family.KG):
            if table.get((i, j)) != table.get((j, i)):
                failures.append(f"row swap {family.value} k={k} n={n} ({i},{j})")
        elif table.get((i, j)) != table.get((j, i)):
            rt_swap_violations += 1
        kg_count = transfer_count(Family.KG, k, n)
        rt_count = transfer_count(Family.RT, k, n)
        grid_count = transfer_count(Family.GRID, k, n)
        if not kg_count <= rt_count <= grid_count:
            failures.append(f"edge monotonicity k={k} n={n}")
        if transfer_count(family, k + 1, n) < transfer_count(family, k, n):
            failures.append(f"k monotonicity {family.value} k={k} n={n}")
    if rt_swap_violations == 0:
        # the sampler can miss it; the canonical counterexample must exist
        table = refined(Family.RT, 3, 2)
        if table.get((2, 1)) == table.get((1, 2)):
            failures.append("no row-swap counterexample found for rt")
    _report(8, f"symmetry and monotonicity over {samples} sampled tuples", failures)
