"""Kernel polynomials, root radicals, and closed-form evaluators.

This module is a transcription data table: the kernel coefficient lists, the
root radical expressions, and the closed-form combinations for the three
two-row families, written as straight-line arithmetic so they can be reviewed
symbol by symbol. A checksum test pins the module source; any edit here must
be deliberate. Everything evaluates through mpmath at the caller's working
precision.

Catalog notes:
  * the king-graph combination carries the length weight x on both numerator
    terms; with the weight on the first term only the value degenerates to
    S/x, contradicting the k=3 closed form;
  * the rectangle-triangular combination agrees with the counting series only
    to about 1e-11 at x=1/64 (the residual falls like x^6); the defect is
    intrinsic to the cataloged expression, and no compact correction is known.
"""
from __future__ import annotations

from mpmath import sqrt

from ..algebra import Poly, parse_poly
from ..families import Family

# Coefficient of t^i is KERNEL_COEFFS[family][i], a polynomial in x.
KERNEL_COEFFS: dict[Family, tuple[Poly, ...]] = {
    Family.KG: (
        parse_poly("x"),
        parse_poly("2*x^2 + 3*x - 1"),
        parse_poly("x"),
    ),
    Family.GRID: (
        parse_poly("x^2"),
        parse_poly("x*(x - 2)"),
        parse_poly("1 - 3*x"),
        parse_poly("x*(x - 2)"),
        parse_poly("x^2"),
    ),
    Family.RT: (
        parse_poly("x^2"),
        parse_poly("2*x*(x - 1)"),
        parse_poly("1 - 3*x + x^2 - x^3"),
        parse_poly("2*x*(x - 1)"),
        parse_poly("x^2"),
    ),
}

# Number of root values the radical formulas are expected to produce
# (one representative per reciprocal pair of kernel roots).
ROOT_COUNT = {Family.KG: 1, Family.GRID: 2, Family.RT: 2}


def kernel_value(family: Family, x, t):
    """K(t) at numeric (x, t), via the coefficient table."""
    coeffs = KERNEL_COEFFS[family]
    acc = 0 * t
    for poly in reversed(coeffs):
        acc = acc * t + poly(x)
    return acc


def root_candidates(family: Family, x) -> list:
    """All sign-branch evaluations of the cataloged root radicals.

    Candidates are raw: the caller gates them by kernel residual. Complex
    branches (negative radicands) are dropped here.
    """
    out = []
    if family is Family.KG:
        q = 1 - 3*x - 2*x**2
        rad = q**2 - 4*x**2
        if rad >= 0:
            out.append((q - sqrt(rad)) / (2*x))
    elif family is Family.GRID:
        for s in (1, -1):
            inner = x*(9*x + 8)
            if inner < 0:
                continue
            half = 2 - x + s*sqrt(inner)
            rad = half**2 - 16*x**2
            if rad >= 0:
                out.append((half + sqrt(rad)) / (4*x))
    elif family is Family.RT:
        for s0 in (1, -1):
            first = (x*(1 - x) + s0*x*(1 + x)*sqrt(x)) / (2*x**2)
            for s1 in (1, -1):
                rad = x*(1 + x)*(1 - x)**2 + s1*2*x*(x**2 - 1)*sqrt(x)
                if rad >= 0:
                    out.append(first + sqrt(rad) / (2*x*sqrt(x)))
    else:
        raise ValueError(f"no kernel is cataloged for family {family.value}")
    return out


def kg_closed_form(x, t1, k):
    """King-graph closed form: (numerator, named denominator factors)."""
    num = x*(t1 + 2*x)*(3*k*t1 + 2*t1*x - 3*k - 2*t1 - 2*x - 4)*t1**k \
        + x*(2*t1*x + 1)*(3*k*t1 + 2*t1*x - 3*k + 4*t1 - 2*x + 2)
    factors = [
        ("1 - 5*x - 2*x^2", 1 - 5*x - 2*x**2),
        ("t1^(k+1) + 2*t1^k*x + 2*t1*x + 1", t1**(k + 1) + 2*t1**k*x + 2*t1*x + 1),
        ("t1 - 1", t1 - 1),
    ]
    return num, factors


def _grid_a1(x, t1, t2, k):
    return t1*t2*(t2 - t1)*(
        2*k*(t2**2 - 1)*(t1**2 - 1)*x**3
        + (-3*k*t1**2*t2**2 + 3*k*t1**2 - 2*k*t1*t2 + 3*k*t2**2 - 2*t1**2*t2
           - 2*t1*t2**2 + 2*k*t1 + 2*k*t2 - 2*t1*t2 - 5*k - 2)*x**2
        + (3*k*t1*t2 + 2*t1**2*t2 + 2*t1*t2**2 - 3*k*t1 - 3*k*t2 + 6*t1*t2 + 3*k + 4)*x
        - 2*t2*t1)


def _grid_a2(x, t1, t2, k):
    return t1*(1 - t1*t2)*(
        2*k*(t1 - 1)*(t2 + 1)*(t2 - 1)*(t1 + 1)*x**3
        + (-3*k*t1**2*t2**2 - 2*k*t1*t2**2 + 3*k*t1**2 + 2*k*t1*t2 + 5*k*t2**2
           + 2*t1**2*t2 - 2*k*t2 + 2*t1*t2 + 2*t2**2 - 3*k + 2*t1)*x**2
        + (3*k*t1*t2**2 - 3*k*t1*t2 - 3*k*t2**2 - 2*t1**2*t2 + 3*k*t2 - 6*t1*t2
           - 4*t2**2 - 2*t1)*x
        + 2*t2*t1)


def _grid_a3(x, t1, t2, k):
    return (t1 - t2)*(
        2*k*(t1**2 - 1)*(t2**2 - 1)*x**3
        + (-5*k*t1**2*t2**2 + 2*k*t1**2*t2 + 2*k*t1*t2**2 - 2*t1**2*t2**2 + 3*k*t1**2
           - 2*k*t1*t2 + 3*k*t2**2 - 2*t1*t2 - 3*k - 2*t1 - 2*t2)*x**2
        + (3*k*t1**2*t2**2 - 3*k*t1**2*t2 - 3*k*t1*t2**2 + 4*t1**2*t2**2 + 3*k*t1*t2
           + 6*t1*t2 + 2*t1 + 2*t2)*x
        - 2*t1*t2)


def _grid_b1(x, t1, t2):
    return t1*t2*(t1 - t2)*((t1 + 1)*(t2 + 1)*x - 1)


def _grid_b2(x, t1, t2):
    return t1*(t1*t2 - 1)*((t1 + 1)*(t2 + 1)*x - t2)


def _grid_b3(x, t1, t2):
    return (t2 - t1)*((t1 + 1)*(t2 + 1)*x - t1*t2)


def grid_closed_form(x, t1, t2, k):
    """Grid closed form: (numerator, named denominator factors)."""
    T = t1**k * t2**k
    num = _grid_a1(x, t1, t2, k)*T + _grid_a2(x, t1, t2, k)*t1**k \
        - _grid_a2(x, t2, t1, k)*t2**k + _grid_a3(x, t1, t2, k)
    factors = [
        ("t1 - 1", t1 - 1),
        ("t2 - 1", t2 - 1),
        ("4*x^2 - 7*x + 1", 4*x**2 - 7*x + 1),
        ("b-combination", _grid_b1(x, t1, t2)*T + _grid_b2(x, t1, t2)*t1**k
         - _grid_b2(x, t2, t1)*t2**k + _grid_b3(x, t1, t2)),
    ]
    return num, factors


def _rt_a1(x, t1, t2, k):
    return (t2 - t1)*(
        ((t2 - 1)*(t1 - 1)*k - 2*t2*t1)*x**5
        + ((t1 - 1)*(1 - t2)*(t1**2*t2 + t1*t2**2 + t1**2 + t1*t2 + t2**2 + t1 + t2 + 3)*k
           + 2*t1**3*t2**2 + 2*t1**2*t2**3 + 2*t2*t1 + 4*t1 + 4*t2)*x**4
        + ((t1 - 1)*(t2 - 1)*(t1**2*t2**2 + 4*t1**2*t2 + 4*t1*t2**2 + 3*t1**2 + 5*t1*t2
           + 3*t2**2 + 4*t1 + 4*t2)*k
           - 2*t2*t1*(t1**2*t2 + t1*t2**2 + 3*t1*t2 + 1))*x**3
        + ((t1 - 1)*(1 - t2)*(3*t1**2*t2**2 + 3*t1**2*t2 + 3*t1*t2**2 + 7*t1*t2 + 3*t1 + 3*t2)*k
           - 2*t1**3*t2**2 - 2*t1**2*t2**3 + 2*t1**2*t2**2 - 2*t2*t1 - 4*t1 - 4*t2)*x**2
        + (3*t2*t1*(t2 - 1)*(t1 - 1)*k + 2*t2*t1*(t1**2*t2 + t1*t2**2 + 3*t1*t2 + 2))*x
        - 2*t1**2*t2**2)


def _rt_a2(x, t1, t2, k):
    return (t1*t2 - 1)*(
        (-t2**2*(t2 - 1)*(t1 - 1)*k - 2*t2**2*t1)*x**5
        + ((t1 - 1)*(t2 - 1)*(t1**2*t2**2 + t1**2*t2 + t1*t2**2 + t1*t2 + 3*t2**2 + t1 + t2 + 1)*k
           + 2*t1**3*t2 + 4*t1*t2**3 + 2*t2**2*t1 + 2*t1**2 + 4*t2**2)*x**4
        + ((t1 - 1)*(1 - t2)*(3*t1**2*t2**2 + 4*t1**2*t2 + 4*t1*t2**2 + t1**2 + 5*t1*t2
           + 4*t1 + 4*t2 + 3)*k
           - 2*t1*(t1**2*t2 + 3*t1*t2 + t2**2 + t1))*x**3
        + ((t1 - 1)*(t2 - 1)*(3*t1**2*t2 + 3*t1*t2**2 + 3*t1**2 + 7*t1*t2 + 3*t1 + 3*t2)*k
           - 2*t1**3*t2 - 4*t1*t2**3 + 2*t1**2*t2 - 2*t2**2*t1 - 2*t1**2 - 4*t2**2)*x**2
        + (3*t1*t2*(t1 - 1)*(1 - t2)*k + 2*t1*(t1**2*t2 + 3*t1*t2 + 2*t2**2 + t1))*x
        - 2*t1**2*t2)


def _rt_a3(x, t1, t2, k):
    return (t1 - t2)*(
        (t1**2*t2**2*(t1 - 1)*(t2 - 1)*k - 2*t1**2*t2**2)*x**5
        + ((t1 - 1)*(1 - t2)*(3*t1**2*t2**2 + t1**2*t2 + t1*t2**2 + t1**2 + t1*t2 + t2**2
           + t1 + t2)*k
           + 4*t1**3*t2**2 + 4*t1**2*t2**3 + 2*t1**2*t2**2 + 2*t1 + 2*t2)*x**4
        + ((t1 - 1)*(t2 - 1)*(4*t1**2*t2 + 4*t1*t2**2 + 3*t1**2 + 5*t1*t2 + 3*t2**2
           + 4*t1 + 4*t2 + 1)*k
           - 2*t1**2*t2**2 - 6*t1*t2 - 2*t1 - 2*t2)*x**3
        + ((t1 - 1)*(1 - t2)*(3*t1**2*t2 + 3*t1*t2**2 + 7*t1*t2 + 3*t1 + 3*t2 + 3)*k
           - 4*t1**3*t2**2 - 4*t1**2*t2**3 - 2*t1**2*t2**2 + 2*t1*t2 - 2*t1 - 2*t2)*x**2
        + (3*t1*t2*(t1 - 1)*(t2 - 1)*k + 4*t1**2*t2**2 + 6*t1*t2 + 2*t1 + 2*t2)*x
        - 2*t1*t2)


def _rt_b1(x, t1, t2):
    return (t1 - t2)*((-t1**2*t2 - t1*t2**2 - t1**2 - t1*t2 - t2**2 - t1 - t2)*x**2
                      + (t1**2*t2**2 + t1**2*t2 + t1*t2**2 + 2*t1*t2 + t1 + t2)*x - t2*t1)


def _rt_b2(x, t1, t2):
    return (t1*t2 - 1)*((t1**2*t2**2 + t1**2*t2 + t1*t2**2 + t1*t2 + t1 + t2 + 1)*x**2
                        + (-t1**2*t2 - t1*t2**2 - t1**2 - 2*t1*t2 - t1 - t2)*x + t2*t1)


def _rt_b3(x, t1, t2):
    return (t1 - t2)*((-t1**2*t2 - t1*t2**2 - t1**2 - t1*t2 - t2**2 - t1 - t2)*x**2
                      + (t1**2*t2 + t1*t2**2 + 2*t1*t2 + t1 + t2 + 1)*x - t2*t1)


def rt_closed_form(x, t1, t2, k):
    """Rectangle-triangular closed form: (numerator, named denominator factors)."""
    T = t1**k * t2**k
    num = _rt_a1(x, t1, t2, k)*T + _rt_a2(x, t1, t2, k)*t1**k \
        - _rt_a2(x, t2, t1, k)*t2**k + _rt_a3(x, t1, t2, k)
    factors = [
        ("t1 - 1", t1 - 1),
        ("t2 - 1", t2 - 1),
        ("x^2 - 6*x + 1", x**2 - 6*x + 1),
        ("b-combination", _rt_b1(x, t1, t2)*T - _rt_b2(x, t1, t2)*t1**k
         + _rt_b2(x, t2, t1)*t2**k - _rt_b3(x, t1, t2)),
    ]
    return num, factors
