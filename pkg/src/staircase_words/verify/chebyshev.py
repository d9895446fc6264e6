"""Exact path-word generating function via Chebyshev polynomials."""
from __future__ import annotations

from ..algebra import RationalFunction, cheb_u


def path_gf_chebyshev(k: int) -> RationalFunction:
    """Generating function of staircase words on a path, empty word included.

    Built exactly from second-kind Chebyshev polynomials at y = (1-x)/(2x):

        1 + x(k - (3k+2)x)/(1-3x)^2 + [2x^2/(1-3x)^2] [1 + U_{k-1}(y)] / U_k(y)

    The result is a canonical rational function whose x^n coefficient for
    n >= 1 counts length-n words over an alphabet of size k; the constant
    term 1 counts the empty word.
    """
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    x = RationalFunction.x()
    y = (1 - x) / (2 * x)
    square = (1 - 3 * x) ** 2
    base = 1 + x * (k - (3 * k + 2) * x) / square
    tail = (2 * x**2 / square) * (1 + cheb_u(k - 1, y)) / cheb_u(k, y)
    return base + tail
