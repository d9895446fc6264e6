"""Exact univariate polynomial, rational-function, and recurrence machinery.

Coefficients are arbitrary-precision rationals: Python ints wherever the
value is integral, fractions.Fraction otherwise. Everything is immutable
value semantics, so instances can be shared freely. Degrees in this project
stay tiny (below ~40), hence dense representations throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


def _norm_coeff(c) -> Coeff:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"unsupported coefficient type: {type(c).__name__}")


class Poly:
    """Dense polynomial; coeffs[d] is the coefficient of x^d, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> Coeff:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading_coeff(self) -> Coeff:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation; works for Fraction, float, mpf, etc."""
        result = 0 * value  # zero of the argument's type
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = Fraction(other.leading_coeff)
        dd = other.degree
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            factor = _norm_coeff(Fraction(rem[i]) / dlead)
            q[i - dd] = factor
            for j, c in enumerate(other.coeffs):
                rem[i - dd + j] -= factor * c
        return Poly(q), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "Poly":
        return Poly(tuple(d * c for d, c in enumerate(self.coeffs) if d >= 1))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = Fraction(self.leading_coeff)
        return Poly(tuple(_norm_coeff(Fraction(c) / lead) for c in self.coeffs))

    def reversed(self) -> "Poly":
        """Coefficient list reversed: x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    def scale_to_primitive(self) -> tuple["Poly", Fraction]:
        """Return (primitive integer polynomial with positive leading coeff, applied factor)."""
        if self.is_zero:
            return self, Fraction(1)
        from math import gcd, lcm

        denoms = [Fraction(c).denominator for c in self.coeffs]
        nums = [Fraction(c).numerator for c in self.coeffs]
        mult = Fraction(lcm(*denoms), gcd(*[abs(v) for v in nums if v != 0]))
        if self.leading_coeff * mult < 0:
            mult = -mult
        return self * mult, mult

    def to_string(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                factor = f"{var}" if d == 1 else f"{var}^{d}"
                term = factor if mag == 1 else f"{mag}*{factor}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.to_string()})"

    def to_json_coeffs(self) -> list:
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @staticmethod
    def from_json_coeffs(items: Sequence) -> "Poly":
        coeffs = []
        for item in items:
            if isinstance(item, str):
                coeffs.append(Fraction(item))
            else:
                coeffs.append(item)
        return Poly(coeffs)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    a, b = a.monic(), b.monic()
    while not b.is_zero:
        a, b = b, (a % b).monic()
    return a if not a.is_zero else Poly.zero()


class RationalFunction:
    """Reduced rational function in one variable.

    Canonical form: gcd(num, den) = 1 and the denominator has constant term 1
    whenever that constant term is nonzero; otherwise the denominator is a
    primitive integer polynomial with positive leading coefficient. Equality
    is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        num = _as_poly(num)
        den = Poly.one() if den is None else _as_poly(den)
        if den.is_zero:
            raise ValueError("zero denominator")
        if num.is_zero:
            self.num, self.den = Poly.zero(), Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num, den = num.exact_div(g), den.exact_div(g)
        c0 = den.constant_term
        if c0 != 0:
            scale = Fraction(1) / Fraction(c0)
            num, den = num * scale, den * scale
        else:
            den, factor = den.scale_to_primitive()
            num = num * factor
        self.num, self.den = num, den

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(Poly.zero())

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(Poly.one())

    @staticmethod
    def x() -> "RationalFunction":
        return RationalFunction(Poly.x())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __add__(self, other) -> "RationalFunction":
        other = _require_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_require_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _require_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _require_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _require_rf(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _require_rf(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return RationalFunction.one() / (self ** (-exponent))
        return RationalFunction(self.num**exponent, self.den**exponent)

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def to_string(self, var: str = "x") -> str:
        if self.den == Poly.one():
            return self.num.to_string(var)
        return f"({self.num.to_string(var)}) / ({self.den.to_string(var)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_string()})"

    def to_json_dict(self) -> dict:
        return {
            "numerator": self.num.to_json_coeffs(),
            "denominator": self.den.to_json_coeffs(),
        }

    @staticmethod
    def from_json_dict(data: dict) -> "RationalFunction":
        return RationalFunction(
            Poly.from_json_coeffs(data["numerator"]),
            Poly.from_json_coeffs(data["denominator"]),
        )


def _as_rf(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RationalFunction(_as_poly(value))
    return NotImplemented


def _require_rf(value) -> RationalFunction:
    rf = _as_rf(value)
    if rf is NotImplemented:
        raise TypeError(f"cannot treat {type(value).__name__} as a rational function")
    return rf


def rf_normalize(num: Poly, den: Poly) -> RationalFunction:
    """Reduced canonical form of num/den; rejects a zero denominator."""
    return RationalFunction(num, den)


class PowerSeries:
    """Truncated power series with an explicit order.

    Reading a coefficient beyond the truncation order raises instead of
    silently returning zero; arithmetic truncates to the smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int = None):
        cs = [_norm_coeff(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([0] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, n: int) -> Coeff:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("PowerSeries", self.coeffs, self.order))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order
        )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)], order
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, order)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[: min(9, self.order + 1)])
        tail = ", ..." if self.order > 8 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"


def series_expand(rf: RationalFunction, order: int) -> PowerSeries:
    """Maclaurin coefficients c_0..c_order of a rational function, exact."""
    d0 = rf.den.constant_term
    if d0 == 0:
        raise ValueError("denominator vanishes at 0; no power series expansion")
    num, den = rf.num.coeffs, rf.den.coeffs
    out: list = []
    for n in range(order + 1):
        s = Fraction(num[n]) if n < len(num) else Fraction(0)
        for j in range(1, min(n, len(den) - 1) + 1):
            s -= den[j] * out[n - j]
        out.append(_norm_coeff(s / d0))
    return PowerSeries(out, order)


@dataclass(frozen=True)
class Recurrence:
    """c_n = a_1 c_{n-1} + ... + a_d c_{n-d}; coefficients are (a_1, ..., a_d)."""

    coefficients: tuple

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a recurrence needs at least one coefficient")
        if self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero (minimal order)")

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def matches(self, seq: Sequence) -> bool:
        d = self.order
        return all(
            seq[n] == sum(self.coefficients[j] * seq[n - 1 - j] for j in range(d))
            for n in range(d, len(seq))
        )

    def extend(self, head: Sequence, length: int) -> list:
        """First `length` terms of the sequence starting from `head`."""
        if len(head) < self.order:
            raise ValueError("need at least `order` initial terms")
        out = list(head)
        while len(out) < length:
            out.append(
                sum(self.coefficients[j] * out[-1 - j] for j in range(self.order))
            )
        return out[:length]

    def char_poly(self) -> Poly:
        """Monic x^d - a_1 x^(d-1) - ... - a_d."""
        return Poly(tuple(-a for a in reversed(self.coefficients)) + (1,))


def _solve_consistent(rows: list[list[Fraction]], ncols: int):
    """Particular solution of an overdetermined augmented system, or None.

    Plain exact Gauss elimination; free variables are set to zero. Returns
    None when the system is inconsistent.
    """
    m = [list(map(Fraction, row)) for row in rows]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == len(m):
            break
    for r in range(row, len(m)):
        if m[r][ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for r, c in pivots:
        solution[c] = m[r][ncols]
    return solution


def minimal_recurrence(seq: Sequence, max_order: int):
    """Least-order linear recurrence fitting every supplied term, or None.

    Candidate order d is solved from the leading 2d terms and must also hold
    on every remaining term, so at least one confirmation term beyond the
    solve window is required (len(seq) >= 2d + 1).
    """
    terms = [_norm_coeff(Fraction(t)) for t in seq]
    length = len(terms)
    feasible = min(max_order, (length - 1) // 2)
    if length < 3 or feasible < 1:
        raise ValueError(
            f"insufficient terms: got {length}, need at least 3 and 2*order+1"
        )
    for d in range(1, feasible + 1):
        rows = [
            [terms[i + d - 1 - j] for j in range(d)] + [terms[i + d]]
            for i in range(length - d)
        ]
        sol = _solve_consistent(rows, d)
        if sol is None or sol[d - 1] == 0:
            continue
        return Recurrence(tuple(_norm_coeff(a) for a in sol))
    return None


def det_poly(matrix: Sequence[Sequence]) -> Poly:
    """Exact determinant of a square matrix of polynomials.

    Bareiss fraction-free elimination: every intermediate entry is a minor of
    the input, so all divisions are exact and integer inputs never leave the
    integers.
    """
    size = len(matrix)
    for row in matrix:
        if len(row) != size:
            raise ValueError("matrix must be square")
    if size == 0:
        return Poly.one()
    m = [[_as_poly(e) for e in row] for row in matrix]
    sign = 1
    prev = Poly.one()
    for col in range(size - 1):
        pivot = next((r for r in range(col, size) if not m[r][col].is_zero), None)
        if pivot is None:
            return Poly.zero()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, size):
            for j in range(col + 1, size):
                m[i][j] = (m[col][col] * m[i][j] - m[i][col] * m[col][j]).exact_div(prev)
            m[i][col] = Poly.zero()
        prev = m[col][col]
    return m[size - 1][size - 1] * sign


def cheb_u(degree: int, y: RationalFunction) -> RationalFunction:
    """Chebyshev polynomial of the second kind at a rational-function argument.

    U_0 = 1, U_1 = 2y, U_{m+1} = 2y U_m - U_{m-1}.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    y = _require_rf(y)
    prev = RationalFunction.one()
    if degree == 0:
        return prev
    current = 2 * y
    for _ in range(degree - 1):
        prev, current = current, 2 * y * current - prev
    return current


# --- parsing -----------------------------------------------------------------

_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch == "x":
            tokens.append("x")
            i += 1
        elif text.startswith("**", i):
            tokens.append("^")
            i += 2
        elif ch in _OPS:
            tokens.append(ch)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in expression")
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(tok)
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of expression")
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError("missing closing parenthesis")
            return value
        if tok == "x":
            return RationalFunction.x()
        if tok.isdigit():
            return RationalFunction(Poly.constant(int(tok)))
        raise ValueError(f"unexpected token {tok!r}")


def parse_rational_function(text: str) -> RationalFunction:
    """Parse expressions like 'x*(7 - x^2) / (1 - 5*x - x^2 + x^3)'."""
    parser = _Parser(_tokenize(text))
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input at token {parser.peek()!r}")
    return value


def parse_poly(text: str) -> Poly:
    rf = parse_rational_function(text)
    if rf.den != Poly.one():
        raise ValueError("expression is not a polynomial")
    return rf.num
