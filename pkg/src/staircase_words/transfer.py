"""Transfer-matrix counting and exact generating functions.

A length-n word on a two-row family is a walk of n column states, where
state (t, b) may be followed by (t', b') when every edge between the two
columns respects the staircase condition:

  grid:  |t-t'| <= 1 and |b-b'| <= 1
  rt:    additionally |t-b'| <= 1   (diagonal from the top of the earlier
         column to the bottom of the later one; flipping this direction is
         the classic mistake, pinned by a unit test against the oracle)
  kg:    additionally both |t-b'| <= 1 and |b-t'| <= 1

Path and cycle words use the k x k letter matrix with |i-j| <= 1. Counting
is big-integer matrix powering; generating functions come out of two
fraction-free determinants via det(M + J) = det(M) + 1^T adj(M) 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, RationalFunction, rf_normalize
from .families import Family, RefinedTable, column_states, letter_states


@dataclass(frozen=True)
class TransferMatrix:
    family: Family
    k: int
    states: tuple
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(n))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def total(self) -> int:
        return sum(self.row_sums())

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "states": [list(s) if isinstance(s, tuple) else s for s in self.states],
            "rows": [list(row) for row in self.rows],
        }


def _two_row_transition(family: Family, s, t) -> bool:
    (a, b), (c, d) = s, t
    if abs(a - c) > 1 or abs(b - d) > 1:
        return False
    if family in (Family.RT, Family.KG) and abs(a - d) > 1:
        return False
    if family is Family.KG and abs(b - c) > 1:
        return False
    return True


def transfer_matrix(family: Family, k: int) -> TransferMatrix:
    """0/1 transition matrix over the ordered state alphabet for (family, k)."""
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    if family.is_two_row:
        states = tuple(column_states(k))
        rows = tuple(
            tuple(1 if _two_row_transition(family, s, t) else 0 for t in states)
            for s in states
        )
    else:
        states = tuple(letter_states(k))
        rows = tuple(
            tuple(1 if abs(i - j) <= 1 else 0 for j in states) for i in states
        )
    return TransferMatrix(family=family, k=k, states=states, rows=rows)


def _mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_pow(a, e: int):
    n = len(a)
    result = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    base = a
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    return result


def _refined_vector(matrix: TransferMatrix, n: int) -> list[int]:
    """Entrywise A^(n-1) 1, i.e. counts refined by the first state."""
    vec = [1] * matrix.size
    for _ in range(n - 1):
        vec = [sum(r * v for r, v in zip(row, vec)) for row in matrix.rows]
    return vec


def transfer_count(family: Family, k: int, n: int, allow_short_cycle: bool = False) -> int:
    """Exact number of staircase words of length n for (family, k)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if family is Family.CYCLE:
        return cycle_count(k, n, allow_small=allow_short_cycle)
    matrix = transfer_matrix(family, k)
    power = _mat_pow(matrix.rows, n - 1)
    return sum(sum(row) for row in power)


def transfer_refined(family: Family, k: int, n: int) -> RefinedTable:
    """Counts refined by first column (first letter for the path).

    Entry for state s is e_s^T A^(n-1) 1; for the cycle it is the diagonal
    entry (A^n)_ss, the number of words whose first vertex carries s.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    matrix = transfer_matrix(family, k)
    if family is Family.CYCLE:
        if n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got n={n}")
        power = _mat_pow(matrix.rows, n)
        entries = {s: power[i][i] for i, s in enumerate(matrix.states)}
    else:
        vec = _refined_vector(matrix, n)
        entries = dict(zip(matrix.states, vec))
    return RefinedTable(family=family, k=k, n=n, entries=entries)


def refined_sweep(family: Family, k: int, n_max: int) -> list[RefinedTable]:
    """Refined tables for n = 1..n_max in one pass (non-cycle families)."""
    if family is Family.CYCLE:
        raise ValueError("refined_sweep does not support the cycle family")
    matrix = transfer_matrix(family, k)
    tables = []
    vec = [1] * matrix.size
    for n in range(1, n_max + 1):
        tables.append(
            RefinedTable(family=family, k=k, n=n, entries=dict(zip(matrix.states, vec)))
        )
        vec = [sum(r * v for r, v in zip(row, vec)) for row in matrix.rows]
    return tables


def cycle_count(k: int, n: int, allow_small: bool = False) -> int:
    """Number of cyclic staircase words: trace of the n-th letter-matrix power.

    The combinatorial reading needs n >= 3; allow_small switches to the bare
    trace(A^n) convention for n >= 1.
    """
    if n < 3 and not allow_small:
        raise ValueError(f"a cycle needs at least 3 vertices, got n={n} (or pass allow_small)")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    matrix = transfer_matrix(Family.PATH, k)
    power = _mat_pow(matrix.rows, n)
    return sum(power[i][i] for i in range(matrix.size))


def _resolvent_dets(matrix: TransferMatrix) -> tuple[Poly, Poly]:
    """det(I - xA) and det(I - xA + J) with J the all-ones matrix."""
    from .algebra import det_poly

    n = matrix.size
    m = [
        [Poly((1 if i == j else 0, -matrix.rows[i][j])) for j in range(n)]
        for i in range(n)
    ]
    d = det_poly(m)
    mj = [[m[i][j] + 1 for j in range(n)] for i in range(n)]
    return d, det_poly(mj)


def transfer_gf(family: Family, k: int) -> RationalFunction:
    """Ordinary generating function of the length-n counts, n >= 1.

    Built from x * 1^T (I - xA)^(-1) 1; the all-ones sandwich equals
    (det(I - xA + J) - det(I - xA)) / det(I - xA) because J has rank one.
    The cycle uses trace((I - xA)^(-1)) - k = -x D'(x)/D(x) instead, which
    extends the trace convention down to n = 1.
    """
    matrix = transfer_matrix(family, k)
    d, dj = _resolvent_dets(matrix)
    x = Poly.x()
    if family is Family.CYCLE:
        return rf_normalize(-1 * x * d.derivative(), d)
    return rf_normalize(x * (dj - d), d)


def cofactor_gf(family: Family, k: int) -> RationalFunction:
    """Cross-check route: x * sum of signed minors of I - xA over det(I - xA).

    Quadratically many determinants; kept as an independent derivation of
    transfer_gf for small k.
    """
    from .algebra import det_poly

    matrix = transfer_matrix(family, k)
    if family is Family.CYCLE:
        raise ValueError("cofactor route applies to the all-ones sandwich only")
    n = matrix.size
    m = [
        [Poly((1 if i == j else 0, -matrix.rows[i][j])) for j in range(n)]
        for i in range(n)
    ]
    d = det_poly(m)
    total = Poly.zero()
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            term = det_poly(minor)
            total = total + term if (i + j) % 2 == 0 else total - term
    return rf_normalize(Poly.x() * total, d)
