"""Graph families and the staircase predicate.

Five families are supported: the path and cycle on n vertices (modeled as
1xN instances) and three 2xN families built on the same vertex grid: the
plain grid (horizontal + vertical edges), the grid with one diagonal per
cell ("rt"), and the grid with both diagonals per cell ("kg", legal king
moves on a 2xN board). Vertices are 1-based (row, col) pairs; a staircase
word assigns every vertex a value in 1..k such that adjacent values differ
by at most 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    GRID = "grid"
    RT = "rt"
    KG = "kg"

    @property
    def rows(self) -> int:
        return 1 if self in (Family.PATH, Family.CYCLE) else 2

    @property
    def is_two_row(self) -> bool:
        return self.rows == 2


TWO_ROW_FAMILIES = (Family.GRID, Family.RT, Family.KG)

# Human-readable names used in --help and reports.
FAMILY_LABELS = {
    Family.PATH: "path graph (1xN)",
    Family.CYCLE: "cycle graph (1xN, wrap edge)",
    Family.GRID: "2xN grid graph",
    Family.RT: "2xN grid with one diagonal per cell",
    Family.KG: "2xN king's graph (both diagonals per cell)",
}


@dataclass(frozen=True)
class FamilySpec:
    """One concrete family member: the family tag plus the number of columns."""

    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.family is Family.CYCLE and self.n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got n={self.n}")


Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


def _edge(u: Vertex, v: Vertex) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphInstance:
    spec: FamilySpec
    vertices: tuple[Vertex, ...]
    edges: frozenset[Edge]

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def family(self) -> Family:
        return self.spec.family


def build_graph(spec: FamilySpec) -> GraphInstance:
    """Construct the explicit vertex/edge instance for a family member.

    Vertex order is column-major, top before bottom: (1,1),(2,1),(1,2),...
    for two-row families and (1,1),(1,2),... for path/cycle.
    """
    family, n = spec.family, spec.n
    if family.is_two_row:
        vertices = tuple((row, col) for col in range(1, n + 1) for row in (1, 2))
        edges: set[Edge] = set()
        for col in range(1, n + 1):
            edges.add(_edge((1, col), (2, col)))
        for col in range(1, n):
            edges.add(_edge((1, col), (1, col + 1)))
            edges.add(_edge((2, col), (2, col + 1)))
            if family in (Family.RT, Family.KG):
                edges.add(_edge((1, col), (2, col + 1)))
            if family is Family.KG:
                edges.add(_edge((2, col), (1, col + 1)))
    else:
        vertices = tuple((1, col) for col in range(1, n + 1))
        edges = set()
        for col in range(1, n):
            edges.add(_edge((1, col), (1, col + 1)))
        if family is Family.CYCLE:
            edges.add(_edge((1, n), (1, 1)))
    return GraphInstance(spec=spec, vertices=vertices, edges=frozenset(edges))


@dataclass(frozen=True)
class WordAssignment:
    """A function from vertices to alphabet values in 1..k."""

    values: Mapping[Vertex, int]
    k: int

    @staticmethod
    def from_columns(columns: list[tuple[int, int]], k: int) -> "WordAssignment":
        """Build a 2xN assignment from (top, bottom) pairs, left to right."""
        values = {}
        for col, (top, bottom) in enumerate(columns, start=1):
            values[(1, col)] = top
            values[(2, col)] = bottom
        return WordAssignment(values=values, k=k)

    @staticmethod
    def from_letters(letters: list[int], k: int) -> "WordAssignment":
        """Build a 1xN assignment from a plain word."""
        return WordAssignment(
            values={(1, col): v for col, v in enumerate(letters, start=1)}, k=k
        )


def staircase_check(graph: GraphInstance, word: WordAssignment) -> bool:
    """True iff every edge (u, v) satisfies |word(u) - word(v)| <= 1.

    Rejects words whose vertex set or value range does not match the graph.
    """
    if word.k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {word.k}")
    if set(word.values.keys()) != set(graph.vertices):
        raise ValueError("word does not cover exactly the vertices of the graph")
    for value in word.values.values():
        if not 1 <= value <= word.k:
            raise ValueError(f"value {value} outside alphabet 1..{word.k}")
    return all(abs(word.values[u] - word.values[v]) <= 1 for u, v in graph.edges)


ColumnState = tuple[int, int]


def column_states(k: int) -> list[ColumnState]:
    """All (top, bottom) pairs with |top - bottom| <= 1, lexicographic.

    These are the admissible single columns of any two-row family; there are
    exactly 3k - 2 of them.
    """
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    return [
        (top, bottom)
        for top in range(1, k + 1)
        for bottom in range(max(1, top - 1), min(k, top + 1) + 1)
    ]


def letter_states(k: int) -> list[int]:
    """State alphabet for the 1xN families: the letters themselves."""
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    return list(range(1, k + 1))


@dataclass(frozen=True)
class RefinedTable:
    """Word counts refined by the first column (or first letter for 1xN).

    Keys are exactly the valid states for (family, k); values are exact
    counts. Summing the entries gives the unrefined count.
    """

    family: Family
    k: int
    n: int
    entries: Mapping = field(hash=False)

    def total(self) -> int:
        return sum(self.entries.values())

    def get(self, state) -> int:
        """Entry for a state; states outside the valid alphabet count 0."""
        return self.entries.get(state, 0)
