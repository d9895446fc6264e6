"""Brute-force enumeration oracle for staircase word counts.

This is the ground truth the faster machinery is checked against, so it
deliberately works from the explicit edge set of a built graph instance and
knows nothing about column states or transfer matrices. Enumeration is
column-by-column backtracking: a partial assignment is cut as soon as any
edge with both endpoints assigned fails the staircase condition.
"""
from __future__ import annotations

from .families import (
    Family,
    FamilySpec,
    GraphInstance,
    RefinedTable,
    build_graph,
    column_states,
    letter_states,
)

DEFAULT_BUDGET = 10_000_000


class OracleBudgetError(RuntimeError):
    """Raised when an enumeration would visit more words than allowed."""


def _back_neighbours(graph: GraphInstance) -> list[list[int]]:
    """For each vertex index, the indices of earlier vertices it is adjacent to."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    back: list[list[int]] = [[] for _ in graph.vertices]
    for u, v in graph.edges:
        i, j = index[u], index[v]
        if i > j:
            i, j = j, i
        back[j].append(i)
    return back


def _enumerate(spec: FamilySpec, k: int, budget: int, collect_refined: bool):
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    graph = build_graph(spec)
    back = _back_neighbours(graph)
    nverts = len(graph.vertices)

    values = [0] * nverts
    total = 0
    refined: dict = {}
    if collect_refined:
        if graph.family.is_two_row:
            refined = {s: 0 for s in column_states(k)}
        else:
            refined = {s: 0 for s in letter_states(k)}

    def key_of_prefix():
        if graph.family.is_two_row:
            return (values[0], values[1])
        return values[0]

    def walk(pos: int) -> None:
        nonlocal total
        if pos == nverts:
            total += 1
            if total > budget:
                raise OracleBudgetError(
                    f"oracle out of range: more than {budget} words on "
                    f"{spec.family.value} n={spec.n} k={k}; use the transfer engine"
                )
            if collect_refined:
                refined[key_of_prefix()] += 1
            return
        for value in range(1, k + 1):
            ok = True
            for earlier in back[pos]:
                if abs(values[earlier] - value) > 1:
                    ok = False
                    break
            if ok:
                values[pos] = value
                walk(pos + 1)
        values[pos] = 0

    walk(0)
    return total, refined


def enumerate_count(spec: FamilySpec, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of staircase words on the instance, by exhaustion."""
    total, _ = _enumerate(spec, k, budget, collect_refined=False)
    return total


def refined_oracle(spec: FamilySpec, k: int, budget: int = DEFAULT_BUDGET) -> RefinedTable:
    """Exact counts refined by first column (first letter for path/cycle)."""
    total, refined = _enumerate(spec, k, budget, collect_refined=True)
    table = RefinedTable(family=spec.family, k=k, n=spec.n, entries=refined)
    assert table.total() == total
    return table
