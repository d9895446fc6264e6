import pytest

from staircase_words import (
    Family,
    FamilySpec,
    Poly,
    cofactor_gf,
    column_states,
    cycle_count,
    det_poly,
    enumerate_count,
    minimal_recurrence,
    parse_poly,
    parse_rational_function,
    series_expand,
    transfer_count,
    transfer_gf,
    transfer_matrix,
    transfer_refined,
)

GRID3_MATRIX = (
    (1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0, 1, 0),
    (1, 1, 1, 1, 1, 1, 1),
    (0, 1, 0, 1, 1, 1, 1),
    (0, 0, 1, 1, 1, 1, 1),
    (0, 0, 0, 1, 1, 1, 1),
)


def test_grid_k3_matrix_matches_published_form():
    m = transfer_matrix(Family.GRID, 3)
    assert m.states == tuple(column_states(3))
    assert m.rows == GRID3_MATRIX
    assert m.row_sums() == (4, 5, 5, 7, 5, 5, 4)
    assert m.total() == 35


def test_single_letter_alphabet():
    geometric = parse_rational_function("x / (1 - x)")
    for family in (Family.GRID, Family.RT, Family.KG):
        m = transfer_matrix(family, 1)
        assert m.rows == ((1,),)
        assert transfer_gf(family, 1) == geometric
    assert transfer_gf(Family.PATH, 1) == geometric
    assert transfer_gf(Family.CYCLE, 1) == geometric


def test_kg_matrix_blocks_wide_diagonal():
    m = transfer_matrix(Family.KG, 3)
    i = m.states.index((1, 2))
    j = m.states.index((2, 3))
    assert m.rows[i][j] == 0
    assert m.total() == 31
    assert m.is_symmetric()


def test_rt_matrix_diagonal_direction_pinned_by_oracle():
    # one diagonal per cell runs from the top of a column to the bottom of
    # the next; getting it backwards still gives 4n-3 edges but wrong counts
    for k in (2, 3, 4):
        for n in (2, 3, 4):
            assert transfer_count(Family.RT, k, n) == enumerate_count(
                FamilySpec(Family.RT, n), k
            )
    table = transfer_refined(Family.RT, 3, 2)
    assert table.get((2, 1)) == 5 and table.get((1, 2)) == 4


def test_matrix_symmetry_and_dominance():
    for k in (2, 3, 4, 5):
        grid = transfer_matrix(Family.GRID, k)
        rt = transfer_matrix(Family.RT, k)
        kg = transfer_matrix(Family.KG, k)
        assert grid.is_symmetric()
        assert kg.is_symmetric()
        size = grid.size
        for i in range(size):
            for j in range(size):
                assert kg.rows[i][j] <= rt.rows[i][j] <= grid.rows[i][j]


def test_rt_matrix_reflect_swap_conjugacy():
    # reflecting the alphabet and swapping rows maps the matrix to its transpose
    for k in (2, 3, 4, 5):
        m = transfer_matrix(Family.RT, k)
        index = {s: i for i, s in enumerate(m.states)}
        perm = [index[(k + 1 - b, k + 1 - t)] for (t, b) in m.states]
        size = m.size
        for i in range(size):
            for j in range(size):
                assert m.rows[i][j] == m.rows[perm[j]][perm[i]]


def test_counts_match_oracle_in_budget():
    for family in (Family.GRID, Family.RT, Family.KG):
        for k in (1, 2, 3, 4):
            for n in range(1, 7):
                assert transfer_count(family, k, n) == enumerate_count(
                    FamilySpec(family, n), k
                ), (family, k, n)


def test_table1_counts():
    assert transfer_count(Family.KG, 3, 7) == 67489
    assert transfer_count(Family.RT, 3, 5) == 3809
    assert transfer_count(Family.GRID, 3, 6) == 24807


def test_refined_counts():
    table = transfer_refined(Family.KG, 3, 1)
    assert all(v == 1 for v in table.entries.values())
    assert transfer_refined(Family.KG, 3, 2).get((2, 1)) == 4
    assert transfer_refined(Family.GRID, 3, 6).total() == 24807
    for family in (Family.GRID, Family.RT, Family.KG):
        for k in (2, 3):
            for n in (2, 4, 5):
                fast = transfer_refined(family, k, n)
                from staircase_words import refined_oracle

                slow = refined_oracle(FamilySpec(family, n), k)
                assert dict(fast.entries) == dict(slow.entries)


def test_gf_known_closed_forms():
    assert transfer_gf(Family.GRID, 3) == parse_rational_function(
        "x*(7 - x^2) / (1 - 5*x - x^2 + x^3)"
    )
    assert transfer_gf(Family.RT, 3) == parse_rational_function(
        "x*(x^2 + 5*x + 7) / (1 - 4*x - 4*x^2 - x^3)"
    )
    assert transfer_gf(Family.KG, 3) == parse_rational_function(
        "x*(7 + 3*x) / (1 - 4*x - 3*x^2)"
    )


def test_resolvent_determinant_matches_published_polynomial():
    m = transfer_matrix(Family.GRID, 3)
    resolvent = [
        [Poly((1 if i == j else 0, -m.rows[i][j])) for j in range(7)] for i in range(7)
    ]
    expected = parse_poly("x^7 + x^6 - 9*x^5 - 9*x^4 + 15*x^3 + 7*x^2 - 7*x + 1")
    assert det_poly(resolvent) == expected


def test_cofactor_route_agrees():
    for family in (Family.GRID, Family.RT, Family.KG):
        assert cofactor_gf(family, 3) == transfer_gf(family, 3)


def test_gf_series_equals_counts():
    for family in (Family.GRID, Family.RT, Family.KG, Family.PATH, Family.CYCLE):
        for k in range(1, 7):
            gf = transfer_gf(family, k)
            series = series_expand(gf, 20)
            for n in range(1, 21):
                assert series[n] == transfer_count(
                    family, k, n, allow_short_cycle=True
                ), (family, k, n)


def test_recurrence_recovers_reversed_denominator():
    for family in (Family.GRID, Family.RT, Family.KG, Family.PATH, Family.CYCLE):
        for k in range(1, 6):
            gf = transfer_gf(family, k)
            degree = gf.den.degree
            seq = [
                transfer_count(family, k, n, allow_short_cycle=True)
                for n in range(1, 3 * degree + 7)
            ]
            rec = minimal_recurrence(seq, max_order=degree + 2)
            assert rec is not None and rec.char_poly() == gf.den.reversed(), (family, k)


def test_cycle_counts():
    assert cycle_count(3, 3) == 15
    assert cycle_count(1, 5) == 1
    assert cycle_count(3, 2, allow_small=True) == 7
    with pytest.raises(ValueError):
        cycle_count(3, 2)
    for k in (2, 3, 4):
        for n in range(3, 8):
            assert cycle_count(k, n) == enumerate_count(FamilySpec(Family.CYCLE, n), k)


def test_transfer_matrix_json_shape():
    m = transfer_matrix(Family.GRID, 2)
    data = m.to_json_dict()
    assert data["family"] == "grid"
    assert data["states"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
    assert all(len(row) == 4 for row in data["rows"])
