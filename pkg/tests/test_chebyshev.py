import pytest

from staircase_words import Family, series_expand, transfer_count, transfer_gf
from staircase_words.verify import path_gf_chebyshev


def test_k3_series_prefix():
    series = series_expand(path_gf_chebyshev(3), 4)
    assert series.coeffs == (1, 3, 7, 17, 41)


def test_k1_counts_one_word_per_length():
    series = series_expand(path_gf_chebyshev(1), 8)
    assert all(c == 1 for c in series.coeffs)


def test_k2_counts_all_words():
    series = series_expand(path_gf_chebyshev(2), 6)
    assert [series[n] for n in range(1, 7)] == [2 ** n for n in range(1, 7)]


def test_matches_transfer_counts_exactly():
    for k in range(1, 9):
        series = series_expand(path_gf_chebyshev(k), 12)
        assert series[0] == 1
        for n in range(1, 13):
            assert series[n] == transfer_count(Family.PATH, k, n), (k, n)


def test_equals_transfer_gf_plus_empty_word():
    from staircase_words import RationalFunction

    for k in range(1, 7):
        assert path_gf_chebyshev(k) == RationalFunction.one() + transfer_gf(Family.PATH, k)


def test_rejects_empty_alphabet():
    with pytest.raises(ValueError):
        path_gf_chebyshev(0)
