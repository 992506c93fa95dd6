from math import comb

import pytest

from coeffcount.combinat import fibonacci, narayana
from coeffcount.ratgen import RationalGF, genfun_equal_as_series
from coeffcount.traveling import (
    TravelingError,
    charpoly,
    connectivity_matrix,
    d_count,
    d_poly,
    duplication_report,
    h_genfun,
    h_poly,
    h_seq,
    j_count,
    j_poly,
    nu_sequence,
    pm_chain_genfun,
    pm_chain_poly,
    schroeder_sum,
    spaced_triple_count,
    spaced_triple_genfun,
    spaced_triple_poly,
    theta_charpoly,
    traveling_denominator,
    traveling_genfun,
    traveling_poly,
    traveling_seq,
    univariate_chain_check,
    window_power_counts,
    window_power_genfun,
    window_power_poly,
)


def test_h_series():
    assert h_seq(2, 5) == [1, 3, 7, 17, 41]
    assert h_seq(3, 5) == [1, 3, 8, 20, 51]
    for p in (2, 3, 5):
        series = h_seq(p, 6)
        for n in range(6):
            assert h_poly(p, n).num_terms == series[n], (p, n)


def test_univariate_chain():
    assert univariate_chain_check(3, 5)
    assert univariate_chain_check(5, 2)
    with pytest.raises(TravelingError):
        univariate_chain_check(2, 3)


def test_traveling_denominator_truncation():
    assert traveling_denominator(1, 3) == [1, -3, 1]
    assert traveling_denominator(1, 1) == [1, -1]
    assert traveling_denominator(2, 3) == [1, -3]
    assert traveling_denominator(3, 2) == [1, -2]


def test_traveling_sequences():
    assert traveling_seq(1, 3, 6) == [fibonacci(2 * n + 2) for n in range(6)]
    assert traveling_seq(1, 1, 5) == [1] * 5
    for j in (1, 2, 3):
        for k in (1, 2, 3, 4):
            seq = traveling_seq(j, k, 6)
            for n in range(6):
                p = traveling_poly(j, k, n)
                N = p.num_terms if not p.is_zero() else 1
                assert N == seq[n], (j, k, n)


def test_spaced_triple():
    assert spaced_triple_count(1) == 3
    assert spaced_triple_count(2) == 9
    gf = spaced_triple_genfun()
    assert gf.expand(7) == [spaced_triple_count(n) for n in range(7)]
    for n in range(6):
        p = spaced_triple_poly(n)
        N = p.num_terms if not p.is_zero() else 1
        assert N == spaced_triple_count(n)


def test_pm_chains():
    ser1 = pm_chain_genfun(1).expand(8)
    assert ser1[:4] == [1, 3, 7, 17]
    for t in (1, 2):
        ser = pm_chain_genfun(t).expand(8)
        for n in range(8):
            p = pm_chain_poly(n, t)
            N = p.num_terms if not p.is_zero() else 1
            assert N == ser[n], (t, n)
            census = p.coeff_census()
            assert set(census) <= {1, -1}
            assert census.get(1, 0) - census.get(-1, 0) == 1
    with pytest.raises(TravelingError):
        pm_chain_genfun(3)


def test_connectivity_matrix_and_charpoly():
    assert connectivity_matrix(1, 1) == [[1, 1], [1, 1]]
    assert theta_charpoly(1, 1) == [0, -2, 1]
    assert charpoly(connectivity_matrix(1, 1)) == [0, -2, 1]
    assert charpoly(connectivity_matrix(0, 2)) == theta_charpoly(0, 2)
    for k in range(7):
        for m in range(7):
            assert charpoly(connectivity_matrix(k, m)) == theta_charpoly(k, m)


def test_window_power_genfuns():
    gf = window_power_genfun(2, 1)
    assert genfun_equal_as_series(gf, traveling_genfun(1, 3))
    gf = window_power_genfun(2, 2)
    assert genfun_equal_as_series(
        gf, RationalGF.make([1, 1], [1, -5, 3])
    )  # numerator 1 + Y(2,2) z with Y(2,2) = 1
    for k in (1, 2, 3):
        for m in (1, 2):
            ser = window_power_counts(k, m, 6)
            for n in range(6):
                p = window_power_poly(n, k, m)
                N = p.num_terms if not p.is_zero() else 1
                assert N == ser[n], (k, m, n)


def test_window_first_counts_equal_matrix_sums():
    for k in (2, 3, 4):
        for m in (1, 2, 3):
            A = connectivity_matrix(k, m)
            size = k + 1
            col = [1 if i == 0 else 0 for i in range(size)]
            for xi in range(k):
                p = window_power_poly(xi, k, m)
                N = p.num_terms if not p.is_zero() else 1
                assert sum(col) == N, (k, m, xi)
                col = [sum(A[i][j] * col[j] for j in range(size))
                       for i in range(size)]


def test_j_counts():
    assert j_count(1, 2, 1) == 4
    assert j_count(0, 3, 2) == 1
    assert j_count(2, 1, 2) == 11
    for n in range(4):
        for k in range(4):
            for m in range(4):
                p = j_poly(n, k, m)
                N = p.num_terms if not p.is_zero() else 1
                assert N == j_count(n, k, m)


def test_schroeder():
    assert [schroeder_sum(n) for n in range(6)] == [1, 2, 6, 22, 90, 394]
    for n in range(5):
        assert d_count(n + 1, 0) == schroeder_sum(n)
    assert d_count(1, 2) == 3  # x1 + x2 + x3


def test_nu_sequence():
    nu = nu_sequence(7)
    assert nu[2] == 1 and nu[3] == 2 and nu[4] == 6 and nu[5] == 22
    assert nu[6] == 92 and nu[7] == 420


def test_duplication_report():
    rows = duplication_report(8)
    assert [r[0] for r in rows] == [3, 4, 5, 6, 7, 8]
    # shifted pairing holds on this range; direct pairing does not
    for n, nu_n, half, direct, shifted in rows:
        assert str(shifted) == half
        assert str(direct) != half
