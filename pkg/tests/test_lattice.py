import itertools

import pytest

from coeffcount.combinat import catalan, gbinom, multichoose
from coeffcount.lattice import (
    LatticeError,
    ascending_product_count,
    ascending_product_poly,
    catalan_inversion,
    distinct_monomial_count,
    draconian_sequences,
    fuss_catalan,
    fuss_product_poly,
    lpath_sequences,
    monomial_count_recurrence_check,
    nested_sum_product,
    noncrossing_identity,
    path_count_under_boundary,
    ps_interior_direct,
    ps_interior_transform,
    ps_lattice_points,
    ps_points_direct,
    ps_points_formula,
    ratio_matrix,
    shifted_path_count,
    staircase_grid_report,
    staircase_power_poly,
)


def test_gbinom_conventions():
    assert gbinom(-1, 0) == 1
    assert gbinom(-2, 3) == -4
    assert gbinom(3, 5) == 0
    assert gbinom(4, -1) == 0
    assert multichoose(0, 0) == 1
    assert multichoose(0, 3) == 0
    assert multichoose(3, 2) == 6


def test_draconian():
    assert draconian_sequences(0) == [()]
    assert draconian_sequences(2) == [(0, 2), (1, 1)]
    assert len(draconian_sequences(3)) == 5
    for n in range(10):
        assert len(draconian_sequences(n)) == catalan(n)
    with pytest.raises(LatticeError):
        draconian_sequences(20)


def test_distinct_monomial_count():
    assert distinct_monomial_count([3, 2, 1]) == 5
    assert distinct_monomial_count([2, 2, 2]) == multichoose(2, 3)
    for n in range(1, 7):
        assert distinct_monomial_count(list(range(n, 0, -1))) == catalan(n)
    with pytest.raises(LatticeError):
        distinct_monomial_count([1, 2])


def test_monomial_count_vs_expansion():
    for parts in [(4, 4, 2), (5, 1, 1), (3, 3), (6, 5, 4, 1), (2, 1, 0)]:
        poly = nested_sum_product(parts)
        n = poly.num_terms if not poly.is_zero() else 0
        assert distinct_monomial_count(parts) == n, parts


def test_recurrence_check():
    assert monomial_count_recurrence_check([2, 1], 1)
    assert monomial_count_recurrence_check([1], 1)
    assert monomial_count_recurrence_check([3, 2, 2], 2)
    with pytest.raises(LatticeError):
        monomial_count_recurrence_check([2, 2], 2)  # (2,3) is not a partition


def test_catalan_inversion():
    assert catalan_inversion(3) == 5
    assert catalan_inversion(5) == 42
    assert catalan_inversion(1) == 2  # the identity starts at n = 2
    for n in range(2, 12):
        assert catalan_inversion(n) == catalan(n)


def test_ps_points():
    assert ps_points_direct([1, 1, 1]) == 14 == ps_points_formula([1, 1, 1])
    assert ps_points_direct([0, 0, 0]) == 1
    assert ps_lattice_points([2, 1], mode="direct") == 7
    assert ps_lattice_points([2, 1], mode="formula") == 7
    for n in range(1, 5):
        for ts in itertools.product(range(3), repeat=n):
            assert ps_points_direct(ts) == ps_points_formula(ts), ts


def test_ps_interior_reciprocity():
    for n in range(1, 4):
        for ms in itertools.product(range(5), repeat=n):
            img = ps_interior_transform(ms)
            assert ps_interior_direct(ms) == ps_points_direct(img), ms


def test_shifted_paths():
    assert shifted_path_count(2, 1, 2, "closed") == 2
    # n = 1: every monotone path fits under U^(t-1) R^(s-1)
    from math import comb

    assert shifted_path_count(1, 3, 3, "closed") == comb(4, 2)
    # uniform case: t * Catalan(nt - 1)
    for n in range(2, 5):
        for t in range(1, 4):
            assert (shifted_path_count(n, t, t, "closed")
                    == t * catalan(n * t - 1)), (n, t)
    for n in range(1, 5):
        for s in range(1, 4):
            for t in range(1, 4):
                closed = shifted_path_count(n, s, t, "closed")
                assert closed == shifted_path_count(n, s, t, "Lsum")
                assert closed == shifted_path_count(n, s, t, "Ksum")
                assert closed == path_count_under_boundary(n, s, t)


def test_lpath_sequences():
    assert lpath_sequences(2, 2) == [(0, 3), (1, 2)]
    from math import comb

    for n in range(1, 7):
        for t in range(1, 5):
            assert len(lpath_sequences(n, t)) * n == comb((t + 1) * n - 2, n - 1)


def test_noncrossing_identity():
    assert noncrossing_identity([1, 1]) == (2, 2, True)
    assert noncrossing_identity([1, 2]) == (5, 5, True)
    lhs, rhs, eq = noncrossing_identity([0, 0, 0])
    assert eq
    # non-monotone vectors still satisfy the polynomial identity
    for ms in [(3, 1, 2), (0, 2, 1), (2, 0, 2, 1)]:
        assert noncrossing_identity(ms)[2], ms


def test_ascending_products():
    assert ascending_product_count(2, 0) == 2
    poly = ascending_product_poly(2, 0)
    assert poly.num_terms == 2
    for n in range(1, 5):
        for m in range(n + 1):
            poly = ascending_product_poly(n, m)
            N = poly.num_terms if not poly.is_zero() else 1
            assert N == ascending_product_count(n, m)
    with pytest.raises(LatticeError):
        ascending_product_count(1, 2)


def test_fuss_catalan():
    assert fuss_catalan(2, 2) == 3
    for n in range(1, 7):
        assert fuss_catalan(n, 1) == catalan(n)
    for n in range(1, 5):
        for k in range(1, 4):
            poly = fuss_product_poly(n, k)
            N = poly.num_terms if not poly.is_zero() else 1
            assert N == fuss_catalan(n, k)


def test_staircase_grid():
    R = ratio_matrix(8)
    assert R[0][0] == 1 and R[3][1] == 3 and R[4][1] == 18
    rows = staircase_grid_report(3, 2)
    for n, k, oracle, rnk, rnkk, weighted in rows:
        assert str(oracle) == rnkk, (n, k)
    # spot oracle values
    assert staircase_power_poly(2, 1).num_terms == 3
    assert staircase_power_poly(3, 2).num_terms == 30
