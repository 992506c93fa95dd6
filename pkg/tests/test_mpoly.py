import pytest
from hypothesis import given, settings, strategies as st

from coeffcount.ffield import Field
from coeffcount.mpoly import (
    BudgetError,
    MultiPoly,
    ParseError,
    ZZ,
    coeff_census,
    dense_coeffs,
    from_dense,
    parse_poly,
    poly_mul,
    poly_pow,
)
from coeffcount.oracle import brute_power_census

F2 = Field(2)
F3 = Field(3)


def test_parse_basic():
    f = parse_poly("1 + x1 + x2 + x1*x2^2", 2, F2)
    assert f.num_terms == 4
    assert parse_poly("x1 - x1", 2, ZZ).is_zero()
    assert parse_poly("2*x1", 2, F2).is_zero()
    assert parse_poly("-3 + x", 1, ZZ).terms == {(0,): -3, (1,): 1}
    assert parse_poly("x^3", 1, F2).terms == {(3,): 1}


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("x3", 2, ZZ)
    with pytest.raises(ParseError):
        parse_poly("1 + ", 1, ZZ)
    with pytest.raises(ParseError):
        parse_poly("x + y", 1, ZZ)
    with pytest.raises(ParseError):
        parse_poly("x", 2, ZZ)  # bare x needs k = 1
    with pytest.raises(ParseError):
        parse_poly("", 1, ZZ)
    err = None
    try:
        parse_poly("1 + ?", 1, ZZ)
    except ParseError as exc:
        err = exc
    assert err is not None and err.pos == 4


def test_mul_cancellation():
    a = parse_poly("1+x1+x2", 3, F2)
    b = parse_poly("1+x2+x3", 3, F2)
    assert (a * b).num_terms == 7  # the x2 cross terms cancel mod 2
    sq = parse_poly("1+x", 1, F2)
    assert (sq * sq).terms == {(0,): 1, (2,): 1}


def test_pow_examples():
    f = parse_poly("1+x", 1, F2)
    assert f.pow(3).terms == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert f.pow(0) == MultiPoly.one(1, F2)
    tri = parse_poly("1+x+x^2", 1, F2)
    for k in range(5):
        assert tri.pow(2**k).terms == {(0,): 1, (2**k,): 1, (2 ** (k + 1),): 1}


def test_census_and_degrees():
    f = parse_poly("1+x", 1, F2).pow(11)
    census, total = coeff_census(f)
    assert census == {1: 8} and total == 8
    assert MultiPoly.zero(1, ZZ).coeff_census() == {}
    g = parse_poly("1+x+x^2", 1, F3).pow(2)
    assert g.coeff_census() == {1: 2, 2: 2}
    assert parse_poly("1+x1+x2+x1*x2^2", 2, ZZ).var_degrees() == (1, 2)
    assert parse_poly("1", 3, ZZ).var_degrees() == (0, 0, 0)
    assert parse_poly("1+x", 1, F2).pow(4).var_degrees() == (4,)
    with pytest.raises(ValueError):
        MultiPoly.zero(1, ZZ).var_degrees()


def test_univariate_zero_count_complement():
    # N(f) + N_0(f) = 1 + deg f
    f = parse_poly("1+x+x^3", 1, F2).pow(9)
    census, total = coeff_census(f)
    deg = f.var_degrees()[0]
    zeros = deg + 1 - total
    assert total + zeros == 1 + deg and zeros >= 0


@settings(max_examples=40, deadline=None)
@given(
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        st.integers(-3, 3),
        max_size=4,
    ),
    st.integers(0, 5),
    st.integers(0, 3),
)
def test_pow_is_homomorphic(terms, m, n):
    f = MultiPoly(2, ZZ, terms)
    assert f.pow(m + n) == f.pow(m) * f.pow(n)


@settings(max_examples=30, deadline=None)
@given(
    st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.integers(0, 2),
        max_size=5,
    )
)
def test_field_pow_p_is_frobenius(terms):
    f = MultiPoly(2, F3, terms)
    if f.is_zero():
        return
    assert f.pow(3) == f.frobenius()
    assert brute_power_census(f, 3) == f.frobenius().coeff_census()


def test_frobenius_digit_pow_matches_oracle():
    f = parse_poly("1+x1+2*x2^2+x1*x2", 2, F3)
    for n in (4, 7, 11):
        assert poly_pow(f, n).coeff_census() == brute_power_census(f, n)


def test_budget_error():
    f = parse_poly("1+x1+x2+x3", 3, ZZ)
    with pytest.raises(BudgetError):
        f.pow(40, budget=500)


def test_dense_roundtrip():
    f = parse_poly("1+2*x^3", 1, ZZ)
    assert dense_coeffs(f) == [1, 0, 0, 2]
    assert from_dense([1, 0, 0, 2], ZZ) == f
    assert dense_coeffs(MultiPoly.zero(1, ZZ)) == []


def test_repr_is_graded_lex():
    f = parse_poly("x1*x2 + x2^3 + 1 + x1", 2, ZZ)
    assert repr(f) == "1 + x1 + x1*x2 + x2^3"
