import pytest
from hypothesis import given, settings, strategies as st

from coeffcount.automaton import build_automaton
from coeffcount.ffield import Field
from coeffcount.mpoly import parse_poly
from coeffcount.ratgen import (
    LinearRecurrence,
    RationalGF,
    RecurrenceError,
    fit_recurrence,
    fit_repunit_genfun,
    genfun_equal_as_series,
    genfun_expand,
    seq_to_genfun,
)

F2 = Field(2)


def test_fibonacci_fit():
    seq = [0, 1, 1, 2, 3, 5, 8, 13, 21]
    rec = fit_recurrence(seq, 4)
    assert rec.coeffs == (1, 1)
    gf = seq_to_genfun(seq, rec)
    assert gf == RationalGF.make([0, 1], [1, -1, -1])
    assert genfun_expand(gf, 12) == seq + [34, 55, 89]


def test_constant_and_alternating():
    rec = fit_recurrence([1, 1, 1, 1, 1], 2)
    assert rec.coeffs == (1,)
    rec = fit_recurrence([1, 3, 8, 21, 55, 144, 377], 3)
    assert rec.coeffs == (3, -1)


def test_minimality():
    # 2^n satisfies an order-1 recurrence; BM must not return order 2
    rec = fit_recurrence([1, 2, 4, 8, 16, 32, 64], 3)
    assert rec.order == 1
    with pytest.raises(RecurrenceError):
        fit_recurrence([1, 2, 4, 8, 17, 33, 64, 120, 230], 2)


def test_insufficient_terms():
    with pytest.raises(RecurrenceError):
        fit_recurrence([1, 2, 3], 2)


def test_no_low_order_recurrence_detected():
    # factorials are not C-finite; every small order must be rejected
    from math import factorial

    seq = [factorial(n) for n in range(12)]
    with pytest.raises(RecurrenceError):
        fit_recurrence(seq, 4)


def test_gf_expansion_examples():
    gf = RationalGF.make([1, 1], [1, -2, -1])
    assert gf.expand(5) == [1, 3, 7, 17, 41]
    assert RationalGF.make([1], [1, -1]).expand(4) == [1, 1, 1, 1]
    # polynomial part longer than the denominator
    gf = RationalGF.make([1, 14, 64], [1, -10, 16])
    assert gf.expand(3) == [1, 24, 288]


def test_series_equality():
    a = RationalGF.make([1, 0, -1], [1, -3, 1, 1])
    b = RationalGF.make([1, 1], [1, -2, -1])
    assert genfun_equal_as_series(a, b)
    assert genfun_equal_as_series(
        RationalGF.make([1], [1, -1]), RationalGF.make([1, 1], [1, 0, -1])
    )
    assert not genfun_equal_as_series(
        RationalGF.make([1], [1, -1]), RationalGF.make([1], [1, -2])
    )


def test_make_normalizes():
    gf = RationalGF.make([2, 2], [2, -4])
    assert gf.num == (1, 1) and gf.den == (1, -2)
    gf = RationalGF.make([1], [-1, 2])
    assert gf.den[0] == 1 and gf.num == (-1,)
    with pytest.raises(ValueError):
        RationalGF.make([1], [2, 1])  # constant term not +-1 after reduction


def test_gf_arithmetic():
    third = RationalGF.make([1], [1, -1])
    geom2 = RationalGF.make([1], [1, -2])
    s = third + geom2
    assert s.expand(4) == [2, 3, 5, 9]
    p = third * geom2
    assert p.expand(4) == [1, 3, 7, 15]


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.integers(-3, 3), min_size=1, max_size=3),
    st.lists(st.integers(-4, 4), min_size=1, max_size=3),
)
def test_roundtrip_random_recurrences(coeffs, initial):
    initial = (initial + [1] * len(coeffs))[: len(coeffs)]
    rec = LinearRecurrence(tuple(coeffs), tuple(initial))
    seq = rec.extend(2 * len(coeffs) + 11)
    fitted = fit_recurrence(seq, len(coeffs))
    assert fitted.order <= len(coeffs)
    gf = seq_to_genfun(seq, fitted)
    assert gf.expand(len(seq) + 10) == rec.extend(len(seq) + 10)


def test_fit_repunit_genfun_certified():
    f = parse_poly("1+x1+x2+x2^2", 2, F2)
    A = build_automaton(f)
    seq, rec, gf = fit_repunit_genfun(A, 1)
    D = A.krylov_order()
    assert len(seq) == 2 * D + 11
    assert genfun_equal_as_series(gf, RationalGF.make([1, 2], [1, -2, -4]))
    # held-out: the generating function predicts terms beyond the fit window
    more = A.repunit_counts(1, len(seq) + 5)
    assert gf.expand(len(more)) == more
    # order-minimality: one order lower must fail to fit
    assert rec.order == 2
    with pytest.raises(RecurrenceError):
        fit_recurrence(seq, rec.order - 1)
