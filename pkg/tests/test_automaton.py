import pytest

from coeffcount.automaton import (
    AutomatonError,
    StateCapError,
    build_automaton,
    count_via_automaton,
)
from coeffcount.acceptance import vandermonde_poly
from coeffcount.ffield import Field
from coeffcount.mpoly import MultiPoly, parse_poly
from coeffcount.oracle import brute_power_census, power_census_series

F2 = Field(2)
F3 = Field(3)
F4 = Field(2, 2)


def test_worked_example_structure():
    A = build_automaton(parse_poly("1+x", 1, F2))
    assert A.state_count == 2
    assert A.count(11, 1) == 8
    assert [A.count(2**m - 1, 1) for m in range(6)] == [1, 2, 4, 8, 16, 32]
    # the section pattern census of (1+x)^3 under mod-8 slicing is [4, 4]
    vec = A.start_vector()
    for digit in (1, 1, 0):
        vec = A.apply_digit(digit, vec)
    assert sorted(vec) == [4, 4]


def test_constant_polynomial():
    # the pattern of 1 plus the absorbing zero pattern
    A = build_automaton(MultiPoly.one(1, F2))
    assert A.state_count <= 2
    for n in (0, 1, 5, 100):
        assert A.count(n, 1) == 1


def test_zero_alpha_rejected():
    A = build_automaton(parse_poly("1+x", 1, F2))
    with pytest.raises(ValueError):
        A.count(3, 0)


def test_agreement_with_oracle_small_fields():
    cases = [
        (parse_poly("1+x1+x2+x1*x2^2", 2, F2), 40),
        (parse_poly("2+x+x^2", 1, F3), 40),
        (parse_poly("1+2*x+x^2", 1, F4), 40),
    ]
    for f, n_max in cases:
        A = build_automaton(f)
        series = power_census_series(f, n_max)
        for n in range(n_max + 1):
            for alpha in range(1, f.ring.q):
                assert A.count(n, alpha) == series[n].get(alpha, 0), (n, alpha)


def test_two_variable_quartic_field():
    # q = 4, k = 2: sixteen sections per transition column
    f = parse_poly("1+x1+2*x2+3*x1*x2^2", 2, F4)
    A = build_automaton(f)
    assert A.column_sum_violations() == []
    series = power_census_series(f, 20)
    for n in range(21):
        for alpha in range(1, 4):
            assert A.count(n, alpha) == series[n].get(alpha, 0), (n, alpha)


def test_four_variable_vandermonde():
    f = vandermonde_poly(4, F2)
    A = build_automaton(f)
    series = power_census_series(f, 16)
    for n in range(17):
        assert A.count(n, 1) == series[n].get(1, 0), n
    reps = A.repunit_counts(1, 6)
    assert reps == [1] + [5 * 8**n - 8 * 2**n for n in range(1, 6)]


def test_repunit_base_digit():
    # digits of (q^m - 1)/(q - 1) * d are all d; check via direct counts
    f = parse_poly("2+x+x^2", 1, F3)
    A = build_automaton(f)
    for base_digit in (1, 2):
        seq = A.repunit_counts(1, 5, base_digit)
        for m in range(5):
            n = base_digit * (3**m - 1) // 2
            assert seq[m] == A.count(n, 1) == brute_power_census(f, n, 1)


def test_prefix_counting():
    f = parse_poly("1+x", 1, F2)
    g = parse_poly("1+x+x^3", 1, F2)
    for n in (0, 1, 5, 12, 30):
        want = brute_power_census(g * f.pow(n), 1, 1)
        assert count_via_automaton(f, n, 1, prefix=g) == want


def test_prefix_needs_seed():
    f = parse_poly("1+x", 1, F2)
    g = parse_poly("1+x^3", 1, F2)
    A = build_automaton(f)  # box too small for g, and no seed
    with pytest.raises(AutomatonError):
        A.count(3, 1, prefix=g)


def test_state_cap():
    f = vandermonde_poly(4, F2)
    with pytest.raises(StateCapError):
        build_automaton(f, state_cap=10)


def test_column_sums_and_leading_zeros():
    for f in (parse_poly("1+x1+x2+x2^2", 2, F2), parse_poly("2+x^2+x^3", 1, F3)):
        A = build_automaton(f)
        assert A.column_sum_violations() == []
        q = f.ring.q
        for n in (0, 7, 19):
            base = A.count(n, 1)
            vec = A.start_vector()
            nn = n
            while nn:
                vec = A.apply_digit(nn % q, vec)
                nn //= q
            for _ in range(4):
                vec = A.apply_digit(0, vec)
            out = A.output_vector(1)
            assert sum(u * x for u, x in zip(out, vec)) == base


def test_count_conservation_univariate():
    # nonzero count + zero count = 1 + n*deg f for univariate f
    f = parse_poly("1+x+x^3", 1, F2)
    A = build_automaton(f)
    for n in range(1, 25):
        assert A.count(n, 1) <= 1 + 3 * n
        zeros = 1 + 3 * n - A.count(n, 1)
        census = brute_power_census(f, n)
        assert zeros == 1 + 3 * n - sum(census.values())


def test_krylov_order_bounds_recurrence():
    f = parse_poly("1+x1+x2+x2^2", 2, F2)
    A = build_automaton(f)
    D = A.krylov_order()
    assert 1 <= D <= A.state_count
    # the order-D dependence really does propagate
    seq = A.repunit_counts(1, 2 * D + 8)
    from coeffcount.ratgen import fit_recurrence

    rec = fit_recurrence(seq, D)
    assert rec.fits(seq)


def test_json_dump_is_deterministic():
    import json

    f = parse_poly("1+x1+x2", 2, F2)
    a = json.dumps(build_automaton(f).to_json_dict(), sort_keys=True)
    b = json.dumps(build_automaton(f).to_json_dict(), sort_keys=True)
    assert a == b


def test_nonfield_rejected():
    from coeffcount.mpoly import ZZ

    with pytest.raises(AutomatonError):
        build_automaton(parse_poly("1+x", 1, ZZ))
