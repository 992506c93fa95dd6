"""Recurrence engines for products of shifting variable blocks.

Covers the chain products prod (1 + x_i + x_{i+1}) over F_p, the
traveling products prod (x_{(i-1)j+1} + ... + x_{(i-1)j+k}), the windowed
powers prod (x_i + ... + x_{i+k})^m with their binomial transfer matrix,
and several one-off families counted alongside a brute-force expansion.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinat import narayana
from .ffield import Field
from .mpoly import ZZ, MultiPoly
from .ratgen import RationalGF, pmul


class TravelingError(ValueError):
    pass


# -- chain products over F_p ------------------------------------------------------


def h_genfun(p: int) -> RationalGF:
    """Generating function of N(prod_{i<=n} (1 + x_i + x_{i+1})) over F_p.

    Equals (1 - z^p) / ((1 - z)^2 - z(1 - z^p)), stored in the cleared
    form (1 + z + ... + z^(p-1)) / (1 - 2z - z^2 - ... - z^p).
    """
    num = [1] * p
    den = [1, -2] + [-1] * (p - 1)
    return RationalGF.make(num, den)


def h_seq(p: int, terms: int):
    return h_genfun(p).expand(terms)


def h_poly(p: int, n: int) -> MultiPoly:
    """prod_{i=1}^n (1 + x_i + x_{i+1}) over F_p, in n+1 variables."""
    field = Field(p)
    k = n + 1
    poly = MultiPoly.one(k, field)
    for i in range(1, n + 1):
        f = MultiPoly(k, field, {
            (0,) * k: 1,
            tuple(1 if j == i - 1 else 0 for j in range(k)): 1,
            tuple(1 if j == i else 0 for j in range(k)): 1,
        })
        poly = poly * f
    return poly


def univariate_chain_check(p: int, n_max: int) -> bool:
    """N((1 + x + x^p)^((p^n-1)/(p-1))) over F_p matches the chain series."""
    if p < 3:
        raise TravelingError("needs an odd prime")
    field = Field(p)
    series = h_seq(p, n_max + 1)
    g = MultiPoly(1, field, {(0,): 1, (1,): 1, (p,): 1})
    for n in range(n_max + 1):
        e = (p**n - 1) // (p - 1)
        if g.pow(e).num_terms != series[n]:
            return False
    return True


# -- traveling products ------------------------------------------------------------


def traveling_denominator(j: int, k: int):
    """Coefficients of sum_h (-1)^h C(k - j(h-1), h) z^h.

    The inclusion-exclusion behind it counts genuine selections, so the
    sum stops as soon as the upper index goes negative (the generalized
    binomial values past that point would be spurious).
    """
    if j < 1 or k < 1:
        raise TravelingError("need j, k >= 1")
    den = []
    h = 0
    while k - j * (h - 1) >= 0:
        den.append((-1) ** h * comb(k - j * (h - 1), h))
        h += 1
    while den and den[-1] == 0:
        den.pop()
    return den


def traveling_genfun(j: int, k: int) -> RationalGF:
    return RationalGF.make([1], traveling_denominator(j, k))


def traveling_seq(j: int, k: int, terms: int):
    return traveling_genfun(j, k).expand(terms)


def traveling_poly(j: int, k: int, n: int) -> MultiPoly:
    """prod_{i=1}^n (x_{(i-1)j+1} + ... + x_{(i-1)j+k}) over the integers."""
    nvars = max((n - 1) * j + k, 1)
    poly = MultiPoly.one(nvars, ZZ)
    for i in range(1, n + 1):
        base = (i - 1) * j
        f = MultiPoly(nvars, ZZ, {
            tuple(1 if t == base + s else 0 for t in range(nvars)): 1
            for s in range(k)
        })
        poly = poly * f
    return poly


# -- spaced triple product and the +-1 chain (example families) --------------------


def spaced_triple_count(n: int) -> int:
    """N(prod_{i<=n} (x_i + x_{i+2} + x_{i+4})) = F(n+2)^2 - (1 - (-1)^n)/2."""
    from .combinat import fibonacci

    eta = (1 - (-1) ** n) // 2
    return fibonacci(n + 2) ** 2 - eta


def spaced_triple_genfun() -> RationalGF:
    return RationalGF.make([1], pmul([1, 0, -1], [1, -3, 1]))


def spaced_triple_poly(n: int) -> MultiPoly:
    nvars = n + 4
    poly = MultiPoly.one(nvars, ZZ)
    for i in range(1, n + 1):
        f = MultiPoly(nvars, ZZ, {
            tuple(1 if t == i - 1 + s else 0 for t in range(nvars)): 1
            for s in (0, 2, 4)
        })
        poly = poly * f
    return poly


def pm_chain_poly(n: int, t: int) -> MultiPoly:
    """prod_{i=1}^n (1 - x_i + x_{i+t}) over the integers."""
    nvars = max(n + t, 1)
    poly = MultiPoly.one(nvars, ZZ)
    for i in range(1, n + 1):
        f = MultiPoly(nvars, ZZ, {
            (0,) * nvars: 1,
            tuple(1 if s == i - 1 else 0 for s in range(nvars)): -1,
            tuple(1 if s == i + t - 1 else 0 for s in range(nvars)): 1,
        })
        poly = poly * f
    return poly


def pm_chain_genfun(t: int) -> RationalGF:
    """Generating function of N(prod (1 - x_i + x_{i+t})) for t = 1, 2."""
    if t == 1:
        return RationalGF.make([1, 1], [1, -2, -1])
    if t == 2:
        geom = RationalGF.make([1], [1, -1])
        a = RationalGF.make([0, 0, 1], [1, 0, 1])
        b = RationalGF.make([1], [1, -2, -1])
        return geom * (a + b)
    raise TravelingError("only t = 1 and t = 2 have recorded forms")


# -- windowed powers and their transfer matrix --------------------------------------


def connectivity_matrix(k: int, m: int):
    """(k+1) x (k+1) binomial transfer matrix for the windowed powers.

    Row i, column 0 holds C(m-1+i, m-1); column j >= 1 holds
    C(m+i-j, m-1), which vanishes for j > i + 1 (one superdiagonal).
    """
    if k < 0 or m < 0:
        raise TravelingError("need k, m >= 0")

    def entry(i, j):
        top = (m - 1 + i) if j == 0 else (m + i - j)
        if m == 0:
            # degenerate C(top, -1): nonzero only at top = -1
            return 1 if top == -1 else 0
        return comb(top, m - 1) if top >= 0 else 0

    return [[entry(i, j) for j in range(k + 1)] for i in range(k + 1)]


def charpoly(matrix):
    """Monic characteristic polynomial det(xI - A), ascending coefficients.

    Faddeev-LeVerrier over exact rationals; integer input gives integer
    output, which is asserted.
    """
    n = len(matrix)
    A = [[Fraction(x) for x in row] for row in matrix]
    M = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]  # leading coefficient of x^n
    for step in range(1, n + 1):
        AM = [
            [sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(AM[i][i] for i in range(n)) / step
        coeffs.append(c)
        M = [
            [AM[i][j] + (c if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    out = []
    for c in reversed(coeffs):
        if c.denominator != 1:
            raise TravelingError("non-integer characteristic coefficient")
        out.append(int(c))
    return out


def theta_charpoly(k: int, m: int):
    """Closed-form characteristic polynomial of the transfer matrix.

    Coefficient of rho^(k+1-tau) is (-1)^tau C(1 + (k+1-tau)m, tau);
    returned ascending, so out[i] is the coefficient of rho^i.
    """
    size = k + 2
    out = [0] * size
    for tau in range(size):
        top = 1 + (k + 1 - tau) * m
        if top < 0:
            continue
        out[k + 1 - tau] = (-1) ** tau * comb(top, tau)
    return out


def window_power_denominator(k: int, m: int):
    """z-side denominator: sum_i (-1)^i C(1 + (k+1-i)m, i) z^i."""
    out = []
    for i in range(k + 2):
        top = 1 + (k + 1 - i) * m
        out.append((-1) ** i * comb(top, i) if top >= 0 else 0)
    while out and out[-1] == 0:
        out.pop()
    return out


def window_power_genfun(k: int, m: int) -> RationalGF:
    """Generating function of N(prod_{i<=n} (x_i + ... + x_{i+k})^m).

    The numerator comes from the first k column sums of powers of the
    transfer matrix, which equal the small-n counts themselves.
    """
    if k < 1 or m < 1:
        raise TravelingError("need k, m >= 1")
    A = connectivity_matrix(k, m)
    size = k + 1
    col = [1 if i == 0 else 0 for i in range(size)]  # first column of A^0
    phis = []
    for _ in range(k):
        phis.append(sum(col))
        col = [sum(A[i][j] * col[j] for j in range(size)) for i in range(size)]
    den = window_power_denominator(k, m)
    num = []
    for nu in range(k):
        val = 0
        for i in range(nu + 1):
            if i < len(den):
                val += den[i] * phis[nu - i]
        num.append(val)
    return RationalGF.make(num, den)


def window_power_poly(n: int, k: int, m: int) -> MultiPoly:
    """prod_{i=1}^n (x_i + ... + x_{i+k})^m over the integers."""
    nvars = max(n + k, 1)
    poly = MultiPoly.one(nvars, ZZ)
    for i in range(1, n + 1):
        f = MultiPoly(nvars, ZZ, {
            tuple(1 if t == i - 1 + s else 0 for t in range(nvars)): 1
            for s in range(k + 1)
        })
        for _ in range(m):
            poly = poly * f
    return poly


def window_power_counts(k: int, m: int, terms: int):
    return window_power_genfun(k, m).expand(terms)


def j_count(n: int, k: int, m: int) -> int:
    """N(prod_{i<=n} (1 + x^i + ... + x^(i+k))^m) = 1 + (nk + C(n+1,2)) m."""
    if n < 0 or k < 0 or m < 0:
        raise TravelingError("need nonnegative parameters")
    return 1 + (n * k + comb(n + 1, 2)) * m


def j_poly(n: int, k: int, m: int) -> MultiPoly:
    poly = MultiPoly.one(1, ZZ)
    for i in range(1, n + 1):
        f = MultiPoly(1, ZZ, {(0,): 1, **{(i + s,): 1 for s in range(k + 1)}})
        for _ in range(m):
            poly = poly * f
    return poly


# -- mixed-variable products and the Schroeder / doubling recurrences ----------------


def d_poly(n: int, k: int) -> MultiPoly:
    """prod_{i=1}^n (y_1 + ... + y_{i-1} + x_i + ... + x_{i+k}).

    Variables are numbered x_1..x_{n+k} then y_1..y_{n-1}.
    """
    if n < 0 or k < -1:
        raise TravelingError("bad parameters")
    nx = n + k
    ny = max(n - 1, 0)
    nvars = max(nx + ny, 1)
    poly = MultiPoly.one(nvars, ZZ)
    for i in range(1, n + 1):
        terms = {}
        for t in range(i - 1):  # y_1 .. y_{i-1}
            terms[tuple(1 if s == nx + t else 0 for s in range(nvars))] = 1
        for s_off in range(k + 1):  # x_i .. x_{i+k}
            terms[tuple(1 if s == i - 1 + s_off else 0 for s in range(nvars))] = 1
        poly = poly * MultiPoly(nvars, ZZ, terms)
    return poly


def schroeder_sum(n: int) -> int:
    """sum_j 2^j * narayana(n, j): the large Schroeder number."""
    if n < 0:
        raise TravelingError("n must be nonnegative")
    return sum(2**j * narayana(n, j) for j in range(n + 1))


def d_count(n: int, k: int) -> int:
    """Distinct monomials of d_poly(n, k) by direct expansion."""
    poly = d_poly(n, k)
    return poly.num_terms if not poly.is_zero() else 1


def nu_sequence(n_max: int):
    """The doubling-recurrence values nu_n for n = 2..n_max.

    nu_2 = 1 and nu_n = sum_{j>=1} (-1)^(j+1) C(n+1-2j, j) nu_{n-j},
    reading the recurrence index as n - j.
    """
    if n_max < 2:
        return {}
    nu = {2: 1}
    for n in range(3, n_max + 1):
        total = 0
        j = 1
        while n + 1 - 2 * j >= 0 and n - j >= 2:
            total += (-1) ** (j + 1) * comb(n + 1 - 2 * j, j) * nu[n - j]
            j += 1
        nu[n] = total
    return nu


def duplication_report(n_max: int):
    """Comparison rows for the k = 2 mixed products against nu_n / 2.

    Returns rows (n, nu_n, nu_n / 2, N(D_{n-2,2}), N(D_{n-3,2})).  The
    direct-index pairing (nu_n/2 with N(D_{n-2,2})) never matches; the
    shifted pairing N(D_{n-3,2}) matches for n <= 9 and then diverges
    (at n = 10: 27477 vs 27466), so the table is emitted for inspection
    rather than asserted.
    """
    nu = nu_sequence(n_max)
    d_cache = {m: d_count(m, 2) for m in range(0, n_max - 1)}
    rows = []
    for n in range(3, n_max + 1):
        half = Fraction(nu[n], 2)
        half_str = str(half.numerator) if half.denominator == 1 else str(half)
        rows.append((
            n,
            nu[n],
            half_str,
            d_cache.get(n - 2),
            d_cache.get(n - 3),
        ))
    return rows
