"""Lattice-path, polytope, and distinct-monomial counting.

The central objects: ballot-bounded integer sequences K_n (partial sums
k_1 + ... + k_i <= i, total n, |K_n| = Catalan), the distinct-monomial
count of products of nested variable sums prod (x_1 + ... + x_{part_i}),
the prefix-sum polytope with bounds t_n + ... + t_{n-i+1}, and the path
counts under periodically shifting staircase boundaries.  All counts are
exact integers, cross-checkable against the brute-force oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinat import catalan, gbinom, multichoose
from .mpoly import ZZ, MultiPoly

DEFAULT_ENUM_CAP = 15


class LatticeError(ValueError):
    pass


# -- ballot-bounded sequences ---------------------------------------------------


def draconian_sequences(n: int, cap: int = DEFAULT_ENUM_CAP):
    """All k in N^n with k_1 + ... + k_i <= i and sum k = n, lexicographic.

    There are Catalan(n) of them.
    """
    if n < 0:
        raise LatticeError("n must be nonnegative")
    if n > cap:
        raise LatticeError(f"n = {n} exceeds the enumeration cap {cap}")
    out = []

    def rec(prefix, psum, remaining):
        i = len(prefix)
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # k_i can be 0 .. min(i+1 - psum, remaining); feasibility prune:
        # the remaining positions can absorb at most n - everything placed
        for v in range(min(i + 1 - psum, remaining) + 1):
            rec(prefix + [v], psum + v, remaining - v)

    rec([], 0, n)
    return out


def lpath_sequences(n: int, t: int):
    """The set L_{n,t}: k in N^n with k_1+...+k_j <= t*j - 1 and sum = t*n - 1."""
    if n < 1 or t < 1:
        raise LatticeError("need n, t >= 1")
    out = []
    total = t * n - 1

    def rec(prefix, psum, remaining):
        j = len(prefix)
        if j == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(t * (j + 1) - 1 - psum, remaining) + 1):
            rec(prefix + [v], psum + v, remaining - v)

    rec([], 0, total)
    return out


# -- distinct monomials of nested-sum products ------------------------------------


def nested_sum_product(parts) -> MultiPoly:
    """The polynomial prod_i (x_1 + ... + x_{parts_i}) over the integers."""
    parts = list(parts)
    k = max(parts) if parts else 1
    poly = MultiPoly.one(k, ZZ)
    for lam in parts:
        if lam < 0:
            raise LatticeError("parts must be nonnegative")
        if lam == 0:
            return MultiPoly.zero(k, ZZ)
        s = MultiPoly(k, ZZ, {
            tuple(1 if j == i else 0 for j in range(k)): 1 for i in range(lam)
        })
        poly = poly * s
    return poly


def distinct_monomial_count(parts) -> int:
    """Number of distinct monomials in prod (x_1 + ... + x_{parts_i}).

    parts must be weakly decreasing (a partition shape).  Evaluates the
    closed sum over ballot sequences: for each k in K_n the product of
    multichoose(parts_i - parts_{i+1}, k_i).
    """
    parts = list(parts)
    n = len(parts)
    if any(parts[i] < parts[i + 1] for i in range(n - 1)):
        raise LatticeError("parts must be weakly decreasing")
    if any(p < 0 for p in parts):
        raise LatticeError("parts must be nonnegative")
    ext = parts + [0]
    drops = [ext[i] - ext[i + 1] for i in range(n)]
    total = 0
    for k in draconian_sequences(n):
        prod = 1
        for drop, ki in zip(drops, k):
            prod *= multichoose(drop, ki)
            if prod == 0:
                break
        total += prod
    return total


def monomial_count_recurrence_check(parts, i: int) -> bool:
    """Check the split recurrence for incrementing part i (1-based).

    N(lambda with lambda_i + 1) must equal N(lambda) plus the product of
    the counts of the two independent subshapes created by the increment.
    """
    parts = list(parts)
    n = len(parts)
    if not 1 <= i <= n:
        raise LatticeError("index out of range")
    bumped = parts[:]
    bumped[i - 1] += 1
    if i > 1 and bumped[i - 1] > parts[i - 2]:
        raise LatticeError("increment breaks monotonicity")
    lam_i = parts[i - 1]
    left = [parts[j] - lam_i for j in range(i - 1)] + [1]
    right = parts[i:]
    lhs = distinct_monomial_count(bumped)
    rhs = distinct_monomial_count(parts) + distinct_monomial_count(
        left
    ) * distinct_monomial_count(right)
    return lhs == rhs


def catalan_inversion(n: int) -> int:
    """Alternating-sum inversion sum_j (-1)^(j+1) C(n+2-j, j) Catalan(n-j).

    Equals Catalan(n) for n >= 2 (direct evaluation shows the identity
    fails at n = 1, where it yields 2).
    """
    if n < 1:
        raise LatticeError("n must be >= 1")
    total = 0
    j = 1
    while j <= n:
        term = comb(n + 2 - j, j) if n + 2 - j >= 0 else 0
        if term == 0 and n + 2 - j < j:
            break
        total += (-1) ** (j + 1) * term * catalan(n - j)
        j += 1
    return total


# -- the prefix-sum polytope ---------------------------------------------------


def _prefix_bounds(ts):
    """bounds_i = t_n + ... + t_{n-i+1} (reversed partial sums)."""
    rev = list(reversed(ts))
    out = []
    acc = 0
    for v in rev:
        acc += v
        out.append(acc)
    return out


def ps_points_direct(ts) -> int:
    """Count integer points y >= 0 with y_1 + ... + y_i <= t_n + ... + t_{n-i+1}."""
    n = len(ts)
    if n == 0:
        return 1
    bounds = _prefix_bounds(ts)
    if min(bounds) < 0:
        return 0

    count = 0

    def rec(i, psum):
        nonlocal count
        if i == n:
            count += 1
            return
        limit = bounds[i] - psum
        if limit < 0:
            return
        for y in range(limit + 1):
            rec(i + 1, psum + y)

    rec(0, 0)
    return count


def ps_interior_direct(ts) -> int:
    """Count integer points with y_i >= 1 and strict prefix-sum inequalities."""
    n = len(ts)
    if n == 0:
        return 1
    bounds = _prefix_bounds(ts)

    count = 0

    def rec(i, psum):
        nonlocal count
        if i == n:
            count += 1
            return
        limit = bounds[i] - 1 - psum
        if limit < 1:
            return
        for y in range(1, limit + 1):
            rec(i + 1, psum + y)

    rec(0, 0)
    return count


def ps_points_formula(ts) -> int:
    """The ballot-sum formula: sum over K_n of multichoose(t_n + 1, k_n)
    times prod_{i<n} multichoose(t_i, k_i)."""
    ts = list(ts)
    n = len(ts)
    if n == 0:
        return 1
    if any(t < 0 for t in ts):
        raise LatticeError("t entries must be nonnegative")
    total = 0
    for k in draconian_sequences(n):
        prod = multichoose(ts[-1] + 1, k[-1])
        for i in range(n - 1):
            if prod == 0:
                break
            prod *= multichoose(ts[i], k[i])
        total += prod
    return total


def ps_lattice_points(ts, mode: str = "formula") -> int:
    if mode == "formula":
        return ps_points_formula(ts)
    if mode == "direct":
        return ps_points_direct(ts)
    raise LatticeError(f"unknown mode {mode!r}")


def ps_interior_transform(ms):
    """The t-vector whose polytope counts the interior points of Pi_n(m).

    Shifting y by 1 and tightening the inequalities turns the interior of
    Pi_n(m_1, ..., m_n) into Pi_n(m_1 - 1, ..., m_{n-1} - 1, m_n - 2).
    """
    ms = list(ms)
    if not ms:
        return []
    return [m - 1 for m in ms[:-1]] + [ms[-1] - 2]


# -- staircase-boundary path counts ----------------------------------------------


def staircase_parts(n: int, s: int, t: int):
    """The partition encoding the shifted product: t-1 parts of s*n, then
    t parts of s*(n-j) for j = 1..n-1."""
    parts = [s * n] * (t - 1)
    for j in range(1, n):
        parts.extend([s * (n - j)] * t)
    return parts


def shifted_path_poly(n: int, s: int, t: int) -> MultiPoly:
    """(x_1+...+x_{sn})^(t-1) * prod_{j=1}^{n-1} (x_1+...+x_{sj})^t over ZZ."""
    parts = [s * n] * (t - 1)
    for j in range(1, n):
        parts.extend([s * j] * t)
    return nested_sum_product(parts)


def shifted_path_count(n: int, s: int, t: int, mode: str = "closed") -> int:
    """Paths to (sn-1, tn-1) weakly beneath the shifted staircase boundary.

    closed: C((s+t)n - 2, sn - 1) / n  (symmetric in s and t since the
            complementary index is tn - 1).
    Lsum:   sum over L_{n,t} of prod C(k_i + s - 1, k_i).
    Ksum:   distinct monomials of the staircase partition product.
    All three agree for every n >= 1, and equal the direct path count
    under the boundary (path_count_under_boundary).
    """
    if n < 1 or s < 1 or t < 1:
        raise LatticeError("need n, s, t >= 1")
    if mode == "closed":
        num = comb((s + t) * n - 2, s * n - 1)
        assert num % n == 0
        return num // n
    if mode == "Lsum":
        total = 0
        for k in lpath_sequences(n, t):
            prod = 1
            for ki in k:
                prod *= comb(ki + s - 1, ki)
                if prod == 0:
                    break
            total += prod
        return total
    if mode == "Ksum":
        return distinct_monomial_count(staircase_parts(n, s, t))
    raise LatticeError(f"unknown mode {mode!r}")


def path_count_under_boundary(n: int, s: int, t: int) -> int:
    """Direct DP count of monotone paths to (sn-1, tn-1) weakly beneath
    U^(t-1) (R^s U^t)^(n-1) R^(s-1); the independent check of the closed form."""
    width, height = s * n - 1, t * n - 1
    # maximum height the boundary attains at each x coordinate
    bound = [0] * (width + 1)
    x = y = 0
    for step in "U" * (t - 1) + ("R" * s + "U" * t) * (n - 1) + "R" * (s - 1):
        if step == "U":
            y += 1
        else:
            bound[x] = y
            x += 1
    bound[width] = y
    col = [0] * (height + 1)
    for yy in range(min(bound[0], height) + 1):
        col[yy] = 1
    for xx in range(1, width + 1):
        new = [0] * (height + 1)
        for yy in range(min(bound[xx], height) + 1):
            new[yy] = col[yy] + (new[yy - 1] if yy else 0)
        col = new
    return col[height]


# -- polynomial identity over ballot sequences -------------------------------------


def noncrossing_identity(ms):
    """Evaluate both sides of the matching identity over K_n.

    lhs = sum_{k in K_n} C(m_n, k_n) prod_{i<n} C(m_i + 1, k_i)
    rhs = sum_{k in K_n} prod_i C(m_i + k_i - 1, k_i)
    Returns (lhs, rhs, lhs == rhs); the identity holds as a polynomial
    identity, so equality is expected for arbitrary integer vectors.
    """
    ms = list(ms)
    n = len(ms)
    lhs = rhs = 0
    for k in draconian_sequences(n):
        term = gbinom(ms[-1], k[-1])
        for i in range(n - 1):
            term *= gbinom(ms[i] + 1, k[i])
        lhs += term
        term = 1
        for i in range(n):
            term *= gbinom(ms[i] + k[i] - 1, k[i])
        rhs += term
    return lhs, rhs, lhs == rhs


# -- special product families -----------------------------------------------------


def ascending_product_poly(n: int, m: int) -> MultiPoly:
    """prod_{j=1}^{n-1} (x_0 + x_1 + ... + x_{j+m}), variables x_0..x_{n-1+m}."""
    k = n + m
    poly = MultiPoly.one(k, ZZ)
    for j in range(1, n):
        s = MultiPoly(k, ZZ, {
            tuple(1 if idx == i else 0 for idx in range(k)): 1
            for i in range(j + m + 1)
        })
        poly = poly * s
    return poly


def ascending_product_count(n: int, m: int) -> int:
    """Distinct monomials of ascending_product_poly: (m+2)/(2n+m) C(2n+m, n+m+1).

    Also the number of standard Young tableaux of shape (n+m, n-1).
    """
    if n < m or m < 0:
        raise LatticeError("need n >= m >= 0")
    num = (m + 2) * comb(2 * n + m, n + m + 1)
    assert num % (2 * n + m) == 0
    return num // (2 * n + m)


def fuss_catalan(n: int, k: int) -> int:
    """C((k+1)n, n) / (kn + 1)."""
    num = comb((k + 1) * n, n)
    assert num % (k * n + 1) == 0
    return num // (k * n + 1)


def fuss_product_poly(n: int, k: int) -> MultiPoly:
    """prod_{j=1}^{n-1} (x_0 + ... + x_j)^k, variables x_0..x_{n-1}."""
    kv = max(n, 1)
    poly = MultiPoly.one(kv, ZZ)
    for j in range(1, n):
        s = MultiPoly(kv, ZZ, {
            tuple(1 if idx == i else 0 for idx in range(kv)): 1
            for i in range(j + 1)
        })
        for _ in range(k):
            poly = poly * s
    return poly


def staircase_power_poly(n: int, k: int) -> MultiPoly:
    """prod_{j=1}^{n-1} (x_0 + ... + x_j)^(j+k), variables x_0..x_{n-1}."""
    kv = max(n, 1)
    poly = MultiPoly.one(kv, ZZ)
    for j in range(1, n):
        s = MultiPoly(kv, ZZ, {
            tuple(1 if idx == i else 0 for idx in range(kv)): 1
            for i in range(j + 1)
        })
        for _ in range(j + k):
            poly = poly * s
    return poly


def _triangle_matrix(size: int, shift: int):
    """Lower-triangular matrix with entries C(C(i,2)-C(j,2)+i-j+shift, i-j)."""
    return [
        [
            comb(comb(i, 2) - comb(j, 2) + i - j + shift, i - j) if j <= i else 0
            for j in range(size)
        ]
        for i in range(size)
    ]


def ratio_matrix(size: int):
    """R = M N^{-1} over exact rationals for the two triangular binomial
    matrices (shift 3 and shift 2); both are unitriangular so R is exact."""
    M = _triangle_matrix(size, 3)
    N = _triangle_matrix(size, 2)
    # invert the unitriangular N by forward substitution
    inv = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        inv[j][j] = Fraction(1, N[j][j])
        for i in range(j + 1, size):
            acc = Fraction(0)
            for t in range(j, i):
                acc += N[i][t] * inv[t][j]
            inv[i][j] = -acc / N[i][i]
    R = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = Fraction(0)
            for t in range(j, i + 1):
                acc += M[i][t] * inv[t][j]
            R[i][j] = acc
    return R


def weighted_polytope_sum(n: int, k: int) -> int:
    """sum over Pi_{n-1}(t_1 - 1, t_2, ..., t_{n-1}) of (1 + y_{n-1}),
    with t_i = k + n - i; the polytope-side count for the staircase powers."""
    if n < 2:
        return 1
    ts = [k + n - i for i in range(1, n)]
    ts[0] -= 1
    bounds = _prefix_bounds(ts)
    total = 0

    def rec(i, psum, last):
        nonlocal total
        if i == len(ts):
            total += 1 + last
            return
        limit = bounds[i] - psum
        for y in range(limit + 1):
            rec(i + 1, psum + y, y)

    rec(0, 0, 0)
    return total


def staircase_grid_report(n_max: int, k_max: int):
    """Rows (n, k, oracle, R(n,k), R(n+k,k), weighted sum) for the staircase
    powers.

    The printed recipe leaves the index origins open; empirically the
    oracle count N(S_{n,k}) equals the ratio-matrix entry R(n+k, k)
    (0-indexed), while the literal R(n,k) and the weighted polytope sum
    under the direct reading do not line up.  The grid is reported so the
    correspondence stays visible.
    """
    R = ratio_matrix(n_max + k_max + 2)

    def fmt(entry):
        return (
            str(entry.numerator)
            if entry.denominator == 1
            else f"{entry.numerator}/{entry.denominator}"
        )

    rows = []
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            poly = staircase_power_poly(n, k)
            count = poly.num_terms if not poly.is_zero() else 1
            rows.append(
                (n, k, count, fmt(R[n][k]), fmt(R[n + k][k]),
                 weighted_polytope_sum(n, k))
            )
    return rows
