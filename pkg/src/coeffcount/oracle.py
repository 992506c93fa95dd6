"""Brute-force coefficient counting, kept independent of the fast paths.

Everything here expands products by plain repeated multiplication: no
Frobenius shortcut, no recurrences, no closed forms.  Agreement between
these counts and the optimized modules is what the test suite leans on.

Exponent vectors are packed into single integers (fixed bit width per
variable, wide enough for the full product) purely to make dict keys
cheap; the arithmetic is still the schoolbook convolution.
"""

from __future__ import annotations

from .ffield import Field
from .mpoly import DEFAULT_TERM_BUDGET, BudgetError, MultiPoly


def _pack_widths(bounds):
    """Bit width per variable, sized for exponents up to bounds_i."""
    return [max(int(b).bit_length(), 1) for b in bounds]


def _pack_terms(poly: MultiPoly, widths):
    shifts = []
    acc = 0
    for w in widths:
        shifts.append(acc)
        acc += w
    packed = []
    for exp, c in poly.terms.items():
        key = 0
        for e, sh in zip(exp, shifts):
            key |= e << sh
        packed.append((key, c))
    packed.sort()
    return packed


def _census_of(packed_terms_values):
    census = {}
    for c in packed_terms_values:
        census[c] = census.get(c, 0) + 1
    return census


def _mul_packed(acc: dict, factor, ring, budget: int) -> dict:
    radd = ring.add
    rmul = ring.mul
    out: dict = {}
    get = out.get
    for fe, fc in factor:
        for ae, ac in acc.items():
            key = ae + fe
            prev = get(key)
            if prev is None:
                out[key] = rmul(ac, fc)
            else:
                out[key] = radd(prev, rmul(ac, fc))
        if len(out) > budget:
            raise BudgetError(f"term budget {budget} exceeded in oracle expansion")
    return {e: c for e, c in out.items() if c}


def power_census_series(f: MultiPoly, n_max: int, budget: int | None = None):
    """Censuses of f^0, f^1, ..., f^n_max by one repeated-multiplication ladder."""
    if budget is None:
        budget = DEFAULT_TERM_BUDGET
    if f.is_zero():
        return [{f.ring.one: 1}] + [{} for _ in range(n_max)]
    widths = _pack_widths([d * max(n_max, 1) for d in f.var_degrees()])
    factor = _pack_terms(f, widths)
    acc = {0: f.ring.one}
    out = [_census_of(acc.values())]
    for _ in range(n_max):
        acc = _mul_packed(acc, factor, f.ring, budget)
        out.append(_census_of(acc.values()))
    return out


def brute_power_census(f: MultiPoly, n: int, alpha=None, budget: int | None = None):
    """Number of coefficients of f^n equal to alpha (or the full census).

    alpha may be an integer (a field encoding, or a plain integer over ZZ)
    or a FieldElem; with alpha=None the whole census dict is returned.
    """
    census = power_census_series(f, n, budget)[n]
    if alpha is None:
        return census
    if isinstance(f.ring, Field):
        alpha = f.ring.elem(alpha).val
    return census.get(alpha, 0)


def brute_product_census(factors, budget: int | None = None):
    """Expand a product of polynomials left to right; return (N, census)."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    k = factors[0].k
    ring = factors[0].ring
    for g in factors:
        if g.k != k or g.ring != ring:
            raise ValueError("factors must share variable count and ring")
    if budget is None:
        budget = DEFAULT_TERM_BUDGET
    if any(g.is_zero() for g in factors):
        return 0, {}
    bounds = [0] * k
    for g in factors:
        for i, d in enumerate(g.var_degrees()):
            bounds[i] += d
    widths = _pack_widths(bounds)
    acc = {0: ring.one}
    for g in factors:
        acc = _mul_packed(acc, _pack_terms(g, widths), ring, budget)
    census = _census_of(acc.values())
    return len(acc), census
