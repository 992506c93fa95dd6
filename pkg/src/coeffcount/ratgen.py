"""Exact rational generating functions from integer sequences.

Berlekamp-Massey over the rationals recovers the minimal linear
recurrence; clearing denominators gives a numerator/denominator pair of
integer polynomials whose series expansion reproduces the sequence.  All
arithmetic is exact (ints and Fractions), never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class RecurrenceError(ValueError):
    pass


# -- small dense integer-polynomial helpers (ascending coefficients) ----------


def padd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def pneg(a):
    return [-c for c in a]


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


@dataclass(frozen=True)
class LinearRecurrence:
    """a_n = sum_{i=1..order} coeffs[i-1] * a_{n-i}, with the starting terms."""

    coeffs: tuple
    initial: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def fits(self, seq) -> bool:
        d = self.order
        for n in range(d, len(seq)):
            if sum(c * seq[n - i - 1] for i, c in enumerate(self.coeffs)) != seq[n]:
                return False
        return True

    def extend(self, terms: int):
        """First `terms` values of the sequence the recurrence generates."""
        out = list(self.initial[:terms])
        while len(out) < terms:
            val = Fraction(sum(c * out[-i - 1] for i, c in enumerate(self.coeffs)))
            if val.denominator != 1:
                raise RecurrenceError("non-integer extension")
            out.append(int(val))
        return out


@dataclass(frozen=True)
class RationalGF:
    """num(t)/den(t) with integer coefficients and den[0] = 1."""

    num: tuple
    den: tuple

    @staticmethod
    def make(num, den) -> "RationalGF":
        num = list(num)
        den = list(den)
        while num and num[-1] == 0:
            num.pop()
        while den and den[-1] == 0:
            den.pop()
        if not den:
            raise ValueError("zero denominator")
        g = gcd(_content(num), _content(den))
        if g > 1:
            num = [c // g for c in num]
            den = [c // g for c in den]
        if den[0] < 0:
            num = [-c for c in num]
            den = [-c for c in den]
        if den[0] != 1:
            raise ValueError(f"denominator constant term {den[0]} != 1")
        return RationalGF(tuple(num), tuple(den))

    def expand(self, terms: int):
        """First `terms` Taylor coefficients, exact integers."""
        out = []
        num, den = self.num, self.den
        for m in range(terms):
            val = num[m] if m < len(num) else 0
            for i in range(1, min(m, len(den) - 1) + 1):
                val -= den[i] * out[m - i]
            out.append(val)
        return out

    def __add__(self, other):
        return RationalGF.make(
            padd(pmul(list(self.num), list(other.den)),
                 pmul(list(other.num), list(self.den))),
            pmul(list(self.den), list(other.den)),
        )

    def __mul__(self, other):
        return RationalGF.make(
            pmul(list(self.num), list(other.num)),
            pmul(list(self.den), list(other.den)),
        )

    def __repr__(self):
        return f"RationalGF(num={list(self.num)}, den={list(self.den)})"


def genfun_expand(gf: RationalGF, terms: int):
    return gf.expand(terms)


def genfun_equal_as_series(a: RationalGF, b: RationalGF, terms: int | None = None):
    """True iff a and b agree as power series.

    Cross-multiplied numerators decide it exactly; a term count may be
    passed for symmetry with the series view but does not change the
    answer beyond the decisive degree.
    """
    lhs = pmul(list(a.num), list(b.den))
    rhs = pmul(list(b.num), list(a.den))
    if terms is not None:
        lhs = lhs[:terms]
        rhs = rhs[:terms]
    return lhs == rhs


def _berlekamp_massey(seq):
    """Minimal connection polynomial over Q: returns (L, C) with C[0] = 1.

    The recurrence is a_n = -sum_{i=1..L} C[i] a_{n-i}, valid for every
    index of the supplied sequence.
    """
    C = [Fraction(1)]
    B = [Fraction(1)]
    L = 0
    m = 1
    b = Fraction(1)
    for n, s in enumerate(seq):
        d = Fraction(s)
        for i in range(1, L + 1):
            d += C[i] * seq[n - i]
        if d == 0:
            m += 1
            continue
        if 2 * L <= n:
            T = C[:]
            coef = d / b
            need = len(B) + m
            if len(C) < need:
                C = C + [Fraction(0)] * (need - len(C))
            for j, y in enumerate(B):
                C[j + m] -= coef * y
            L = n + 1 - L
            B = T
            b = d
            m = 1
        else:
            coef = d / b
            need = len(B) + m
            if len(C) < need:
                C = C + [Fraction(0)] * (need - len(C))
            for j, y in enumerate(B):
                C[j + m] -= coef * y
            m += 1
    while len(C) > L + 1:
        C.pop()
    while len(C) < L + 1:
        C.append(Fraction(0))
    return L, C


def fit_recurrence(seq, max_order: int) -> LinearRecurrence:
    """Minimal-order linear recurrence fitting every term of seq.

    Needs at least 2*max_order + 1 terms; raises RecurrenceError when no
    recurrence of order <= max_order fits.
    """
    seq = list(seq)
    if len(seq) < 2 * max_order + 1:
        raise RecurrenceError(
            f"need at least {2 * max_order + 1} terms to certify order {max_order}"
        )
    L, C = _berlekamp_massey(seq)
    if L > max_order:
        raise RecurrenceError(f"no recurrence of order <= {max_order} fits")
    coeffs = tuple(-c for c in C[1:])
    rec = LinearRecurrence(coeffs, tuple(seq[:L]))
    if not rec.fits(seq):
        raise RecurrenceError("recurrence fit failed on the supplied terms")
    return rec


def seq_to_genfun(seq, rec: LinearRecurrence) -> RationalGF:
    """Generating function from a recurrence and the sequence it fits.

    The denominator 1 - sum c_i t^i is cleared to integer coefficients; by
    Fatou's lemma the minimal form of an integer series has constant term
    1 again, which is asserted.
    """
    seq = list(seq)
    d = rec.order
    if not rec.fits(seq):
        raise RecurrenceError("recurrence does not fit the sequence")
    lcm = 1
    for c in rec.coeffs:
        c = Fraction(c)
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    den = [lcm]
    for c in rec.coeffs:
        c = Fraction(c) * lcm
        den.append(-int(c))
    num = []
    for j in range(d):
        val = 0
        for i in range(j + 1):
            if i < len(den) and j - i < len(seq):
                val += den[i] * seq[j - i]
        num.append(val)
    return RationalGF.make(num, den)


def fit_repunit_genfun(automaton, alpha, base_digit: int = 1, extra: int = 10):
    """Provably-correct generating function of an automaton's repunit counts.

    The iterate vectors of the digit matrix become linearly dependent at
    some length D (at most the state count); the scalar sequence then
    satisfies an order-D recurrence valid from the first term, so
    Berlekamp-Massey on 2D+1 terms is certified minimal.  `extra` extra
    terms are computed and re-verified on top.
    Returns (sequence, recurrence, generating function).
    """
    D = automaton.krylov_order(base_digit)
    terms = 2 * D + 1 + extra
    seq = automaton.repunit_counts(alpha, terms, base_digit)
    rec = fit_recurrence(seq, max_order=D)
    gf = seq_to_genfun(seq, rec)
    if gf.expand(terms) != seq:
        raise RecurrenceError("generating function failed to reproduce the counts")
    return seq, rec, gf
