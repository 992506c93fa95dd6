"""Sparse multivariate polynomials over F_q or the integers.

Terms live in a dict mapping exponent tuples to nonzero coefficients.
Field coefficients are stored as integer encodings (see ffield); integer
coefficients are plain ints.  Values are never mutated after
construction, so polynomials can be shared freely.
"""

from __future__ import annotations

import itertools

from .ffield import Field

DEFAULT_TERM_BUDGET = 10**7


class BudgetError(RuntimeError):
    """A computation would exceed the configured term budget."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class IntegerRing:
    """Coefficient-ring protocol for plain integers."""

    char = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


class MultiPoly:
    __slots__ = ("k", "ring", "terms")

    def __init__(self, k: int, ring, terms=None, _clean=False):
        self.k = k
        self.ring = ring
        if terms is None:
            terms = {}
        if _clean:
            self.terms = terms
        else:
            clean = {}
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != k or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp} for k={k}")
                if c:
                    clean[exp] = ring.add(clean[exp], c) if exp in clean else c
                    if not clean[exp]:
                        del clean[exp]
            self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, k, ring):
        return cls(k, ring, {}, _clean=True)

    @classmethod
    def constant(cls, k, ring, c):
        if not c:
            return cls.zero(k, ring)
        return cls(k, ring, {(0,) * k: c}, _clean=True)

    @classmethod
    def one(cls, k, ring):
        return cls.constant(k, ring, ring.one)

    @classmethod
    def variable(cls, i, k, ring):
        if not 1 <= i <= k:
            raise ValueError(f"variable index {i} out of range 1..{k}")
        exp = tuple(1 if j == i - 1 else 0 for j in range(k))
        return cls(k, ring, {exp: ring.one}, _clean=True)

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def var_degrees(self):
        """Componentwise max of the exponent vectors (the degree box)."""
        if not self.terms:
            raise ValueError("var_degrees of the zero polynomial")
        degs = [0] * self.k
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e > degs[i]:
                    degs[i] = e
        return tuple(degs)

    def coeff_census(self):
        """Map each distinct nonzero coefficient value to its multiplicity."""
        census = {}
        for c in self.terms.values():
            census[c] = census.get(c, 0) + 1
        return census

    def nonzero_count(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other):
        if not isinstance(other, MultiPoly):
            raise TypeError("expected a MultiPoly")
        if self.k != other.k or self.ring != other.ring:
            raise ValueError("mismatched variable count or coefficient ring")

    def __add__(self, other):
        self._check_compatible(other)
        ring = self.ring
        out = dict(self.terms)
        for exp, c in other.terms.items():
            if exp in out:
                s = ring.add(out[exp], c)
                if s:
                    out[exp] = s
                else:
                    del out[exp]
            else:
                out[exp] = c
        return MultiPoly(self.k, ring, out, _clean=True)

    def __neg__(self):
        ring = self.ring
        return MultiPoly(
            self.k, ring, {e: ring.neg(c) for e, c in self.terms.items()}, _clean=True
        )

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, budget: int | None = None):
        self._check_compatible(other)
        if budget is None:
            budget = DEFAULT_TERM_BUDGET
        ring = self.ring
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        radd = ring.add
        rmul = ring.mul
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                exp = tuple(map(sum, zip(e1, e2)))
                c = rmul(c1, c2)
                if exp in out:
                    out[exp] = radd(out[exp], c)
                else:
                    out[exp] = c
            if len(out) > budget:
                raise BudgetError(f"term budget {budget} exceeded in multiplication")
        out = {e: c for e, c in out.items() if c}
        return MultiPoly(self.k, ring, out, _clean=True)

    def __mul__(self, other):
        return self.mul(other)

    def frobenius(self):
        """Over a field of characteristic p: f -> f^p, exactly.

        Exponents scale by p and coefficients map through a -> a^p.
        """
        ring = self.ring
        if not isinstance(ring, Field):
            raise ValueError("frobenius needs a finite-field coefficient ring")
        p = ring.p
        out = {
            tuple(e * p for e in exp): ring.frobenius(c)
            for exp, c in self.terms.items()
        }
        return MultiPoly(self.k, ring, out, _clean=True)

    def pow(self, n: int, budget: int | None = None):
        """f^n, using the base-p digit decomposition over char-p fields."""
        if n < 0:
            raise ValueError("negative exponent")
        if n == 0:
            return MultiPoly.one(self.k, self.ring)
        ring = self.ring
        if isinstance(ring, Field):
            p = ring.p
            result = MultiPoly.one(self.k, ring)
            base = self
            while n:
                digit = n % p
                n //= p
                piece = MultiPoly.one(self.k, ring)
                for _ in range(digit):
                    piece = piece.mul(base, budget)
                result = result.mul(piece, budget)
                if n:
                    base = base.frobenius()
            return result
        result = MultiPoly.one(self.k, ring)
        base = self
        while n:
            if n & 1:
                result = result.mul(base, budget)
            n >>= 1
            if n:
                base = base.mul(base, budget)
        return result

    def __pow__(self, n: int):
        return self.pow(n)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.k == other.k
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, self.ring, frozenset(self.terms.items())))

    # -- output ----------------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded lexicographic order of the exponent vectors."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == self.ring.one:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)


def dense_coeffs(f: MultiPoly):
    """Dense constant-first coefficient list of a univariate polynomial."""
    if f.k != 1:
        raise ValueError("dense_coeffs needs a univariate polynomial")
    if not f.terms:
        return []
    d = max(e[0] for e in f.terms)
    out = [0] * (d + 1)
    for (e,), c in f.terms.items():
        out[e] = c
    return out


def from_dense(coeffs, ring) -> MultiPoly:
    """Univariate MultiPoly from a dense constant-first coefficient list."""
    return MultiPoly(1, ring, {(i,): c for i, c in enumerate(coeffs) if c})


def poly_mul(a: MultiPoly, b: MultiPoly, budget: int | None = None) -> MultiPoly:
    return a.mul(b, budget)


def poly_pow(f: MultiPoly, n: int, budget: int | None = None) -> MultiPoly:
    return f.pow(n, budget)


def coeff_census(f: MultiPoly):
    census = f.coeff_census()
    return census, sum(census.values())


# -- parsing -------------------------------------------------------------------
#
# Grammar: poly  := [sign] term ((+|-) term)*
#          term  := factor ('*' factor)*
#          factor:= INT | var
#          var   := 'x' [INT] ['^' INT]   (bare 'x' only when k = 1)
#
# Integer literals over F_p reduce mod p; over an extension field they are
# element encodings and must lie in [0, q).  Whitespace is ignored.


def parse_poly(text: str, k: int, ring) -> MultiPoly:
    s = text
    n = len(s)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def read_int():
        nonlocal pos
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an integer", start)
        return int(s[start:pos])

    def coeff_from_int(c: int):
        if isinstance(ring, Field):
            if ring.r == 1:
                return c % ring.p
            if not 0 <= c < ring.q:
                raise ParseError(
                    f"coefficient {c} is not an element encoding of F_{ring.q}", pos
                )
            return c
        return c

    def read_factor():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        ch = s[pos]
        if ch.isdigit():
            return ("coeff", coeff_from_int(read_int()))
        if ch == "x":
            pos += 1
            if pos < n and s[pos].isdigit():
                idx = read_int()
            else:
                if k != 1:
                    raise ParseError("bare 'x' is only allowed when k = 1", pos - 1)
                idx = 1
            if not 1 <= idx <= k:
                raise ParseError(f"variable x{idx} out of range 1..{k}", pos)
            e = 1
            if pos < n and s[pos] == "^":
                pos += 1
                e = read_int()
            return ("var", idx, e)
        raise ParseError(f"unexpected character {ch!r}", pos)

    def read_term(sign: int) -> MultiPoly:
        nonlocal pos
        coeff = ring.one
        exps = [0] * k
        while True:
            kind = read_factor()
            if kind[0] == "coeff":
                coeff = ring.mul(coeff, kind[1])
            else:
                _, idx, e = kind
                exps[idx - 1] += e
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
                continue
            break
        if sign < 0:
            coeff = ring.neg(coeff)
        if not coeff:
            return MultiPoly.zero(k, ring)
        return MultiPoly(k, ring, {tuple(exps): coeff})

    skip_ws()
    if pos >= n:
        raise ParseError("empty polynomial", pos)
    sign = 1
    if s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    result = read_term(sign)
    while True:
        skip_ws()
        if pos >= n:
            break
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise ParseError(f"unexpected character {s[pos]!r}", pos)
        pos += 1
        result = result + read_term(sign)
    return result


def all_monomials_upto(bounds):
    """All exponent tuples e with 0 <= e_i <= bounds_i, in lexicographic order."""
    return list(itertools.product(*(range(b + 1) for b in bounds)))
