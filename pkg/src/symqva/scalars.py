"""Exact scalars: polynomials and rational functions in the parameters q, t,
and total-degree truncated power series in the same parameters.

Rationals are :class:`fractions.Fraction`. A monomial ``q^a t^b`` is keyed by
the pair ``(a, b)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd as igcd, isqrt

__all__ = [
    "ParamPoly",
    "RatFunc",
    "ParamSeries",
    "NotExpandableError",
    "as_ratfunc",
    "Q",
    "T",
    "ONE",
    "ZERO",
]


class NotExpandableError(ArithmeticError):
    """Raised when a rational function has a pole at q = t = 0."""


def _nc(c):
    """Store integral rationals as int (faster arithmetic, same value)."""
    if type(c) is int:
        return c
    return c.numerator if c.denominator == 1 else c


def _inv(c):
    return Fraction(1) / c


def _grlex_key(m):
    # graded lex with q < t: total degree, then t-degree
    return (m[0] + m[1], m[1])


# ---------------------------------------------------------------------------
# dense integer polynomials used by the gcd
#
# level 0: list of ints, index = q-degree
# level 1: list of level-0 lists, index = t-degree (t is the outer variable)
# ---------------------------------------------------------------------------

def _strip(f):
    while f and not f[-1]:
        f.pop()
    return f


def _u_content(f):
    return reduce(igcd, f, 0)


def _u_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _u_divexact(f, g):
    """Exact quotient f/g in Z[q], or None."""
    if not g:
        raise ZeroDivisionError
    if len(f) < len(g):
        return [] if not f else None
    r = list(f)
    lc = g[-1]
    dg = len(g) - 1
    quo = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        qc, rem = divmod(c, lc)
        if rem:
            return None
        quo[k - dg] = qc
        for i, gi in enumerate(g):
            r[k - dg + i] -= qc * gi
    if any(r[:dg]):
        return None
    return _strip(quo)


def _u_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _u_sub(f, g):
    n = max(len(f), len(g))
    return _strip([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def _u_prem(f, g):
    """Pseudo-remainder of f by g in Z[q]."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    while len(r) - 1 >= dg and r:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [x * lc for x in r]
        for i, gi in enumerate(g):
            r[shift + i] -= c * gi
        _strip(r)
    return r


def _u_prim(f):
    c = _u_content(f)
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def _u_gcd_prs(f, g):
    """Primitive pseudo-remainder sequence gcd in Z[q] (fallback path)."""
    c = igcd(_u_content(f), _u_content(g))
    f, g = _u_prim(f), _u_prim(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _u_prem(f, g)
        f, g = g, (_u_prim(r) if r else [])
    return [c * x for x in _u_prim(f)]


def _interp_int(h, x):
    """Symmetric base-x digits of the integer h, low to high."""
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return out


def _u_heu_gcd(f, g):
    """Heuristic gcd in Z[q] by evaluation at a large integer."""
    cf, cg = _u_content(f), _u_content(g)
    cont = igcd(cf, cg)
    f = [c // cf for c in f]
    g = [c // cg for c in g]
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        ff, gg = _u_eval(f, x), _u_eval(g, x)
        if ff and gg:
            h = abs(igcd(ff, gg))
            hp = _interp_int(h, x)
            if hp:
                hp = _u_prim(hp)
                if _u_divexact(f, hp) is not None and _u_divexact(g, hp) is not None:
                    return [cont * c for c in hp]
            for cof, main, other in ((ff // h, f, g), (gg // h, g, f)):
                cp = _interp_int(cof, x)
                if not cp:
                    continue
                hq = _u_divexact(main, cp)
                if hq and _u_divexact(other, hq) is not None:
                    return [cont * c for c in _u_prim(hq)]
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return [cont * c for c in _u_gcd_prs(f, g)]


def _u_gcd(f, g):
    if not f:
        return _u_prim(g) if g else []
    if not g:
        return _u_prim(f)
    if len(f) == 1 or len(g) == 1:
        return [igcd(_u_content(f), _u_content(g))]
    return _u_heu_gcd(f, g)


# level-1 (bivariate) helpers

def _b_content(f):
    """gcd of the t-coefficients (a polynomial in q, integer content included)."""
    c = []
    for coeff in f:
        if coeff:
            c = _u_gcd(c, coeff) if c else list(coeff)
            if c == [1] or c == [-1]:
                return [1]
    if not c:
        return [0]
    return c if c[-1] > 0 else [-x for x in c]


def _b_divexact(f, g):
    """Exact quotient in Z[q][t], or None."""
    if len(f) < len(g):
        return [] if not f else None
    r = [list(c) for c in f]
    dg = len(g) - 1
    lc = g[-1]
    quo = [[] for _ in range(len(f) - dg)]
    for k in range(len(f) - 1, dg - 1, -1):
        c = _strip(r[k])
        if not c:
            continue
        qc = _u_divexact(c, lc)
        if qc is None:
            return None
        quo[k - dg] = qc
        for i, gi in enumerate(g):
            r[k - dg + i] = _u_sub(r[k - dg + i], _u_mul(qc, gi))
    if any(_strip(c) for c in r[:dg]):
        return None
    while quo and not quo[-1]:
        quo.pop()
    return quo


def _b_mul_u(f, c):
    return [_u_mul(x, c) for x in f]


def _b_prem(f, g):
    r = [list(c) for c in f]
    dg = len(g) - 1
    lc = g[-1]
    while r and len(r) - 1 >= dg:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [_u_mul(x, lc) for x in r]
        for i, gi in enumerate(g):
            r[shift + i] = _u_sub(r[shift + i], _u_mul(c, gi))
        while r and not r[-1]:
            r.pop()
    return r


def _b_prim(f):
    c = _b_content(f)
    if f[-1][-1] < 0:
        c = [-x for x in c]
    return [_u_divexact(x, c) if x else [] for x in f]


def _b_gcd_prs(f, g):
    f, g = _b_prim(f), _b_prim(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _b_prem(f, g)
        f, g = g, (_b_prim(r) if r else [])
    return _b_prim(f)


def _b_eval(f, x):
    """Evaluate the outer variable t at the integer x."""
    n = max(len(c) for c in f)
    out = [0] * n
    for coeff in reversed(f):
        out = [o * x for o in out]
        for i, c in enumerate(coeff):
            out[i] += c
    return _strip(out)


def _b_interp(h, x):
    """Rebuild t from symmetric base-x digits of the q-polynomial h."""
    out = []
    half = x // 2
    h = list(h)
    while any(h):
        digit = []
        for i, c in enumerate(h):
            d = c % x
            if d > half:
                d -= x
            digit.append(d)
            h[i] = (c - d) // x
        out.append(_strip(digit))
        _strip(h)
    while out and not out[-1]:
        out.pop()
    return out


def _b_norm(f):
    return max(abs(c) for coeff in f for c in coeff)


def _b_heu_gcd_prim(f, g):
    """gcd of two primitive polynomials in Z[q][t]; heuristic with PRS fallback."""
    fn, gn = _b_norm(f), _b_norm(g)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1][-1]), gn // abs(g[-1][-1])) + 2)
    for _ in range(6):
        ff, gg = _b_eval(f, x), _b_eval(g, x)
        if ff and gg:
            h = _u_gcd(ff, gg)
            hb = _b_interp(h, x)
            if hb:
                hb = _b_prim(hb)
                if _b_divexact(f, hb) is not None and _b_divexact(g, hb) is not None:
                    return hb
            for main, other, ev in ((f, g, ff), (g, f, gg)):
                cof = _u_divexact(ev, h)
                cb = _b_interp(cof, x) if cof else []
                if not cb:
                    continue
                hq = _b_divexact(main, cb)
                if hq and _b_divexact(other, hq) is not None:
                    return _b_prim(hq)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _b_gcd_prs(f, g)


def _to_dense(poly_terms):
    """Integer-valued dict {(a, b): int} -> level-1 dense list."""
    dt = max(b for _, b in poly_terms)
    out = [[] for _ in range(dt + 1)]
    for (a, b), c in poly_terms.items():
        row = out[b]
        if len(row) <= a:
            row.extend([0] * (a + 1 - len(row)))
        row[a] = c
    return out


def _from_dense(f):
    return {(a, b): c for b, row in enumerate(f) for a, c in enumerate(row) if c}


def _integerize(terms):
    den = 1
    for c in terms.values():
        den = den * c.denominator // igcd(den, c.denominator)
    return {m: int(c * den) for m, c in terms.items()}


def _poly_gcd_terms(a, b):
    """Monic-free primitive integer gcd of two nonzero term dicts."""
    fa = _to_dense(_integerize(a))
    fb = _to_dense(_integerize(b))
    # content/primitive recursion, t outer
    ca, cb = _b_content(fa), _b_content(fb)
    cont = _u_gcd(ca, cb)
    cont = _u_prim(cont) if cont else [1]
    pa = [_u_divexact(x, ca) if x else [] for x in fa]
    pb = [_u_divexact(x, cb) if x else [] for x in fb]
    if len(pa) == 1 or len(pb) == 1:
        prim = [[1]]
    else:
        prim = _b_heu_gcd_prim(pa, pb)
    return _from_dense(_b_mul_u(prim, cont))


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------

def _tadd(a, b, sign=1):
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = _nc(v)
        else:
            out.pop(m, None)
    return out


def _tmul(a, b):
    out = {}
    get = out.get
    for (a1, b1), c1 in a.items():
        for (a2, b2), c2 in b.items():
            m = (a1 + a2, b1 + b2)
            out[m] = get(m, 0) + c1 * c2
    return {m: _nc(c) for m, c in out.items() if c}


def _tscale(a, c):
    if not c:
        return {}
    return {m: _nc(v * c) for m, v in a.items()}


def _tdivexact(f, g):
    """Exact division of term dicts, lex order with t first; None if inexact."""
    if not f:
        return {}
    lm_g = max(g, key=lambda m: (m[1], m[0]))
    lc_g = g[lm_g]
    r = dict(f)
    quo = {}
    while r:
        lm = max(r, key=lambda m: (m[1], m[0]))
        da, db = lm[0] - lm_g[0], lm[1] - lm_g[1]
        if da < 0 or db < 0:
            return None
        c = _nc(Fraction(r[lm], lc_g))
        quo[(da, db)] = c
        for (a, b), cg in g.items():
            m = (a + da, b + db)
            v = r.get(m, 0) - c * cg
            if v:
                r[m] = _nc(v)
            else:
                r.pop(m, None)
    return quo


class ParamPoly:
    """Sparse polynomial in q, t with rational coefficients. Immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {(int(a), int(b)): _nc(Fraction(c)) for (a, b), c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        c = _nc(Fraction(c))
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, dq, dt, c=1):
        return cls._raw({(dq, dt): _nc(Fraction(c))} if c else {})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_term(self):
        return self.terms.get((0, 0), Fraction(0))

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return ParamPoly._raw(_tadd(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return ParamPoly._raw(_tadd(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return ParamPoly._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly._raw(_tscale(self.terms, other))
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return ParamPoly._raw(_tmul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def divexact(self, other):
        quo = _tdivexact(self.terms, other.terms)
        if quo is None:
            raise ArithmeticError("inexact polynomial division")
        return ParamPoly._raw(quo)

    def gcd(self, other):
        """Greatest common divisor, normalized to trailing coefficient 1."""
        if self.is_zero():
            return other._normalized()
        if other.is_zero():
            return self._normalized()
        if self.is_constant() or other.is_constant():
            return ParamPoly.const(1)
        return ParamPoly._raw(_poly_gcd_terms(self.terms, other.terms))._normalized()

    def trailing(self):
        """(monomial, coefficient) of the lowest term in graded lex, q < t."""
        m = min(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def _normalized(self):
        if self.is_zero():
            return self
        _, c = self.trailing()
        return self if c == 1 else ParamPoly._raw(_tscale(self.terms, _inv(c)))

    def subs(self, q=None, t=None):
        """Substitute numbers or ParamPolys for q and/or t."""
        out = ParamPoly()
        qv = _as_poly(q) if q is not None else ParamPoly.monomial(1, 0)
        tv = _as_poly(t) if t is not None else ParamPoly.monomial(0, 1)
        qpow, tpow = {}, {}
        for (a, b), c in self.terms.items():
            if a not in qpow:
                qpow[a] = qv ** a
            if b not in tpow:
                tpow[b] = tv ** b
            out = out + qpow[a] * tpow[b] * c
        return out

    def degree(self):
        return max((a + b for a, b in self.terms), default=-1)

    def __str__(self):
        return _format_poly(self.terms)

    def __repr__(self):
        return f"ParamPoly({self})"


def _as_poly(x):
    if isinstance(x, ParamPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamPoly.const(x)
    return NotImplemented


def _format_coeff_monomial(c, m):
    a, b = m
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if b:
        parts.append("t" if b == 1 else f"t^{b}")
    mono = "*".join(parts)
    ac = abs(c)
    if not mono:
        return str(ac)
    if ac == 1:
        return mono
    return f"{ac}*{mono}"


def _format_poly(terms):
    if not terms:
        return "0"
    out = []
    for m in sorted(terms, key=_grlex_key):
        c = terms[m]
        body = _format_coeff_monomial(c, m)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?((?:[qt](?:\^\d+)?\s*\*?\s*)*)"
)


def _parse_poly(text):
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    terms = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign, coeff, mono = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if coeff is None and not mono.strip():
            raise ValueError(f"empty term in {text!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        a = b = 0
        for var, exp in re.findall(r"([qt])(?:\^(\d+))?", mono):
            e = int(exp) if exp else 1
            if var == "q":
                a += e
            else:
                b += e
        terms[(a, b)] = terms.get((a, b), 0) + c
        pos = m.end()
        first = False
    return ParamPoly(terms)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Element of Q(q, t) in canonical form.

    Numerator and denominator are coprime and the denominator's lowest term
    in graded lex order (q < t) has coefficient 1, so ``==`` is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ParamPoly.const(1) if den is None else _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc needs polynomial or rational arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, ParamPoly.const(1)
        elif den.is_constant():
            self.num, self.den = num * _inv(den.constant_term()), ParamPoly.const(1)
        else:
            g = num.gcd(den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
            _, c = den.trailing()
            if c != 1:
                num, den = num * _inv(c), den * _inv(c)
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw(ParamPoly.const(c), ParamPoly.const(1))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.constant_term()

    # arithmetic (Henrici-style: gcds taken on the smaller pieces)

    def __add__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self._addsub(other, -1)

    def __rsub__(self, other):
        return as_ratfunc(other) - self

    def _addsub(self, other, sign):
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other if sign == 1 else -other
        b, d = self.den, other.den
        if b == d:
            num = self.num + other.num if sign == 1 else self.num - other.num
            if b.is_constant():
                return RatFunc._raw(num, b)
            return RatFunc(num, b)
        if b.is_constant():
            num = self.num * d + other.num * sign
            return RatFunc._raw(num, d) if not num.is_zero() else ZERO
        if d.is_constant():
            num = self.num + other.num * b * sign
            return RatFunc._raw(num, b) if not num.is_zero() else ZERO
        g = b.gcd(d)
        if g.is_constant():
            num = self.num * d + other.num * b * sign
            return RatFunc._reduced(num, b * d)
        bg, dg = b.divexact(g), d.divexact(g)
        num = self.num * dg + other.num * bg * sign
        return RatFunc(num, b * dg)

    @classmethod
    def _reduced(cls, num, den):
        # num/den with gcd(num, den) known to be 1 up to normalization
        if num.is_zero():
            return ZERO
        _, c = den.trailing()
        if c != 1:
            num, den = num * _inv(c), den * _inv(c)
        return cls._raw(num, den)

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return RatFunc._raw(self.num * Fraction(other), self.den)
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RatFunc._raw(a * c, b)
        g1 = a.gcd(d) if not d.is_constant() else None
        g2 = c.gcd(b) if not b.is_constant() else None
        if g1 is not None and not g1.is_constant():
            a, d = a.divexact(g1), d.divexact(g1)
        if g2 is not None and not g2.is_constant():
            c, b = c.divexact(g2), b.divexact(g2)
        return RatFunc._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_ratfunc(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_constant() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def subs(self, q=None, t=None):
        """Substitute values (numbers or RatFuncs) for q and/or t."""
        if q is None and t is None:
            return self
        if isinstance(q, RatFunc) or isinstance(t, RatFunc):
            return _subs_rat(self, q, t)
        num = self.num.subs(q=q, t=t)
        den = self.den.subs(q=q, t=t)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator of {self} vanishes under substitution")
        return RatFunc(num, den)

    def series(self, order):
        """Power series expansion in q, t truncated at total degree ``order``."""
        return ParamSeries.from_ratfunc(self, order)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; accepts ``"(num)/(den)"`` or a bare polynomial."""
        text = text.strip()
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
        if m and _balanced(m.group(1)) and _balanced(m.group(2)):
            return cls(_parse_poly(m.group(1)), _parse_poly(m.group(2)))
        return cls(_parse_poly(text))


def _balanced(s):
    return "(" not in s and ")" not in s


def _subs_rat(f, q, t):
    qv = as_ratfunc(q) if q is not None else RatFunc(ParamPoly.monomial(1, 0))
    tv = as_ratfunc(t) if t is not None else RatFunc(ParamPoly.monomial(0, 1))

    def ev(poly):
        acc = ZERO
        for (a, b), c in poly.terms.items():
            acc = acc + (qv ** a) * (tv ** b) * c
        return acc

    den = ev(f.den)
    if den.is_zero():
        raise ZeroDivisionError(f"denominator of {f} vanishes under substitution")
    return ev(f.num) / den


def as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, ParamPoly):
        return RatFunc._raw(x, ParamPoly.const(1))
    return NotImplemented


ZERO = RatFunc.const(0)
ONE = RatFunc.const(1)
Q = RatFunc(ParamPoly.monomial(1, 0))
T = RatFunc(ParamPoly.monomial(0, 1))


# ---------------------------------------------------------------------------
# ParamSeries
# ---------------------------------------------------------------------------

class ParamSeries:
    """Power series in q, t truncated at total degree ``order``."""

    __slots__ = ("order", "terms")

    def __init__(self, terms=None, order=0):
        self.order = int(order)
        self.terms = {}
        for (a, b), c in (terms or {}).items():
            if c and a + b <= self.order:
                self.terms[(int(a), int(b))] = Fraction(c)

    @classmethod
    def _raw(cls, terms, order):
        obj = cls.__new__(cls)
        obj.order, obj.terms = order, terms
        return obj

    @classmethod
    def const(cls, c, order):
        c = Fraction(c)
        return cls._raw({(0, 0): c} if c else {}, order)

    @classmethod
    def from_poly(cls, poly, order):
        return cls._raw({m: c for m, c in poly.terms.items() if m[0] + m[1] <= order}, order)

    @classmethod
    def from_ratfunc(cls, f, order):
        f = as_ratfunc(f)
        if f.den.is_constant():
            return cls.from_poly(f.num * _inv(f.den.constant_term()), order)
        c0 = f.den.constant_term()
        if not c0:
            raise NotExpandableError(f"denominator of {f} vanishes at q = t = 0")
        inv = _series_inverse(f.den.terms, c0, order)
        return cls._raw(_smul(f.num.terms, inv, order), order)

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0, 0), Fraction(0))

    def truncate(self, order):
        order = min(order, self.order)
        return ParamSeries._raw({m: c for m, c in self.terms.items() if m[0] + m[1] <= order}, order)

    def _coerce(self, other):
        if isinstance(other, ParamSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return ParamSeries.const(other, self.order)
        if isinstance(other, (RatFunc, ParamPoly)):
            return ParamSeries.from_ratfunc(as_ratfunc(other), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = {m: c for m, c in self.terms.items() if m[0] + m[1] <= order}
        for m, c in other.terms.items():
            if m[0] + m[1] <= order:
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return ParamSeries._raw(out, order)

    __radd__ = __add__

    def __neg__(self):
        return ParamSeries._raw({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamSeries._raw(_tscale(self.terms, Fraction(other)), self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return ParamSeries._raw(_smul(self.terms, other.terms, order), order)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.constant_term()
        if not c0:
            raise NotExpandableError("series with zero constant term is not invertible")
        return ParamSeries._raw(_series_inverse(self.terms, c0, self.order), self.order)

    def __eq__(self, other):
        if isinstance(other, ParamSeries):
            return self.order == other.order and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def agrees_with(self, other):
        """Equality up to the smaller of the two truncation orders."""
        other = self._coerce(other)
        order = min(self.order, other.order)
        return self.truncate(order).terms == other.truncate(order).terms

    def to_json(self):
        return {f"{a},{b}": str(c) for (a, b), c in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))}

    def __str__(self):
        body = _format_poly(self.terms)
        return f"{body} + O({self.order + 1})"

    def __repr__(self):
        return f"ParamSeries({self})"


def _smul(a, b, order):
    out = {}
    for (a1, b1), c1 in a.items():
        d1 = a1 + b1
        if d1 > order:
            continue
        for (a2, b2), c2 in b.items():
            if d1 + a2 + b2 > order:
                continue
            m = (a1 + a2, b1 + b2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def _series_inverse(terms, c0, order):
    """1/f as a truncated series, by graded components."""
    graded = [dict() for _ in range(order + 1)]
    for (a, b), c in terms.items():
        if a + b <= order:
            graded[a + b][(a, b)] = c
    inv0 = 1 / Fraction(c0)
    comps = [{(0, 0): inv0}]
    for k in range(1, order + 1):
        acc = {}
        for j in range(1, k + 1):
            for m1, c1 in graded[j].items():
                for m2, c2 in comps[k - j].items():
                    m = (m1[0] + m2[0], m1[1] + m2[1])
                    acc[m] = acc.get(m, 0) + c1 * c2
        comps.append({m: -inv0 * c for m, c in acc.items() if c})
    out = {}
    for comp in comps:
        out.update(comp)
    return out
