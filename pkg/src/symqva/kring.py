"""The coefficient ring K = k[z^+-1, w^+-1, (z-w)^+-1][[q, t]], truncated.

Every element is kept in a unique partial-fraction normal form over the basis

    z^i w^j                 (plain terms, i, j any integers)
    (z-w)^e w^j             (pole terms, e < 0)

with coefficients that are power series in q, t truncated at total degree
``order``. Internally a KElement is a flat dict keyed by ``(e, i, j, a, b)``
where ``e = 0`` marks a plain term and ``i = 0`` for pole terms; ``(a, b)`` is
the parameter monomial ``q^a t^b``.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .scalars import ParamSeries

__all__ = ["KElement", "SingularSpecializationError", "gbinom"]


class SingularSpecializationError(ArithmeticError):
    """Negative powers of w survive the substitution w = 0."""


def gbinom(e, k):
    """Generalized binomial coefficient C(e, k) for integer e, k >= 0."""
    if k < 0:
        return 0
    if e >= 0:
        return comb(e, k)
    num = 1
    for i in range(k):
        num *= e - i
    return num // factorial(k)


def _nc(c):
    if type(c) is int:
        return c
    return c.numerator if c.denominator == 1 else c


@lru_cache(maxsize=None)
def _normal(e, i):
    """(z-w)^e z^i in normal form, e < 0, as ((e', i', j'), coeff) pairs."""
    if i == 0:
        return (((e, 0, 0), 1),)
    acc = {}
    if i > 0:
        # z = (z-w) + w
        first = (((0, i - 1, 0), 1),) if e + 1 == 0 else _normal(e + 1, i - 1)
        second = tuple(((ee, ii, jj + 1), c) for (ee, ii, jj), c in _normal(e, i - 1))
    else:
        # 1/(z (z-w)) = (1/w) (1/(z-w) - 1/z)
        first = tuple(((ee, ii, jj - 1), c) for (ee, ii, jj), c in _normal(e, i + 1))
        if e + 1 == 0:
            second = (((0, i, -1), -1),)
        else:
            second = tuple(((ee, ii, jj - 1), -c) for (ee, ii, jj), c in _normal(e + 1, i))
    for key, c in first + second:
        acc[key] = acc.get(key, 0) + c
    return tuple((k, c) for k, c in sorted(acc.items()) if c)


@lru_cache(maxsize=None)
def _basis_mul(k1, k2):
    e1, i1, j1 = k1
    e2, i2, j2 = k2
    e, i, j = e1 + e2, i1 + i2, j1 + j2
    if e >= 0:
        if e == 0:
            return (((0, i, j), 1),)
        # only reachable for negative + positive e, which never happens: e1, e2 <= 0
        raise AssertionError("positive (z-w) power in basis product")
    return tuple(((ee, ii, jj + j), c) for (ee, ii, jj), c in _normal(e, i))


class KElement:
    """Truncated element of K in partial-fraction normal form. Immutable."""

    __slots__ = ("order", "terms", "_sorted")

    def __init__(self, terms=None, order=0):
        self.order = int(order)
        out = {}
        for (e, i, j, a, b), c in (terms or {}).items():
            if not c or a + b > self.order:
                continue
            for key, cc in _basis_mul((e, i, j), (0, 0, 0)):
                full = key + (a, b)
                out[full] = out.get(full, 0) + Fraction(c) * cc
        self.terms = {k: _nc(v) for k, v in out.items() if v}
        self._sorted = None

    @classmethod
    def _raw(cls, terms, order):
        obj = cls.__new__(cls)
        obj.order, obj.terms, obj._sorted = order, terms, None
        return obj

    # constructors

    @classmethod
    def zero(cls, order):
        return cls._raw({}, order)

    @classmethod
    def const(cls, c, order):
        return cls.monomial(0, 0, order, c)

    @classmethod
    def monomial(cls, i, j, order, c=1):
        """c * z^i w^j."""
        c = _nc(Fraction(c))
        return cls._raw({(0, i, j, 0, 0): c} if c else {}, order)

    @classmethod
    def zw_power(cls, e, order):
        """(z - w)^e for any integer e."""
        if e < 0:
            return cls._raw({(e, 0, 0, 0, 0): 1}, order)
        return cls._raw({(0, k, e - k, 0, 0): comb(e, k) * (-1) ** (e - k) for k in range(e + 1)}, order)

    @classmethod
    def from_series(cls, s, i=0, j=0):
        """ParamSeries times z^i w^j."""
        return cls._raw({(0, i, j, a, b): c for (a, b), c in s.terms.items()}, s.order)

    # inspection

    def is_zero(self):
        return not self.terms

    def pole_free(self):
        return all(e == 0 for e, *_ in self.terms)

    def max_pole(self):
        return max((-e for e, *_ in self.terms), default=0)

    def order0(self):
        return KElement._raw({k: c for k, c in self.terms.items() if k[3] + k[4] == 0}, self.order)

    def param_part(self, a, b):
        """Laurent data at parameter monomial q^a t^b: {(e, i, j): coeff}."""
        return {k[:3]: c for k, c in self.terms.items() if k[3] == a and k[4] == b}

    def truncate(self, order):
        order = min(order, self.order)
        return KElement._raw({k: c for k, c in self.terms.items() if k[3] + k[4] <= order}, order)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, KElement):
            return other
        if isinstance(other, (int, Fraction)):
            return KElement.const(other, self.order)
        if isinstance(other, ParamSeries):
            return KElement.from_series(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = {k: c for k, c in self.terms.items() if k[3] + k[4] <= order}
        for k, c in other.terms.items():
            if k[3] + k[4] <= order:
                v = out.get(k, 0) + c
                if v:
                    out[k] = _nc(v)
                else:
                    out.pop(k, None)
        return KElement._raw(out, order)

    __radd__ = __add__

    def __neg__(self):
        return KElement._raw({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _by_degree(self):
        if self._sorted is None:
            items = sorted(self.terms.items(), key=lambda kv: kv[0][3] + kv[0][4])
            self._sorted = (items, [k[3] + k[4] for k, _ in items])
        return self._sorted

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return KElement.zero(self.order)
            return KElement._raw({k: _nc(c * other) for k, c in self.terms.items()}, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        items_b, degs_b = other._by_degree()
        out = {}
        get = out.get
        for (e1, i1, j1, a1, b1), c1 in self.terms.items():
            room = order - a1 - b1
            if room < 0:
                continue
            k1 = (e1, i1, j1)
            for idx in range(bisect_right(degs_b, room)):
                (e2, i2, j2, a2, b2), c2 = items_b[idx]
                c = c1 * c2
                a, b = a1 + a2, b1 + b2
                if e1 == 0 and e2 == 0:
                    key = (0, i1 + i2, j1 + j2, a, b)
                    out[key] = get(key, 0) + c
                    continue
                for (ee, ii, jj), cc in _basis_mul(k1, (e2, i2, j2)):
                    key = (ee, ii, jj, a, b)
                    out[key] = get(key, 0) + c * cc
        return KElement._raw({k: _nc(c) for k, c in out.items() if c}, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use an explicit inverse for negative powers")
        out = KElement.const(1, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exp(self):
        """exp(X) for X with vanishing parameter-order-0 part."""
        if any(k[3] + k[4] == 0 for k in self.terms):
            raise ValueError("exp needs a vanishing order-0 part")
        out = KElement.const(1, self.order)
        term = KElement.const(1, self.order)
        for k in range(1, self.order + 1):
            term = term * self * Fraction(1, k)
            if term.is_zero():
                break
            out = out + term
        return out

    def __eq__(self, other):
        if not isinstance(other, KElement):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def agrees_with(self, other):
        order = min(self.order, other.order)
        return self.truncate(order).terms == other.truncate(order).terms

    # calculus and substitutions

    def d_z(self):
        out = {}
        for (e, i, j, a, b), c in self.terms.items():
            if e == 0:
                if i:
                    key = (0, i - 1, j, a, b)
                    out[key] = out.get(key, 0) + c * i
            else:
                key = (e - 1, 0, j, a, b)
                out[key] = out.get(key, 0) + c * e
        return KElement._raw({k: _nc(c) for k, c in out.items() if c}, self.order)

    def d_w(self):
        out = {}
        for (e, i, j, a, b), c in self.terms.items():
            if e == 0:
                if j:
                    key = (0, i, j - 1, a, b)
                    out[key] = out.get(key, 0) + c * j
            else:
                key = (e - 1, 0, j, a, b)
                out[key] = out.get(key, 0) - c * e
                if j:
                    key = (e, 0, j - 1, a, b)
                    out[key] = out.get(key, 0) + c * j
        return KElement._raw({k: _nc(c) for k, c in out.items() if c}, self.order)

    def swap(self):
        """Exchange z and w."""
        out = {}
        for (e, i, j, a, b), c in self.terms.items():
            if e == 0:
                key = (0, j, i, a, b)
                out[key] = out.get(key, 0) + c
            else:
                sign = -1 if e % 2 else 1
                for (ee, ii, jj), cc in _normal(e, j):
                    key = (ee, ii, jj, a, b)
                    out[key] = out.get(key, 0) + c * cc * sign
        return KElement._raw({k: _nc(c) for k, c in out.items() if c}, self.order)

    def specialize_w0(self):
        """Substitute w = 0; returns {z-exponent: ParamSeries}.

        Pole terms are expanded as (z-w)^e = sum_k C(e,k) z^{e-k} (-w)^k; any
        surviving negative power of w raises SingularSpecializationError.
        """
        zero, neg = {}, {}
        for (e, i, j, a, b), c in self.terms.items():
            if e == 0:
                if j == 0:
                    key = (i, a, b)
                    zero[key] = zero.get(key, 0) + c
                elif j < 0:
                    key = (j, i, a, b)
                    neg[key] = neg.get(key, 0) + c
                continue
            if j > 0:
                continue
            for k in range(0, -j + 1):
                cc = c * gbinom(e, k) * (-1) ** k
                if not cc:
                    continue
                p = j + k
                if p == 0:
                    key = (e - k, a, b)
                    zero[key] = zero.get(key, 0) + cc
                else:
                    key = (p, e - k, a, b)
                    neg[key] = neg.get(key, 0) + cc
        bad = {k: c for k, c in neg.items() if c}
        if bad:
            (p, i, a, b), c = min(bad.items())
            raise SingularSpecializationError(
                f"w^{p} z^{i} q^{a} t^{b} survives w = 0 with coefficient {c}")
        out = {}
        for (i, a, b), c in zero.items():
            if c:
                out.setdefault(i, {})[(a, b)] = _nc(c)
        return {i: ParamSeries._raw(d, self.order) for i, d in sorted(out.items())}

    def laurent(self):
        """Pole-free element as {(i, j, a, b): coeff}; raises if poles remain."""
        if not self.pole_free():
            raise ValueError("element has (z-w) poles")
        return {(i, j, a, b): c for (e, i, j, a, b), c in self.terms.items()}

    # serialization

    def to_json(self):
        plain, poles = {}, {}
        for (e, i, j, a, b), c in self.terms.items():
            if e == 0:
                plain.setdefault((i, j), {})[(a, b)] = c
            else:
                poles.setdefault((e, j), {})[(a, b)] = c
        return {
            "order": self.order,
            "plain": [{"z": i, "w": j, "coeff_series": ParamSeries._raw(s, self.order).to_json()}
                      for (i, j), s in sorted(plain.items())],
            "poles": [{"zw_pow": e, "w": j, "coeff_series": ParamSeries._raw(s, self.order).to_json()}
                      for (e, j), s in sorted(poles.items())],
        }

    @classmethod
    def from_json(cls, data):
        order = data["order"]
        terms = {}
        for item in data["plain"]:
            for key, c in item["coeff_series"].items():
                a, b = map(int, key.split(","))
                terms[(0, item["z"], item["w"], a, b)] = Fraction(c)
        for item in data["poles"]:
            for key, c in item["coeff_series"].items():
                a, b = map(int, key.split(","))
                terms[(item["zw_pow"], 0, item["w"], a, b)] = Fraction(c)
        return cls(terms, order)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, i, j, a, b), c in sorted(self.terms.items(), key=lambda kv: (kv[0][3] + kv[0][4], kv[0])):
            fac = []
            if a:
                fac.append(f"q^{a}")
            if b:
                fac.append(f"t^{b}")
            if e:
                fac.append(f"(z-w)^{e}")
            if i:
                fac.append(f"z^{i}")
            if j:
                fac.append(f"w^{j}")
            parts.append(f"{c}" + ("*" + "*".join(fac) if fac else ""))
        return " + ".join(parts) + f" + O({self.order + 1})"

    __repr__ = __str__
