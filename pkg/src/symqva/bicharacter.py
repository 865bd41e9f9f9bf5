"""Bicharacters on V = C[h^(1), h^(2), ...] (x) C[Z alpha], fields and braiding.

Basis labels of V are pairs ``(mono, charge)`` where ``mono`` is an ascending
tuple of positive integers: ``((1, 1, 3), 2)`` is ``h^(1)^2 h^(3) e^{2 alpha}``.
Here ``h^(n) = D^(n) alpha = D^n alpha / n!``, so ``h = h^(1) = D alpha`` and
``D h^(n) = (n+1) h^(n+1)``.

Hopf structure: every ``h^(n)`` is primitive, ``e^{m alpha}`` is grouplike,
``S(h^(n)) = -h^(n)`` and ``S(e^{m alpha}) = e^{-m alpha}``.

Bicharacters take values in :class:`~symqva.kring.KElement`. The generator
``sigma(z, w) = r(e^alpha (x) e^alpha) = (z-w) exp(L(w/z))`` with
``L(x) = -sum_n (v_n^{-1} - 1) x^n / n`` fixes everything else:
``r(e^m (x) e^n) = sigma^{mn}`` and, with ``l = log sigma``,

    r(h^(i) (x) e^n) = n d_z^i l / i!
    r(e^m (x) h^(j)) = m d_w^j l / j!
    r(h^(i) (x) h^(j)) = d_z^i d_w^j l / (i! j!)

Fields use the exponent convention: ``field_apply`` returns the coefficient of
``z^e`` keyed by ``e``. :func:`mode_index` converts to ``Y(a, z) = sum a_(n) z^{-n-1}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .kring import KElement
from .scalars import NotExpandableError, ParamSeries, RatFunc

__all__ = [
    "VElement",
    "Tensor",
    "ModeWindow",
    "WindowError",
    "hopf_coproduct",
    "hopf_antipode",
    "counit",
    "d_act",
    "d_divided_power",
    "sigma_build",
    "Bicharacter",
    "SigmaBicharacter",
    "EpsilonBicharacter",
    "UnitBicharacter",
    "r_eval",
    "r_convolve",
    "r_inverse",
    "r_transpose",
    "epsilon",
    "field_apply",
    "braiding_R",
    "braiding_bicharacter",
    "mode_index",
    "z_exponent",
    "simple_braiding_factor",
]


def _nc(c):
    if type(c) is int:
        return c
    return c.numerator if c.denominator == 1 else c


def _omin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _coeff_terms(c, order):
    """A coefficient as {(a, b): rational}, plus the order it implies."""
    if isinstance(c, ParamSeries):
        order = c.order if order is None else min(order, c.order)
        return c.truncate(order).terms, order
    if isinstance(c, RatFunc):
        if c.is_constant():
            return ({(0, 0): _nc(Fraction(c.constant_value()))} if not c.is_zero() else {}), order
        if order is None:
            raise ValueError(f"coefficient {c} needs a parameter order")
        return c.series(order).terms, order
    c = _nc(Fraction(c))
    return ({(0, 0): c} if c else {}), order


class _Linear:
    """Finite sum over basis labels with truncated-series coefficients.

    ``terms`` maps ``(label, a, b)`` to a rational; ``order`` is None for
    exact (order-free) data and the truncation degree otherwise.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms=None, order=None):
        parsed = []
        for label, c in (terms or {}).items():
            ct, order = _coeff_terms(c, order)
            parsed.append((self._label(label), ct))
        out = {}
        for label, ct in parsed:
            for (a, b), cc in ct.items():
                if order is not None and a + b > order:
                    continue
                key = (label, a, b)
                out[key] = out.get(key, 0) + cc
        self.terms = {k: _nc(v) for k, v in out.items() if v}
        self.order = order

    @staticmethod
    def _label(label):
        return label

    @classmethod
    def _raw(cls, terms, order):
        obj = cls.__new__(cls)
        obj.terms, obj.order = terms, order
        return obj

    def is_zero(self):
        return not self.terms

    def labels(self):
        return sorted({k[0] for k in self.terms})

    def by_label(self):
        out = {}
        for (label, a, b), c in self.terms.items():
            out.setdefault(label, {})[(a, b)] = c
        return out

    def coeff(self, label):
        d = {(a, b): c for (lab, a, b), c in self.terms.items() if lab == label}
        return ParamSeries._raw(d, self.order if self.order is not None else 0)

    def truncate(self, order):
        order = _omin(self.order, order)
        return type(self)._raw({k: c for k, c in self.terms.items() if k[1] + k[2] <= order}, order)

    def _combine(self, other, sign):
        order = _omin(self.order, other.order)
        out = dict(self.terms) if order is None else {
            k: c for k, c in self.terms.items() if k[1] + k[2] <= order}
        for k, c in other.terms.items():
            if order is not None and k[1] + k[2] > order:
                continue
            v = out.get(k, 0) + sign * c
            if v:
                out[k] = _nc(v)
            else:
                out.pop(k, None)
        return type(self)._raw(out, order)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()}, self.order)

    def scale(self, c):
        """Multiply by a rational, RatFunc or ParamSeries."""
        ct, order = _coeff_terms(c, self.order)
        out = {}
        for (label, a, b), x in self.terms.items():
            for (a2, b2), y in ct.items():
                if order is not None and a + a2 + b + b2 > order:
                    continue
                key = (label, a + a2, b + b2)
                out[key] = out.get(key, 0) + x * y
        return type(self)._raw({k: _nc(v) for k, v in out.items() if v}, order)

    def __eq__(self, other):
        if not isinstance(other, _Linear):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def agrees_with(self, other):
        """Equality after truncating both sides to the smaller order."""
        order = _omin(self.order, other.order)
        return self.truncate(order).terms == other.truncate(order).terms


def _coeff_json(d, order):
    if order is None:
        return str(d.get((0, 0), 0))
    return ParamSeries._raw(d, order).to_json()


class VElement(_Linear):
    """Element of V with rational or truncated-series coefficients."""

    __slots__ = ()

    @staticmethod
    def _label(label):
        mono, ch = label
        return (tuple(sorted(int(x) for x in mono)), int(ch))

    @classmethod
    def basis(cls, mono=(), charge=0, coeff=1, order=None):
        return cls({(mono, charge): coeff}, order)

    @classmethod
    def one(cls):
        return cls.basis()

    @classmethod
    def h(cls, n=1, charge=0):
        """h^(n) e^{charge alpha}."""
        return cls.basis((n,), charge)

    @classmethod
    def e(cls, m=1):
        """e^{m alpha}."""
        return cls.basis((), m)

    def __mul__(self, other):
        if not isinstance(other, VElement):
            return self.scale(other)
        order = _omin(self.order, other.order)
        out = {}
        for ((m1, c1), a1, b1), x in self.terms.items():
            for ((m2, c2), a2, b2), y in other.terms.items():
                if order is not None and a1 + a2 + b1 + b2 > order:
                    continue
                key = ((_mono_mul(m1, m2), c1 + c2), a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + x * y
        return VElement._raw({k: _nc(v) for k, v in out.items() if v}, order)

    def __rmul__(self, other):
        return self.scale(other)

    def to_json(self):
        items = sorted(self.by_label().items(), key=lambda kv: (kv[0][1], len(kv[0][0]), kv[0][0]))
        return {"order": self.order,
                "terms": [{"h": list(mono), "charge": ch, "coeff": _coeff_json(d, self.order)}
                          for (mono, ch), d in items]}

    @classmethod
    def from_json(cls, data):
        order = data["order"]
        out = {}
        for item in data["terms"]:
            label = (tuple(item["h"]), item["charge"])
            c = item["coeff"]
            if order is None:
                out[(label, 0, 0)] = _nc(Fraction(c))
            else:
                for key, val in c.items():
                    a, b = map(int, key.split(","))
                    out[(label, a, b)] = _nc(Fraction(val))
        return cls._raw(out, order)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (mono, ch), d in sorted(self.by_label().items()):
            c = _coeff_json(d, self.order)
            if isinstance(c, dict):
                c = str(ParamSeries._raw(d, self.order))
            gens = "*".join(f"h{n}" for n in mono) or "1"
            parts.append(f"({c})*{gens}*e^{ch}")
        return " + ".join(parts)

    __repr__ = __str__


class Tensor(_Linear):
    """Element of V (x) V (or V^{(x)3}); labels are tuples of V labels."""

    __slots__ = ()

    def to_json(self):
        return {"order": self.order,
                "terms": [{"factors": [{"h": list(m), "charge": c} for m, c in label],
                           "coeff": _coeff_json(d, self.order)}
                          for label, d in sorted(self.by_label().items())]}


# ---------------------------------------------------------------------------
# Hopf structure on basis labels
# ---------------------------------------------------------------------------

def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2))


def _mono_remove(mono, j):
    rest = list(mono)
    rest.remove(j)
    return tuple(rest)


@lru_cache(maxsize=None)
def _coproduct_label(label):
    mono, ch = label
    counts = sorted(Counter(mono).items())
    out = [((), 1)]
    for n, mult in counts:
        out = [(left + (n,) * k, c * comb(mult, k)) for left, c in out for k in range(mult + 1)]
    res = []
    for left, c in out:
        right = list(mono)
        for x in left:
            right.remove(x)
        res.append(((left, ch), (tuple(right), ch), c))
    return tuple(res)


@lru_cache(maxsize=None)
def _d_label(label):
    mono, ch = label
    out = {}
    for n in set(mono):
        new = tuple(sorted(_mono_remove(mono, n) + (n + 1,)))
        out[(new, ch)] = out.get((new, ch), 0) + (n + 1) * mono.count(n)
    if ch:
        new = tuple(sorted(mono + (1,)))
        out[(new, ch)] = out.get((new, ch), 0) + ch
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _dpow_label(label, k):
    """D^(k) label = D^k label / k!."""
    if k == 0:
        return {label: 1}
    prev = _dpow_label(label, k - 1)
    out = {}
    for lab, c in prev.items():
        for lab2, c2 in _d_label(lab).items():
            out[lab2] = out.get(lab2, 0) + c * c2
    return {lab: _nc(Fraction(c, k)) for lab, c in out.items() if c}


def _map_linear(a, fn, cls=VElement):
    out = {}
    for (label, p, q), c in a.terms.items():
        for lab2, c2 in fn(label).items():
            key = (lab2, p, q)
            out[key] = out.get(key, 0) + c * c2
    return cls._raw({k: _nc(v) for k, v in out.items() if v}, a.order)


def hopf_coproduct(a):
    """Delta(a) as a Tensor over pairs of V labels."""
    out = {}
    for (label, p, q), c in a.terms.items():
        for l1, l2, cc in _coproduct_label(label):
            key = ((l1, l2), p, q)
            out[key] = out.get(key, 0) + c * cc
    return Tensor._raw({k: _nc(v) for k, v in out.items() if v}, a.order)


def _antipode_label(label):
    mono, ch = label
    return {(mono, -ch): -1 if len(mono) % 2 else 1}


def hopf_antipode(a):
    return _map_linear(a, _antipode_label)


def counit(a):
    """eta(a): the coefficient sum over pure lattice labels."""
    d = {}
    for ((mono, _), p, q), c in a.terms.items():
        if not mono:
            d[(p, q)] = d.get((p, q), 0) + c
    d = {k: v for k, v in d.items() if v}
    if a.order is None:
        return d.get((0, 0), 0)
    return ParamSeries._raw(d, a.order)


def d_act(a):
    return _map_linear(a, _d_label)


def d_divided_power(a, k):
    return _map_linear(a, lambda lab: _dpow_label(lab, k))


# ---------------------------------------------------------------------------
# bicharacters
# ---------------------------------------------------------------------------

def sigma_build(v, order):
    """sigma(z, w) = (z-w) exp(-sum_n (v_n^{-1}-1)(w/z)^n / n), truncated."""
    return (KElement.zw_power(1, order) * _log_unit(v, order).exp())


_LOG_CACHE = {}


def _log_unit(v, order):
    """L(w/z) = -sum_{n<=order} (v_n^{-1} - 1) (w/z)^n / n."""
    key = (v.name, order)
    if key not in _LOG_CACHE:
        acc = KElement.zero(order)
        for n in range(1, order + 1):
            try:
                s = ParamSeries.from_ratfunc(v.v_inv(n) - 1, order)
            except NotExpandableError as exc:
                raise NotExpandableError(f"v_{n}^-1 - 1 is not a power series: {exc}") from None
            if s.terms.get((0, 0)):
                raise NotExpandableError(f"v_{n}^-1 - 1 does not vanish at q = t = 0")
            acc = acc + KElement.from_series(s * Fraction(-1, n), -n, n)
        _LOG_CACHE[key] = acc
    return _LOG_CACHE[key]


class Bicharacter:
    """A K-valued pairing on V, evaluated lazily and memoized per label pair."""

    name = "bicharacter"

    def __init__(self, order):
        self.order = order
        self._memo = {}
        self._memo_w0 = {}

    def value(self, la, lb):
        key = (la, lb)
        val = self._memo.get(key)
        if val is None:
            val = self._compute(la, lb)
            self._memo[key] = val
        return val

    def value_at_w0(self, la, lb):
        """r(la (x) lb)(z, 0) as {z-exponent: {(a, b): coeff}}."""
        key = (la, lb)
        val = self._memo_w0.get(key)
        if val is None:
            val = {i: s.terms for i, s in self.value(la, lb).specialize_w0().items()}
            self._memo_w0[key] = val
        return val

    def _compute(self, la, lb):
        raise NotImplementedError

    def __call__(self, a, b):
        return r_eval(a, b, self)


def _series_k(d, order):
    return KElement._raw({(0, 0, 0, a, b): c for (a, b), c in d.items()}, order)


def r_eval(a, b, bc):
    """Bilinear extension of ``bc`` to VElements."""
    order = _omin(_omin(a.order, b.order), bc.order)
    acc = KElement.zero(order)
    for la, da in a.by_label().items():
        for lb, db in b.by_label().items():
            coeff = _series_k(da, order) * _series_k(db, order)
            acc = acc + bc.value(la, lb) * coeff
    return acc


def _eta_label(label):
    return 0 if label[0] else 1


class EpsilonBicharacter(Bicharacter):
    """The unit of the convolution group: eta(a) eta(b)."""

    name = "epsilon"

    def _compute(self, la, lb):
        return KElement.const(_eta_label(la) * _eta_label(lb), self.order)


def epsilon(order):
    return EpsilonBicharacter(order)


class UnitBicharacter(Bicharacter):
    """Constant 1 on every label pair; used to drop the r-factor from fields."""

    name = "unit"

    def _compute(self, la, lb):
        return KElement.const(1, self.order)


class SigmaBicharacter(Bicharacter):
    """The bicharacter generated by sigma_build(v, order)."""

    def __init__(self, v, order):
        super().__init__(order)
        self.v = v
        self.name = f"sigma[{v.name}]"
        self.L = _log_unit(v, order)
        self.sigma = sigma_build(v, order)
        self._unit_pow = {}
        self._dl = {}
        self._dL = {(0, 0): self.L}

    def sigma_power(self, k):
        """sigma^k = (z-w)^k exp(k L)."""
        if k not in self._unit_pow:
            self._unit_pow[k] = KElement.zw_power(k, self.order) * (self.L * k).exp()
        return self._unit_pow[k]

    def _L_deriv(self, i, j):
        key = (i, j)
        if key not in self._dL:
            if j > 0:
                self._dL[key] = self._L_deriv(i, j - 1).d_w()
            else:
                self._dL[key] = self._L_deriv(i - 1, 0).d_z()
        return self._dL[key]

    def dlog(self, i, j):
        """d_z^i d_w^j log sigma / (i! j!) for i + j >= 1."""
        key = (i, j)
        if key not in self._dl:
            s = i + j
            sign = 1 if i % 2 else -1
            log_part = KElement.zw_power(-s, self.order) * Fraction(
                sign * factorial(s - 1), factorial(i) * factorial(j))
            self._dl[key] = log_part + self._L_deriv(i, j) * Fraction(1, factorial(i) * factorial(j))
        return self._dl[key]

    def _compute(self, la, lb):
        (ma, m), (mb, n) = la, lb
        if not ma:
            if m == 0:
                return KElement.const(0 if mb else 1, self.order)
            val = self.sigma_power(m * n)
            for j in mb:
                val = val * (self.dlog(0, j) * m)
            return val
        i, rest = ma[0], (ma[1:], m)
        val = self.value(rest, lb) * (self.dlog(i, 0) * n) if n else KElement.zero(self.order)
        for j in sorted(set(mb)):
            sub = self.value(rest, (_mono_remove(mb, j), n))
            if not sub.is_zero():
                val = val + self.dlog(i, j) * sub * mb.count(j)
        return val


class _Convolution(Bicharacter):
    def __init__(self, r, s):
        super().__init__(min(r.order, s.order))
        self.r, self.s = r, s
        self.name = f"({r.name} * {s.name})"

    def _compute(self, la, lb):
        acc = KElement.zero(self.order)
        for a1, a2, ca in _coproduct_label(la):
            for b1, b2, cb in _coproduct_label(lb):
                x = self.r.value(a1, b1)
                if x.is_zero():
                    continue
                y = self.s.value(a2, b2)
                if y.is_zero():
                    continue
                acc = acc + x * y * (ca * cb)
        return acc


class _Inverse(Bicharacter):
    def __init__(self, r):
        super().__init__(r.order)
        self.r = r
        self.name = f"{r.name}^-1"

    def _compute(self, la, lb):
        ((lab, sign),) = _antipode_label(la).items()
        return self.r.value(lab, lb) * sign


class _Transpose(Bicharacter):
    def __init__(self, r):
        super().__init__(r.order)
        self.r = r
        self.name = f"{r.name}^t"

    def _compute(self, la, lb):
        return self.r.value(lb, la).swap()


def r_convolve(r, s):
    """(r * s)(a (x) b) = sum r(a' (x) b') s(a'' (x) b'')."""
    return _Convolution(r, s)


def r_inverse(r):
    """r^{-1}(a (x) b) = r(S(a) (x) b)."""
    return _Inverse(r)


def r_transpose(r):
    """r^t(a (x) b)(z, w) = r(b (x) a)(w, z)."""
    return _Transpose(r)


def braiding_bicharacter(r):
    """r^t * r^{-1}, the K-valued part of the braiding."""
    return r_convolve(r_transpose(r), r_inverse(r))


def braiding_R(a, b, bc, beta=None):
    """R(a (x) b) = sum a' (x) b' . (r^t * r^{-1})(a'' (x) b'').

    Returns ``{(label_a, label_b): KElement}``. ``beta`` may supply a
    precomputed :func:`braiding_bicharacter` to share its memo table.
    """
    beta = beta or braiding_bicharacter(bc)
    order = _omin(_omin(a.order, b.order), bc.order)
    out = {}
    for la, da in a.by_label().items():
        for lb, db in b.by_label().items():
            coeff = _series_k(da, order) * _series_k(db, order)
            for a1, a2, ca in _coproduct_label(la):
                for b1, b2, cb in _coproduct_label(lb):
                    val = beta.value(a2, b2)
                    if val.is_zero():
                        continue
                    key = (a1, b1)
                    term = val * coeff * (ca * cb)
                    out[key] = out[key] + term if key in out else term
    return {k: v for k, v in sorted(out.items()) if not v.is_zero()}


def simple_braiding_factor(v, order):
    """i_t( w f(z/w) / (z f(w/z)) ) for f(x) = exp(-sum v_n^{-1} x^n / n).

    Written as -exp(L(z/w) - L(w/z)) since w (1 - z/w) / (z (1 - w/z)) = -1.
    """
    L = _log_unit(v, order)
    return -(L.swap() - L).exp()


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class WindowError(ValueError):
    """A ModeWindow cannot hold the requested expansion."""


@dataclass(frozen=True)
class ModeWindow:
    """z-exponents kept by a field expansion, plus an optional cap on D-powers."""

    z_min: int
    z_max: int
    degree_cap: int | None = None

    def __post_init__(self):
        if self.z_min > self.z_max:
            raise WindowError(f"empty window [{self.z_min}, {self.z_max}]")
        if self.degree_cap is not None and self.degree_cap < 0:
            raise WindowError("degree_cap must be nonnegative")


def mode_index(z_exp):
    """z^e in Y(a, z) = sum a_(n) z^{-n-1} belongs to the mode n = -e-1."""
    return -z_exp - 1


def z_exponent(n):
    return -n - 1


def _field_labels(la, lb, bc, win):
    key = ("field", la, lb, win.z_min, win.z_max)
    cached = bc._memo.get(key)
    if cached is not None:
        return cached
    out = {}
    for a1, a2, ca in _coproduct_label(la):
        for b1, b2, cb in _coproduct_label(lb):
            at_w0 = bc.value_at_w0(a2, b2)
            c0 = ca * cb
            for p, ser in at_w0.items():
                if p > win.z_max:
                    continue
                kmax = win.z_max - p
                if win.degree_cap is not None and kmax > win.degree_cap:
                    raise WindowError(
                        f"z^{win.z_max} needs D^({kmax}) but degree_cap is {win.degree_cap}")
                for k in range(max(0, win.z_min - p), kmax + 1):
                    bucket = out.setdefault(p + k, {})
                    for lab, cd in _dpow_label(a1, k).items():
                        lab = (_mono_mul(lab[0], b1[0]), lab[1] + b1[1])
                        for (x, y), cs in ser.items():
                            kk = (lab, x, y)
                            bucket[kk] = bucket.get(kk, 0) + c0 * cd * cs
    res = {}
    for e, bucket in out.items():
        bucket = {k: _nc(c) for k, c in bucket.items() if c}
        if bucket:
            res[e] = bucket
    bc._memo[key] = res
    return res


def field_apply(a, b, bc, win):
    """Y(a, z) b = sum (e^{zD} a') b' r(a'' (x) b'')(z, 0), restricted to ``win``.

    Returns ``{z-exponent: VElement}`` with empty modes omitted.
    """
    order = _omin(_omin(a.order, b.order), bc.order)
    acc = {}
    for la, da in a.by_label().items():
        for lb, db in b.by_label().items():
            coeff = {}
            for (x1, y1), c1 in da.items():
                for (x2, y2), c2 in db.items():
                    if x1 + x2 + y1 + y2 <= order:
                        coeff[(x1 + x2, y1 + y2)] = coeff.get((x1 + x2, y1 + y2), 0) + c1 * c2
            for e, bucket in _field_labels(la, lb, bc, win).items():
                tgt = acc.setdefault(e, {})
                for (lab, x, y), c in bucket.items():
                    for (x2, y2), c2 in coeff.items():
                        if x + x2 + y + y2 > order:
                            continue
                        kk = (lab, x + x2, y + y2)
                        tgt[kk] = tgt.get(kk, 0) + c * c2
    res = {}
    for e in sorted(acc):
        terms = {k: _nc(c) for k, c in acc[e].items() if c}
        if terms:
            res[e] = VElement._raw(terms, order)
    return res
