"""Deformed Heisenberg operators and the vertex operators Phi(z), Psi(z).

States live in Lambda_F (x) C[Z alpha]: a :class:`LatticeState` maps
``(partition, charge)`` to a coefficient, meaning ``c * p_lam (x) e^{charge alpha}``.

Conventions: ``h_{-n}`` multiplies by ``v_n^{-1} p_n`` and ``h_n`` (n > 0) is
``n d/dp_n``, so that ``[h_m, h_n] = m v_|m|^{-1} delta_{m+n,0}``. Modes of Phi
follow ``Phi(z) = sum Phi_m z^m``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .partitions import make_partition, partitions_of, weight, z_of
from .scalars import ONE, RatFunc, as_ratfunc
from .symfunc import SymFunc

__all__ = [
    "LatticeState",
    "h_act",
    "commutator",
    "annihilation_coeff",
    "creation_coeff",
    "phi_mode",
    "phi_product",
    "psi_mode",
    "psi_product",
]


class LatticeState:
    """Immutable finite sum of ``c * p_lam (x) e^{k alpha}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for (lam, k), c in (terms or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                out[(tuple(lam), int(k))] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def vacuum(cls, charge=0):
        return cls._raw({((), charge): ONE})

    @classmethod
    def basis(cls, lam, charge=0, coeff=1):
        return cls({(make_partition(lam), charge): coeff})

    @classmethod
    def from_symfunc(cls, f, charge=0):
        return cls._raw({(lam, charge): c for lam, c in f.terms.items()})

    def sector(self, charge):
        return SymFunc._raw({lam: c for (lam, k), c in self.terms.items() if k == charge})

    def charges(self):
        return sorted({k for _, k in self.terms})

    def drop_charge(self):
        out = {}
        for (lam, _), c in self.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(out)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        return LatticeState._raw(_acc(dict(self.terms), other.terms.items(), 1))

    def __sub__(self, other):
        return LatticeState._raw(_acc(dict(self.terms), other.terms.items(), -1))

    def __neg__(self):
        return LatticeState._raw({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = as_ratfunc(c)
        if c.is_zero():
            return LatticeState()
        return LatticeState._raw({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LatticeState):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][1], weight(kv[0][0]), [-x for x in kv[0][0]]))
        return [{"partition": list(lam), "charge": k, "coeff": str(c)} for (lam, k), c in items]

    @classmethod
    def from_json(cls, data):
        return cls({(make_partition(d["partition"]), d["charge"]): RatFunc.parse(d["coeff"]) for d in data})

    def __repr__(self):
        return f"LatticeState({self.to_json()})"


def _acc(out, items, sign):
    for key, c in items:
        if key in out:
            v = out[key] + c if sign == 1 else out[key] - c
        else:
            v = c if sign == 1 else -c
        if v.is_zero():
            out.pop(key, None)
        else:
            out[key] = v
    return out


def _remove_part(lam, n):
    rest = list(lam)
    rest.remove(n)
    return tuple(rest)


def h_act(n, s, v, annihilation_scale=1):
    """Apply the Heisenberg generator h_n to a LatticeState.

    ``annihilation_scale`` multiplies h_n for n > 0; anything other than 1
    breaks the commutation relations and exists for negative controls.
    """
    if n == 0:
        raise ValueError("h_0 is not defined")
    out = {}
    if n < 0:
        k = -n
        f = v.v_inv(k)
        for (lam, ch), c in s.terms.items():
            key = (tuple(sorted(lam + (k,), reverse=True)), ch)
            out[key] = out[key] + c * f if key in out else c * f
    else:
        for (lam, ch), c in s.terms.items():
            mult = lam.count(n)
            if not mult:
                continue
            key = (_remove_part(lam, n), ch)
            val = c * (n * mult * annihilation_scale)
            out[key] = out[key] + val if key in out else val
    return LatticeState({k: c for k, c in out.items()})


def commutator(m, n, s, v, annihilation_scale=1):
    a = h_act(m, h_act(n, s, v, annihilation_scale), v, annihilation_scale)
    b = h_act(n, h_act(m, s, v, annihilation_scale), v, annihilation_scale)
    return a - b


# ---------------------------------------------------------------------------
# exponentials of the Heisenberg generating series
# ---------------------------------------------------------------------------

def _sub_multisets(lam, k):
    """Sub-multisets mu of lam with |mu| = k, as (mu, rest)."""
    counts = sorted(Counter(lam).items(), reverse=True)

    def rec(i, remaining):
        if remaining == 0:
            yield ()
            return
        if i == len(counts):
            return
        part, mult = counts[i]
        for take in range(min(mult, remaining // part), -1, -1):
            for tail in rec(i + 1, remaining - take * part):
                yield (part,) * take + tail

    for mu in rec(0, k):
        rest = list(lam)
        for x in mu:
            rest.remove(x)
        yield mu, tuple(rest)


@lru_cache(maxsize=None)
def annihilation_coeff(lam, k):
    """z^{-k} coefficient of exp(-sum_n h_n z^{-n}/n) applied to p_lam.

    Returns ``{rest: integer}``; the h_n (n > 0) do not depend on v.
    """
    out = {}
    cl = Counter(lam)
    for mu, rest in _sub_multisets(lam, k):
        cm = Counter(mu)
        c = (-1) ** len(mu)
        for i, mi in cm.items():
            c *= comb(cl[i], mi)
        out[rest] = out.get(rest, 0) + c
    return {r: c for r, c in out.items() if c}


def creation_coeff(j, v):
    """z^j coefficient of exp(sum_n h_{-n} z^n/n): multiplication by
    sum_{mu |- j} v_mu^{-1} p_mu / z_mu."""
    return _creation(v, j)


_CREATION_CACHE = {}


def _creation(v, j):
    key = (id(v), j)
    if key not in _CREATION_CACHE:
        _CREATION_CACHE[key] = (v, {mu: v.v_inv_part(mu) * RatFunc.const(1) / z_of(mu)
                                    for mu in partitions_of(j)})
    return _CREATION_CACHE[key][1]


def _phi_on_basis(m, lam, v):
    """Phi_m p_lam as {partition: RatFunc}."""
    d = weight(lam)
    out = {}
    for k in range(max(0, -m), d + 1):
        j = m + k
        ann = annihilation_coeff(lam, k)
        if not ann:
            continue
        cre = _creation(v, j)
        for rest, a in ann.items():
            for mu, c in cre.items():
                key = tuple(sorted(rest + mu, reverse=True))
                val = c * a
                out[key] = out[key] + val if key in out else val
    return out


def phi_mode(m, s, v):
    """The z^m coefficient of Phi(z) applied to s; charges are untouched."""
    out = {}
    for (lam, ch), c in s.terms.items():
        for nu, val in _phi_on_basis(m, lam, v).items():
            key = (nu, ch)
            val = val * c
            out[key] = out[key] + val if key in out else val
    return LatticeState({k: c for k, c in out.items()})


def phi_product(lam, v):
    """Phi_{lam_1} ... Phi_{lam_k} 1 as a SymFunc."""
    s = LatticeState.vacuum()
    for part in reversed(tuple(lam)):
        s = phi_mode(part, s, v)
    return s.drop_charge()


def psi_mode(m, s, v):
    """The z^m coefficient of Psi(z) = Phi(z) e^alpha z^{d_alpha} applied to s.

    z^{d_alpha} contributes z^{charge} per input term, so the charge-k part
    of s feeds Phi_{m-k} and lands in charge k+1.
    """
    out = {}
    for (lam, ch), c in s.terms.items():
        for nu, val in _phi_on_basis(m - ch, lam, v).items():
            key = (nu, ch + 1)
            val = val * c
            out[key] = out[key] + val if key in out else val
    return LatticeState({k: c for k, c in out.items()})


def psi_product(modes, v, charge=0):
    """Psi_{m_1} ... Psi_{m_k} applied to 1 (x) e^{charge alpha}."""
    s = LatticeState.vacuum(charge)
    for m in reversed(tuple(modes)):
        s = psi_mode(m, s, v)
    return s
