"""The ring of symmetric functions over Q(q, t), stored in the power-sum basis.

A :class:`SymFunc` is a finite map ``partition -> RatFunc`` read as
``sum c_lam p_lam``. The monomial basis is only a conversion target.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .partitions import make_partition, partitions_of, union, weight, z_of
from .scalars import ONE, Q, T, RatFunc, ZERO, as_ratfunc

__all__ = [
    "SymFunc",
    "VFamily",
    "SCHUR",
    "HALL_LITTLEWOOD",
    "MACDONALD",
    "PRESETS",
    "preset",
    "sym_mul",
    "scalar_product",
    "p_perp",
    "to_monomial_basis",
    "from_monomial_basis",
    "monomial",
    "complete_homogeneous",
    "schur_oracle",
]


class SymFunc:
    """Immutable element of Lambda_F in the p-basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        for lam, c in (terms or {}).items():
            c = as_ratfunc(c)
            if not c.is_zero():
                out[tuple(lam)] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def p(cls, *parts, coeff=1):
        return cls({make_partition(parts): coeff})

    @classmethod
    def one(cls):
        return cls._raw({(): ONE})

    @classmethod
    def zero(cls):
        return cls._raw({})

    def is_zero(self):
        return not self.terms

    def __iter__(self):
        return iter(self.terms.items())

    def coeff(self, lam):
        return self.terms.get(tuple(lam), ZERO)

    def weights(self):
        return sorted({weight(lam) for lam in self.terms})

    def component(self, n):
        return SymFunc._raw({lam: c for lam, c in self.terms.items() if weight(lam) == n})

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return SymFunc._raw(_dadd(self.terms, other.terms, 1))

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return SymFunc._raw(_dadd(self.terms, other.terms, -1))

    def __neg__(self):
        return SymFunc._raw({lam: -c for lam, c in self.terms.items()})

    def scale(self, c):
        c = as_ratfunc(c)
        if c.is_zero():
            return SymFunc.zero()
        if c == 1:
            return self
        return SymFunc._raw({lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return sym_mul(self, other)
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coeffs(self, fn):
        return SymFunc({lam: fn(c) for lam, c in self.terms.items()})

    def subs(self, q=None, t=None):
        return self.map_coeffs(lambda c: c.subs(q=q, t=t))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def to_json(self, basis="p"):
        if basis == "p":
            items = self.sorted_terms()
        elif basis == "m":
            mono = to_monomial_basis(self)
            items = sorted(mono.items(), key=lambda kv: _sort_key(kv[0]))
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return {
            "basis": basis,
            "terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in items],
        }

    @classmethod
    def from_json(cls, data):
        terms = {make_partition(t["partition"]): RatFunc.parse(t["coeff"]) for t in data["terms"]}
        if data.get("basis", "p") == "m":
            return from_monomial_basis(terms)
        return cls(terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.sorted_terms():
            idx = ",".join(map(str, lam))
            parts.append(f"({c})*p[{idx}]")
        return " + ".join(parts)

    __repr__ = __str__


def _sort_key(lam):
    # weight ascending, then descending lex
    return (weight(lam), tuple(-x for x in lam) + (0,))


def _dadd(a, b, sign):
    out = dict(a)
    for k, c in b.items():
        if k in out:
            v = out[k] + c if sign == 1 else out[k] - c
        else:
            v = c if sign == 1 else -c
        if v.is_zero():
            out.pop(k, None)
        else:
            out[k] = v
    return out


# ---------------------------------------------------------------------------
# multiplicative families
# ---------------------------------------------------------------------------

class VFamily:
    """A multiplicative family v_lam = prod v_{lam_i}, given by n -> v_n."""

    def __init__(self, name, v_of):
        self.name = name
        self._v_of = v_of
        self._v = {}
        self._vinv = {}
        self._vpart = {}
        self._vinvpart = {}

    def v(self, n):
        if n not in self._v:
            val = as_ratfunc(self._v_of(n))
            if val.is_zero():
                raise ValueError(f"{self.name}: v_{n} must be invertible")
            self._v[n] = val
        return self._v[n]

    def v_inv(self, n):
        if n not in self._vinv:
            self._vinv[n] = self.v(n).inverse()
        return self._vinv[n]

    def v_part(self, lam):
        lam = tuple(lam)
        if lam not in self._vpart:
            out = ONE
            for part in lam:
                out = out * self.v(part)
            self._vpart[lam] = out
        return self._vpart[lam]

    def v_inv_part(self, lam):
        lam = tuple(lam)
        if lam not in self._vinvpart:
            out = ONE
            for part in lam:
                out = out * self.v_inv(part)
            self._vinvpart[lam] = out
        return self._vinvpart[lam]

    def check_expandable(self, nmax):
        """v_n^{-1} - 1 must vanish at q = t = 0 (needed to expand the bicharacter)."""
        for n in range(1, nmax + 1):
            s = (self.v_inv(n) - 1).series(0)
            if not s.is_zero():
                raise ValueError(f"{self.name}: v_{n}^-1 - 1 does not vanish at q = t = 0")

    def __repr__(self):
        return f"VFamily({self.name})"


SCHUR = VFamily("schur", lambda n: ONE)
HALL_LITTLEWOOD = VFamily("hall_littlewood", lambda n: ONE / (1 - T ** n))
MACDONALD = VFamily("macdonald", lambda n: (1 - Q ** n) / (1 - T ** n))

PRESETS = {f.name: f for f in (SCHUR, HALL_LITTLEWOOD, MACDONALD)}
_ALIASES = {"hl": "hall_littlewood", "mac": "macdonald", "s": "schur"}


def preset(name):
    name = _ALIASES.get(name, name)
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


# ---------------------------------------------------------------------------
# ring operations, scalar product, adjoints
# ---------------------------------------------------------------------------

def sym_mul(f, g):
    out = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            nu = union(lam, mu)
            v = out[nu] + a * b if nu in out else a * b
            if v.is_zero():
                out.pop(nu, None)
            else:
                out[nu] = v
    return SymFunc._raw(out)


def scalar_product(f, g, v):
    """<f, g>_v with <p_lam, p_mu> = delta z_lam v_lam."""
    acc = ZERO
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for lam, a in small.terms.items():
        b = big.terms.get(lam)
        if b is not None:
            acc = acc + a * b * v.v_part(lam) * z_of(lam)
    return acc


def p_perp(n, f, v):
    """Adjoint of multiplication by p_n: n v_n d/dp_n."""
    if n <= 0:
        raise ValueError("p_perp needs a positive index")
    out = {}
    scale = v.v(n) * n
    for lam, c in f.terms.items():
        k = lam.count(n)
        if not k:
            continue
        rest = list(lam)
        rest.remove(n)
        rest = tuple(rest)
        val = c * scale * k
        out[rest] = out[rest] + val if rest in out else val
    return SymFunc({k: c for k, c in out.items()})


# ---------------------------------------------------------------------------
# monomial basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _p_to_m_row(lam):
    """Coefficients of p_lam in the m-basis, by expansion in |lam| variables."""
    nvars = weight(lam)
    if nvars == 0:
        return {(): 1}
    poly = {(0,) * nvars: 1}
    for part in lam:
        nxt = {}
        for exps, c in poly.items():
            for i in range(nvars):
                e = list(exps)
                e[i] += part
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c
        poly = nxt
    out = {}
    for exps, c in poly.items():
        if all(exps[i] >= exps[i + 1] for i in range(nvars - 1)):
            out[tuple(e for e in exps if e)] = c
    return out


@lru_cache(maxsize=None)
def _m_to_p(mu):
    """m_mu in the p-basis, Fraction coefficients (triangular solve)."""
    row = _p_to_m_row(mu)
    # p_mu = row[mu] m_mu + sum_{nu > mu} row[nu] m_nu
    acc = {mu: Fraction(1)}
    for nu, c in row.items():
        if nu == mu:
            continue
        for lam, d in _m_to_p(nu).items():
            acc[lam] = acc.get(lam, 0) - c * d
    lead = row[mu]
    return {lam: c / lead for lam, c in acc.items() if c}


def to_monomial_basis(f):
    """Coefficients of f in the monomial basis."""
    out = {}
    for lam, c in f.terms.items():
        for mu, r in _p_to_m_row(lam).items():
            v = out[mu] + c * r if mu in out else c * r
            if v.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = v
    return out


def from_monomial_basis(coeffs):
    """Inverse of :func:`to_monomial_basis`."""
    weights = {weight(mu) for mu in coeffs}
    if len(weights) > 1:
        raise ValueError("from_monomial_basis expects a homogeneous input")
    out = {}
    for mu, c in coeffs.items():
        c = as_ratfunc(c)
        for lam, d in _m_to_p(make_partition(mu)).items():
            v = out[lam] + c * d if lam in out else c * d
            if v.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = v
    return SymFunc._raw(out)


def monomial(mu):
    """m_mu as a SymFunc."""
    return SymFunc._raw({lam: RatFunc.const(c) for lam, c in _m_to_p(make_partition(mu)).items()})


# ---------------------------------------------------------------------------
# Schur oracle: Jacobi-Trudi with h_n from Newton's identities
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def complete_homogeneous(n):
    """h_n = sum_{lam |- n} p_lam / z_lam."""
    if n < 0:
        return SymFunc.zero()
    return SymFunc._raw({lam: RatFunc.const(Fraction(1, z_of(lam))) for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def schur_oracle(lam):
    """s_lam = det(h_{lam_i - i + j}), expanded over permutations."""
    lam = make_partition(lam)
    k = len(lam)
    total = SymFunc.zero()
    for perm in permutations(range(k)):
        idx = [lam[i] - i + perm[i] for i in range(k)]
        if any(x < 0 for x in idx):
            continue
        term = SymFunc.one()
        for x in idx:
            term = term * complete_homogeneous(x)
        total = total + term if _perm_sign(perm) > 0 else total - term
    return total


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign
