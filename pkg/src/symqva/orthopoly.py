"""The families P_lam, Q_lam attached to a multiplicative family v.

P_lam is built by Gram-Schmidt against <,>_v, starting from m_lam and
projecting out the already-built P_mu with mu strictly dominance-below lam.
Existence is not assumed: every pair, comparable or not, is audited
afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import conjugate, dominance_leq, linear_extension, partitions_of
from .report import FAIL, PASS, CheckReport
from .scalars import ParamPoly
from .symfunc import (
    HALL_LITTLEWOOD,
    MACDONALD,
    SCHUR,
    SymFunc,
    monomial,
    scalar_product,
    schur_oracle,
    to_monomial_basis,
)

__all__ = [
    "OrthoFamily",
    "ExistenceError",
    "DegenerateNormError",
    "build_family",
    "family",
    "conjugate_order",
    "specialization_check",
    "SPECIALIZATIONS",
]


class ExistenceError(ArithmeticError):
    """The over-determined conditions have no solution for this v."""

    def __init__(self, lam, mu, value):
        super().__init__(f"<P{list(lam)}, P{list(mu)}>_v = {value} is not zero")
        self.pair = (lam, mu)
        self.value = value


class DegenerateNormError(ArithmeticError):
    pass


@dataclass
class OrthoFamily:
    v: object
    weight: int
    P: dict = field(default_factory=dict)
    Q: dict = field(default_factory=dict)
    u_coeffs: dict = field(default_factory=dict)
    norms: dict = field(default_factory=dict)


def conjugate_order(parts):
    """A second linear extension of dominance: ascending lex on conjugates."""
    return sorted(parts, key=conjugate)


def build_family(v, n, order=None, audit=True):
    """Gram-Schmidt for P_lam of weight n; ``order`` must list lam before mu
    whenever mu < lam (defaults to descending lex)."""
    parts = list(order) if order is not None else linear_extension(partitions_of(n))
    fam = OrthoFamily(v=v, weight=n)
    done = []
    for lam in reversed(parts):
        f = monomial(lam)
        for mu in done:
            if mu != lam and dominance_leq(mu, lam):
                c = scalar_product(f, fam.P[mu], v) / fam.norms[mu]
                if not c.is_zero():
                    f = f - fam.P[mu].scale(c)
        norm = scalar_product(f, f, v)
        if norm.is_zero():
            raise DegenerateNormError(f"<P{list(lam)}, P{list(lam)}>_v vanishes")
        fam.P[lam] = f
        fam.norms[lam] = norm
        fam.Q[lam] = f.scale(norm.inverse())
        done.append(lam)
    for lam in parts:
        for mu, c in to_monomial_basis(fam.P[lam]).items():
            if mu != lam:
                fam.u_coeffs[(lam, mu)] = c
    if audit:
        audit_family(fam)
    return fam


def audit_family(fam):
    """Check orthogonality of every pair and unitriangularity in m."""
    parts = sorted(fam.P, reverse=True)
    for i, lam in enumerate(parts):
        mono = to_monomial_basis(fam.P[lam])
        if mono.get(lam) != 1:
            raise ArithmeticError(f"P{list(lam)} is not monic in m{list(lam)}")
        for mu in mono:
            if mu != lam and not dominance_leq(mu, lam):
                raise ArithmeticError(f"P{list(lam)} has m{list(mu)} outside its down-set")
        for mu in parts[i + 1:]:
            val = scalar_product(fam.P[lam], fam.P[mu], fam.v)
            if not val.is_zero():
                raise ExistenceError(lam, mu, val)


@lru_cache(maxsize=None)
def _cached_family(name, n):
    from .symfunc import preset

    return build_family(preset(name), n)


def family(v, n):
    """Memoized :func:`build_family` for the named presets."""
    return _cached_family(v.name, n)


# ---------------------------------------------------------------------------
# degenerations
# ---------------------------------------------------------------------------

_T_POLY = ParamPoly.monomial(0, 1)


def _compare(got, want):
    for lam in sorted(set(got.terms) | set(want.terms), reverse=True):
        a, b = got.coeff(lam), want.coeff(lam)
        if a != b:
            return {"p_index": list(lam), "got": str(a), "expected": str(b)}
    return None


def _spec_schur_is_P_at_v1(k):
    fam = family(SCHUR, k)
    return {lam: (fam.P[lam], schur_oracle(lam)) for lam in fam.P}


def _spec_hl_t0(k):
    fam = family(HALL_LITTLEWOOD, k)
    return {lam: (fam.P[lam].subs(t=0), schur_oracle(lam)) for lam in fam.P}


def _spec_mac_q0(k):
    mac, hl = family(MACDONALD, k), family(HALL_LITTLEWOOD, k)
    return {lam: (mac.P[lam].subs(q=0), hl.P[lam]) for lam in mac.P}


def _spec_mac_qt(k):
    fam = family(MACDONALD, k)
    return {lam: (fam.P[lam].subs(q=_T_POLY), schur_oracle(lam)) for lam in fam.P}


_SOURCE = {
    "schur_is_P_at_v1": "schur",
    "hl_t0_is_schur": "hall_littlewood",
    "macdonald_q0_is_hl": "macdonald",
    "macdonald_qt_is_schur": "macdonald",
}

SPECIALIZATIONS = {
    "schur_is_P_at_v1": _spec_schur_is_P_at_v1,
    "hl_t0_is_schur": _spec_hl_t0,
    "macdonald_q0_is_hl": _spec_mac_q0,
    "macdonald_qt_is_schur": _spec_mac_qt,
}


def specialization_check(kind, n):
    """Compare a substituted family with its limit for every weight 1..n."""
    try:
        pairs_for = SPECIALIZATIONS[kind]
    except KeyError:
        raise ValueError(f"unknown specialization {kind!r}") from None
    compared = 0
    for k in range(1, n + 1):
        for lam, (got, want) in sorted(pairs_for(k).items(), reverse=True):
            compared += 1
            diff = _compare(got, want)
            if diff is not None:
                diff["partition"] = list(lam)
                return CheckReport(f"specialization:{kind}", _SOURCE[kind],
                                   {"max_weight": n}, FAIL, diff)
    return CheckReport(f"specialization:{kind}", _SOURCE[kind], {"max_weight": n}, PASS,
                       details={"compared": compared})


def as_ratfunc_table(fam):
    """u_{lam mu} as strings, for reports."""
    return {f"{list(lam)}>{list(mu)}": str(c) for (lam, mu), c in sorted(fam.u_coeffs.items())}

