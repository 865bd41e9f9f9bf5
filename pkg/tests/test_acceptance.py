"""Acceptance suite: one marked group of tests per criterion.

Every comparison is exact. The terminal summary prints one PASS/FAIL line
per criterion (see conftest.py); running this file directly does the same.
"""

import pytest

from symqva.bicharacter import (
    ModeWindow,
    SigmaBicharacter,
    VElement,
    r_inverse,
    r_transpose,
    simple_braiding_factor,
)
from symqva.kring import KElement
from symqva.orthopoly import family
from symqva.partitions import partitions_of
from symqva.qva_checks import (
    check_braided_locality,
    check_family_audit,
    check_field_axioms,
    check_heisenberg,
    check_hl_Rhh,
    check_negative_controls,
    check_phi_identities,
    check_rmap_conditions,
    check_specializations,
    check_theorem_main,
    hl_display,
    wrongtrcov_counterexample,
)
from symqva.scalars import T
from symqva.symfunc import HALL_LITTLEWOOD, MACDONALD, SCHUR, schur_oracle
from symqva.vertexop import LatticeState, commutator, phi_product

PRESETS = [SCHUR, HALL_LITTLEWOOD, MACDONALD]
ids = lambda v: v.name  # noqa: E731

E, H, ONE = VElement.e(1), VElement.h(), VElement.one()
H_L, ONE_L = ((1,), 0), ((), 0)


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# 1 -------------------------------------------------------------------------

@criterion(1, "Heisenberg relations, |m|,|n| <= 6, weight <= 8, all presets")
@pytest.mark.parametrize("v", PRESETS, ids=ids)
def test_criterion_01_heisenberg(v):
    rep = check_heisenberg(v, m_range=6, weight_cap=8)
    assert rep.passed, rep.witness
    assert rep.details["commutators"] == 12 * 12 * sum(len(partitions_of(d)) for d in range(9))


@criterion(1, "Heisenberg relations, |m|,|n| <= 6, weight <= 8, all presets")
def test_criterion_01_hl_value():
    vac = LatticeState.vacuum()
    for m in range(1, 7):
        assert commutator(m, -m, vac, HALL_LITTLEWOOD) == vac.scale(m * (1 - T ** m))


# 2 -------------------------------------------------------------------------

@criterion(2, "Phi-products equal Jacobi-Trudi Schur functions, weight <= 6")
def test_criterion_02_schur():
    assert len(partitions_of(6)) == 11
    for d in range(1, 7):
        for lam in partitions_of(d):
            assert phi_product(lam, SCHUR) == schur_oracle(lam), lam
    assert check_phi_identities(SCHUR, 6).passed


# 3 -------------------------------------------------------------------------

@criterion(3, "Phi-products equal Hall-Littlewood Q_lam, weight <= 5")
def test_criterion_03_hall_littlewood():
    for d in range(1, 6):
        fam = family(HALL_LITTLEWOOD, d)
        for lam in partitions_of(d):
            assert phi_product(lam, HALL_LITTLEWOOD) == fam.Q[lam], lam
    assert check_phi_identities(HALL_LITTLEWOOD, 5).passed


# 4 -------------------------------------------------------------------------

@criterion(4, "Macdonald one-row equality r <= 5, (2,2) non-equality witness")
def test_criterion_04_macdonald():
    for r in range(1, 6):
        assert phi_product((r,), MACDONALD) == family(MACDONALD, r).Q[(r,)]
    diff = phi_product((2, 2), MACDONALD) - family(MACDONALD, 4).Q[(2, 2)]
    witness = [(mu, c) for mu, c in diff.sorted_terms() if not c.is_zero()]
    assert witness
    rep = check_phi_identities(MACDONALD, 5)
    assert rep.passed
    mu, c = witness[0]
    assert rep.details["non_equality_witness"] == {"partition": [2, 2], "p_index": list(mu),
                                                   "difference": str(c)}


# 5 -------------------------------------------------------------------------

@criterion(5, "orthogonal-family audit, weight <= 6, all presets")
@pytest.mark.parametrize("v", PRESETS, ids=ids)
def test_criterion_05_family_audit(v):
    rep = check_family_audit(v, 6)
    assert rep.passed, rep.witness
    # (3,1,1,1) and (2,2,2) are the first incomparable pair
    assert rep.details["zero_coefficients_checked"] > 0


# 6 -------------------------------------------------------------------------

@criterion(6, "degeneration chain macdonald -> hall_littlewood -> schur, weight <= 5")
def test_criterion_06_degenerations():
    reports = check_specializations(5)
    assert len(reports) == 4
    for rep in reports:
        assert rep.passed, (rep.check_name, rep.witness)
    for d in range(1, 6):
        mac, hl = family(MACDONALD, d), family(HALL_LITTLEWOOD, d)
        for lam in partitions_of(d):
            assert mac.P[lam].subs(q=0) == hl.P[lam]
            assert hl.P[lam].subs(t=0) == schur_oracle(lam)
            assert family(SCHUR, d).P[lam] == schur_oracle(lam)


# 7 -------------------------------------------------------------------------

@criterion(7, "Y(e^alpha, z) = Psi(z) and Heisenberg modes of Y(D alpha, z)")
@pytest.mark.parametrize("v", [HALL_LITTLEWOOD, MACDONALD], ids=ids)
def test_criterion_07_theorem(v):
    rep = check_theorem_main(v, weight_cap=4, order=6)
    assert rep.passed, rep.witness
    assert rep.details["psi_modes_compared"] > 0 and rep.details["heisenberg_commutators"] > 0


# 8 -------------------------------------------------------------------------

@criterion(8, "vacuum, creation, translation covariance, order 6")
@pytest.mark.parametrize("v", PRESETS, ids=ids)
@pytest.mark.parametrize("a", [VElement.h(), VElement.h(2), VElement.e(1), VElement.e(-1)],
                         ids=["h", "h2", "e", "e^-1"])
def test_criterion_08_field_axioms(a, v):
    rep = check_field_axioms(a, v, order=6)
    assert rep.passed, rep.witness


# 9 -------------------------------------------------------------------------

LOCALITY_WINDOW = ModeWindow(-4, 3)  # eight z- and w-exponents


@criterion(9, "braided locality: N <= 4 found; schur e^alpha pair has sign -1 and N = 1")
@pytest.mark.parametrize("v", PRESETS, ids=ids)
@pytest.mark.parametrize("c", [ONE, E], ids=["1", "e"])
@pytest.mark.parametrize("b", [E, H], ids=["e", "h"])
@pytest.mark.parametrize("a", [E, H], ids=["e", "h"])
def test_criterion_09_finite_N(a, b, c, v):
    rep = check_braided_locality(a, b, c, v, N_max=4, order=6, win=LOCALITY_WINDOW)
    assert rep.passed, rep.witness
    assert rep.details["minimal_N"] <= 4
    assert rep.details["nonzero_lhs_modes"] > 0


@criterion(9, "braided locality: N <= 4 found; schur e^alpha pair has sign -1 and N = 1")
def test_criterion_09_hl_scalar_factor():
    bc = SigmaBicharacter(HALL_LITTLEWOOD, 6)
    factor = simple_braiding_factor(HALL_LITTLEWOOD, 6)
    assert factor.order0() == KElement.const(-1, 6)
    assert r_transpose(bc).value(((), 1), ((), 1)) * r_inverse(bc).value(((), 1), ((), 1)) == factor


@criterion(9, "braided locality: N <= 4 found; schur e^alpha pair has sign -1 and N = 1")
def test_criterion_09_schur_odd_lattice():
    assert simple_braiding_factor(SCHUR, 6) == KElement.const(-1, 6)
    rep = check_braided_locality(E, E, ONE, SCHUR, N_max=4, order=6, win=LOCALITY_WINDOW)
    assert rep.passed
    # Stated target. The fields anticommute exactly, so with (w - z)^N on the
    # right only even N can hold and the measured minimum is 0.
    assert rep.details["minimal_N"] == 1, rep.details


# 10 ------------------------------------------------------------------------

@criterion(10, "Yang-Baxter, shift and unitarity of the braiding, order 4")
@pytest.mark.parametrize("v", PRESETS, ids=ids)
def test_criterion_10_rmap(v):
    rep = check_rmap_conditions(v, order=4)
    assert rep.passed, rep.witness


@criterion(10, "Yang-Baxter, shift and unitarity of the braiding, order 4")
def test_criterion_10_classical_braiding():
    assert check_rmap_conditions(HALL_LITTLEWOOD, order=4, braiding="epsilon").passed


# 11 ------------------------------------------------------------------------

@criterion(11, "Hall-Littlewood R(h (x) h): exact pole cancellation, display up to sign")
def test_criterion_11_hl_rhh():
    order = 6
    rep = check_hl_Rhh(order)
    assert rep.passed, rep.witness
    bc = SigmaBicharacter(HALL_LITTLEWOOD, order)
    assert r_transpose(bc).value(H_L, H_L).max_pole() == 2
    assert r_inverse(bc).value(H_L, H_L).max_pole() == 2
    sign = rep.details["global_sign"]
    assert sign in (1, -1)
    rest = KElement.from_json(rep.details["remainder"])
    assert rest.pole_free()
    assert rest == hl_display(order) * sign
    # t^1: one z^-2 term and one w^-2 term of opposite sign
    first = rest.param_part(0, 1)
    assert first == {(0, -2, 0): sign * -1, (0, 0, -2): sign * 1}
    assert rep.details["verbatim_with_r_times_inverse_transpose"] is True


@criterion(11, "Hall-Littlewood R(h (x) h): exact pole cancellation, display up to sign")
def test_criterion_11_order_zero_and_schur():
    assert KElement.from_json(check_hl_Rhh(0).details["remainder"]).is_zero()
    assert check_hl_Rhh(6, v=SCHUR).passed


# 12 ------------------------------------------------------------------------

@criterion(12, "negative controls are detected")
def test_criterion_12_negative_controls():
    assert not check_heisenberg(HALL_LITTLEWOOD, m_range=2, weight_cap=3, annihilation_scale=2).passed
    rep = check_field_axioms(VElement.h(), HALL_LITTLEWOOD, 2, drop_r=True)
    assert rep.status == "fail" and rep.witness["axiom"] == "creation"
    for order in (1, 2):
        assert wrongtrcov_counterexample(HALL_LITTLEWOOD, order) is not None
    assert wrongtrcov_counterexample(HALL_LITTLEWOOD, 0) is None
    assert wrongtrcov_counterexample(SCHUR, 2) is None
    assert check_negative_controls().passed


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
