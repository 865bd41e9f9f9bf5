import json

import pytest

from symqva.bicharacter import ModeWindow, VElement
from symqva.qva_checks import (
    SUITES,
    check_braided_locality,
    check_field_axioms,
    check_heisenberg,
    check_hl_Rhh,
    check_phi_identities,
    check_rmap_conditions,
    check_theorem_main,
    check_wrongtrcov_fails,
    hl_display,
    lattice_to_v,
    run_suite,
    wrongtrcov_counterexample,
)
from symqva.kring import KElement
from symqva.report import CheckReport
from symqva.scalars import T
from symqva.symfunc import HALL_LITTLEWOOD, MACDONALD, SCHUR
from symqva.vertexop import LatticeState


def test_report_contract():
    with pytest.raises(ValueError):
        CheckReport("x", "schur", status="fail")
    rep = CheckReport("x", "schur", {"order": 2})
    assert rep.passed and rep.line() == "[PASS] x (schur)"
    assert json.loads(rep.to_json())["status"] == "pass"


def test_heisenberg_hl_value():
    rep = check_heisenberg(HALL_LITTLEWOOD, 3, 4)
    assert rep.passed


def test_heisenberg_negative_control():
    rep = check_heisenberg(SCHUR, 2, 3, annihilation_scale=2)
    assert rep.status == "fail" and rep.witness


def test_phi_identities_macdonald_records_nonequality():
    rep = check_phi_identities(MACDONALD, 4)
    assert rep.passed
    assert rep.details


def test_lattice_identification():
    s = LatticeState.basis((2, 1), 1, 1 - T)
    x = lattice_to_v(s, HALL_LITTLEWOOD, 3)
    assert x.labels() == [((1, 2), 1)]
    # p_2 p_1 -> (2 v_2)(1 v_1) h^(2) h^(1), times 1 - t
    want = ((1 - T) * 2 / ((1 - T) * (1 - T ** 2))).series(3)
    assert x.coeff(((1, 2), 1)) == want


def test_theorem_small():
    assert check_theorem_main(HALL_LITTLEWOOD, weight_cap=2, order=3).passed
    assert check_theorem_main(SCHUR, weight_cap=2, order=0).passed


def test_field_axioms_and_dropped_r():
    assert check_field_axioms(VElement.h(2), HALL_LITTLEWOOD, 3).passed
    rep = check_field_axioms(VElement.h(), HALL_LITTLEWOOD, 3, drop_r=True)
    assert rep.status == "fail" and rep.witness["axiom"] == "creation"


def test_locality_trivial_and_schur():
    rep = check_braided_locality(VElement.one(), VElement.e(1), VElement.one(), SCHUR, order=0)
    assert rep.passed and rep.details["minimal_N"] == 0
    rep = check_braided_locality(VElement.h(), VElement.h(), VElement.one(), HALL_LITTLEWOOD, order=2)
    assert rep.passed and rep.details["minimal_N"] == 2


def test_rmap_epsilon_and_schur():
    assert check_rmap_conditions(SCHUR, 2, braiding="epsilon").passed
    assert check_rmap_conditions(HALL_LITTLEWOOD, 2).passed


def test_wrongtrcov():
    assert wrongtrcov_counterexample(SCHUR, 2) is None
    assert wrongtrcov_counterexample(HALL_LITTLEWOOD, 0) is None
    found = wrongtrcov_counterexample(HALL_LITTLEWOOD, 1)
    assert found is not None
    assert check_wrongtrcov_fails(HALL_LITTLEWOOD, 1).passed
    assert not check_wrongtrcov_fails(SCHUR, 1).passed


def test_hl_display_first_order():
    d = hl_display(1)
    assert d == KElement({(0, -2, 0, 0, 1): -1, (0, 0, -2, 0, 1): 1}, 1)


def test_hl_rhh_orders():
    assert check_hl_Rhh(0).passed
    rep = check_hl_Rhh(4)
    assert rep.passed and rep.details["global_sign"] in (1, -1)
    assert check_hl_Rhh(3, v=SCHUR).passed


def test_run_suite_unknown_and_errors():
    with pytest.raises(KeyError):
        run_suite("nope", SCHUR)
    reps = run_suite("heisenberg", SCHUR, {"weight_cap": 3})
    assert [r.status for r in reps] == ["pass"]
    assert set(SUITES) >= {"heisenberg", "theorem", "locality", "rmap", "controls"}


def test_reports_are_deterministic():
    a = [r.to_json() for r in run_suite("rmap", HALL_LITTLEWOOD, {"order": 2})]
    b = [r.to_json() for r in run_suite("rmap", HALL_LITTLEWOOD, {"order": 2})]
    assert a == b
