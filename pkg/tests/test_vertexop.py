import pytest

from symqva.orthopoly import family
from symqva.partitions import partitions_of
from symqva.scalars import ONE, T
from symqva.symfunc import HALL_LITTLEWOOD, MACDONALD, PRESETS, SCHUR, SymFunc, schur_oracle
from symqva.vertexop import (
    LatticeState,
    commutator,
    h_act,
    phi_mode,
    phi_product,
    psi_mode,
    psi_product,
)

VAC = LatticeState.vacuum()


def test_creation_operator():
    assert h_act(-1, VAC, HALL_LITTLEWOOD) == LatticeState.basis((1,), 0, 1 - T)


def test_annihilation_kills_missing_part():
    assert h_act(2, LatticeState.basis((1, 1)), HALL_LITTLEWOOD).is_zero()


def test_annihilation_is_derivative():
    s = LatticeState.basis((2, 2, 1), 3)
    assert h_act(2, s, SCHUR) == LatticeState.basis((2, 1), 3, 4)


def test_h0_undefined():
    with pytest.raises(ValueError):
        h_act(0, VAC, SCHUR)


def test_commutator_on_vacuum():
    assert commutator(1, -1, VAC, HALL_LITTLEWOOD) == VAC.scale(1 - T)


@pytest.mark.parametrize("v", list(dict.fromkeys(PRESETS.values())), ids=lambda v: v.name)
def test_heisenberg_relation_small(v):
    for lam in partitions_of(3):
        s = LatticeState.basis(lam, -1)
        for m in range(-3, 4):
            for n in range(-3, 4):
                if m and n:
                    want = s.scale(m * v.v_inv(abs(m))) if m + n == 0 else LatticeState()
                    assert commutator(m, n, s, v) == want


def test_phi_vacuum_modes():
    assert phi_mode(0, VAC, HALL_LITTLEWOOD) == VAC
    assert phi_mode(1, VAC, HALL_LITTLEWOOD) == LatticeState.basis((1,), 0, 1 - T)
    assert phi_mode(-1, VAC, HALL_LITTLEWOOD).is_zero()


def test_schur_phi_product():
    assert phi_product((2, 1), SCHUR) == schur_oracle((2, 1))
    assert phi_mode(2, phi_mode(1, VAC, SCHUR), SCHUR).drop_charge() == schur_oracle((2, 1))


def test_hl_phi_product():
    assert phi_product((2,), HALL_LITTLEWOOD) == family(HALL_LITTLEWOOD, 2).Q[(2,)]


def test_macdonald_two_rows_differ():
    assert phi_product((2, 2), MACDONALD) != family(MACDONALD, 4).Q[(2, 2)]
    assert phi_product((3,), MACDONALD) == family(MACDONALD, 3).Q[(3,)]


def test_psi_on_vacuum():
    assert psi_mode(0, VAC, HALL_LITTLEWOOD) == LatticeState.vacuum(1)
    assert psi_mode(-1, VAC, HALL_LITTLEWOOD).is_zero()


def test_psi_charge_shift():
    s = LatticeState.basis((2, 1), 2)
    for m in range(-2, 5):
        shifted = phi_mode(m - 2, s, MACDONALD)
        want = LatticeState({(lam, 3): c for (lam, _), c in shifted.terms.items()})
        assert psi_mode(m, s, MACDONALD) == want


@pytest.mark.parametrize("v", [SCHUR, HALL_LITTLEWOOD], ids=lambda v: v.name)
def test_psi_product_reproduces_phi_product(v):
    for n in range(1, 5):
        for lam in partitions_of(n):
            k = len(lam)
            modes = [part + k - 1 - i for i, part in enumerate(lam)]
            got = psi_product(modes, v)
            assert got.charges() == [k]
            assert got.sector(k) == phi_product(lam, v)


def test_lattice_state_json():
    s = LatticeState({((2, 1), 1): (1 - T) / 3, ((), -1): ONE})
    assert LatticeState.from_json(s.to_json()) == s
    assert s.to_json()[0] == {"partition": [], "charge": -1, "coeff": "1"}
