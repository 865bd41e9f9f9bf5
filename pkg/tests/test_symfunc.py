from fractions import Fraction

import pytest

from symqva.partitions import partitions_of, z_of
from symqva.scalars import ONE, Q, T
from symqva.symfunc import (
    HALL_LITTLEWOOD,
    MACDONALD,
    SCHUR,
    SymFunc,
    from_monomial_basis,
    p_perp,
    preset,
    scalar_product,
    schur_oracle,
    to_monomial_basis,
)


def test_presets_and_aliases():
    assert preset("hl") is HALL_LITTLEWOOD
    assert preset("mac") is MACDONALD
    assert preset("schur") is SCHUR
    with pytest.raises((KeyError, ValueError)):
        preset("jack")


def test_v_values():
    assert HALL_LITTLEWOOD.v_inv(2) == 1 - T ** 2
    assert MACDONALD.v(1) == (1 - Q) / (1 - T)
    assert SCHUR.v(5) == ONE


def test_scalar_product_is_diagonal():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            got = scalar_product(SymFunc.p(*lam), SymFunc.p(*mu), HALL_LITTLEWOOD)
            want = z_of(lam) * HALL_LITTLEWOOD.v_part(lam) if lam == mu else 0
            assert got == want


def test_p_perp():
    f = p_perp(2, SymFunc.p(2, 2), HALL_LITTLEWOOD)
    assert f == SymFunc.p(2).scale(4 * HALL_LITTLEWOOD.v(2))


def test_p_perp_is_adjoint():
    v = MACDONALD
    g = SymFunc.p(3, 1) + SymFunc.p(1, 1, 1, 1)
    for n in (1, 2, 3):
        for lam in partitions_of(4 - n):
            lhs = scalar_product(SymFunc.p(n) * SymFunc.p(*lam), g, v)
            rhs = scalar_product(SymFunc.p(*lam), p_perp(n, g, v), v)
            assert lhs == rhs


def test_monomial_basis():
    assert to_monomial_basis(SymFunc.p(1, 1)) == {(2,): 1, (1, 1): 2}


@pytest.mark.parametrize("n", range(1, 7))
def test_monomial_roundtrip(n):
    for lam in partitions_of(n):
        f = SymFunc.p(*lam)
        assert from_monomial_basis(to_monomial_basis(f)) == f


def test_schur_oracle():
    assert schur_oracle((1, 1)) == SymFunc({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    assert schur_oracle((2, 1)) == SymFunc({(1, 1, 1): Fraction(1, 3), (3,): Fraction(-1, 3)})


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_oracle_is_orthonormal(n):
    parts = partitions_of(n)
    for lam in parts:
        for mu in parts:
            val = scalar_product(schur_oracle(lam), schur_oracle(mu), SCHUR)
            assert val == (1 if lam == mu else 0)


def test_json_roundtrip():
    f = schur_oracle((3, 1)).scale((1 - T) / (1 - Q))
    assert SymFunc.from_json(f.to_json("p")) == f
    assert SymFunc.from_json(f.to_json("m")) == f
