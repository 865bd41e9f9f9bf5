import pytest

from symqva.orthopoly import (
    DegenerateNormError,
    ExistenceError,
    build_family,
    conjugate_order,
    family,
    specialization_check,
)
from symqva.partitions import dominance_leq, partitions_of
from symqva.scalars import ONE, Q, T
from symqva.symfunc import (
    HALL_LITTLEWOOD,
    MACDONALD,
    SCHUR,
    SymFunc,
    VFamily,
    scalar_product,
    schur_oracle,
    to_monomial_basis,
)


def test_hl_two_row():
    fam = family(HALL_LITTLEWOOD, 2)
    assert to_monomial_basis(fam.P[(2,)]) == {(2,): 1, (1, 1): 1 - T}


def test_macdonald_weight_one():
    fam = family(MACDONALD, 1)
    assert to_monomial_basis(fam.P[(1,)]) == {(1,): 1}
    assert fam.Q[(1,)] == SymFunc.p(1).scale((1 - T) / (1 - Q))


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_family_matches_oracle(n):
    fam = family(SCHUR, n)
    for lam in partitions_of(n):
        assert fam.P[lam] == schur_oracle(lam)
        assert fam.Q[lam] == schur_oracle(lam)


@pytest.mark.parametrize("v", [SCHUR, HALL_LITTLEWOOD, MACDONALD], ids=lambda v: v.name)
@pytest.mark.parametrize("n", range(1, 5))
def test_duality_and_triangularity(v, n):
    fam = family(v, n)
    for lam in partitions_of(n):
        for mu, c in to_monomial_basis(fam.P[lam]).items():
            assert mu == lam and c == ONE or dominance_leq(mu, lam)
        for mu in partitions_of(n):
            assert scalar_product(fam.P[lam], fam.Q[mu], v) == (1 if lam == mu else 0)


@pytest.mark.parametrize("v", [SCHUR, HALL_LITTLEWOOD, MACDONALD], ids=lambda v: v.name)
@pytest.mark.parametrize("n", range(1, 6))
def test_order_independence(v, n):
    a = family(v, n)
    b = build_family(v, n, order=conjugate_order(partitions_of(n)))
    assert a.P == b.P and a.Q == b.Q


@pytest.mark.parametrize("v", [SCHUR, HALL_LITTLEWOOD], ids=lambda v: v.name)
def test_order_independence_weight_six(v):
    # first weight where dominance is not a chain
    a = family(v, 6)
    b = build_family(v, 6, order=conjugate_order(partitions_of(6)))
    assert a.P == b.P


def test_degenerate_norm():
    bad = VFamily("alternating", lambda n: ONE if n % 2 else -ONE)
    with pytest.raises(DegenerateNormError):
        build_family(bad, 2)


def test_generic_v_has_no_family_at_weight_six():
    generic = VFamily("generic", lambda n: ONE * (n + 1))
    build_family(generic, 5)
    with pytest.raises(ExistenceError) as info:
        build_family(generic, 6)
    assert len(info.value.pair) == 2


@pytest.mark.parametrize("kind", ["schur_is_P_at_v1", "hl_t0_is_schur", "macdonald_q0_is_hl", "macdonald_qt_is_schur"])
def test_specializations(kind):
    rep = specialization_check(kind, 4)
    assert rep.passed, rep.witness


def test_unknown_specialization():
    with pytest.raises(ValueError):
        specialization_check("jack_alpha1", 2)
