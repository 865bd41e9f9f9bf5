from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symqva.kring import KElement, SingularSpecializationError, gbinom
from symqva.scalars import ParamSeries

ORDER = 2
Z = KElement.monomial(1, 0, ORDER)
W = KElement.monomial(0, 1, ORDER)
ONE = KElement.const(1, ORDER)
INV = KElement.zw_power(-1, ORDER)

term = st.tuples(
    st.integers(-2, 0),   # (z-w) exponent
    st.integers(-2, 2),   # z exponent
    st.integers(-2, 2),   # w exponent
    st.integers(0, 1),
    st.integers(0, 2),
    st.integers(-3, 3),
)


def build(items):
    out = KElement.zero(ORDER)
    for e, i, j, a, b, c in items:
        out = out + KElement.zw_power(e, ORDER) * KElement({(0, i, j, a, b): c}, ORDER)
    return out


kelems = st.lists(term, max_size=3).map(build)


def test_gbinom():
    assert [gbinom(-1, k) for k in range(4)] == [1, -1, 1, -1]
    assert gbinom(3, 2) == 3


def test_pole_inverse():
    assert INV * KElement.zw_power(1, ORDER) == ONE
    assert KElement.zw_power(-2, ORDER) * (Z - W) == INV


def test_normal_form_eliminates_z():
    assert Z * INV == ONE + W * INV
    assert (Z * INV).terms == {(0, 0, 0, 0, 0): 1, (-1, 0, 1, 0, 0): 1}


def test_partial_fractions():
    zinv = KElement.monomial(-1, 0, ORDER)
    winv = KElement.monomial(0, -1, ORDER)
    # 1/(z(z-w)) = (1/w)(1/(z-w) - 1/z)
    assert zinv * INV == winv * INV - winv * zinv


@settings(max_examples=40, deadline=None)
@given(kelems, kelems, kelems)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == KElement.zero(ORDER)


@settings(max_examples=40, deadline=None)
@given(kelems, kelems)
def test_derivations(a, b):
    assert (a * b).d_z() == a.d_z() * b + a * b.d_z()
    assert (a * b).d_w() == a.d_w() * b + a * b.d_w()
    assert a.d_z().d_w() == a.d_w().d_z()


@settings(max_examples=40, deadline=None)
@given(kelems, kelems)
def test_swap(a, b):
    assert a.swap().swap() == a
    assert (a * b).swap() == a.swap() * b.swap()
    assert a.swap().d_z() == a.d_w().swap()


@settings(max_examples=40, deadline=None)
@given(kelems)
def test_json_roundtrip(a):
    assert KElement.from_json(a.to_json()) == a


def test_swap_of_pole():
    assert INV.swap() == -INV


def test_specialize_w0():
    got = (KElement.zw_power(-2, ORDER) * W).specialize_w0()
    assert got == {}
    got = (INV + Z * W).specialize_w0()
    assert got == {-1: ParamSeries.const(1, ORDER)}


def test_specialize_w0_singular():
    with pytest.raises(SingularSpecializationError):
        KElement.monomial(0, -1, ORDER).specialize_w0()


def test_exp_and_truncation():
    x = KElement({(0, 0, 1, 0, 1): 1}, 3)  # t w
    e = x.exp()
    want = {(0, 0, k, 0, k): Fraction(1, [1, 1, 2, 6][k]) for k in range(4)}
    assert e.terms == want
    assert e.truncate(1).terms == {k: c for k, c in want.items() if k[4] <= 1}
    with pytest.raises(ValueError):
        (x + 1).exp()


def test_laurent_requires_pole_free():
    assert (Z * W).laurent() == {(1, 1, 0, 0): 1}
    with pytest.raises(ValueError):
        INV.laurent()
