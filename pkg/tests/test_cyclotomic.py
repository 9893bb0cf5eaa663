"""Integer arithmetic in a prime cyclotomic field."""

import pytest
from hypothesis import given, settings, strategies as st

from hecketree.cyclotomic import CycInt
from hecketree.errors import NonRational


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_full_character_sum_vanishes(p):
    C = CycInt(p)
    acc = C.zero
    for k in range(p):
        acc = C.add(acc, C.zeta_pow(k))
    assert acc == C.zero


@pytest.mark.parametrize("p", [3, 5, 7])
def test_power_law(p):
    C = CycInt(p)
    for a in range(2 * p):
        for b in range(p):
            assert C.mul(C.zeta_pow(a), C.zeta_pow(b)) == C.zeta_pow(a + b)


def test_rational_certificate():
    C = CycInt(5)
    assert C.rational_value(C.from_int(12)) == 12
    assert C.rational_value(C.scale(9, C.from_int(2)), denom=3) == 6
    with pytest.raises(NonRational):
        C.rational_value(C.zeta_pow(1))


def test_add_zeta_matches_add():
    C = CycInt(7)
    a = C.from_int(4)
    assert C.add_zeta(a, 3, mult=2) == C.add(a, C.scale(2, C.zeta_pow(3)))


coords5 = st.tuples(*[st.integers(-8, 8)] * 4)


@given(coords5, coords5, coords5)
@settings(max_examples=60)
def test_mul_ring_axioms(a, b, c):
    C = CycInt(5)
    assert C.mul(a, b) == C.mul(b, a)
    assert C.mul(C.mul(a, b), c) == C.mul(a, C.mul(b, c))
    assert C.mul(a, C.add(b, c)) == C.add(C.mul(a, b), C.mul(a, c))
