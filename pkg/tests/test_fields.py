"""Finite field tables."""

import pytest
from hypothesis import given, strategies as st

from hecketree.fields import MODULI, field

QS = [2, 3, 4, 5, 7, 8, 9, 13, 16, 25, 27]


def fpow(fq, a, n):
    out = 1
    for _ in range(n):
        out = fq.mul(out, a)
    return out


@pytest.mark.parametrize("q", QS)
def test_inverses(q):
    fq = field(q)
    for a in range(1, q):
        assert fq.mul(a, fq.inv(a)) == 1


@pytest.mark.parametrize("q", QS)
def test_characteristic(q):
    fq = field(q)
    acc = 0
    for _ in range(fq.p):
        acc = fq.add(acc, 1)
    assert acc == 0
    assert q == fq.p ** fq.e


@pytest.mark.parametrize("q", QS)
def test_negation(q):
    fq = field(q)
    for a in range(q):
        assert fq.add(a, fq.neg(a)) == 0


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27])
def test_frobenius_is_additive(q):
    fq = field(q)
    p = fq.p
    for a in range(q):
        for b in range(q):
            assert fpow(fq, fq.add(a, b), p) == fq.add(fpow(fq, a, p), fpow(fq, b, p))


@pytest.mark.parametrize("q", QS)
def test_multiplicative_group_order(q):
    # every nonzero element satisfies a^(q-1) = 1
    fq = field(q)
    for a in range(1, q):
        assert fpow(fq, a, q - 1) == 1


def test_bad_sizes_rejected():
    for q in (1, 6, 10, 12):
        with pytest.raises((AssertionError, ValueError, KeyError)):
            field(q)


def test_preseeded_moduli_cover_extensions():
    for q in (4, 8, 9, 16, 25, 27):
        assert field(q).e > 1
    assert MODULI


F9 = field(9)
el9 = st.integers(min_value=0, max_value=8)


@given(el9, el9, el9)
def test_f9_ring_axioms(a, b, c):
    assert F9.add(a, b) == F9.add(b, a)
    assert F9.mul(a, b) == F9.mul(b, a)
    assert F9.add(F9.add(a, b), c) == F9.add(a, F9.add(b, c))
    assert F9.mul(F9.mul(a, b), c) == F9.mul(a, F9.mul(b, c))
    assert F9.mul(a, F9.add(b, c)) == F9.add(F9.mul(a, b), F9.mul(a, c))
