"""Exact Laurent tails in the uniformizer."""

import pytest

from hecketree.fields import field
from hecketree.laurent import LaurentRing


@pytest.fixture(scope="module", params=[2, 3, 4, 5])
def lring(request):
    return LaurentRing(field(request.param))


def test_monomials(lring):
    pi = lring.monomial(1)
    assert pi.valuation() == 1
    assert lring.monomial(-3).valuation() == -3
    assert (pi * pi) == lring.monomial(2)
    assert lring.monomial(0) == lring.one


def test_polynomials_live_at_negative_exponents(lring):
    T = lring.from_poly((0, 1))
    assert T.valuation() == -1
    assert T * lring.monomial(1) == lring.one
    cubic = lring.from_poly((1, 0, 0, 1))  # T^3 + 1
    assert cubic.valuation() == -3


def test_additive_cancellation(lring):
    a = lring.monomial(2) + lring.monomial(5)
    b = lring.monomial(5)
    assert (a - b) == lring.monomial(2)
    assert (a - a) == lring.zero


def test_inverse_of_unit(lring):
    u = lring.one + lring.monomial(1)
    v = u.inv(rel_prec=12)
    prod = (u * v).truncate(10)
    assert prod == lring.one.truncate(10)


def test_truncate_then_exactify(lring):
    x = lring.monomial(0) + lring.monomial(4)
    t = x.truncate(3).exactify()
    assert t == lring.one
    assert x.truncate(5).exactify() == x


def test_neg_is_additive_inverse(lring):
    x = lring.monomial(-1) + lring.monomial(2)
    assert (x + (-x)) == lring.zero
