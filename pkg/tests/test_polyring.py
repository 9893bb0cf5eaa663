"""Polynomial ring arithmetic, parsing, factoring."""

import pytest
from hypothesis import given, settings, strategies as st

from hecketree.errors import PolyParseError
from hecketree.polyring import ring_for

R2 = ring_for(2)
R3 = ring_for(3)
R4 = ring_for(4)
R5 = ring_for(5)


def strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def polys(q, max_deg=5):
    return st.lists(
        st.integers(min_value=0, max_value=q - 1), max_size=max_deg + 1
    ).map(strip)


def test_parse_examples():
    assert R2.parse("T^3+T+1") == (1, 1, 0, 1)
    assert R2.parse("T*(T+1)") == (0, 1, 1)
    assert R3.parse("T*(T-1)*(T-2)") == R3.mul(
        R3.parse("T"), R3.mul(R3.parse("T-1"), R3.parse("T-2"))
    )
    assert R5.parse("2*T^2") == (0, 0, 2)
    # bracket syntax picks out field elements beyond the prime field
    assert R4.parse("T+[x]") == (2, 1)


def test_parse_reduces_integers_mod_char():
    assert R2.parse("T-2") == R2.parse("T")
    assert R3.parse("4") == (1,)


@pytest.mark.parametrize("text", ["T^^3", "(T", "T+", "$", ""])
def test_parse_rejects_garbage(text):
    with pytest.raises(PolyParseError):
        R2.parse(text)


@pytest.mark.parametrize("ring", [R2, R3, R4, R5])
def test_to_str_roundtrip_on_samples(ring):
    for a in ring.monic_polys(3):
        assert ring.parse(ring.to_str(a)) == a


@given(polys(3), polys(3))
def test_mul_commutes_f3(a, b):
    assert R3.mul(a, b) == R3.mul(b, a)


@given(polys(3), polys(3), polys(3))
def test_distributive_f3(a, b, c):
    lhs = R3.mul(a, R3.add(b, c))
    assert lhs == R3.add(R3.mul(a, b), R3.mul(a, c))


@given(polys(4), polys(4))
@settings(max_examples=60)
def test_divmod_f4(a, b):
    if b == ():
        return
    quot, rem = R4.divmod(a, b)
    assert R4.add(R4.mul(quot, b), rem) == a
    assert rem == () or R4.deg(rem) < R4.deg(b)


@given(polys(2, 6), polys(2, 6))
@settings(max_examples=60)
def test_xgcd_f2(a, b):
    if a == () and b == ():
        return
    g, u, v = R2.xgcd(a, b)
    assert R2.add(R2.mul(u, a), R2.mul(v, b)) == g
    assert R2.mod(a, g) == () and R2.mod(b, g) == ()
    assert g[-1] == 1  # monic


IRREDUCIBLE_COUNTS = {
    2: [2, 1, 2, 3],
    3: [3, 3, 8, 18],
    4: [4, 6, 20, 60],
    5: [5, 10, 40, 150],
}


@pytest.mark.parametrize("q,counts", sorted(IRREDUCIBLE_COUNTS.items()))
def test_irreducible_counts(q, counts):
    ring = ring_for(q)
    for d, want in enumerate(counts, start=1):
        got = ring.monic_irreducibles(d)
        assert len(got) == want
        for p in got:
            assert ring.deg(p) == d
            assert p[-1] == 1


@pytest.mark.parametrize("ring,q", [(R2, 2), (R3, 3), (R4, 4)])
def test_monic_poly_enumeration(ring, q):
    for d in (1, 2, 3):
        all_monic = ring.monic_polys(d)
        assert len(all_monic) == q ** d
        assert len(set(all_monic)) == q ** d
        for a in all_monic:
            assert ring.deg(a) == d and a[-1] == 1


def test_factor_reassembles():
    for ring in (R2, R3, R5):
        irr = ring.monic_irreducibles(1) + ring.monic_irreducibles(2)
        n = ring.mul(ring.mul(irr[0], irr[0]), irr[-1])
        lead, fac = ring.factor(n)
        prod = (lead,)
        for p, r in fac:
            for _ in range(r):
                prod = ring.mul(prod, p)
        assert prod == n
        assert sorted(fac) == fac  # deterministic order


@given(polys(5, 4))
@settings(max_examples=40)
def test_factor_degree_sum_f5(a):
    if a == ():
        return
    lead, fac = R5.factor(a)
    assert sum(R5.deg(p) * r for p, r in fac) == R5.deg(a)
    for p, _ in fac:
        assert p[-1] == 1
