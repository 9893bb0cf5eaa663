"""Averaging operators on the cochain lattice: laws they must satisfy."""

import pytest

from hecketree.hecke import pairing_matrix, pairing_units
from hecketree.intlinalg import det, identity, mat_add, mat_mul, mat_scale, mat_sub
from hecketree.lattice import check_equivariance
from hecketree.tree import mat_from_polys

BUNDLES = [(2, "T^3+T+1"), (3, "T^3"), (2, "T^2*(T+1)")]


def eye_mat(b):
    return identity(b.rank)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_identity_coset_acts_trivially(q, text, bundle):
    b = bundle(q, text)
    lring = b.graph.lring
    one = mat_from_polys(lring, ((b.graph.ring.one, ()), ((), b.graph.ring.one)))
    M = b.H.operator(("scalar", 1), [one])
    assert M == eye_mat(b)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_pairing_determinant_is_a_unit(q, text, bundle):
    b = bundle(q, text)
    assert det(pairing_matrix(b.H)) in (1, -1)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_prime_square_recursion(q, text, bundle):
    b = bundle(q, text)
    ring = b.graph.ring
    for p in ring.monic_polys(1):
        if not ring.coprime(p, b.graph.level.n):
            continue
        Tp = b.H.hecke(p)
        Tp2 = b.H.hecke(ring.mul(p, p))
        want = mat_sub(mat_mul(Tp, Tp), mat_scale(q, eye_mat(b)))
        assert Tp2 == want


@pytest.mark.parametrize("q,text", BUNDLES)
def test_involutions_square_to_one(q, text, bundle):
    b = bundle(q, text)
    ring = b.graph.ring
    for p, r in b.graph.level.factors:
        m = ring.one
        for _ in range(r):
            m = ring.mul(m, p)
        W = b.H.atkin_lehner(m)
        assert mat_mul(W, W) == eye_mat(b)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_level_prime_operator(q, text, bundle):
    """U at a prime dividing the level: zero unless the prime is exact,
    in which case it is minus the involution."""
    b = bundle(q, text)
    ring = b.graph.ring
    for p, r in b.graph.level.factors:
        U = b.H.hecke(p)
        if r == 1:
            assert U == mat_scale(-1, b.H.atkin_lehner(p))
        else:
            assert U == mat_scale(0, eye_mat(b))


@pytest.mark.parametrize("q,text", BUNDLES)
def test_degree_one_sum_is_minus_identity(q, text, bundle):
    b = bundle(q, text)
    ring = b.graph.ring
    T = ring.parse("T")
    total = mat_scale(0, eye_mat(b))
    for u in range(q):
        p = ring.sub(T, (u,) if u else ())
        total = mat_add(total, b.H.hecke(p))
    assert total == mat_scale(-1, eye_mat(b))


@pytest.mark.parametrize("q,text", BUNDLES)
def test_operators_commute(q, text, bundle):
    b = bundle(q, text)
    ring = b.graph.ring
    mats = [b.H.hecke(p) for p in ring.monic_polys(1)]
    mats.append(b.H.hecke(ring.monic_irreducibles(2)[0]))
    for i, A in enumerate(mats):
        for B in mats[i + 1:]:
            assert mat_mul(A, B) == mat_mul(B, A)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_pairing_intertwines_operators(q, text, bundle):
    b = bundle(q, text)
    ring = b.graph.ring
    G = b.gram()
    for p in list(ring.monic_polys(1))[:2]:
        check_equivariance(b.H, b.H.hecke(p), G)


@pytest.mark.parametrize("q,text", BUNDLES)
def test_pairing_units(q, text, bundle):
    b = bundle(q, text)
    level = b.graph.level
    units = pairing_units(level)
    if level.is_squarefree():
        assert units == list(range(q))
    else:
        assert len(units) == len(pairing_matrix(b.H))
