"""Operator lattices, their quotients, and component groups."""

import pytest

from hecketree.intlinalg import identity, mat_add, mat_sub, transpose
from hecketree.lattice import (
    FinAbGroup,
    component_group,
    eisenstein_quotient,
    kernel_mod_lattice,
    lattice_index,
)


def test_group_normal_form():
    g = FinAbGroup((1, 2, 6))
    assert g == (2, 6)
    assert g.order() == 12
    assert not g.is_cyclic()
    assert FinAbGroup((5,)).is_cyclic()
    assert FinAbGroup(()).is_trivial()
    assert FinAbGroup((1,)).is_trivial()


def test_component_group_of_diagonal_pairing():
    assert component_group([[2, 0], [0, 3]]) == (6,)
    assert component_group([[1, 0], [0, 1]]).is_trivial()


def test_quotient_at_irreducible_level(bundle):
    b = bundle(2, "T^3+T+1")
    group, E, settled = b.eisenstein()
    assert group == (7,)
    ring = b.graph.ring
    Un = b.H.hecke(b.graph.level.n)
    assert E.contains(mat_sub(Un, identity(b.rank)))


def test_quotient_at_double_prime_level(bundle):
    b = bundle(2, "T^2*(T+1)")
    group, E, settled = b.eisenstein()
    assert group == (6,)
    U = b.H.hecke(b.graph.ring.parse("T+1"))
    assert E.contains(mat_add(U, identity(b.rank)))


def test_quotient_at_split_level(bundle):
    b = bundle(3, "T*(T-1)*(T-2)")
    group, E, settled = b.eisenstein()
    assert group == (4, 4, 16)
    assert lattice_index(b.algebra(), b.coprime_algebra()) == 16


def test_kernel_of_the_ideal_on_components(bundle):
    b = bundle(2, "(T^2+T+1)^2")
    G = b.gram()
    assert component_group(G) == (2, 10)
    group, E, settled = b.eisenstein()
    ker = kernel_mod_lattice([transpose(M) for M in E.matrices()], G)
    assert ker == (5,)


def test_coprime_quotients_are_cyclic(bundle):
    for q, text, want in [(2, "T*(T^2+T+1)", (15,)), (3, "T*(T-1)*(T-2)", (16,))]:
        b = bundle(q, text)
        group, E0, settled = eisenstein_quotient(
            b.coprime_algebra(), b.H, settle_degree=b.settle_degree
        )
        assert group == want
        assert group.is_cyclic()
