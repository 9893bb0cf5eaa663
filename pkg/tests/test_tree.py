"""The regular tree: vertices, oriented edges, matrix action."""

import random

import pytest

from hecketree.fields import field
from hecketree.laurent import LaurentRing
from hecketree.tree import (
    OrientedEdge,
    Vertex,
    act,
    act_vertex,
    edges_out,
    mat_mul2,
    matrix_of,
    normalize,
    origin,
    reverse,
    std_edge,
    terminus,
    vertex_matrix,
    vertex_of,
)


@pytest.fixture(scope="module", params=[2, 3, 5])
def lr(request):
    return LaurentRing(field(request.param))


def random_vertex(lr, rng):
    k = rng.randrange(0, 4)
    u = lr.zero
    for i in range(k):
        c = rng.randrange(lr.fq.q)
        if c:
            u = u + lr.monomial(i, c)
    return Vertex(k, u)


def test_regularity(lr):
    q = lr.fq.q
    rng = random.Random(7)
    for _ in range(8):
        v = random_vertex(lr, rng)
        out = edges_out(v, lr)
        assert len(out) == q + 1
        assert len(set(out)) == q + 1
        for e in out:
            assert origin(e, lr) == v


def test_reverse_involution(lr):
    rng = random.Random(3)
    for _ in range(10):
        v = random_vertex(lr, rng)
        for e in edges_out(v, lr):
            assert reverse(reverse(e)) == e
            assert origin(reverse(e), lr) == terminus(e, lr)
            assert terminus(reverse(e), lr) == origin(e, lr)


def test_normalize_recovers_edges(lr):
    rng = random.Random(11)
    for _ in range(10):
        v = random_vertex(lr, rng)
        for e in edges_out(v, lr):
            assert normalize(matrix_of(e, lr), lr) == e


def test_vertex_matrix_roundtrip(lr):
    rng = random.Random(5)
    for _ in range(12):
        v = random_vertex(lr, rng)
        assert vertex_of(vertex_matrix(v, lr), lr) == v


def scalar_mat(lr, c):
    return (lr.monomial(0, c), lr.zero, lr.zero, lr.monomial(0, c))


def test_action_is_a_group_action(lr):
    q = lr.fq.q
    rng = random.Random(13)
    e = std_edge(lr, 2, lr.monomial(1))
    # g1 = [[T, 1], [1, 1]], g2 = [[1, 0], [T, 1]]  (unit determinants)
    T = lr.from_poly((0, 1))
    g1 = (T, lr.one, lr.one, lr.one)
    g2 = (lr.one, lr.zero, T, lr.one)
    lhs = act(g1, act(g2, e, lr), lr)
    rhs = act(mat_mul2(g1, g2), e, lr)
    assert lhs == rhs
    ident = scalar_mat(lr, 1)
    for _ in range(6):
        v = random_vertex(lr, rng)
        for edge in edges_out(v, lr)[:2]:
            assert act(ident, edge, lr) == edge
        assert act_vertex(ident, v, lr) == v
        if q > 2:
            assert act_vertex(scalar_mat(lr, 2), v, lr) == v  # center acts trivially


def test_action_preserves_incidence(lr):
    T = lr.from_poly((0, 1))
    g = (T, lr.one, lr.one, lr.one)
    e = std_edge(lr, 1, lr.zero)
    assert origin(act(g, e, lr), lr) == act_vertex(g, origin(e, lr), lr)
    assert terminus(act(g, e, lr), lr) == act_vertex(g, terminus(e, lr), lr)
