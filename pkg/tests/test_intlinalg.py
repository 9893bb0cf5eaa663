"""Exact integer linear algebra: HNF, SNF, kernels, solving."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecketree.intlinalg import (
    LinearSolver,
    det,
    hnf,
    identity,
    kernel_basis,
    mat_eq,
    mat_mul,
    mat_vec,
    snf,
    transpose,
)


def small_matrices(rows, cols, bound=9):
    entry = st.integers(min_value=-bound, max_value=bound)
    return st.lists(
        st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    )


def test_snf_examples():
    diag, U, V = snf([[2, 1], [0, 2]])
    assert diag == [1, 4]
    diag, _, _ = snf([[6, 0], [0, 10]])
    assert diag == [2, 30]
    diag, _, _ = snf([[0, 0], [0, 0]])
    assert diag == [0, 0]


@given(small_matrices(3, 3))
@settings(max_examples=60)
def test_snf_certifies(M):
    diag, U, V = snf(M)
    prod = mat_mul(U, mat_mul(M, V))
    for i in range(3):
        for j in range(3):
            assert prod[i][j] == (diag[i] if i == j else 0)
    for i in range(2):
        if diag[i]:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0
    assert det(U) in (1, -1) and det(V) in (1, -1)
    assert abs(det(M)) == diag[0] * diag[1] * diag[2]


@given(small_matrices(3, 4))
@settings(max_examples=40)
def test_hnf_is_canonical_for_the_row_span(M):
    H = hnf(M)
    # permuting rows does not change the span, hence not the form
    assert hnf(list(reversed(M))) == H
    for row in H:
        assert any(row)
    # pivots positive and entries above them reduced
    for i, row in enumerate(H):
        piv = next(j for j, x in enumerate(row) if x)
        assert row[piv] > 0
        for k in range(i):
            assert 0 <= H[k][piv] < row[piv]


@given(small_matrices(2, 4))
@settings(max_examples=40)
def test_kernel_saturation(M):
    kern = kernel_basis(M)
    for v in kern:
        assert all(x == 0 for x in mat_vec(M, v))
    # rank-nullity over the rationals
    diag, _, _ = snf(M)
    rank = sum(1 for d in diag if d)
    assert len(kern) == 4 - rank


@given(small_matrices(3, 3), small_matrices(3, 3))
@settings(max_examples=40)
def test_det_multiplicative(A, B):
    assert det(mat_mul(A, B)) == det(A) * det(B)


def test_det_examples():
    assert det([[1, 2], [3, 4]]) == -2
    assert det(identity(5)) == 1
    assert det([[0, 1], [1, 0]]) == -1


def test_linear_solver_inside_and_outside():
    A = [[2, 0], [0, 3]]
    s = LinearSolver(A)
    assert s.solve([4, 9]) == [2, 3]
    assert s.solve([1, 0]) is None  # no integer solution
    sol = s.solve_matrix([[2, 0], [0, 6]])
    assert mat_eq(mat_mul(A, sol), [[2, 0], [0, 6]])


def test_transpose_shapes():
    assert transpose([[1, 2, 3]]) == [[1], [2], [3]]
    assert transpose(transpose([[1, 2], [3, 4]])) == [[1, 2], [3, 4]]
