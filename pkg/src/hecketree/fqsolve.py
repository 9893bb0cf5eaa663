"""Gaussian elimination over F_q on numpy uint8 code arrays.

The field tables are lifted to numpy arrays once; row reduction then runs as
fancy-indexed table lookups, which is what makes the gamma-search linear
systems cheap enough to sit in the innermost loop of quotient building.
"""

import numpy as np


class FqSolver:
    def __init__(self, fq):
        self.fq = fq
        self.q = fq.q
        self.add = np.array(fq.add_table, dtype=np.uint8)
        self.mul = np.array(fq.mul_table, dtype=np.uint8)
        self.neg = np.array(fq.neg_table, dtype=np.uint8)
        self.inv = np.array([0] + [fq.inv_table[a] for a in range(1, fq.q)], dtype=np.uint8)

    def rref(self, A):
        """Reduced row echelon form (copy) and pivot column list."""
        A = np.array(A, dtype=np.uint8, copy=True)
        m, n = A.shape
        piv = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            p = r + nz[0]
            if p != r:
                A[[r, p]] = A[[p, r]]
            f = self.inv[A[r, c]]
            if f != 1:
                A[r] = self.mul[f, A[r]]
            col = A[:, c].copy()
            col[r] = 0
            rows = np.nonzero(col)[0]
            if rows.size:
                factors = self.neg[col[rows]]
                A[rows] = self.add[A[rows], self.mul[factors[:, None], A[r][None, :]]]
            piv.append(c)
            r += 1
        return A, piv

    def nullspace(self, A):
        """Rows spanning {x : A x = 0}; shape (dim, n)."""
        A = np.asarray(A, dtype=np.uint8)
        if A.size == 0:
            n = A.shape[1] if A.ndim == 2 else 0
            return np.eye(n, dtype=np.uint8)
        R, piv = self.rref(A)
        n = A.shape[1]
        pivset = set(piv)
        free = [j for j in range(n) if j not in pivset]
        basis = np.zeros((len(free), n), dtype=np.uint8)
        for bi, j in enumerate(free):
            basis[bi, j] = 1
            for i, pc in enumerate(piv):
                basis[bi, pc] = self.neg[R[i, j]]
        return basis

    def all_combinations(self, basis):
        """All q^s F_q-combinations of the basis rows, shape (q^s, n)."""
        basis = np.asarray(basis, dtype=np.uint8)
        if basis.shape[0] == 0:
            return np.zeros((1, basis.shape[1]), dtype=np.uint8)
        vecs = np.zeros((1, basis.shape[1]), dtype=np.uint8)
        scalars = np.arange(self.q, dtype=np.uint8)
        for b in basis:
            scaled = self.mul[scalars[:, None], b[None, :]]  # (q, n)
            vecs = self.add[vecs[:, None, :], scaled[None, :, :]].reshape(-1, basis.shape[1])
        return vecs

    def sample_combinations(self, basis, count, rng):
        """count pseudo-random combinations (may repeat)."""
        basis = np.asarray(basis, dtype=np.uint8)
        s, n = basis.shape
        out = np.zeros((count, n), dtype=np.uint8)
        for i in range(count):
            v = np.zeros(n, dtype=np.uint8)
            for b in basis:
                c = rng.randrange(self.q)
                if c:
                    v = self.add[v, self.mul[c, b]]
            out[i] = v
        return out
