"""Exact integer linear algebra: HNF, SNF with transforms, kernels, solvers.

Matrices are lists of lists of Python ints (rows).  Everything is
fraction-free; unimodular transforms are tracked explicitly where needed
(kernels, quotient presentations).  Sizes here are tiny (tens), so clarity
beats asymptotics.
"""


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def mat_copy(M):
    return [row[:] for row in M]


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    if not A or not B:
        return []
    n = len(B[0])
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]

def mat_add(A, B):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * x for x in row] for row in A]


def mat_sub(A, B):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def is_zero_matrix(A):
    return all(x == 0 for row in A for x in row)


def mat_eq(A, B):
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def hnf(M):
    """Row Hermite normal form of the row space of M.

    Returns the echelon basis: positive pivots, entries above a pivot reduced
    into [0, pivot), zero rows dropped.  Two integer row-spans are equal iff
    their HNFs are equal.
    """
    A = [row[:] for row in M if any(row)]
    if not A:
        return []
    n = len(A[0])
    r = 0
    for c in range(n):
        # gcd-eliminate column c among rows r..
        piv = None
        for i in range(r, len(A)):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    if abs(A[i][c]) < abs(A[r][c]):
                        A[r], A[i] = A[i], A[r]
                    q = A[i][c] // A[r][c]
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        changed = True
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return [row for row in A[:r]]


def _swap_rows(A, U, i, j):
    A[i], A[j] = A[j], A[i]
    U[i], U[j] = U[j], U[i]


def _swap_cols(A, V, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]
    for row in V:
        row[i], row[j] = row[j], row[i]


def _addmul_row(A, U, dst, src, c):
    A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
    U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]


def _addmul_col(A, V, dst, src, c):
    for row in A:
        row[dst] += c * row[src]
    for row in V:
        row[dst] += c * row[src]


def snf(M):
    """Smith normal form: returns (diag, U, V) with U*M*V diagonal.

    diag is the full list of diagonal entries (length min(m,n)), nonnegative,
    each dividing the next.  U (m x m) and V (n x n) are unimodular.
    """
    m = len(M)
    n = len(M[0]) if M else 0
    A = [row[:] for row in M]
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        # locate a minimal nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _swap_rows(A, U, t, best[0])
        _swap_cols(A, V, t, best[1])
        while True:
            # clear column t
            dirty = False
            for i in range(m):
                if i != t and A[i][t]:
                    q = A[i][t] // A[t][t]
                    _addmul_row(A, U, i, t, -q)
                    if A[i][t]:
                        _swap_rows(A, U, t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(n):
                if j != t and A[t][j]:
                    q = A[t][j] // A[t][t]
                    _addmul_col(A, V, j, t, -q)
                    if A[t][j]:
                        _swap_cols(A, V, t, j)
                        dirty = True
            if not dirty:
                break
        # pivot must divide the rest of the block; if not, fold the offender in
        d = A[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _addmul_row(A, U, t, offender, 1)
            continue
        if d < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return diag, U, V


def kernel_basis(M):
    """Basis of {x in Z^n : M x = 0}, returned as a list of length-n vectors.

    Comes from the unimodular V of the SNF, hence is saturated: any integer
    point of the rational kernel is an integer combination of these.
    """
    if not M:
        return []
    n = len(M[0])
    diag, _U, V = snf(M)
    cols = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    return [[V[i][j] for i in range(n)] for j in cols]


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[-1][-1]


class LinearSolver:
    """Repeated exact solves A x = b over Z for a fixed A (m x n)."""

    def __init__(self, A):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.diag, self.U, self.V = snf(A)
        self.rank = sum(1 for d in self.diag if d)

    def solve(self, b):
        """An integer solution x of A x = b, or None if none exists."""
        if self.m == 0:
            return [0] * self.n if all(x == 0 for x in b) else None
        c = mat_vec(self.U, b)
        y = [0] * self.n
        for i in range(self.m):
            d = self.diag[i] if i < len(self.diag) else 0
            if d:
                if c[i] % d:
                    return None
                if i < self.n:
                    y[i] = c[i] // d
            elif c[i]:
                return None
        return mat_vec(self.V, y)

    def solve_matrix(self, B):
        """Columnwise solve A X = B; None if any column fails."""
        cols = transpose(B)
        out = []
        for col in cols:
            x = self.solve(col)
            if x is None:
                return None
            out.append(x)
        return transpose(out)
