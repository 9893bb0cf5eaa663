"""Operator lattices, the Eisenstein quotient, and the component group.

Everything here is plain integer linear algebra: operator matrices are
flattened into row vectors, spans are held in Hermite normal form, and
quotients come out of Smith normal form.  No randomness anywhere, so every
invariant factor is bit-reproducible.
"""

from fractions import Fraction

from .errors import (
    NoStabilization,
    NonIntegral,
    NotEquivariant,
    NotSublattice,
)
from .intlinalg import (
    LinearSolver,
    hnf,
    identity,
    mat_eq,
    mat_mul,
    snf,
    transpose,
)


def _flat(M):
    return [x for row in M for x in row]


def _unflat(v, g):
    return [list(v[i * g : (i + 1) * g]) for i in range(g)]


def span_hnf(vecs):
    """HNF basis of the Z-span of integer vectors; zero rows dropped."""
    rows = [list(v) for v in vecs if any(v)]
    if not rows:
        return []
    return [r for r in hnf(rows) if any(r)]


class MatrixLattice:
    """Z-span of g-by-g integer matrices, held as an HNF row basis."""

    def __init__(self, g, basis, provenance=None):
        self.g = g
        self.basis = basis
        self.provenance = provenance or {}

    def rank(self):
        return len(self.basis)

    def matrices(self):
        return [_unflat(v, self.g) for v in self.basis]

    def coordinates(self, mats):
        """Columns of coordinates of the given matrices in this basis.

        None if any matrix falls outside the span.
        """
        if not self.basis:
            return [] if not mats else None
        solver = LinearSolver(transpose(self.basis))
        cols = []
        for M in mats:
            x = solver.solve(_flat(M))
            if x is None:
                return None
            cols.append(x)
        return transpose(cols)

    def contains(self, M):
        return self.coordinates([M]) is not None


class FinAbGroup:
    """Finite abelian group in invariant-factor form d1 | d2 | ..., all > 1."""

    def __init__(self, factors, projection=None):
        factors = tuple(int(d) for d in factors if d != 1)
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0, "invariant factors must divide in turn"
        self.factors = factors
        self.projection = projection

    def order(self):
        out = 1
        for d in self.factors:
            out *= d
        return out

    def is_trivial(self):
        return not self.factors

    def is_cyclic(self):
        return len(self.factors) <= 1

    def __eq__(self, other):
        if isinstance(other, FinAbGroup):
            return self.factors == other.factors
        return tuple(self.factors) == tuple(other)

    def __repr__(self):
        return "FinAbGroup%r" % (self.factors,)


def finite_quotient(g, relation_vectors):
    """Z^g modulo the span of the relation vectors, which must have full rank."""
    rows = [list(v) for v in relation_vectors]
    assert rows, "no relations: quotient is free"
    M = transpose(rows)  # g x k, columns are relations
    diag, U, _ = snf(M)
    nonzero = [d for d in diag if d]
    assert len(nonzero) == g, "quotient has a free part (rank %d of %d)" % (
        len(nonzero),
        g,
    )
    projection = [U[i] for i in range(g) if diag[i] > 1]
    return FinAbGroup(nonzero, projection)


def multiplicative_closure(g, gens, cap=8):
    """Z-span of the generators, closed under products with them.

    Iterates span -> span + (gen * basis, basis * gen) in HNF until a round
    adds nothing; the fixpoint is closed under the full algebra product.
    """
    basis = span_hnf([_flat(M) for M in gens])
    for _ in range(cap):
        mats = [_unflat(v, g) for v in basis]
        prods = []
        for a in gens:
            for b in mats:
                prods.append(_flat(mat_mul(a, b)))
                prods.append(_flat(mat_mul(b, a)))
        new = span_hnf(basis + prods)
        if new == basis:
            return basis
        basis = new
    raise NoStabilization("span still growing after %d multiplication rounds" % cap)


def hecke_algebra_lattice(H, gen_degree=2, coprime_only=False):
    """The operator algebra as an integer lattice in End of the cochain lattice.

    Spanned by the identity and the prime operators of degree <= gen_degree,
    closed under multiplication; coprime_only drops the primes dividing the
    level (the smaller classical subalgebra).
    """
    level = H.level
    ring = level.ring
    g = H.space.rank()
    gens = [identity(g)]
    used = []
    for d in range(1, gen_degree + 1):
        for p in ring.monic_irreducibles(d):
            if coprime_only and not ring.coprime(p, level.n):
                continue
            gens.append(H.hecke(p))
            used.append(p)
    basis = multiplicative_closure(g, gens)
    lat = MatrixLattice(
        g,
        basis,
        {"gen_degree": gen_degree, "coprime_only": coprime_only, "primes": used},
    )
    assert lat.contains(identity(g))
    if level.deg == 3 and not coprime_only and gen_degree > 1:
        # degree-one primes already span everything at cubic levels
        small = [identity(g)] + [H.hecke(p) for p in ring.monic_irreducibles(1)]
        assert multiplicative_closure(g, small) == basis
    return lat


def eta_matrices(H, degree):
    """(p, matrix of T_p - |p| - 1) for primes p of degree <= given, p prime to n."""
    ring = H.ring
    q = H.q
    g = H.space.rank()
    out = []
    for d in range(1, degree + 1):
        for p in ring.monic_irreducibles(d):
            if not ring.coprime(p, H.level.n):
                continue
            Tp = H.hecke(p)
            scal = q ** d + 1
            eta = [[Tp[i][j] - (scal if i == j else 0) for j in range(g)] for i in range(g)]
            out.append((p, eta))
    return out


def eisenstein_ideal_lattice(T, H, degree):
    """The ideal generated inside T by the eta operators up to the degree."""
    vecs = []
    for _, eta in eta_matrices(H, degree):
        for t in T.matrices():
            vecs.append(_flat(mat_mul(t, eta)))
    return MatrixLattice(T.g, span_hnf(vecs), {"eis_degree": degree})


def eisenstein_quotient(T, H, min_degree=2, settle_degree=3, cap=5):
    """Invariant factors of T modulo its Eisenstein ideal.

    The generating degree is raised until two consecutive degrees give the
    same factors, and at least through settle_degree.  Returns the group,
    the ideal lattice, and the degree that settled.
    """

    def factors_at(dd):
        E = eisenstein_ideal_lattice(T, H, dd)
        coords = T.coordinates(E.matrices())
        if coords is None:
            raise NotSublattice("ideal escapes the algebra lattice")
        rank_t = T.rank()
        if not E.basis:
            raise NoStabilization("empty ideal span; no primes below the degree cap")
        cols = transpose(coords)
        return finite_quotient(rank_t, cols), E

    dd = max(min_degree, 2)
    group, E = factors_at(dd)
    while dd < cap:
        nxt, En = factors_at(dd + 1)
        if nxt == group and dd + 1 >= settle_degree:
            return nxt, En, dd + 1
        group, E = nxt, En
        dd += 1
    raise NoStabilization("Eisenstein quotient still moving at degree %d" % cap)


# --- monodromy pairing and the component group -----------------------------------


def gram_matrix(space):
    """The pairing matrix of the canonical basis: sum of products over finite
    classes, each divided by the stabilizer order of the class."""
    graph = space.graph
    basis = space.basis()
    g = len(basis)
    stabs = [graph.edge_stab(cid) for cid in space.cids]
    G = []
    for i in range(g):
        row = []
        for j in range(g):
            total = Fraction(0)
            for pos in range(len(space.cids)):
                total += Fraction(basis[i][pos] * basis[j][pos], stabs[pos])
            if total.denominator != 1:
                raise NonIntegral("pairing entry %d,%d = %s" % (i, j, total))
            row.append(int(total))
        G.append(row)
    for i in range(g):
        for j in range(g):
            assert G[i][j] == G[j][i]
    # positive-definiteness via leading principal minors
    from .intlinalg import det as _det

    for k in range(1, g + 1):
        minor = _det([row[:k] for row in G[:k]])
        assert minor > 0, "pairing not positive-definite at minor %d" % k
    return G


def component_group(G):
    """Cokernel of the pairing matrix on dual coordinates."""
    g = len(G)
    if g == 0:
        return FinAbGroup(())
    return finite_quotient(g, transpose(G))


def dagger_matrix(H, M):
    """Matrix of the conjugated operator: the full involution on both sides."""
    W = H.atkin_lehner(H.level.n)
    return mat_mul(W, mat_mul(M, W))


def check_equivariance(H, M, G):
    """Transpose action intertwines the pairing with the conjugated operator."""
    lhs = mat_mul(transpose(M), G)
    rhs = mat_mul(G, dagger_matrix(H, M))
    if not mat_eq(lhs, rhs):
        raise NotEquivariant("pairing does not intertwine the operator")


def annihilates_quotient(M, G):
    """Whether the transpose action kills the cokernel of G entirely."""
    solver = LinearSolver(G)
    sol = solver.solve_matrix(transpose(M))
    return sol is not None


def action_on_quotient(H, M, G):
    """The operator on the cokernel generators, entries reduced modulo the
    invariant factor of each generator."""
    check_equivariance(H, M, G)
    g = len(G)
    diag, U, _ = snf(G)
    assert all(diag[i] for i in range(g)), "pairing matrix singular"
    Uinv = _int_inverse(U)
    full = mat_mul(U, mat_mul(transpose(M), Uinv))
    idx = [i for i in range(g) if diag[i] > 1]
    action = []
    for i in idx:
        action.append([full[i][j] % diag[i] for j in idx])
    return FinAbGroup([diag[i] for i in idx]), action


def _int_inverse(U):
    """Inverse of a unimodular integer matrix, exactly."""
    n = len(U)
    solver = LinearSolver(U)
    inv = solver.solve_matrix(identity(n))
    assert inv is not None, "matrix is not invertible over Z"
    return inv


def kernel_mod_lattice(ops, L):
    """The subgroup of the cokernel of L killed by every listed operator.

    Solves op x = L y jointly over Z, projects the solution lattice to x,
    and presents it modulo the columns of L.
    """
    from .intlinalg import kernel_basis

    g = len(L)
    if not ops:
        return component_group(L)
    rows = []
    nops = len(ops)
    for t, op in enumerate(ops):
        for i in range(g):
            row = [0] * (g + nops * g)
            for j in range(g):
                row[j] = op[i][j]
                row[g + t * g + j] = -L[i][j]
            rows.append(row)
    kern = kernel_basis(rows)
    xs = span_hnf([v[:g] for v in kern])
    assert len(xs) == g, "kernel lattice lost rank"
    solver = LinearSolver(transpose(xs))
    cols = []
    for j in range(g):
        col = solver.solve([L[i][j] for i in range(g)])
        assert col is not None, "the lattice escaped its own kernel overgroup"
        cols.append(col)
    return finite_quotient(g, cols)


def lattice_index(T, T0):
    """Index of the second lattice in the first; a ranks report if infinite."""
    if T.rank() != T0.rank():
        return {"rank": T.rank(), "rank0": T0.rank()}
    coords = T.coordinates(T0.matrices())
    if coords is None:
        raise NotSublattice("claimed sublattice has a vector outside the big lattice")
    r = T.rank()
    if r == 0:
        return 1
    diag, _, _ = snf(coords)
    index = 1
    for d in diag:
        assert d != 0
        index *= abs(d)
    return index
