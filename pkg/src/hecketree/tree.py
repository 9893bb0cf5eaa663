"""The Bruhat-Tits tree for GL2 over F_q((pi)).

Vertices are classes [M] in GL2(F_inf) / Z * GL2(O_inf), edges are classes
modulo the Iwahori I (val(lower-left) >= 1).  The canonical vertex name is
(k, u) for the representative (pi^k, u; 0, 1) with u reduced mod pi^k; the
canonical edge name is (k, u, flipped) for the representative
stdmat(k, u) * w^flipped, where w = (0, 1; pi, 0).

Orientation: an edge e points from o(e) = [stdmat(e) * w^f] to
t(e) = [stdmat(e) * w^(f+1)]; the positively oriented edge (k, u, False)
points from (k, u) to (k-1, u mod pi^(k-1)), and reverse(e) just toggles the
flag.  With this convention the harmonicity sum runs over the q+1 tree edges
whose terminus is a given vertex.
"""

from dataclasses import dataclass

from .errors import IndeterminatePrecision
from .laurent import INF, Laurent, LaurentRing


def mat_mul2(A, B):
    a, b, c, d = A
    e, f, g, h = B
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_det2(A):
    a, b, c, d = A
    return a * d - b * c


def mat_from_polys(lring: LaurentRing, M):
    """2x2 matrix of polynomials in T -> Laurent matrix (T = pi^(-1))."""
    (a, b), (c, d) = M
    return (
        lring.from_poly(a),
        lring.from_poly(b),
        lring.from_poly(c),
        lring.from_poly(d),
    )


def lkey(u: Laurent):
    """Deterministic sort key for an exact Laurent tail."""
    return tuple((u.val + i, c) for i, c in enumerate(u.coeffs) if c)


@dataclass(frozen=True)
class Vertex:
    k: int
    u: Laurent  # exact, exponents < k

    def key(self):
        return (self.k, self.u.key())

    def sort_key(self):
        return (self.k, lkey(self.u))

    def name(self):
        return "v(%d, %s)" % (self.k, self.u)

    def json(self):
        return {"k": self.k, "u": str(self.u)}


@dataclass(frozen=True)
class OrientedEdge:
    k: int
    u: Laurent  # exact, exponents < k
    flipped: bool

    def key(self):
        return (self.k, self.u.key(), self.flipped)

    def sort_key(self):
        return (self.k, lkey(self.u), self.flipped)

    def name(self):
        return "e(%d, %s)%s" % (self.k, self.u, "~" if self.flipped else "")

    def json(self):
        return {"k": self.k, "u": str(self.u), "flipped": self.flipped}


def stdmat(lring, k, u):
    return (lring.monomial(k), u, lring.zero, lring.one)


def w_mat(lring):
    return (lring.zero, lring.one, lring.monomial(1), lring.zero)


def matrix_of(e: OrientedEdge, lring):
    S = stdmat(lring, e.k, e.u)
    if e.flipped:
        return mat_mul2(S, w_mat(lring))
    return S


def vertex_matrix(v: Vertex, lring):
    return stdmat(lring, v.k, v.u)


def std_edge(lring, k, u, flipped=False):
    """Edge with the already-reduced data (k, u); u may be given loosely."""
    uu = u.truncate(k).exactify() if u.coeffs else lring.zero
    return OrientedEdge(k, uu, flipped)


def reverse(e: OrientedEdge):
    return OrientedEdge(e.k, e.u, not e.flipped)


def upper_vertex(e: OrientedEdge):
    """Endpoint (k, u): the origin of the positive orientation."""
    return Vertex(e.k, e.u)


def lower_vertex(e: OrientedEdge, lring):
    """Endpoint (k-1, u mod pi^(k-1))."""
    u = e.u.truncate(e.k - 1).exactify() if e.u.coeffs else lring.zero
    return Vertex(e.k - 1, u)


def origin(e, lring):
    return lower_vertex(e, lring) if e.flipped else upper_vertex(e)


def terminus(e, lring):
    return upper_vertex(e) if e.flipped else lower_vertex(e, lring)


def normalize(M, lring) -> OrientedEdge:
    """Canonical (k, u, flipped) with M in stdmat * w^f * Z * I.

    Flip detection: the unflipped coset is characterized by
    val(c) > val(d); then k = val(det) - 2 val(d) and u = b/d mod pi^k.
    Division precision is set from the target window, so exact inputs never
    raise; truncated inputs raise IndeterminatePrecision when the window is
    short.
    """
    a, b, c, d = M
    vc = c.valuation() if (c.coeffs or c.prec is not None) else INF
    vd = d.valuation() if (d.coeffs or d.prec is not None) else INF
    if vc == INF and vd == INF:
        raise ZeroDivisionError("singular matrix: zero bottom row")
    flipped = vc <= vd
    if flipped:
        # right-multiply by w^(-1) = (0, pi^(-1); 1, 0)
        a, b, c, d = b, a.shift(-1), d, c.shift(-1)
    vdet = mat_det2((a, b, c, d)).valuation()
    assert vdet != INF, "singular matrix"
    vd = d.valuation()
    k = int(vdet - 2 * vd)
    u = _reduced_tail(b, d, vd, k, lring)
    return OrientedEdge(k, u, bool(flipped))


def _reduced_tail(num, den, vden, k, lring):
    """num/den reduced mod pi^k as an exact Laurent tail."""
    if not num.coeffs:
        if num.prec is None:
            return lring.zero
        if num.prec - vden < k:
            raise IndeterminatePrecision(
                "tail known to O(pi^%d), need O(pi^%d)" % (num.prec - int(vden), k)
            )
        return lring.zero
    vn = num.valuation()
    rel = max(int(k - (vn - vden)) + 1, 1)
    quo = num * den.inv(rel_prec=rel)
    if quo.prec is not None and quo.prec < k:
        raise IndeterminatePrecision(
            "quotient known to O(pi^%d), need O(pi^%d)" % (quo.prec, k)
        )
    return quo.truncate(k).exactify()


def vertex_of(M, lring) -> Vertex:
    """Canonical (k, u) with M in stdmat * Z * GL2(O)."""
    a, b, c, d = M
    vc = c.valuation() if (c.coeffs or c.prec is not None) else INF
    vd = d.valuation() if (d.coeffs or d.prec is not None) else INF
    if vc <= vd:
        # column swap: use a/c
        num, den, vden = a, c, vc
    else:
        num, den, vden = b, d, vd
    vdet = mat_det2(M).valuation()
    assert vdet != INF, "singular matrix"
    k = int(vdet - 2 * vden)
    u = _reduced_tail(num, den, vden, k, lring)
    return Vertex(k, u)


def edges_out(v: Vertex, lring):
    """The q+1 edges with origin v, sorted by (k, u, flipped)."""
    fq = lring.fq
    N = vertex_matrix(v, lring)
    out = []
    for beta in fq.elements():
        h = (lring.one, lring.zero, lring.from_const(beta), lring.one)
        out.append(normalize(mat_mul2(N, h), lring))
    swap = (lring.zero, lring.one, lring.one, lring.zero)
    out.append(normalize(mat_mul2(N, swap), lring))
    assert len({e.key() for e in out}) == fq.q + 1, "edges_out must be distinct"
    out.sort(key=OrientedEdge.sort_key)
    return out


def edges_into(v: Vertex, lring):
    """The q+1 edges with terminus v, sorted by (k, u, flipped)."""
    ins = [reverse(e) for e in edges_out(v, lring)]
    ins.sort(key=OrientedEdge.sort_key)
    return ins


def act(g, e: OrientedEdge, lring) -> OrientedEdge:
    """Left action of g (2x2 Laurent matrix) on the edge e."""
    return normalize(mat_mul2(g, matrix_of(e, lring)), lring)


def act_vertex(g, v: Vertex, lring) -> Vertex:
    return vertex_of(mat_mul2(g, vertex_matrix(v, lring)), lring)
