"""Hecke operators and involutions on the cuspidal cochain lattice.

Operators act through explicit upper-triangular coset representatives.  An
image cochain is re-expressed in the canonical basis by solving a full-rank
probe subsystem with one redundant row thrown in, so a convention slip or a
non-integral image fails loudly instead of producing a plausible matrix.
"""

from fractions import Fraction

from .cusps import atkin_lehner_matrix
from .errors import NonIntegral
from .intlinalg import LinearSolver, transpose
from .tree import OrientedEdge, act, mat_from_polys


def upper_cosets(ring, m, n):
    """Triples (a, b, d): ad = m, a monic prime to n, deg b < deg d."""
    assert ring.is_monic(m) and ring.deg(m) >= 1
    _, fac = ring.factor(m)
    out = []
    for a in ring.divisors(fac):
        if not ring.coprime(a, n):
            continue
        d = ring.exact_div(m, a)
        dd = ring.deg(d)
        if dd == 0:
            out.append((a, (), d))
        else:
            for b in ring.all_polys(dd - 1):
                out.append((a, b, d))
    return out


class TranslateSum:
    """The function e -> sum of f(g e) over a fixed list of matrices.

    Evaluable like a cochain; used to probe operator images directly
    without re-expressing them in the basis first.
    """

    def __init__(self, f, mats):
        self.space = f.space
        self.f = f
        self.mats = mats

    def evaluate(self, e):
        lring = self.space.graph.lring
        return sum(self.f.evaluate(act(g, e, lring)) for g in self.mats)


class HeckeAction:
    """Operator matrices in the canonical basis of one cochain lattice.

    Columns are images: coords(f|T) = M(T) . coords(f).
    """

    def __init__(self, space):
        self.space = space
        self.graph = space.graph
        self.ring = space.graph.ring
        self.lring = space.graph.lring
        self.level = space.graph.level
        self.q = space.q
        self._probes = None
        self._solver = None
        self._ops = {}

    # --- probe subsystem ------------------------------------------------------

    def _ensure_probes(self):
        if self._probes is not None:
            return
        basis = self.space.basis()
        g = len(basis)
        rows = transpose(basis) if basis else []
        chosen = []
        elim = []  # (pivot position, reduced row) pairs over Q
        for ridx, row in enumerate(rows):
            if len(chosen) == g:
                break
            cand = [Fraction(x) for x in row]
            for pc, pr in elim:
                if cand[pc]:
                    scale = cand[pc] / pr[pc]
                    cand = [a - scale * b for a, b in zip(cand, pr)]
            pivot = next((i for i, x in enumerate(cand) if x), None)
            if pivot is not None:
                chosen.append(ridx)
                elim.append((pivot, cand))
        assert len(chosen) == g, "basis matrix lost rank"
        spare = next((i for i in range(len(rows)) if i not in chosen), None)
        if spare is not None:
            chosen.append(spare)
        self._probes = chosen
        self._solver = LinearSolver([rows[i] for i in chosen]) if g else None

    # --- generic operator ------------------------------------------------------

    def operator(self, label, mats):
        """Matrix of f -> sum of f(g e) over the given Laurent matrices."""
        if label in self._ops:
            return self._ops[label]
        self._ensure_probes()
        basis = self.space.basis()
        g = len(basis)
        if g == 0:
            self._ops[label] = []
            return []
        image_rows = []
        for ridx in self._probes:
            cid = self.space.cids[ridx]
            rep = self.graph.classes[cid].rep
            reds = [self.graph.class_of_edge(act(gm, rep, self.lring)) for gm in mats]
            row = []
            for vec in basis:
                s = 0
                for red in reds:
                    if red is None:
                        continue
                    tcid, sign = red
                    pos = self.space.index.get(tcid)
                    if pos is not None:
                        s += sign * vec[pos]
                row.append(s)
            image_rows.append(row)
        M = self._solver.solve_matrix(image_rows)
        if M is None:
            raise NonIntegral("operator image does not lie in the lattice: %r" % (label,))
        self._ops[label] = M
        return M

    def hecke_mats(self, m):
        return [
            mat_from_polys(self.lring, ((a, b), ((), d)))
            for a, b, d in upper_cosets(self.ring, m, self.level.n)
        ]

    def hecke(self, m):
        """Matrix of the degree-m averaging operator (monic m)."""
        return self.operator(("T", tuple(m)), self.hecke_mats(m))

    def atkin_lehner(self, m):
        """Matrix of the involution attached to an exact divisor m."""
        W = atkin_lehner_matrix(self.level, m)
        return self.operator(("W", tuple(m)), [mat_from_polys(self.lring, W)])

    def translate(self, f, m):
        """The image of a cochain under the degree-m operator, evaluable."""
        return TranslateSum(f, self.hecke_mats(m))


def probe_edge(lring):
    """The edge at depth two whose value reads off the leading coefficient."""
    return OrientedEdge(2, lring.monomial(1), False)


def first_coefficient(f):
    """Leading expansion coefficient of an evaluable cochain."""
    lring = f.space.graph.lring
    return -f.evaluate(probe_edge(lring))


def pairing_units(level):
    """Field elements u indexing the degree-one pairing operators.

    All of them when the level is squarefree; otherwise u drops out whenever
    (T - u)^2 divides the level, because the operator attached to T - u kills
    the whole lattice then.
    """
    ring = level.ring
    q = ring.fq.q
    if level.is_squarefree():
        return list(range(q))
    T = ring.parse("T")
    out = []
    for u in range(q):
        tu = ring.sub(T, (u,) if u else ())
        if ring.mod(level.n, ring.mul(tu, tu)) != ():
            out.append(u)
    return out


def pairing_matrix(H):
    """Pair the basis cochains against the degree-one operator family.

    Row i, column j holds the leading coefficient of h_i moved by the
    operator attached to T - u_j.  Unimodularity of this square matrix is
    what makes the lattice self-dual under the Petersson-style pairing.
    """
    fq = H.ring.fq
    edge = probe_edge(H.lring)
    rows = []
    for f in H.space.basis_cochains():
        row = []
        for u in pairing_units(H.level):
            row.append(-H.translate(f, (fq.neg(u), 1)).evaluate(edge))
        rows.append(row)
    return rows
