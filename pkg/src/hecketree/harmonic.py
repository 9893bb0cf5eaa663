"""Cuspidal harmonic cochains on a quotient graph.

A cochain keeps one integer per non-ray edge class; orientation flips the
sign, so alternation is structural.  The flow condition at a ray vertex
forces values to grow by a factor of q outward along the ray, hence any
cochain that dies out down the cusps vanishes on every ray class -- the
cuspidal lattice is exactly the kernel of the finite flow system.
"""

import itertools
from fractions import Fraction

from .cyclotomic import CycInt
from .intlinalg import hnf, kernel_basis
from .tree import OrientedEdge, reverse


def _tail(lring, coeffs):
    """Exact Laurent with the given coefficients at pi^1, pi^2, ..."""
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return lring.zero
    return lring.from_coeffs(1 + lo, tuple(coeffs[lo:hi]))


class CochainSpace:
    """The integral lattice of cuspidal harmonic cochains on one graph."""

    def __init__(self, graph):
        self.graph = graph
        self.q = graph.q
        self.cids = [c.id for c in graph.finite_classes()]
        self.index = {cid: i for i, cid in enumerate(self.cids)}
        self._basis = None

    def flow_rows(self):
        """One equation per vertex class: weighted signed values sum to zero."""
        rows = []
        for v in self.graph.vertices:
            if not v.processed:
                continue
            row = [0] * len(self.cids)
            touched = False
            for cid, orient, mult in v.incident:
                pos = self.index.get(cid)
                if pos is not None:
                    row[pos] += orient * mult
                    touched = True
            if touched and any(row):
                rows.append(row)
        return rows

    def basis(self):
        """Canonical basis of the lattice, as integer vectors over the classes."""
        if self._basis is None:
            rows = self.flow_rows()
            if not rows:
                self._basis = []
            else:
                kern = kernel_basis(rows)
                self._basis = [r for r in hnf(kern) if any(r)]
        return self._basis

    def rank(self):
        return len(self.basis())

    def cochain(self, vec):
        vec = tuple(vec)
        assert len(vec) == len(self.cids)
        return Cochain(self, vec)

    def basis_cochains(self):
        return [self.cochain(v) for v in self.basis()]

    def zero(self):
        return self.cochain((0,) * len(self.cids))


class Cochain:
    """An integer-valued cuspidal harmonic cochain, evaluable on any edge."""

    def __init__(self, space, vec):
        self.space = space
        self.vec = vec

    def class_value(self, cid):
        pos = self.space.index.get(cid)
        return 0 if pos is None else self.vec[pos]

    def evaluate(self, e):
        """Value on an oriented tree edge; zero down the cusps."""
        red = self.space.graph.class_of_edge(e)
        if red is None:
            return 0
        cid, sign = red
        return sign * self.class_value(cid)

    def __add__(self, other):
        assert self.space is other.space
        return Cochain(self.space, tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        assert self.space is other.space
        return Cochain(self.space, tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __rmul__(self, c):
        return Cochain(self.space, tuple(c * a for a in self.vec))

    def __neg__(self):
        return Cochain(self.space, tuple(-a for a in self.vec))


def fourier_coefficient(f, m):
    """The coefficient attached to a monic polynomial m, as an exact Fraction.

    Averages the cochain against the tail character over one horocycle layer;
    the cyclotomic accumulator certifies that the answer is rational.
    """
    graph = f.space.graph
    ring = graph.ring
    fq = ring.fq
    q = fq.q
    lring = graph.lring
    j = ring.deg(m)
    assert j >= 0 and ring.is_monic(m)
    k = j + 2
    mlaur = lring.from_poly(m)
    cyc = CycInt(fq.p)
    acc = cyc.zero
    for coeffs in itertools.product(range(q), repeat=k - 1):
        u = _tail(lring, coeffs)
        val = f.evaluate(OrientedEdge(k, u, False))
        if val:
            w = (mlaur * u).coeff(1)
            acc = cyc.add_zeta(acc, fq.trace(fq.neg(w)), mult=val)
    return cyc.rational_value(acc, denom=q ** (1 + j))


def expansion_value(f, e, coeffs=None):
    """Rebuild the value on an edge from coefficients of degree <= k-2.

    coeffs may carry precomputed values keyed by monic polynomial; missing
    ones are computed on the fly.  Cross-check path for the transform.
    """
    graph = f.space.graph
    ring = graph.ring
    q = graph.q
    lring = graph.lring
    if coeffs is None:
        coeffs = {}
    if e.flipped:
        return -expansion_value(f, reverse(e), coeffs)
    total = 0
    for j in range(e.k - 1):
        layer = 0
        for m in ring.monic_polys(j):
            if m not in coeffs:
                coeffs[m] = fourier_coefficient(f, m)
            tail = (lring.from_poly(m) * e.u).coeff(1)
            layer += coeffs[m] * ((q - 1) if tail == 0 else -1)
        total += Fraction(q ** (2 + j), q ** e.k) * layer
    return total
