"""Eisenstein cochains on oriented edges of the tree, evaluated exactly.

The level-m series assigns to a standard-form edge matrix a constant term
plus a truncated divisor-power sum twisted by an additive character of the
tail.  Character sums over scalar orbits collapse to a count of monic
polynomials whose product with the tail has prescribed vanishing, so values
come out as exact rationals without ever touching complex numbers.
"""

from fractions import Fraction

import numpy as np

from .fqsolve import FqSolver
from .laurent import LaurentRing
from .tree import reverse

_SIGMA_CACHE = {}


def sigma_weight(ring, m):
    """Sum of q^deg(d) over the monic divisors d of m."""
    key = (ring.fq.q, ring.fq.modulus, m)
    if key in _SIGMA_CACHE:
        return _SIGMA_CACHE[key]
    _, fac = ring.factor(m)
    total = 1
    for p, r in fac:
        dp = ring.deg(p)
        s = 0
        for i in range(r + 1):
            s += ring.fq.q ** (dp * i)
        total *= s
    _SIGMA_CACHE[key] = total
    return total


class EisensteinCochain:
    """Value oracle for the level-m Eisenstein cochain.

    Alternating on oriented edges; integer-valued on edges of any quotient
    graph whose level m divides.  Values are returned as Fractions so the
    handful of genuinely non-integral intermediate combinations stay exact.
    """

    def __init__(self, ring, m, lring=None):
        self.ring = ring
        self.fq = ring.fq
        self.q = self.fq.q
        assert ring.is_monic(m)
        self.m = m
        self.degm = ring.deg(m)
        self.lring = lring if lring is not None else LaurentRing(self.fq)
        self.fqs = FqSolver(self.fq)
        # odd-degree levels pick up an extra factor q+1
        self.front = 1 if self.degm % 2 == 0 else self.q + 1
        self._mlaurent = self.lring.from_poly(m)
        self._cache = {}

    def value(self, e):
        """Exact value on an oriented edge, as a Fraction."""
        if e.flipped:
            return -self.value(reverse(e))
        key = e.key()
        if key not in self._cache:
            bracket = self._bracket(e.u, e.k - 2)
            self._cache[key] = self.front * Fraction(self.q) ** (1 - e.k) * bracket
        return self._cache[key]

    def value_literal(self, e):
        """Same value by direct enumeration of the divisor sum; cross-check path."""
        if e.flipped:
            return -self.value_literal(reverse(e))
        bracket = self._constant() + self._divisor_sum_literal(e.u, e.k - 2)
        return self.front * Fraction(self.q) ** (1 - e.k) * bracket

    # --- bracket assembly ---------------------------------------------------

    def _constant(self):
        return Fraction(1 - self.q ** self.degm, 1 - self.q * self.q)

    def _bracket(self, y, cap):
        out = self._constant() + self._divisor_sum(y, cap)
        if cap - self.degm >= 0:
            shifted = self._mlaurent * y
            out -= (self.q ** self.degm) * self._divisor_sum(shifted, cap - self.degm)
        return out

    def _divisor_sum(self, y, cap):
        """Sum of sigma(f) * chi(f y) over monic f with deg f <= cap.

        chi(v) is q-1 when v has no pi^1 coefficient and -1 otherwise, the
        collapsed character sum over a scalar orbit.
        """
        if cap < 0:
            return 0
        q = self.q
        mass = 0
        for j in range(cap + 1):
            mass += (q ** (2 * j + 1) - q ** j) // (q - 1)
        aligned = 0
        for dd in range(cap + 1):
            for r, cnt in self._prefix_profile(y, dd, cap - dd):
                if cnt:
                    aligned += (q ** dd) * cnt * self._tail_mass(r, cap - dd)
        return q * aligned - mass

    def _tail_mass(self, r, span):
        """Count of monic cofactors of each degree t <= span hitting a zero
        pi^1 coefficient, given r leading zero tail coefficients of the fixed
        factor's product."""
        q = self.q
        total = 0
        for t in range(0, min(r - 1, span) + 1):
            total += q ** t
        for t in range(r + 1, span + 1):
            total += q ** (t - 1)
        return total

    def _prefix_profile(self, y, dd, span):
        """(r, count) pairs: how many monic degree-dd polys f give f*y exactly
        r leading zero coefficients at pi^1.., with r = span+1 lumping together
        everything vanishing through pi^(span+1)."""
        pvals = [self._prefix_count(y, dd, rr) for rr in range(span + 2)]
        out = [(r, pvals[r] - pvals[r + 1]) for r in range(span + 1)]
        out.append((span + 1, pvals[span + 1]))
        return out

    def _prefix_count(self, y, dd, rr):
        """Number of monic degree-dd polys f with (f*y) zero at pi^1..pi^rr."""
        if rr == 0:
            return self.q ** dd
        rows = []
        for i in range(rr):
            row = [y.coeff(1 + i + j) for j in range(dd)]
            row.append(self.fq.neg(y.coeff(1 + i + dd)))
            rows.append(row)
        if dd == 0:
            return 1 if all(r[-1] == 0 for r in rows) else 0
        _, piv = self.fqs.rref(np.array(rows, dtype=np.uint8))
        if dd in piv:
            return 0
        return self.q ** (dd - len(piv))

    # --- literal path -------------------------------------------------------

    def _sigma_level(self, f):
        s = sigma_weight(self.ring, f)
        quo, rem = self.ring.divmod(f, self.m)
        if not rem:
            s -= (self.q ** self.degm) * sigma_weight(self.ring, quo)
        return s

    def _divisor_sum_literal(self, y, cap):
        total = 0
        for j in range(cap + 1):
            for f in self.ring.monic_polys(j):
                w = self._sigma_level(f)
                if not w:
                    continue
                tail = (self.lring.from_poly(f) * y).coeff(1)
                total += w * ((self.q - 1) if tail == 0 else -1)
        return total
