"""Laurent series in the uniformizer pi over F_q, with precision tracking.

An element stores (val, coeffs, prec): coeffs[i] is the coefficient of
pi^(val+i), coeffs[0] != 0, and exponents >= prec are unknown (prec=None
means exact, i.e. a Laurent polynomial).  Exponents between the end of
coeffs and prec are known zero; trailing zeros are trimmed.  A truncated
zero (all known coefficients vanish but prec is finite) keeps coeffs=() and
val=prec; asking for its valuation raises IndeterminatePrecision, which is
what forces callers to retry at higher precision instead of silently
misreading a deep cancellation as zero.
"""

import math

from .errors import IndeterminatePrecision

INF = math.inf


class LaurentRing:
    def __init__(self, fq, default_rel_prec=24):
        self.fq = fq
        self.default_rel_prec = default_rel_prec
        self.zero = Laurent(self, 0, (), None)
        self.one = Laurent(self, 0, (1,), None)

    def monomial(self, k, c=1):
        """c * pi^k, exact."""
        if c == 0:
            return self.zero
        return Laurent(self, k, (c,), None)

    def from_const(self, c):
        return self.monomial(0, c)

    def from_poly(self, poly):
        """Image of a polynomial in T under T = pi^(-1).  Exact."""
        if not poly:
            return self.zero
        return Laurent(self, -(len(poly) - 1), tuple(reversed(poly)), None)

    def from_coeffs(self, val, coeffs, prec=None):
        return Laurent(self, val, tuple(coeffs), prec)


class Laurent:
    __slots__ = ("ring", "val", "coeffs", "prec")

    def __init__(self, ring, val, coeffs, prec):
        coeffs = list(coeffs)
        if prec is not None:
            # drop unknown territory
            keep = prec - val
            if keep < len(coeffs):
                coeffs = coeffs[: max(keep, 0)]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        if not coeffs:
            val = prec if prec is not None else 0
        self.ring = ring
        self.val = val
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # --- inspection ---------------------------------------------------------

    def is_exact(self):
        return self.prec is None

    def is_zero(self):
        """True only for the exact zero; truncated zero raises."""
        if self.coeffs:
            return False
        if self.prec is None:
            return True
        raise IndeterminatePrecision(
            "zero to precision O(pi^%d); cannot certify exact zero" % self.prec
        )

    def valuation(self):
        if self.coeffs:
            return self.val
        if self.prec is None:
            return INF
        raise IndeterminatePrecision(
            "valuation of a series that vanishes to O(pi^%d)" % self.prec
        )

    def coeff(self, e):
        """Coefficient of pi^e; raises if e is beyond known precision."""
        if self.prec is not None and e >= self.prec:
            raise IndeterminatePrecision("coefficient at pi^%d beyond O(pi^%d)" % (e, self.prec))
        if self.coeffs and self.val <= e < self.val + len(self.coeffs):
            return self.coeffs[e - self.val]
        return 0

    def key(self):
        """Hashable canonical key; exact elements only."""
        assert self.prec is None, "key() of an inexact series"
        return (self.val, self.coeffs)

    # --- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        r = self.ring
        fq = r.fq
        pa, pb = self.prec, other.prec
        prec = None
        if pa is not None or pb is not None:
            prec = min(pa if pa is not None else INF, pb if pb is not None else INF)
            prec = int(prec)
        if not self.coeffs and not other.coeffs:
            return Laurent(r, 0, (), prec)
        lo = min(self.val if self.coeffs else INF, other.val if other.coeffs else INF)
        lo = int(lo)
        hi = max(
            self.val + len(self.coeffs) if self.coeffs else lo,
            other.val + len(other.coeffs) if other.coeffs else lo,
        )
        if prec is not None:
            hi = min(hi, prec)
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            if e < hi:
                out[e - lo] = c
        add = fq.add_table
        for i, c in enumerate(other.coeffs):
            e = other.val + i
            if e < hi:
                out[e - lo] = add[out[e - lo]][c]
        return Laurent(r, lo, out, prec)

    def __neg__(self):
        neg = self.ring.fq.neg_table
        return Laurent(self.ring, self.val, tuple(neg[c] for c in self.coeffs), self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        r = self.ring
        fq = r.fq
        pa, pb = self.prec, other.prec
        # exact zero annihilates regardless of the other factor's precision
        if not self.coeffs and pa is None:
            return r.zero
        if not other.coeffs and pb is None:
            return r.zero
        prec = None
        if pa is not None or pb is not None:
            va = self.val
            vb = other.val
            cand = min(
                (pa + vb) if pa is not None else INF,
                (pb + va) if pb is not None else INF,
            )
            prec = int(cand)
        if not self.coeffs or not other.coeffs:
            return Laurent(r, 0, (), prec)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        add = fq.add_table
        mul = fq.mul_table
        bco = other.coeffs
        for i, ai in enumerate(self.coeffs):
            if ai:
                row = mul[ai]
                for j, bj in enumerate(bco):
                    if bj:
                        out[i + j] = add[out[i + j]][row[bj]]
        return Laurent(r, self.val + other.val, out, prec)

    def scalar(self, c):
        if c == 0:
            return Laurent(self.ring, 0, (), self.prec)
        mul = self.ring.fq.mul_table[c]
        return Laurent(self.ring, self.val, tuple(mul[x] for x in self.coeffs), self.prec)

    def shift(self, k):
        """Multiply by pi^k."""
        return Laurent(
            self.ring,
            self.val + k,
            self.coeffs,
            None if self.prec is None else self.prec + k,
        )

    def inv(self, rel_prec=None):
        """Multiplicative inverse.

        Exact monomials invert exactly; anything else yields a series with
        rel_prec known terms (defaulting to the known window, or the ring
        default for exact non-monomials).
        """
        if not self.coeffs:
            if self.prec is None:
                raise ZeroDivisionError("inverse of the zero series")
            raise IndeterminatePrecision(
                "inverse of a series that vanishes to O(pi^%d)" % self.prec
            )
        fq = self.ring.fq
        v = self.val
        if self.prec is None and len(self.coeffs) == 1:
            return Laurent(self.ring, -v, (fq.inv(self.coeffs[0]),), None)
        if rel_prec is None:
            rel_prec = (self.prec - v) if self.prec is not None else self.ring.default_rel_prec
        rel_prec = max(int(rel_prec), 1)
        if self.prec is not None:
            rel_prec = min(rel_prec, self.prec - v)
        u = list(self.coeffs[:rel_prec]) + [0] * max(0, rel_prec - len(self.coeffs))
        c0i = fq.inv(u[0])
        out = [0] * rel_prec
        out[0] = c0i
        mul = fq.mul_table
        for k in range(1, rel_prec):
            s = 0
            for i in range(1, k + 1):
                if u[i] and out[k - i]:
                    s = fq.add_table[s][mul[u[i]][out[k - i]]]
            out[k] = mul[fq.neg_table[s]][c0i]
        return Laurent(self.ring, -v, out, -v + rel_prec)

    def divide(self, other, rel_prec=None):
        return self * other.inv(rel_prec=rel_prec)

    def truncate(self, e):
        """Forget everything at exponents >= e."""
        p = e if self.prec is None else min(self.prec, e)
        return Laurent(self.ring, self.val, self.coeffs, p)

    def exactify(self):
        """Reinterpret the known window as an exact Laurent polynomial."""
        return Laurent(self.ring, self.val, self.coeffs, None)

    # --- misc -----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        assert self.prec is None and other.prec is None, "== on inexact series"
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        fq = self.ring.fq
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.val + i
            cs = fq.element_str(c)
            if c >= fq.p:
                cs = "[%s]" % cs
            if e == 0:
                terms.append(cs)
            else:
                pe = "pi" if e == 1 else "pi^%d" % e
                terms.append(pe if c == 1 else "%s*%s" % (cs, pe))
        body = " + ".join(terms) if terms else "0"
        if self.prec is not None:
            body += " + O(pi^%d)" % self.prec
        return body

    def __repr__(self):
        return "Laurent(%s)" % self
