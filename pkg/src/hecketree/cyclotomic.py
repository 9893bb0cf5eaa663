"""Exact arithmetic in Z[zeta_p] for a prime p.

Elements are coordinate tuples of length p-1 in the power basis
1, zeta, ..., zeta^(p-2), using zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
Fourier-coefficient sums land here; rationality of a result is certified by
all higher coordinates vanishing, and that certificate is what downstream
consumers rely on.
"""

from fractions import Fraction

from .errors import NonRational


class CycInt:
    def __init__(self, p):
        self.p = p
        self.dim = p - 1
        self.zero = (0,) * self.dim

    def from_int(self, n):
        return (n,) + (0,) * (self.dim - 1)

    def zeta_pow(self, k):
        """zeta^k as a coordinate tuple."""
        k %= self.p
        if k < self.dim:
            out = [0] * self.dim
            out[k] = 1
            return tuple(out)
        # k == p-1
        return tuple([-1] * self.dim)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, n, a):
        return tuple(n * x for x in a)

    def add_zeta(self, a, k, mult=1):
        """a + mult * zeta^k, avoiding tuple churn in hot loops."""
        z = self.zeta_pow(k)
        return tuple(x + mult * y for x, y in zip(a, z))

    def mul(self, a, b):
        p = self.p
        conv = [0] * (2 * self.dim - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[: self.dim]) + [0] * max(0, self.dim - len(conv))
        for e in range(self.dim, len(conv)):
            c = conv[e]
            if not c:
                continue
            k = e % p
            if k < self.dim:
                out[k] += c
            else:
                for i in range(self.dim):
                    out[i] -= c
        return tuple(out[: self.dim])

    def is_rational(self, a):
        return all(x == 0 for x in a[1:])

    def rational_value(self, a, denom=1):
        """The rational a/denom, certified; raises NonRational otherwise."""
        if not self.is_rational(a):
            raise NonRational("zeta-part survives: %r" % (a,))
        return Fraction(a[0], denom)
