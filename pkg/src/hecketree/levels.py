"""Level data: a monic polynomial modulus together with its factorization."""

from .polyring import ring_for


class Level:
    """A congruence level n, held as a monic polynomial over F_q."""

    def __init__(self, ring, n):
        assert n != (), "level must be a nonzero polynomial"
        self.ring = ring
        self.fq = ring.fq
        self.n = ring.monic(n)
        _, factors = ring.factor(self.n)
        self.factors = tuple(factors)
        self.deg = ring.deg(self.n)
        self.num_primes = len(self.factors)

    def __repr__(self):
        return "Level(%s over F_%d)" % (self.ring.to_str(self.n), self.fq.q)

    def label(self):
        return self.ring.to_str(self.n)

    def is_squarefree(self):
        return all(r == 1 for _, r in self.factors)

    def radical(self):
        rad = self.ring.one
        for p, _ in self.factors:
            rad = self.ring.mul(rad, p)
        return rad

    def divisors(self):
        """All monic divisors of n, sorted by (degree, coefficients)."""
        return self.ring.divisors(self.factors)

    def exact_divisors(self):
        """Monic m | n with gcd(m, n/m) = 1, the trivial divisor included."""
        out = []
        for d in self.divisors():
            co = self.ring.exact_div(self.n, d)
            if self.ring.coprime(d, co):
                out.append(d)
        return out

    def primes(self):
        return tuple(p for p, _ in self.factors)


def level_for(q, text, modulus=None):
    """Parse a level from CLI-style text like "T^2*(T-1)"."""
    ring = ring_for(q, modulus)
    return Level(ring, ring.parse(text))
