"""Finite fields F_q, q = p^e <= 27, with dense arithmetic tables.

Elements are ints in range(q), encoding polynomials over F_p in a generator
x of F_q = F_p[x]/(modulus): the code sum(c_i * p**i) stands for
sum(c_i * x**i).  All arithmetic goes through precomputed tables, which keeps
the hot loops (Laurent multiplication, F_q Gaussian elimination) branch-free.
"""

from .errors import HecketreeError

# One fixed monic irreducible per (p, e): the lexicographically smallest by
# ascending coefficient tuple (c_0, ..., c_{e-1}).  Overridable per field.
MODULI = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (3, 2): (1, 0, 1),          # x^2 + 1
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    (5, 2): (2, 0, 1),          # x^2 + 2
}

MAX_Q = 27


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _fp_polymod(a, mod, p):
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    while len(a) > dm:
        a.pop()
    while len(a) < dm:
        a.append(0)
    return a


class Fq:
    """The field F_q with table-driven arithmetic on integer codes."""

    def __init__(self, p, e=1, modulus=None):
        if not _is_prime(p):
            raise HecketreeError("characteristic must be prime, got %r" % (p,))
        q = p ** e
        if q > MAX_Q:
            raise HecketreeError("q = %d exceeds the supported cap %d" % (q, MAX_Q))
        self.p = p
        self.e = e
        self.q = q
        if e == 1:
            self.modulus = (0, 1)  # x, i.e. F_p itself
        else:
            if modulus is None:
                self.modulus = MODULI[(p, e)]
            else:
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != e + 1 or modulus[-1] != 1:
                    raise HecketreeError("modulus must be monic of degree %d" % e)
                self.modulus = modulus
        self._build_tables()
        if e > 1:
            self._check_irreducible()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        mod = list(self.modulus[:-1]) + [1] if e > 1 else None

        def decode(c):
            return [(c // p ** i) % p for i in range(e)]

        def encode(coeffs):
            return sum((coeffs[i] % p) * p ** i for i in range(e))

        self.add_table = [[0] * q for _ in range(q)]
        self.mul_table = [[0] * q for _ in range(q)]
        self.neg_table = [0] * q
        for a in range(q):
            da = decode(a)
            self.neg_table[a] = encode([(-c) % p for c in da])
            for b in range(q):
                db = decode(b)
                self.add_table[a][b] = encode([(da[i] + db[i]) % p for i in range(e)])
                if e == 1:
                    self.mul_table[a][b] = (a * b) % p
                else:
                    prod = _fp_polymul(da, db, p)
                    self.mul_table[a][b] = encode(_fp_polymod(prod, mod, p))
        self.inv_table = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul_table[a][b] == 1:
                    self.inv_table[a] = b
                    break
        # trace down to F_p: Tr(a) = a + a^p + ... + a^(p^(e-1))
        self.trace_table = [0] * q
        for a in range(q):
            t = 0
            x = a
            for _ in range(e):
                t = self.add_table[t][x]
                x = self.pow(x, p)
            assert t < p, "trace landed outside the prime field"
            self.trace_table[a] = t

    def _check_irreducible(self):
        # x^(q) == x in F_q and no earlier power collapses to a subfield
        for a in range(1, self.q):
            if self.inv_table[a] == 0:
                raise HecketreeError("modulus is reducible: code %d has no inverse" % a)

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a][self.inv(b)]

    def pow(self, a, n):
        r = 1
        n = int(n)
        if n < 0:
            a = self.inv(a)
            n = -n
        while n:
            if n & 1:
                r = self.mul_table[r][a]
            a = self.mul_table[a][a]
            n >>= 1
        return r

    def trace(self, a):
        """Absolute trace to F_p, returned as an int in range(p)."""
        return self.trace_table[a]

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def from_int(self, n):
        """Embed an integer via F_p (reduction mod p)."""
        return n % self.p

    def element_str(self, a):
        """Human-readable form of a code: prime-field ints, else x-polynomial."""
        if a < self.p:
            return str(a)
        terms = []
        for i in range(self.e - 1, -1, -1):
            c = (a // self.p ** i) % self.p
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else "%d*x" % c)
            else:
                terms.append("x^%d" % i if c == 1 else "%d*x^%d" % (c, i))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "Fq(%d^%d)" % (self.p, self.e)


_FIELD_CACHE = {}


def field(q, modulus=None):
    """Field for a prime power q, cached for the default modulus."""
    p = None
    for cand in range(2, q + 1):
        if _is_prime(cand) and q % cand == 0:
            p = cand
            break
    if p is None:
        raise HecketreeError("q must be a prime power >= 2, got %r" % (q,))
    e = 0
    m = q
    while m > 1:
        if m % p:
            raise HecketreeError("q = %d is not a prime power" % q)
        m //= p
        e += 1
    if modulus is not None:
        return Fq(p, e, modulus)
    key = (p, e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Fq(p, e)
    return _FIELD_CACHE[key]
