"""Polynomials over F_q in the variable T.

A polynomial is a plain tuple of field codes, ascending degree, with no
trailing zeros; the zero polynomial is the empty tuple.  All operations live
on a PolyRing bound to its field.  deg(0) is the sentinel NEG_INF so degree
comparisons behave.
"""

import itertools

from .errors import PolyParseError
from .fields import Fq, field

NEG_INF = float("-inf")


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyRing:
    def __init__(self, fq: Fq):
        self.fq = fq
        self.zero = ()
        self.one = (1,)
        self.T = (0, 1)
        self._irr_cache = {}

    # --- basic arithmetic -------------------------------------------------

    def deg(self, a):
        return len(a) - 1 if a else NEG_INF

    def absq(self, a):
        """|a| = q^deg(a), with |0| = 0."""
        return self.fq.q ** (len(a) - 1) if a else 0

    def lead(self, a):
        return a[-1] if a else 0

    def is_monic(self, a):
        return bool(a) and a[-1] == 1

    def add(self, a, b):
        fq = self.fq
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = fq.add_table[out[i]][c]
        return trim(out)

    def neg(self, a):
        neg = self.fq.neg_table
        return tuple(neg[c] for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scalar_mul(self, c, a):
        if c == 0:
            return ()
        mul = self.fq.mul_table[c]
        return tuple(mul[x] for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        fq = self.fq
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                row = fq.mul_table[ai]
                add = fq.add_table
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add[out[i + j]][row[bj]]
        return trim(out)

    def pow(self, a, n):
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("poly division by zero")
        fq = self.fq
        a = list(a)
        db, lb = len(b) - 1, b[-1]
        ilb = fq.inv(lb)
        q = [0] * max(0, len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                f = fq.mul(c, ilb)
                q[i - db] = f
                for j in range(db + 1):
                    a[i - db + j] = fq.sub(a[i - db + j], fq.mul(f, b[j]))
        return trim(q), trim(a)

    def mod(self, a, b):
        return self.divmod(a, b)[1]

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        assert r == (), "exact_div with nonzero remainder"
        return q

    def monic(self, a):
        if not a or a[-1] == 1:
            return a
        return self.scalar_mul(self.fq.inv(a[-1]), a)

    def gcd(self, a, b):
        while b:
            a, b = b, self.mod(a, b)
        return self.monic(a)

    def xgcd(self, a, b):
        """Return (g, s, t) with s*a + t*b = g and g monic (or zero).

        Maintain the invariants: s0*a + t0*b == r0, s1*a + t1*b == r1.
        """
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        if r0 and r0[-1] != 1:
            c = self.fq.inv(r0[-1])
            r0 = self.scalar_mul(c, r0)
            s0 = self.scalar_mul(c, s0)
            t0 = self.scalar_mul(c, t0)
        return r0, s0, t0

    def coprime(self, a, b):
        return self.gcd(a, b) == self.one

    # --- enumeration / factorization --------------------------------------

    def monic_polys(self, d):
        """All monic polynomials of degree exactly d, lex by coefficient tuple."""
        if d < 0:
            return
        for tail in itertools.product(range(self.fq.q), repeat=d):
            yield trim(tail + (1,))

    def all_polys(self, max_deg):
        """All polynomials of degree <= max_deg (including 0)."""
        for tail in itertools.product(range(self.fq.q), repeat=max_deg + 1):
            yield trim(tail)

    def is_irreducible(self, a):
        d = len(a) - 1
        if d <= 0:
            return False
        if d == 1:
            return True
        for dd in range(1, d // 2 + 1):
            for p in self.monic_irreducibles(dd):
                if self.mod(a, p) == ():
                    return False
        return True

    def monic_irreducibles(self, d):
        """Monic irreducibles of degree exactly d, sorted lex by coeff tuple."""
        if d not in self._irr_cache:
            self._irr_cache[d] = tuple(
                m for m in self.monic_polys(d) if self.is_irreducible(m)
            )
        return self._irr_cache[d]

    def factor(self, a):
        """Factor a nonzero polynomial into monic irreducibles.

        Returns (unit_code, [(prime, multiplicity), ...]) with primes sorted
        by (degree, coeff tuple).
        """
        assert a, "cannot factor zero"
        unit = a[-1]
        rem = self.monic(a)
        out = []
        d = 1
        while len(rem) > 1:
            # everything of degree < d is already divided out, so once
            # d exceeds deg(rem)/2 the remainder is itself irreducible
            if d > (len(rem) - 1) // 2:
                out.append((rem, 1))
                break
            for p in self.monic_irreducibles(d):
                mult = 0
                while True:
                    q, r = self.divmod(rem, p)
                    if r != ():
                        break
                    rem, mult = q, mult + 1
                if mult:
                    out.append((p, mult))
                if len(rem) == 1:
                    break
            d += 1
        out.sort(key=lambda pm: (len(pm[0]), pm[0]))
        return unit, out

    def divisors(self, factored):
        """Monic divisors from a factor list, sorted by (degree, coeff tuple)."""
        divs = [self.one]
        for p, m in factored:
            divs = [self.mul(d, self.pow(p, i)) for d in divs for i in range(m + 1)]
        return sorted(set(divs), key=lambda d: (len(d), d))

    # --- parsing / printing ------------------------------------------------

    def parse(self, text):
        return _Parser(self, text).run()

    def coeff_str(self, c):
        s = self.fq.element_str(c)
        return s if c < self.fq.p else "[%s]" % s

    def to_str(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(self.coeff_str(c))
            else:
                var = "T" if i == 1 else "T^%d" % i
                terms.append(var if c == 1 else "%s*%s" % (self.coeff_str(c), var))
        return " + ".join(terms)


class _Parser:
    """Recursive descent for polynomials in T.

    Grammar: expr := ['-'] term (('+'|'-') term)*
             term := factor ('*'? factor)*        (juxtaposition multiplies)
             factor := atom ('^' NUM)?
             atom := NUM | 'T' | '[' field-element ']' | '(' expr ')'
    Field elements inside brackets use the same grammar with x in place of T,
    evaluated in F_q.  Case-sensitive.
    """

    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.pos = 0
        self.toks = self._tokenize(text)
        self.i = 0

    def _tokenize(self, text):
        toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(("NUM", int(text[i:j])))
                i = j
            elif ch == "T":
                toks.append(("T", None))
                i += 1
            elif ch == "[":
                depth = 1
                j = i + 1
                while j < n and depth:
                    if text[j] == "[":
                        depth += 1
                    elif text[j] == "]":
                        depth -= 1
                    j += 1
                if depth:
                    raise PolyParseError("unbalanced '[' in %r" % text)
                toks.append(("ELT", text[i + 1 : j - 1]))
                i = j
            elif ch in "+-*^()":
                toks.append((ch, None))
                i += 1
            else:
                raise PolyParseError("unexpected character %r in %r" % (ch, text))
        toks.append(("END", None))
        return toks

    def _peek(self):
        return self.toks[self.i][0]

    def _next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def run(self):
        v = self._expr()
        if self._peek() != "END":
            raise PolyParseError("trailing tokens in %r" % self.text)
        return v

    def _expr(self):
        ring = self.ring
        if self._peek() == "-":
            self._next()
            v = ring.neg(self._term())
        else:
            v = self._term()
        while self._peek() in ("+", "-"):
            op = self._next()[0]
            t = self._term()
            v = ring.add(v, t) if op == "+" else ring.sub(v, t)
        return v

    def _term(self):
        v = self._factor()
        while True:
            k = self._peek()
            if k == "*":
                self._next()
                v = self.ring.mul(v, self._factor())
            elif k in ("NUM", "T", "ELT", "("):
                v = self.ring.mul(v, self._factor())
            else:
                return v

    def _factor(self):
        v = self._atom()
        if self._peek() == "^":
            self._next()
            kind, val = self._next()
            if kind != "NUM":
                raise PolyParseError("exponent must be a number in %r" % self.text)
            v = self.ring.pow(v, val)
        return v

    def _atom(self):
        kind, val = self._next()
        ring = self.ring
        if kind == "NUM":
            return trim((ring.fq.from_int(val),))
        if kind == "T":
            return ring.T
        if kind == "ELT":
            return trim((_parse_element(ring.fq, val),))
        if kind == "(":
            v = self._expr()
            if self._next()[0] != ")":
                raise PolyParseError("missing ')' in %r" % self.text)
            return v
        raise PolyParseError("unexpected token %r in %r" % (kind, self.text))


def _parse_element(fq, text):
    """Evaluate a bracketed field element written as a polynomial in x."""
    toks = _Parser.__new__(_Parser)
    toks.ring = None
    toks.text = text
    try:
        tok_list = toks._tokenize(text.replace("x", "T"))
    except PolyParseError:
        raise PolyParseError("bad field element %r" % text)
    # evaluate over F_q with T meaning the generator x
    i = [0]

    def peek():
        return tok_list[i[0]][0]

    def nxt():
        t = tok_list[i[0]]
        i[0] += 1
        return t

    gen = fq.p if fq.e > 1 else 0  # code of x

    def atom():
        kind, val = nxt()
        if kind == "NUM":
            return fq.from_int(val)
        if kind == "T":
            if fq.e == 1:
                raise PolyParseError("x used over a prime field in %r" % text)
            return gen
        if kind == "(":
            v = expr()
            if nxt()[0] != ")":
                raise PolyParseError("missing ')' in element %r" % text)
            return v
        raise PolyParseError("bad token in field element %r" % text)

    def fact():
        v = atom()
        if peek() == "^":
            nxt()
            kind, val = nxt()
            if kind != "NUM":
                raise PolyParseError("bad exponent in element %r" % text)
            v = fq.pow(v, val)
        return v

    def term():
        v = fact()
        while peek() in ("NUM", "T", "(", "*"):
            if peek() == "*":
                nxt()
            v = fq.mul(v, fact())
        return v

    def expr():
        if peek() == "-":
            nxt()
            v = fq.neg(term())
        else:
            v = term()
        while peek() in ("+", "-"):
            op = nxt()[0]
            t = term()
            v = fq.add(v, t) if op == "+" else fq.sub(v, t)
        return v

    v = expr()
    if peek() != "END":
        raise PolyParseError("trailing tokens in field element %r" % text)
    return v


def ring_for(q, modulus=None):
    return PolyRing(field(q, modulus))
