"""Cusps of the level group: enumeration, counting, involution action.

A cusp is a projective point (u : v) over F_q(T) up to the level group.  Its
class is pinned down by the monic divisor b = gcd(v, n) together with the
residue of the first coordinate modulo bt = gcd(b, n/b), taken up to scalars.
Canonical representatives are the pairs (a, b) with that data minimized.
"""

from .errors import NonRational


def btilde(level, b):
    ring = level.ring
    return ring.gcd(b, ring.exact_div(level.n, b))


def cusp_count(level):
    """Number of cusps, by the divisor-sum formula."""
    q = level.fq.q
    kappa = 1
    for p, r in level.factors:
        ap = level.ring.absq(p)
        kappa *= ap ** (r // 2) + ap ** ((r - 1) // 2)
    s = level.num_primes
    extra = kappa - 2 ** s
    assert extra % (q - 1) == 0
    return 2 ** s + extra // (q - 1)


def enumerate_cusps(level):
    """Canonical (a, b) pairs, sorted by (b, a) in the polynomial order."""
    ring = level.ring
    out = []
    for b in level.divisors():
        bt = btilde(level, b)
        if bt == ring.one:
            out.append((ring.one, b))
            continue
        seen = set()
        for a in ring.all_polys(ring.deg(bt) - 1):
            if not a or not ring.coprime(a, bt):
                continue
            orbit = [ring.mod(ring.scalar_mul(al, a), bt) for al in range(1, level.fq.q)]
            rep = min(orbit, key=lambda z: (len(z), z))
            seen.add(rep)
        out.extend((a, b) for a in sorted(seen, key=lambda z: (len(z), z)))
    out.sort(key=lambda ab: (len(ab[1]), ab[1], len(ab[0]), ab[0]))
    return out


def cusp_key(level, u, v):
    """Canonical representative of the cusp (u : v).

    Builds an explicit level-group element sending (u, v) to (a, b) with
    b = gcd(v, n), then minimizes the residue of a modulo btilde.
    """
    ring = level.ring
    n = level.n
    assert u or v, "cusp coordinates cannot both vanish"
    g = ring.gcd(u, v)
    if len(g) > 1 or (g and g[0] != 1):
        u, v = ring.exact_div(u, g), ring.exact_div(v, g)
    if not v:
        return _reduce_residue(level, ring.one, n)
    b = ring.gcd(v, n)
    n0 = ring.exact_div(n, b)
    w0 = ring.exact_div(v, b)
    g1, z, w = ring.xgcd(ring.mul(n0, u), w0)
    assert g1 == ring.one
    # nudge w by multiples of n0*u until it is prime to n, prime by prime
    shift = ring.mul(n0, u)
    t, tmod = (), ring.one
    for p, _ in level.factors:
        if ring.mod(n0, p) == ():
            continue
        ginv = _inv_mod(ring, ring.mod(shift, p), p)
        bad = ring.mod(ring.mul(w, ginv), p)
        tp = ring.mod(ring.add(bad, ring.one), p)
        t = _crt(ring, t, tmod, tp, p)
        tmod = ring.mul(tmod, p)
    w2 = ring.sub(w, ring.mul(t, shift))
    z2 = ring.add(z, ring.mul(t, w0))
    g2, x, y = ring.xgcd(w2, ring.mul(z2, n))
    assert g2 == ring.one
    a = ring.sub(ring.mul(x, u), ring.mul(y, v))
    assert ring.coprime(a, b)
    return _reduce_residue(level, a, b)


def _reduce_residue(level, a, b):
    ring = level.ring
    bt = btilde(level, b)
    if bt == ring.one:
        return (ring.one, b)
    r = ring.mod(a, bt)
    orbit = [ring.mod(ring.scalar_mul(al, r), bt) for al in range(1, level.fq.q)]
    return (min(orbit, key=lambda z: (len(z), z)), b)


def _inv_mod(ring, a, p):
    g, s, _ = ring.xgcd(a, p)
    assert g == ring.one
    return ring.mod(s, p)


def _crt(ring, r1, m1, r2, m2):
    """Residue matching r1 mod m1 and r2 mod m2 for coprime moduli."""
    g, s, t = ring.xgcd(m1, m2)
    assert g == ring.one
    m = ring.mul(m1, m2)
    out = ring.add(ring.mul(ring.mul(r1, t), m2), ring.mul(ring.mul(r2, s), m1))
    return ring.mod(out, m)


def is_rational_cusp(level, cusp):
    """Whether the cusp is defined over the base field F_q."""
    ring = level.ring
    bt = btilde(level, cusp[1])
    if ring.deg(bt) <= 1:
        return True
    return level.fq.q == 2 and bt == (0, 1, 1)


def rational_cusp_count(level):
    """Closed form for the number of rational cusps."""
    q = level.fq.q
    s = level.num_primes
    ts = []
    for p, r in level.factors:
        linear = len(p) == 2
        ts.append(0 if r == 1 or not linear else (1 if r == 2 else 2))
    u = 0
    if q == 2:
        lin = {p: t for (p, r), t in zip(level.factors, ts) if len(p) == 2}
        if (0, 1) in lin and (1, 1) in lin:
            u = lin[(0, 1)] * lin[(1, 1)]
    total = 2 ** s + 2 ** (s - 1) * sum(ts)
    if u:
        total += 2 ** (s - 2) * u
    return total


def atkin_lehner_matrix(level, m):
    """A matrix in the level normalizer whose determinant generates (m).

    m must divide n exactly (coprime to the complement)."""
    ring = level.ring
    co = ring.exact_div(level.n, m)
    g, s, t = ring.xgcd(m, co)
    assert g == ring.one, "exact divisor required"
    W = ((ring.mul(s, m), ring.neg(t)), (level.n, m))
    det = ring.sub(ring.mul(W[0][0], W[1][1]), ring.mul(W[0][1], W[1][0]))
    assert ring.monic(det) == m
    return W


def al_on_cusp(level, m, cusp):
    """Image of a canonical cusp under the m-th involution, canonicalized."""
    ring = level.ring
    W = atkin_lehner_matrix(level, m)
    a, b = cusp
    u = ring.add(ring.mul(W[0][0], a), ring.mul(W[0][1], b))
    v = ring.add(ring.mul(W[1][0], a), ring.mul(W[1][1], b))
    return cusp_key(level, u, v)


def component_bound_prime(level, p):
    """N(p): the cyclic order tied to a prime level's component group."""
    ring = level.ring
    q = level.fq.q
    ap = ring.absq(p)
    if ring.deg(p) % 2 == 1:
        num, den = ap - 1, q - 1
    else:
        num, den = ap - 1, q * q - 1
    if num % den:
        raise NonRational("N(p) is not integral for this prime")
    return num // den


def component_order_prime_squared(level, p):
    """M(p): the component order for the square of a prime level."""
    ring = level.ring
    q = level.fq.q
    ap = ring.absq(p)
    num = ap * ap - 1
    den = q * q - 1
    if q % 2 == 1 and ring.deg(p) % 2 == 0:
        den *= 2
    if num % den:
        raise NonRational("M(p) is not integral for this prime")
    return num // den
