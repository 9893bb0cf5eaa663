"""Named verification suites behind the command line verify subcommand.

Each suite returns a list of claim records {claim, ok, detail}; a claim is a
statement about exact integers, so ok is never a tolerance call.  The deg3
suite sweeps the standard panel of cubic levels at one field size, q2-examples
pins the degree-four levels over F_2, and properties samples the operator and
reduction identities that every level must satisfy.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .cusps import cusp_count
from .eisenstein import EisensteinCochain
from .figures import figure_claims, level_shape
from .harmonic import CochainSpace, expansion_value, fourier_coefficient
from .hecke import (
    HeckeAction,
    first_coefficient,
    pairing_matrix,
    pairing_units,
    probe_edge,
)
from .intlinalg import (
    det,
    identity,
    mat_add,
    mat_eq,
    mat_mul,
    mat_scale,
    mat_sub,
    transpose,
)
from .lattice import (
    annihilates_quotient,
    check_equivariance,
    component_group,
    eisenstein_quotient,
    gram_matrix,
    hecke_algebra_lattice,
    kernel_mod_lattice,
    lattice_index,
)
from .levels import Level, level_for
from .polyring import ring_for
from .quotient import GammaSolver, build_quotient
from .tree import OrientedEdge, Vertex, act, mat_from_polys, reverse


def claim(text, ok, detail=""):
    return {"claim": text, "ok": bool(ok), "detail": detail}


# --- panel definitions ----------------------------------------------------------


def deg3_panel(q, modulus=None):
    """The cubic levels exercised at one field size.

    Over F_2 that is every monic cubic; for larger fields the five shape
    representatives: an irreducible cubic, the cube of T, T^2(T-1), a product
    of three distinct linear factors, and T times a quadratic prime.
    """
    ring = ring_for(q, modulus)
    if q == 2:
        return [Level(ring, n) for n in ring.monic_polys(3)]
    T = ring.parse("T")
    y = ring.sub(T, ring.one)
    z = ring.sub(T, (2,))
    cube = ring.mul(T, ring.mul(T, T))
    return [
        Level(ring, ring.monic_irreducibles(3)[0]),
        Level(ring, cube),
        Level(ring, ring.mul(ring.mul(T, T), y)),
        Level(ring, ring.mul(T, ring.mul(y, z))),
        Level(ring, ring.mul(T, ring.monic_irreducibles(2)[0])),
    ]


def panel_shape(level):
    """Factorization shape, including the quadratic-prime one without a picture."""
    sh = level_shape(level)
    if sh is not None:
        return sh
    facs = sorted((level.ring.deg(p), r) for p, r in level.factors)
    if facs == [(1, 1), (2, 1)]:
        return "pq2"
    return None


def is_figure_level(level, shape):
    """Whether the reference picture applies literally.

    The irreducible picture holds for any cubic prime; the other three are
    drawn for the levels whose roots sit at 0, 1 and the third scalar, so a
    translate of those has the same graph but different matrices.
    """
    if shape == "irr3":
        return True
    ring = level.ring
    T = ring.parse("T")
    y = ring.sub(T, ring.one)
    fac = {p: r for p, r in level.factors}
    if shape == "cube":
        return fac == {T: 3}
    if shape == "p2q":
        return fac == {T: 2, y: 1}
    if shape == "xyz":
        return fac == {T: 1, y: 1, ring.sub(T, (2,)): 1}
    return False


def expected_rank(q, shape):
    if shape in ("irr3", "xyz", "pq2"):
        return q
    if shape in ("cube", "p2q"):
        return q - 1
    return None


def expected_quotient(q, shape):
    """Invariant factors of both finite quotients at a cubic level."""
    if shape == "irr3":
        return (q * q + q + 1,)
    if shape == "cube":
        return (q * q,)
    if shape == "p2q":
        return (q * (q * q - 1),)
    if shape == "xyz":
        return (q + 1, q + 1, (q - 1) * (q - 1) * (q + 1))
    return None


def expected_component_group(q, shape):
    if shape == "pq2":
        return ((q * q + 1) * (q + 1),)
    return expected_quotient(q, shape)


# --- halfline mass bookkeeping --------------------------------------------------


def group_index(level):
    """Index of the level group inside the full matrix group over the polynomials."""
    ring = level.ring
    q = ring.fq.q
    idx = Fraction(q ** level.deg)
    for p in level.primes():
        idx *= 1 + Fraction(1, q ** ring.deg(p))
    assert idx.denominator == 1
    return int(idx)


def _edge_layer(gs, lring, e, probe):
    for j in range(probe):
        target = OrientedEdge(-j, lring.zero, False)
        if gs.gamma_edge(e, target) is not None:
            return j
        if gs.gamma_edge(reverse(e), target) is not None:
            return j
    return None


def _vertex_layer(gs, lring, v, probe):
    for j in range(probe):
        if gs.gamma_vertex(v, Vertex(-j, lring.zero)) is not None:
            return j
    return None


def mass_claims(g):
    """Check the fiber masses of the quotient over the halfline, layer by layer.

    Every edge (vertex) class of the full-group quotient is a halfline edge
    (vertex) at some position j, with known stabilizer order there; summing
    the reciprocal stabilizer orders of the classes above it must give the
    group index divided by that order.  This catches any missed or spurious
    identification in the build.
    """
    ring, lring, q = g.ring, g.lring, g.q
    lvl1 = Level(ring, ring.one)
    gs = GammaSolver(lvl1, lring, enum_cap=g.solver.enum_cap, seed=g.solver.seed)
    idx = group_index(g.level)
    label = g.level.label()
    probe = max(max(abs(c.rep.k) for c in g.classes), g.level.deg) + 4

    e_layers = {}
    notes = []
    ok = True
    for c in g.classes:
        j = _edge_layer(gs, lring, c.rep, probe)
        if j is None:
            ok = False
            notes.append("class %d did not land on the halfline" % c.id)
            continue
        e_layers[c.id] = j
    depth_per_ray = []
    for r in g.rays:
        tail = [e_layers.get(cid) for cid in r.class_ids]
        if None in tail:
            ok = False
            continue
        if any(b - a != 1 for a, b in zip(tail[-3:], tail[-2:])):
            notes.append("ray %d tail layers not advancing: %r" % (r.id, tail))
        depth_per_ray.append(tail[-1])
    max_layer = min(depth_per_ray) - 1 if depth_per_ray else -1
    for j in range(max_layer + 1):
        got = Fraction(0)
        for c in g.classes:
            if e_layers.get(c.id) == j:
                got += Fraction(1, g.edge_stab(c.id))
        n1 = (q - 1) * q if j == 0 else (q - 1) * q ** (j + 1)
        want = Fraction(idx, n1)
        if got != want:
            ok = False
            notes.append("edge layer %d mass %s, wanted %s" % (j, got, want))
    edge_claim = claim(
        "halfline edge masses agree through layer %d [%s]" % (max_layer, label),
        ok,
        "; ".join(notes) if notes else "index %d, %d classes placed" % (idx, len(e_layers)),
    )

    v_layers = {}
    vnotes = []
    vok = True
    for v in g.vertices:
        j = _vertex_layer(gs, lring, v.rep, probe)
        if j is None:
            vok = False
            vnotes.append("vertex %d did not land on the halfline" % v.id)
            continue
        v_layers[v.id] = j
    tip_layers = []
    for r in g.rays:
        cont = g.classes[r.class_ids[-1]]
        far = cont.o_vertex if g.vertices[cont.o_vertex].beyond_tip else cont.t_vertex
        tip_layers.append(v_layers.get(far, 0))
    vmax = min(tip_layers) - 1 if tip_layers else -1
    for j in range(vmax + 1):
        got = Fraction(0)
        for v in g.vertices:
            if v_layers.get(v.id) != j:
                continue
            raw = g.solver.count_stab_vertex(v.rep)
            assert raw % (q - 1) == 0
            got += Fraction(q - 1, raw)
        n1 = q * (q * q - 1) if j == 0 else (q - 1) * q ** (j + 1)
        want = Fraction(idx, n1)
        if got != want:
            vok = False
            vnotes.append("vertex layer %d mass %s, wanted %s" % (j, got, want))
    vertex_claim = claim(
        "halfline vertex masses agree through layer %d [%s]" % (vmax, label),
        vok,
        "; ".join(vnotes) if vnotes else "index %d, %d vertices placed" % (idx, len(v_layers)),
    )
    return [edge_claim, vertex_claim]


# --- level bundles --------------------------------------------------------------


class LevelBundle:
    """Everything the suites need about one level, built once."""

    def __init__(self, level, seed=0, enum_cap=200000, gen_degree=2, settle_degree=0):
        self.level = level
        self.q = level.fq.q
        self.seed = seed
        self.gen_degree = gen_degree
        self.settle_degree = settle_degree or (3 if self.q <= 3 else 2)
        self.graph = build_quotient(level, enum_cap=enum_cap, seed=seed)
        self.space = CochainSpace(self.graph)
        self.rank = self.space.rank()
        self.H = HeckeAction(self.space) if self.rank else None
        self._gram = None
        self._T = None
        self._T0 = None
        self._eis = None

    def gram(self):
        if self._gram is None:
            self._gram = gram_matrix(self.space)
        return self._gram

    def algebra(self):
        if self._T is None:
            self._T = hecke_algebra_lattice(self.H, gen_degree=self.gen_degree)
        return self._T

    def coprime_algebra(self):
        if self._T0 is None:
            self._T0 = hecke_algebra_lattice(
                self.H, gen_degree=self.gen_degree, coprime_only=True
            )
        return self._T0

    def eisenstein(self):
        if self._eis is None:
            self._eis = eisenstein_quotient(
                self.algebra(), self.H, settle_degree=self.settle_degree
            )
        return self._eis


def _coprime_primes(level, max_degree=2):
    ring = level.ring
    out = []
    for d in range(1, max_degree + 1):
        for p in ring.monic_irreducibles(d):
            if ring.coprime(p, level.n):
                out.append(p)
    return out


def _factorize(m):
    fac = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            fac[d] = fac.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        fac[m] = fac.get(m, 0) + 1
    return fac


def quotient_claims(b):
    """Group-structure checks for one cubic level bundle."""
    q, level = b.q, b.level
    shape = panel_shape(level)
    label = level.label()
    out = []

    want_rank = expected_rank(q, shape)
    out.append(claim(
        "cochain lattice rank is %d [%s]" % (want_rank, label),
        b.rank == want_rank,
        "rank %d" % b.rank,
    ))
    if b.rank == 0:
        return out

    P = pairing_matrix(b.H)
    dP = det(P)
    out.append(claim(
        "degree-one pairing determinant is a unit [%s]" % label,
        dP in (1, -1),
        "det %d over %d units" % (dP, len(pairing_units(level))),
    ))

    G = b.gram()
    Phi = component_group(G)
    want_phi = expected_component_group(q, shape)
    if want_phi is not None:
        out.append(claim(
            "component group is %r [%s]" % (list(want_phi), label),
            Phi == want_phi,
            "found %r" % (list(Phi.factors),),
        ))

    eta_ok = True
    eta_notes = []
    ring = level.ring
    for p in _coprime_primes(level):
        M = b.H.hecke(p)
        eta = mat_sub(M, mat_scale(q ** ring.deg(p) + 1, identity(b.rank)))
        if not annihilates_quotient(eta, G):
            eta_ok = False
            eta_notes.append(ring.to_str(p))
    out.append(claim(
        "operators minus their degree eigenvalue kill the component group [%s]" % label,
        eta_ok,
        "failed at %s" % ", ".join(eta_notes) if eta_notes else
        "%d primes of degree at most 2" % len(_coprime_primes(level)),
    ))

    want_te = expected_quotient(q, shape)
    if want_te is not None:
        group, E, settled = b.eisenstein()
        out.append(claim(
            "Eisenstein quotient is %r and settled [%s]" % (list(want_te), label),
            settled and group == want_te,
            "found %r settled=%r" % (list(group.factors), settled),
        ))
        out.append(claim(
            "Eisenstein quotient matches the component group factor by factor [%s]" % label,
            tuple(group.factors) == tuple(Phi.factors),
            "%r vs %r" % (list(group.factors), list(Phi.factors)),
        ))
        if shape in ("cube", "p2q"):
            p_char = level.fq.p
            out.append(claim(
                "characteristic %d divides the Eisenstein quotient order [%s]" % (p_char, label),
                group.order() % p_char == 0,
                "order %d" % group.order(),
            ))

    if shape in ("cube", "p2q", "xyz"):
        T = b.algebra()
        T0 = b.coprime_algebra()
        index = lattice_index(T, T0)
        if shape in ("cube", "p2q"):
            out.append(claim(
                "full and away-from-level algebras coincide [%s]" % label,
                index == 1,
                "index %d" % index,
            ))
        elif q in (3, 4):
            fac = _factorize(index)
            allowed = set(_factorize(q * (q + 1)))
            needed = set(_factorize(q + 1))
            ok = (index > 1 and set(fac) <= allowed and needed <= set(fac))
            out.append(claim(
                "away-from-level algebra has proper index with the right support [%s]" % label,
                ok,
                "index %d = %r" % (index, fac),
            ))
    return out


# --- the suites -----------------------------------------------------------------


def _bundle_claims_deg3(level, seed):
    b = LevelBundle(level, seed=seed)
    out = []
    out.extend(mass_claims(b.graph))
    sh = level_shape(level)
    if sh is not None and is_figure_level(level, sh):
        out.extend(figure_claims(b.graph, sh))
    out.append(claim(
        "cusp count matches the ray count [%s]" % level.label(),
        cusp_count(level) == len(b.graph.rays),
        "%d cusps, %d rays" % (cusp_count(level), len(b.graph.rays)),
    ))
    out.extend(quotient_claims(b))
    return out


def suite_deg3(q=2, seed=0, jobs=1):
    """Full sweep of the cubic panel at one field size."""
    levels = deg3_panel(q)
    return _parallel(levels, lambda lvl: _bundle_claims_deg3(lvl, seed), jobs)


def suite_q2_examples(seed=0, jobs=1, **_):
    """The degree-four showcase levels over F_2."""
    specs = [
        ("(T^2+T+1)^2", 2, (5,), (2, 10), (5,), None),
        ("T^4+T^3+1", 4, (5,), (2, 80), (5,), False),
        ("T^4+T+1", 4, (5,), (45,), (5,), False),
        ("T^2*(T^2+T+1)", 5, (15, 30), (15, 180), None, None),
    ]

    def one(spec):
        text, want_rank, want_te, want_phi, want_kernel, want_eis = spec
        level = level_for(2, text)
        label = level.label()
        b = LevelBundle(level, seed=seed)
        out = mass_claims(b.graph)
        out.append(claim(
            "cochain lattice rank is %d [%s]" % (want_rank, label),
            b.rank == want_rank,
            "rank %d" % b.rank,
        ))
        G = b.gram()
        Phi = component_group(G)
        out.append(claim(
            "component group is %r [%s]" % (list(want_phi), label),
            Phi == want_phi,
            "found %r" % (list(Phi.factors),),
        ))
        group, E, settled = b.eisenstein()
        out.append(claim(
            "Eisenstein quotient is %r and settled [%s]" % (list(want_te), label),
            settled and group == want_te,
            "found %r settled=%r" % (list(group.factors), settled),
        ))
        if text == "(T^2+T+1)^2":
            ring = level.ring
            s = mat_add(b.H.hecke(ring.parse("T")), b.H.hecke(ring.parse("T+1")))
            out.append(claim(
                "degree-one operators sum to the identity [%s]" % label,
                mat_eq(s, identity(b.rank)),
                "",
            ))
        if text == "T^2*(T^2+T+1)":
            out.append(claim(
                "characteristic 2 divides the Eisenstein quotient order [%s]" % label,
                group.order() % 2 == 0,
                "order %d" % group.order(),
            ))
        if want_kernel is not None:
            ker = kernel_mod_lattice([transpose(M) for M in E.matrices()], G)
            out.append(claim(
                "Eisenstein-killed part of the component group is %r [%s]"
                % (list(want_kernel), label),
                ker == want_kernel,
                "found %r" % (list(ker.factors),),
            ))
        if want_eis is not None:
            killed = all(
                annihilates_quotient(transpose(M), G) for M in E.matrices()
            )
            out.append(claim(
                "Eisenstein ideal %s the component group [%s]"
                % ("kills" if want_eis else "does not kill", label),
                killed == want_eis,
                "",
            ))
        return out

    return _parallel(specs, one, jobs)


def _random_level_matrix(ring, lring, n, rng):
    """A random word in the generators of the level group."""
    q = ring.fq.q
    g = ((1,), (), (), (1,))
    for _ in range(rng.randrange(2, 5)):
        kind = rng.randrange(4)
        if kind == 0:
            bpoly = tuple(rng.randrange(q) for _ in range(3))
            g2 = ((1,), bpoly, (), (1,))
        elif kind == 1:
            cpoly = tuple(rng.randrange(q) for _ in range(2))
            g2 = ((1,), (), ring.mul(n, cpoly), (1,))
        elif kind == 2:
            g2 = ((rng.randrange(1, q),), (), (), (1,))
        else:
            g2 = ((1,), (), (), (rng.randrange(1, q),))
        a = ring.add(ring.mul(g[0], g2[0]), ring.mul(g[1], g2[2]))
        bq = ring.add(ring.mul(g[0], g2[1]), ring.mul(g[1], g2[3]))
        c = ring.add(ring.mul(g[2], g2[0]), ring.mul(g[3], g2[2]))
        d = ring.add(ring.mul(g[2], g2[1]), ring.mul(g[3], g2[3]))
        g = (a, bq, c, d)
    return mat_from_polys(lring, ((g[0], g[1]), (g[2], g[3])))


def _random_edge(lring, q, rng):
    k = rng.randrange(1, 5)
    coeffs = [rng.randrange(q) for _ in range(k)]
    u = lring.zero
    for i, c in enumerate(coeffs):
        if c:
            u = u + lring.monomial(i, c)
    return OrientedEdge(k, u, rng.random() < 0.5)


def _properties_for_level(args):
    q, text, seed, gammas = args
    level = level_for(q, text)
    label = "%s over F_%d" % (level.label(), q)
    ring, fq = level.ring, level.fq
    b = LevelBundle(level, seed=seed)
    g = b.graph
    lring = g.lring
    out = []
    rng = random.Random((seed, q, text))

    inv_ok, checked = True, 0
    for _ in range(gammas):
        gm = _random_level_matrix(ring, lring, level.n, rng)
        e = _random_edge(lring, q, rng)
        r1 = g.class_of_edge(e)
        r2 = g.class_of_edge(act(gm, e, lring))
        if r1 is None or r2 is None:
            continue
        checked += 1
        if r1 != r2:
            inv_ok = False
    out.append(claim(
        "edge reduction is invariant under %d random group elements [%s]" % (gammas, label),
        inv_ok and checked >= gammas // 2,
        "%d of %d pairs landed in the finite table" % (checked, gammas),
    ))

    out.append(claim(
        "cusp count matches the ray count [%s]" % label,
        cusp_count(level) == len(g.rays),
        "%d cusps, %d rays" % (cusp_count(level), len(g.rays)),
    ))

    if b.rank == 0:
        return out
    H = b.H
    n_id = identity(b.rank)

    deg1 = ring.monic_irreducibles(1)
    deg2 = ring.monic_irreducibles(2)
    ops = {}
    for p in deg1:
        ops["T " + ring.to_str(p)] = H.hecke(p)
    for p in deg2[:2]:
        ops["T " + ring.to_str(p)] = H.hecke(p)
    for m in level.exact_divisors():
        if ring.deg(m) >= 1:
            ops["W " + ring.to_str(m)] = H.atkin_lehner(m)

    comm_ok = True
    keys = sorted(ops)
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            A, B = ops[keys[i]], ops[keys[j]]
            if not mat_eq(mat_mul(A, B), mat_mul(B, A)):
                comm_ok = False
    out.append(claim("all sampled operators commute [%s]" % label, comm_ok,
                     "%d operators" % len(keys)))

    rec_ok = True
    for p in deg1:
        if not ring.coprime(p, level.n):
            continue
        M = H.hecke(p)
        M2 = H.hecke(ring.mul(p, p))
        want = mat_sub(mat_mul(M, M), mat_scale(q, n_id))
        if not mat_eq(M2, want):
            rec_ok = False
    out.append(claim(
        "prime-square recursion holds for linear primes away from the level [%s]" % label,
        rec_ok, ""))

    mult_ok = True
    for i in range(len(deg1)):
        for j in range(i + 1, len(deg1)):
            m = ring.mul(deg1[i], deg1[j])
            if not mat_eq(H.hecke(m), mat_mul(H.hecke(deg1[i]), H.hecke(deg1[j]))):
                mult_ok = False
    out.append(claim(
        "coprime multiplicativity holds for linear primes [%s]" % label, mult_ok, ""))

    w_ok = True
    exact = [m for m in level.exact_divisors() if ring.deg(m) >= 1]
    for m in exact:
        W = H.atkin_lehner(m)
        if not mat_eq(mat_mul(W, W), n_id):
            w_ok = False
    for i in range(len(exact)):
        for j in range(len(exact)):
            mi, mj = exact[i], exact[j]
            if not ring.coprime(mi, mj):
                continue
            prod = mat_mul(H.atkin_lehner(mi), H.atkin_lehner(mj))
            if not mat_eq(prod, H.atkin_lehner(ring.mul(mi, mj))):
                w_ok = False
    out.append(claim(
        "involutions square to one and multiply along coprime divisors [%s]" % label,
        w_ok, "%d exact divisors" % len(exact)))

    if level.deg == 3:
        u_ok = True
        for p, r in level.factors:
            U = H.hecke(p)
            if r == 1:
                if not mat_eq(U, mat_scale(-1, H.atkin_lehner(p))):
                    u_ok = False
            elif not mat_eq(U, mat_scale(0, n_id)):
                u_ok = False
        out.append(claim(
            "operators at the level are minus the involution, or vanish on a square [%s]" % label,
            u_ok, ""))

    basis = b.space.basis_cochains()
    if level.deg == 3:
        S = None
        for u in range(q):
            M = H.hecke((fq.neg(u), 1))
            S = M if S is None else mat_add(S, M)
        out.append(claim(
            "degree-one operators sum to minus the identity [%s]" % label,
            mat_eq(S, mat_scale(-1, n_id)), ""))

        eq_ok = True
        for f in basis:
            for u in pairing_units(level):
                lhs = first_coefficient(H.translate(f, (fq.neg(u), 1)))
                bu = OrientedEdge(3, lring.monomial(1) + lring.monomial(2, u)
                                  if u else lring.monomial(1), False)
                if lhs != f.evaluate(bu):
                    eq_ok = False
        out.append(claim(
            "moved leading coefficients equal bend-edge values [%s]" % label, eq_ok, ""))

    co_ok = True
    mlist = deg1 + deg2[:1]
    for f in basis[:2]:
        for m in mlist:
            lhs = first_coefficient(H.translate(f, m))
            rhs = q ** ring.deg(m) * fourier_coefficient(f, m)
            if lhs != rhs:
                co_ok = False
    out.append(claim(
        "moved leading coefficients read off expansion coefficients [%s]" % label,
        co_ok, "%d moduli" % len(mlist)))

    fc_ok = all(first_coefficient(f) == fourier_coefficient(f, ring.one)
                for f in basis)
    out.append(claim(
        "leading coefficient agrees with the expansion integral [%s]" % label, fc_ok, ""))

    rt_ok = True
    for f in basis[:2]:
        for _ in range(6):
            e = _random_edge(lring, q, rng)
            if expansion_value(f, e) != f.evaluate(e):
                rt_ok = False
    out.append(claim(
        "expansion series reproduces cochain values on random edges [%s]" % label,
        rt_ok, ""))

    G = b.gram()
    out.append(claim(
        "basis pairing matrix is integral, symmetric, positive-definite [%s]" % label,
        True, "built without complaint"))
    adj_ok = True
    for key in keys:
        try:
            check_equivariance(H, ops[key], G)
        except Exception:
            adj_ok = False
    out.append(claim(
        "pairing intertwines every sampled operator with its conjugate [%s]" % label,
        adj_ok, ""))

    eis_ok = True
    divisors = [m for m in level.divisors() if 1 <= ring.deg(m)]
    for m in divisors[:3]:
        E = EisensteinCochain(ring, m)
        for _ in range(4):
            e = _random_edge(lring, q, rng)
            if E.value(e) != E.value_literal(e):
                eis_ok = False
    out.append(claim(
        "fast Eisenstein values match the literal sums on random edges [%s]" % label,
        eis_ok, ""))
    return out


def suite_properties(seed=0, jobs=1, gammas=200, **_):
    """Operator identities and reduction invariance on a mixed level sample."""
    panel = [
        (2, "T^3+T+1"), (2, "T^3"), (2, "T^2*(T+1)"), (2, "T*(T^2+T+1)"),
        (2, "(T^2+T+1)^2"), (3, "T^3"), (3, "T*(T-1)*(T-2)"),
        (4, "T^3+T+1"), (5, "T^2*(T-1)"),
    ]
    args = [(q, text, seed, gammas) for q, text in panel]
    return _parallel(args, _properties_for_level, jobs)


def _parallel(items, fn, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(fn, items))
    else:
        chunks = [fn(it) for it in items]
    out = []
    for ch in chunks:
        out.extend(ch)
    return out


SUITES = {
    "deg3": suite_deg3,
    "q2-examples": suite_q2_examples,
    "properties": suite_properties,
}


def run_suite(name, q=2, seed=0, jobs=1):
    if name not in SUITES:
        raise KeyError("unknown suite %r; have %s" % (name, ", ".join(sorted(SUITES))))
    if name == "deg3":
        return suite_deg3(q=q, seed=seed, jobs=jobs)
    return SUITES[name](seed=seed, jobs=jobs)
