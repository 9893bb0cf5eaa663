"""Reference pictures of the four degree-three quotient graphs.

Each checker pins the full labeled graph for its level shape: literal matrix
representatives for every finite edge class and every cusp ray, drawn-direction
weight pairs, stabilizer orders, endpoint identifications, and the class
counts.  A claim list comes back instead of asserts so callers can aggregate.
"""

from .tree import OrientedEdge


def tail_of(lring, lo, coeffs):
    """Exact tail with given low exponent, zero-coefficient safe."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    i = 0
    while i < len(cs) and cs[i] == 0:
        i += 1
    if i == len(cs):
        return lring.zero
    return lring.from_coeffs(lo + i, tuple(cs[i:]))


def inv_tail(lring, poly, k):
    """1/poly as an exact tail, truncated to exponents below k."""
    return lring.from_poly(poly).inv(rel_prec=k + 4).truncate(k).exactify()


def _expected_irr3(q, lring, ring):
    pi = lring.monomial(1)
    fin = [("a_inf", 2, pi, "v01", "v00", (q - 1, 1), 1),
           ("d_inf", 2, lring.zero, "v10", "v00", (1, 1), q - 1),
           ("a_one", 3, lring.monomial(2), "v11", "v10", (q - 1, 1), 1)]
    for u in range(q):
        fin.append(("b_%d" % u, 3, tail_of(lring, 1, (1, u)), "v11", "v01", (1, 1), 1))
    rays = [("s_inf", 1, lring.zero, "v00"),
            ("s_one", 3, lring.zero, "v10")]
    return fin, rays, 4


def _expected_cube(q, lring, ring):
    pi = lring.monomial(1)
    fin = [("a_inf", 2, pi, "v01", "v00", (q - 1, 1), 1),
           ("d_inf", 2, lring.zero, "v10", "v00", (1, 1), q - 1),
           ("a_one", 3, lring.monomial(2), "v11", "v10", (q - 1, 1), 1)]
    for u in range(1, q):
        fin.append(("b_%d" % u, 3, tail_of(lring, 1, (1, u)), "v11", "v01", (1, 1), 1))
    rays = [("s_inf", 1, lring.zero, "v00"),
            ("s_one", 3, lring.zero, "v10"),
            ("s_p", 3, pi, "v01"),
            ("s_pp", 4, lring.monomial(2), "v11")]
    return fin, rays, 4


def _expected_p2q(q, lring, ring):
    # level T^2 (T - 1): the squared prime has root 0, the single one root 1
    pi = lring.monomial(1)
    x = ring.parse("T")
    s = ring.sub(x, ring.one)
    fin = [("a_inf", 2, pi, "v01", "v00", (q - 1, 1), 1),
           ("d_inf", 2, lring.zero, "v10", "v00", (1, 1), q - 1),
           ("a_one", 3, lring.monomial(2), "v11", "v10", (q - 1, 1), 1),
           ("b_one", 3, tail_of(lring, 1, (1, 1)), "v02", "v01", (1, q - 1), 1),
           ("d_s", 4, tail_of(lring, 1, (1, 1)), "v12", "v02", (1, 1), q - 1),
           ("a_pp", 4, lring.monomial(2), "v12", "v11", (1, q - 1), 1)]
    for u in range(2, q):
        fin.append(("b_%d" % u, 3, tail_of(lring, 1, (1, u)), "v11", "v01", (1, 1), 1))
    rays = [("s_inf", 1, lring.zero, "v00"),
            ("s_one", 3, lring.zero, "v10"),
            ("s_x", 3, pi, "v01"),
            ("s_xs", 4, inv_tail(lring, ring.mul(x, s), 4), "v11"),
            ("s_s", 4, inv_tail(lring, s, 4), "v02"),
            ("s_xx", 5, lring.monomial(2), "v12")]
    return fin, rays, 6


def _expected_xyz(q, lring, ring, c):
    pi = lring.monomial(1)
    fq = ring.fq
    x = ring.parse("T")
    y = ring.sub(x, ring.one)
    z = ring.sub(x, (c,))
    xy, yz, xz = ring.mul(x, y), ring.mul(y, z), ring.mul(x, z)
    fin = [("a_inf", 2, pi, "v01", "v00", (q - 1, 1), 1),
           ("d_inf", 2, lring.zero, "v10", "v00", (1, 1), q - 1),
           ("a_one", 3, lring.monomial(2), "v11", "v10", (q - 1, 1), 1),
           ("a_x", 3, pi, "v02", "v01", (1, q - 1), 1),
           ("a_y", 3, tail_of(lring, 1, (1, 1)), "va", "v01", (1, q - 1), 1),
           ("a_z", 3, tail_of(lring, 1, (1, c)), "vb", "v01", (1, q - 1), 1),
           ("a_xp", 4, inv_tail(lring, yz, 4), "v12", "v11", (1, q - 1), 1),
           ("a_yp", 4, inv_tail(lring, xz, 4), "vc", "v11", (1, q - 1), 1),
           ("a_zp", 4, inv_tail(lring, xy, 4), "vd", "v11", (1, q - 1), 1),
           ("d_x", 4, tail_of(lring, 1, (1, 0, fq.neg(c))), "v12", "v02", (1, 1), q - 1),
           ("d_y", 4, tail_of(lring, 1, (1, 1, c)), "vc", "va", (1, 1), q - 1),
           ("d_z", 4, tail_of(lring, 1, (1, c, c)), "vd", "vb", (1, 1), q - 1)]
    for u in range(q):
        if u in (0, 1, c):
            continue
        fin.append(("b_%d" % u, 3, tail_of(lring, 1, (1, u)), "v11", "v01", (1, 1), 1))
    rays = [("s_inf", 1, lring.zero, "v00"),
            ("s_one", 3, lring.zero, "v10"),
            ("s_x", 4, inv_tail(lring, x, 4), "v02"),
            ("s_y", 4, inv_tail(lring, y, 4), "va"),
            ("s_z", 4, inv_tail(lring, z, 4), "vb"),
            ("s_yz", 5, inv_tail(lring, yz, 5), "v12"),
            ("s_xz", 5, inv_tail(lring, xz, 5), "vc"),
            ("s_xy", 5, inv_tail(lring, xy, 5), "vd")]
    return fin, rays, 10


def expected_figure(g, shape, c=2):
    """Expected (finite edges, rays, vertex count) for a figure shape."""
    q, lring, ring = g.q, g.lring, g.ring
    if shape == "irr3":
        return _expected_irr3(q, lring, ring)
    if shape == "cube":
        return _expected_cube(q, lring, ring)
    if shape == "p2q":
        return _expected_p2q(q, lring, ring)
    if shape == "xyz":
        return _expected_xyz(q, lring, ring, c)
    raise ValueError("no reference picture for shape %r" % (shape,))


def level_shape(level):
    """Classify a level by factorization pattern; None when no picture."""
    facs = sorted((level.ring.deg(p), r) for p, r in level.factors)
    if facs == [(3, 1)]:
        return "irr3"
    if facs == [(1, 3)]:
        return "cube"
    if facs == [(1, 1), (1, 2)]:
        return "p2q"
    if facs == [(1, 1), (1, 1), (1, 1)]:
        return "xyz"
    return None


def figure_claims(g, shape, c=2):
    """Compare a built quotient against the reference picture for a shape."""
    fin_exp, rays_exp, nverts = expected_figure(g, shape, c)
    q = g.q
    label = "%s over F_%d" % (g.level.label(), q)
    claims = []
    finite = list(g.finite_classes())

    counts_ok = (len(finite) == len(fin_exp)
                 and len(g.rays) == len(rays_exp))
    vset = set()
    for cl in finite:
        vset.add(cl.o_vertex)
        vset.add(cl.t_vertex)
    counts_ok = counts_ok and len(vset) == nverts
    claims.append({
        "claim": "picture %s [%s]: %d finite classes, %d rays, %d vertices"
        % (shape, label, len(fin_exp), len(rays_exp), nverts),
        "ok": counts_ok,
        "detail": "found %d classes, %d rays, %d vertices"
        % (len(finite), len(g.rays), len(vset)),
    })

    names = {}       # vertex label -> quotient vertex id
    edge_ok = True
    edge_notes = []
    seen_cids = set()
    for name, k, u, o_name, t_name, wpair, stab in fin_exp:
        res = g.class_of_edge(OrientedEdge(k, u, False))
        if res is None:
            edge_ok = False
            edge_notes.append("%s: not materialized" % name)
            continue
        cid, sign = res
        cl = g.classes[cid]
        if cl.ray is not None:
            edge_ok = False
            edge_notes.append("%s: landed on a cusp ray" % name)
            continue
        seen_cids.add(cid)
        if sign > 0:
            got = (cl.weight_fwd, cl.weight_bwd)
            o_id, t_id = cl.o_vertex, cl.t_vertex
        else:
            got = (cl.weight_bwd, cl.weight_fwd)
            o_id, t_id = cl.t_vertex, cl.o_vertex
        if got != wpair:
            edge_ok = False
            edge_notes.append("%s: weights %r, wanted %r" % (name, got, wpair))
        if g.edge_stab(cid) != stab:
            edge_ok = False
            edge_notes.append("%s: stabilizer %d, wanted %d" % (name, g.edge_stab(cid), stab))
        for vname, vid in ((o_name, o_id), (t_name, t_id)):
            if vname in names and names[vname] != vid:
                edge_ok = False
                edge_notes.append("%s: vertex %s is both %d and %d"
                                  % (name, vname, names[vname], vid))
            names[vname] = vid
    if len(set(names.values())) != len(names):
        edge_ok = False
        edge_notes.append("distinct vertex labels collided")
    if seen_cids != set(cl.id for cl in finite):
        edge_ok = False
        edge_notes.append("finite classes not exhausted by the picture")
    claims.append({
        "claim": "picture %s [%s]: finite edges, weights, stabilizers" % (shape, label),
        "ok": edge_ok,
        "detail": "; ".join(edge_notes) if edge_notes else "all literal matrices matched",
    })

    ray_ok = True
    ray_notes = []
    seen_rids = set()
    for name, k, u, attach_name in rays_exp:
        res = g.class_of_edge(OrientedEdge(k, u, False))
        if res is None or g.classes[res[0]].ray is None:
            ray_ok = False
            ray_notes.append("%s: not a cusp-ray class" % name)
            continue
        rid, pos = g.classes[res[0]].ray
        seen_rids.add(rid)
        if pos != 0:
            ray_ok = False
            ray_notes.append("%s: at ray position %d, wanted 0" % (name, pos))
        att = g.rays[rid].attachment
        if attach_name in names and names[attach_name] != att:
            ray_ok = False
            ray_notes.append("%s: attached at vertex %d, wanted %s=%d"
                             % (name, att, attach_name, names[attach_name]))
    if len(seen_rids) != len(rays_exp):
        ray_ok = False
        ray_notes.append("ray classes not pairwise distinct")
    claims.append({
        "claim": "picture %s [%s]: cusp rays and attachments" % (shape, label),
        "ok": ray_ok,
        "detail": "; ".join(ray_notes) if ray_notes else "all rays matched at position 0",
    })
    return claims
