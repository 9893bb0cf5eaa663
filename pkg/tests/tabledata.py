"""Frozen boundary values of Eisenstein cochains on the split cubic level.

For squarefree n = x*y*z with x = T, y = T - 1 and z = T - c the quotient
graph has twenty named edges plus one bend edge b_u for every scalar u
outside {0, 1, c}.  Each row below freezes the value of one cochain on
those edges as a polynomial in q; the primed rows are the combinations
that stay integral after dividing by q + 1.
"""

from fractions import Fraction

from hecketree.eisenstein import EisensteinCochain
from hecketree.figures import expected_figure
from hecketree.tree import OrientedEdge

COLUMNS = (
    "s_inf", "s_one", "s_x", "s_y", "s_z", "s_yz", "s_xz", "s_xy",
    "d_inf", "d_x", "d_y", "d_z",
    "a_inf", "a_one", "a_x", "a_xp", "a_y", "a_yp", "a_z", "a_zp",
    "b",
)


def expected_rows(q):
    return {
        "E_x":    (1, q * q, -q * q, q, q, 1, -q, -q,
                   q, q, -1, -1,
                   -1, -q, -q, -1, 1, -1, 1, -1,
                   1),
        "E_xy":   (1, q, 0, 0, 1, 0, 0, -q,
                   1, 0, 0, -1,
                   0, -1, 0, 0, 0, 0, 0, -1,
                   0),
        "Ep_xy":  (0, 0, -q, q, 0, 1, -1, 0,
                   0, 1, -1, 0,
                   0, 0, -1, 0, 1, 0, 0, 0,
                   0),
        "E_yz":   (1, q, 1, 0, 0, -q, 0, 0,
                   1, -1, 0, 0,
                   0, -1, 0, -1, 0, 0, 0, 0,
                   0),
        "Ep_yz":  (0, 0, 0, -q, q, 0, 1, -1,
                   0, 0, 1, -1,
                   0, 0, 0, 0, -1, 0, 1, 0,
                   0),
        "E_xz":   (1, q, 0, 1, 0, 0, -q, 0,
                   1, 0, -1, 0,
                   0, -1, 0, 0, 0, -1, 0, 0,
                   0),
        "Ep_xyz": (q + 1, q + 1, 0, 0, q + 1, 0, 0, -q - 1,
                   2, 0, 0, -2,
                   1, -1, 0, 0, 0, 0, 1, -1,
                   0),
    }


def named_edges(g):
    """Map the figure's edge names to oriented tree edges."""
    fin_exp, rays_exp, _ = expected_figure(g, "xyz", c=2)
    edges = {}
    for entry in fin_exp:
        edges[entry[0]] = OrientedEdge(entry[1], entry[2], False)
    for name, k, u, _ in rays_exp:
        edges[name] = OrientedEdge(k, u, False)
    return edges


def cochain_rows(g):
    """Evaluators for each table row on the built graph, exact rationals."""
    ring = g.ring
    q = g.q
    T = ring.parse("T")
    y = ring.sub(T, ring.one)
    z = ring.sub(T, (2,))

    def mk(m):
        return EisensteinCochain(ring, m, g.lring).value

    ex, ey, ez = mk(T), mk(y), mk(z)
    exy = mk(ring.mul(T, y))
    eyz = mk(ring.mul(y, z))
    exz = mk(ring.mul(T, z))
    en = mk(g.level.n)
    return {
        "E_x": ex,
        "E_xy": exy,
        "Ep_xy": lambda e: (ex(e) - ey(e)) / (q + 1),
        "E_yz": eyz,
        "Ep_yz": lambda e: (ey(e) - ez(e)) / (q + 1),
        "E_xz": exz,
        "Ep_xyz": lambda e: exy(e) + (en(e) - ez(e)) / (q + 1),
    }


def table_claims(g):
    """One (row, edge, got, want) tuple per table entry."""
    rows = expected_rows(g.q)
    funcs = cochain_rows(g)
    edges = named_edges(g)
    bends = sorted(n for n in edges if n.startswith("b_"))
    out = []
    for rname, wants in rows.items():
        f = funcs[rname]
        for cname, want in zip(COLUMNS, wants):
            for ename in (bends if cname == "b" else [cname]):
                out.append((rname, ename, f(edges[ename]), Fraction(want)))
    return out
