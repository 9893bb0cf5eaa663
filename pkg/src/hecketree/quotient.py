"""Quotient of the (q+1)-regular tree by the level congruence group.

The group is the subgroup of GL_2(F_q[T]) whose lower-left entry is divisible
by the level polynomial n.  Vertices and edges of the tree are named by their
normal forms (k, u[, flipped]); equivalence of two of them under the group is
decided by an exact linear-algebra search for a transporter matrix
gamma = ((a, b), (n*c, d)) with unit determinant.  A breadth-first sweep from
the base vertex then builds the finite part of the quotient graph and
certifies the cusp rays by their repeating weight pattern.
"""

import random

import numpy as np

from .errors import BoundExceeded, NonTermination
from .fqsolve import FqSolver
from .laurent import LaurentRing
from .polyring import trim
from .tree import (
    Vertex,
    edges_into,
    mat_det2,
    mat_from_polys,
    matrix_of,
    origin,
    reverse,
    terminus,
    vertex_matrix,
    act,
    act_vertex,
)

IDENTITY = ((1,), (), (), (1,))


def _span(k, u):
    return max(abs(k), abs(u.val) if u.coeffs else 0)


class GammaSolver:
    """Search for level-group elements carrying one edge or vertex to another.

    The coset condition "Mh^-1 gamma Mg lies in the stabilizer of the standard
    edge (or vertex), up to center" is linear in the coefficients of gamma
    once the determinant valuations fix the scaling exponent m, so candidates
    come out of a nullspace over F_q; the unit-determinant condition is then
    checked on each candidate.
    """

    def __init__(self, level, lring, enum_cap=200000, sample_count=4096, seed=0):
        self.level = level
        self.ring = level.ring
        self.fq = level.ring.fq
        self.q = self.fq.q
        self.lring = lring
        self.fqs = FqSolver(self.fq)
        self.enum_cap = enum_cap
        self.sample_count = sample_count
        self.seed = seed
        self.sampled_calls = 0
        self.calls = 0

    def _bound(self, span_g, span_h):
        return self.level.deg + max(span_g, span_h, 1) + 2

    def _system(self, Mg, Mh, edge_mode, bound):
        """Nullspace basis of the valuation conditions, or None on parity."""
        detg = mat_det2(Mg)
        deth = mat_det2(Mh)
        assert len(detg.coeffs) == 1 and len(deth.coeffs) == 1
        if (detg.val - deth.val) % 2:
            return None
        m = (detg.val - deth.val) // 2
        ah, bh, ch, dh = Mh
        invdet = self.lring.monomial(-deth.val, self.fq.inv(deth.coeffs[0]))
        H = (dh * invdet, -(bh * invdet), -(ch * invdet), ah * invdet)
        nL = self.lring.from_poly(self.level.n)
        degn = self.level.deg
        layout = []
        off = 0
        for slot in ("a", "b", "c", "d"):
            dmax = bound - degn if slot == "c" else bound
            if dmax < 0:
                continue
            layout.append((slot, dmax, off))
            off += dmax + 1
        ncols = off
        slot_ij = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}
        rows = []
        for r in range(2):
            for s in range(2):
                want = m + 1 if edge_mode and (r, s) == (1, 0) else m
                facs = []
                e_lo = None
                for slot, dmax, soff in layout:
                    i, j = slot_ij[slot]
                    F = H[2 * r + i] * Mg[2 * j + s]
                    if slot == "c":
                        F = F * nL
                    if F.coeffs:
                        lo = F.val - dmax
                        e_lo = lo if e_lo is None else min(e_lo, lo)
                    facs.append(F)
                if e_lo is None:
                    continue
                for e in range(e_lo, want):
                    row = [0] * ncols
                    hit = False
                    for (slot, dmax, soff), F in zip(layout, facs):
                        for t in range(dmax + 1):
                            c = F.coeff(e + t)
                            if c:
                                row[soff + t] = c
                                hit = True
                    if hit:
                        rows.append(row)
        if rows:
            A = np.array(rows, dtype=np.uint8)
        else:
            A = np.zeros((0, ncols), dtype=np.uint8)
        basis = self.fqs.nullspace(A)
        return basis, layout, ncols

    def _extract(self, vec, layout):
        """Candidate vector -> gamma with unit determinant, or None."""
        parts = {}
        for slot, dmax, off in layout:
            parts[slot] = trim(int(x) for x in vec[off : off + dmax + 1])
        a, b, d = parts["a"], parts["b"], parts["d"]
        low = self.ring.mul(self.level.n, parts.get("c", ()))
        det = self.ring.sub(self.ring.mul(a, d), self.ring.mul(b, low))
        if len(det) == 1:
            return (a, b, low, d)
        return None

    def _det_screen(self, vecs, layout):
        """Mask of candidates whose determinant could still be a unit.

        Checks the T^0, T^1, T^2 coefficients of a*d - b*(n*c) vectorized;
        these are necessary conditions, so no true solution is dropped.
        """
        m = len(vecs)
        zero = np.zeros(m, dtype=np.uint8)
        offs = {slot: (off, dmax) for slot, dmax, off in layout}

        def col(slot, t):
            if slot not in offs:
                return zero
            off, dmax = offs[slot]
            return vecs[:, off + t] if 0 <= t <= dmax else zero

        add, mul, neg = self.fqs.add, self.fqs.mul, self.fqs.neg
        ncoef = self.level.n

        def lowcol(t):
            out = zero
            for k, nk in enumerate(ncoef):
                if nk and 0 <= t - k:
                    out = add[out, mul[nk, col("c", t - k)]]
            return out

        def detcol(t):
            out = zero
            for i in range(t + 1):
                out = add[out, mul[col("a", i), col("d", t - i)]]
                out = add[out, neg[mul[col("b", i), lowcol(t - i)]]]
            return out

        return (detcol(0) != 0) & (detcol(1) == 0) & (detcol(2) == 0)

    def _candidates(self, basis, ncols, need_all):
        s = len(basis)
        if s == 0:
            return np.zeros((0, ncols), dtype=np.uint8)
        total = self.q ** s
        if total <= self.enum_cap:
            return self.fqs.all_combinations(basis)
        if need_all:
            raise BoundExceeded(
                "stabilizer search space q^%d exceeds the enumeration cap" % s
            )
        self.sampled_calls += 1
        rng = random.Random((self.seed, self.sampled_calls, s))
        return self.fqs.sample_combinations(basis, self.sample_count, rng)

    def _search(self, Mg, Mh, edge_mode, bound, count_all):
        self.calls += 1
        sysr = self._system(Mg, Mh, edge_mode, bound)
        if sysr is None:
            return 0 if count_all else None
        basis, layout, ncols = sysr
        vecs = self._candidates(basis, ncols, count_all)
        if len(vecs) > 512:
            vecs = vecs[self._det_screen(vecs, layout)]
        found = 0
        for vec in vecs:
            g = self._extract(vec, layout)
            if g is None:
                continue
            if not count_all:
                return g
            found += 1
        return found if count_all else None

    def gamma_edge(self, e1, e2, bound=None):
        """A transporter gamma with gamma . e1 = e2, or None."""
        if e1.key() == e2.key():
            return IDENTITY
        if bound is None:
            bound = self._bound(_span(e1.k, e1.u), _span(e2.k, e2.u))
        g = self._search(
            matrix_of(e1, self.lring), matrix_of(e2, self.lring), True, bound, False
        )
        if g is not None:
            gl = mat_from_polys(self.lring, ((g[0], g[1]), (g[2], g[3])))
            assert act(gl, e1, self.lring).key() == e2.key()
        return g

    def gamma_vertex(self, v1, v2, bound=None):
        if v1.key() == v2.key():
            return IDENTITY
        if bound is None:
            bound = self._bound(_span(v1.k, v1.u), _span(v2.k, v2.u))
        g = self._search(
            vertex_matrix(v1, self.lring), vertex_matrix(v2, self.lring), False, bound, False
        )
        if g is not None:
            gl = mat_from_polys(self.lring, ((g[0], g[1]), (g[2], g[3])))
            assert act_vertex(gl, v1, self.lring).key() == v2.key()
        return g

    def count_stab_edge(self, e, bound=None):
        """Number of group elements fixing the oriented edge (scalars included)."""
        if bound is None:
            sp = _span(e.k, e.u)
            bound = self._bound(sp, sp)
        M = matrix_of(e, self.lring)
        return self._search(M, M, True, bound, True)

    def count_stab_vertex(self, v, bound=None):
        if bound is None:
            sp = _span(v.k, v.u)
            bound = self._bound(sp, sp)
        M = vertex_matrix(v, self.lring)
        return self._search(M, M, False, bound, True)


class QVertexClass:
    def __init__(self, vid, rep, depth):
        self.id = vid
        self.rep = rep
        self.depth = depth
        self.processed = False
        self.beyond_tip = False
        self.incident = []  # (class_id, orient, multiplicity); orient +1 = t-side
        self.chain = 0
        self.parent_vertex = None
        self.parent_edge = None


class QEdgeClass:
    def __init__(self, cid, rep, o_vertex, t_vertex, weight_fwd):
        self.id = cid
        self.rep = rep
        self.o_vertex = o_vertex
        self.t_vertex = t_vertex
        self.weight_fwd = weight_fwd  # multiplicity at the terminus-side class
        self.weight_bwd = None  # multiplicity at the origin-side class
        self.ray = None  # (ray_id, position) once certified cuspidal
        self.stab = None  # lazy: #stabilizer / (q-1)


class CuspRay:
    def __init__(self, rid, attachment, class_ids, certificate):
        self.id = rid
        self.attachment = attachment
        self.class_ids = class_ids
        self.certificate = certificate


class QuotientGraph:
    """Finite quotient data: vertex classes, edge classes, certified rays."""

    def __init__(self, level, ray_len=3, depth_cap=40, enum_cap=200000, seed=0):
        self.level = level
        self.ring = level.ring
        self.q = level.fq.q
        self.lring = LaurentRing(level.fq)
        self.solver = GammaSolver(level, self.lring, enum_cap=enum_cap, seed=seed)
        self.ray_len = ray_len
        self.depth_cap = depth_cap
        self.vertices = []
        self.classes = []
        self.rays = []
        self.escalations = []
        self._vcache = {}
        self._ecache = {}

    # --- construction -------------------------------------------------------

    def _register_vertex(self, tv, depth, parent_vertex):
        vid = len(self.vertices)
        w = QVertexClass(vid, tv, depth)
        w.parent_vertex = parent_vertex
        self.vertices.append(w)
        self._vcache[tv.key()] = vid
        return vid

    def _find_vclass(self, tv, cache_miss=False):
        key = tv.key()
        if key in self._vcache:
            return self._vcache[key]
        cands = [w for w in self.vertices if (w.rep.k - tv.k) % 2 == 0]
        cands.sort(key=lambda w: (abs(w.rep.k - tv.k), w.id))
        for w in cands:
            if self.solver.gamma_vertex(tv, w.rep) is not None:
                self._vcache[key] = w.id
                return w.id
        if cache_miss:
            self._vcache[key] = None
        return None

    def _process(self, vid):
        v = self.vertices[vid]
        ins = edges_into(v.rep, self.lring)
        far_ids = []
        new_far = {}
        for e in ins:
            fv = origin(e, self.lring)
            fid = self._find_vclass(fv)
            if fid is None:
                fid = self._register_vertex(fv, v.depth + 1, vid)
                new_far[fid] = None
            far_ids.append(fid)
        buckets = {}
        for e, fid in zip(ins, far_ids):
            buckets.setdefault(fid, []).append(e)
        for fid, bucket in buckets.items():
            groups = []
            for e in bucket:
                for grp in groups:
                    if self.solver.gamma_edge(e, grp[0]) is not None:
                        grp.append(e)
                        break
                else:
                    groups.append([e])
            for grp in groups:
                rep, mult = grp[0], len(grp)
                cid = None
                if fid not in new_far:
                    for c in self.classes:
                        if (
                            c.o_vertex == vid
                            and c.t_vertex == fid
                            and c.weight_bwd is None
                            and self.solver.gamma_edge(rep, reverse(c.rep)) is not None
                        ):
                            cid = c.id
                            break
                if cid is not None:
                    self.classes[cid].weight_bwd = mult
                    v.incident.append((cid, -1, mult))
                else:
                    cid = len(self.classes)
                    self.classes.append(QEdgeClass(cid, rep, fid, vid, mult))
                    v.incident.append((cid, +1, mult))
                if fid in new_far and new_far[fid] is None:
                    new_far[fid] = cid
                    self.vertices[fid].parent_edge = cid
        assert sum(m for _, _, m in v.incident) == self.q + 1
        v.processed = True
        v.chain = 0
        if v.parent_edge is not None and len(v.incident) == 2:
            mults = sorted(m for _, _, m in v.incident)
            arriving = next(m for cid, _, m in v.incident if cid == v.parent_edge)
            if mults == [1, self.q] and arriving == self.q:
                v.chain = self.vertices[v.parent_vertex].chain + 1
        if v.chain >= self.ray_len:
            self._certify(vid)

    def _certify(self, tip_vid):
        """Mark the chain through tip_vid as a cusp ray.

        Walks back to the chain root, then extends inward while the root
        itself still shows the two-class (q, 1) ray pattern -- the base vertex
        always sits in the middle of one ray, so the true attachment can lie a
        few steps past the chain-0 vertex.
        """
        tip = self.vertices[tip_vid]
        path = []
        cur = tip
        truncated = False
        while cur.chain > 0:
            pc = self.classes[cur.parent_edge]
            if pc.ray is not None:
                truncated = True
                break
            path.append(cur.parent_edge)
            cur = self.vertices[cur.parent_vertex]
        path.reverse()
        att = cur
        extended = 0
        if not truncated and path:
            entered = path[0]
            visited = {att.id}
            while len(att.incident) == 2:
                mults = sorted(m for _, _, m in att.incident)
                if mults != [1, self.q]:
                    break
                cq = next(cid for cid, _, m in att.incident if m == self.q)
                if cq == entered or self.classes[cq].ray is not None:
                    break
                c = self.classes[cq]
                far_vid = c.o_vertex if c.t_vertex == att.id else c.t_vertex
                far = self.vertices[far_vid]
                if not far.processed:
                    self.escalations.append(
                        "ray %d: inward extension stopped at an unprocessed vertex" % len(self.rays)
                    )
                    break
                if far_vid in visited:
                    self.escalations.append("ray %d: inward extension loop" % len(self.rays))
                    break
                path.insert(0, cq)
                entered = cq
                att = far
                visited.add(far_vid)
                extended += 1
        conts = [cid for cid, _, m in tip.incident if cid != tip.parent_edge]
        assert len(conts) == 1
        cont = self.classes[conts[0]]
        assert cont.t_vertex == tip_vid and cont.weight_bwd is None
        cont.weight_bwd = self.q
        self.vertices[cont.o_vertex].beyond_tip = True
        path.append(cont.id)
        rid = len(self.rays)
        for pos, cid in enumerate(path):
            self.classes[cid].ray = (rid, pos)
        cert = {
            "consecutive": tip.chain,
            "pattern": [1, self.q],
            "extended_inward": extended,
            "truncated": truncated,
        }
        self.rays.append(CuspRay(rid, att.id, tuple(path), cert))

    # --- queries --------------------------------------------------------------

    def vertex_class_of(self, tv):
        """Quotient vertex id for a tree vertex, None if outside the built part."""
        return self._find_vclass(tv, cache_miss=True)

    def class_of_edge(self, e):
        """(class_id, sign) for a tree edge; None means deep in a cusp ray.

        sign +1 when e is equivalent to the stored representative, -1 when it
        is equivalent to its reverse.
        """
        key = e.key()
        if key in self._ecache:
            return self._ecache[key]
        tv = terminus(e, self.lring)
        vid = self._find_vclass(tv, cache_miss=True)
        res = None
        if vid is not None and self.vertices[vid].processed:
            for cid, orient, _ in self.vertices[vid].incident:
                c = self.classes[cid]
                target = c.rep if orient > 0 else reverse(c.rep)
                if self.solver.gamma_edge(e, target) is not None:
                    res = (cid, orient)
                    break
            assert res is not None, "edge reduction failed at a processed vertex"
        self._ecache[key] = res
        return res

    def edge_stab(self, cid):
        """n(e): stabilizer order of the class modulo the scalar matrices."""
        c = self.classes[cid]
        if c.stab is None:
            raw = self.solver.count_stab_edge(c.rep)
            assert raw > 0 and raw % (self.q - 1) == 0
            c.stab = raw // (self.q - 1)
        return c.stab

    def finite_classes(self):
        return [c for c in self.classes if c.ray is None]

    def finite_vertices(self):
        out = []
        for v in self.vertices:
            if v.processed and any(self.classes[cid].ray is None for cid, _, _ in v.incident):
                out.append(v)
        return out

    def weight_pair(self, cid):
        c = self.classes[cid]
        return (c.weight_fwd, c.weight_bwd)

    # --- reporting --------------------------------------------------------------

    def summary(self):
        fin = self.finite_classes()
        out = {
            "q": self.q,
            "level": self.level.label(),
            "level_degree": self.level.deg,
            "num_vertex_classes": len(self.vertices),
            "num_finite_vertices": len(self.finite_vertices()),
            "num_edge_classes": len(self.classes),
            "num_finite_classes": len(fin),
            "num_rays": len(self.rays),
            "depth_reached": max(v.depth for v in self.vertices),
            "gamma_calls": self.solver.calls,
            "escalations": list(self.escalations),
        }
        out["classes"] = [
            {
                "id": c.id,
                "edge": c.rep.json(),
                "endpoints": [c.o_vertex, c.t_vertex],
                "weights": [c.weight_fwd, c.weight_bwd],
                "stab": self.edge_stab(c.id) if c.ray is None else None,
                "ray": list(c.ray) if c.ray else None,
            }
            for c in self.classes
        ]
        out["vertices"] = [
            {
                "id": v.id,
                "vertex": v.rep.json(),
                "depth": v.depth,
                "processed": v.processed,
                "beyond_tip": v.beyond_tip,
            }
            for v in self.vertices
        ]
        out["rays"] = [
            {
                "id": r.id,
                "attachment": r.attachment,
                "classes": list(r.class_ids),
                "certificate": r.certificate,
            }
            for r in self.rays
        ]
        return out

    def to_dot(self):
        lines = ["graph quotient {", '  node [shape=circle, fontsize=10];']
        for v in self.finite_vertices():
            lines.append('  v%d [label="v%d\\n%s"];' % (v.id, v.id, v.rep.name()))
        for c in self.finite_classes():
            stab = self.edge_stab(c.id)
            lab = "%s/%s" % (c.weight_fwd, c.weight_bwd)
            if stab != 1:
                lab += ", n=%d" % stab
            lines.append('  v%d -- v%d [label="%s"];' % (c.o_vertex, c.t_vertex, lab))
        for r in self.rays:
            prev = "v%d" % r.attachment
            shown = list(r.class_ids)[: self.ray_len]
            for i, cid in enumerate(shown):
                c = self.classes[cid]
                node = "cusp%d" % r.id if i == len(shown) - 1 else "r%d_%d" % (r.id, i)
                if i == len(shown) - 1:
                    lines.append('  %s [shape=plaintext, label="cusp %d"];' % (node, r.id))
                else:
                    lines.append('  %s [shape=point];' % node)
                lines.append(
                    '  %s -- %s [style=dashed, label="%s/%s"];'
                    % (prev, node, c.weight_fwd, c.weight_bwd)
                )
                prev = node
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quotient(level, ray_len=3, depth_cap=40, enum_cap=200000, seed=0):
    """Breadth-first construction of the quotient graph for a level."""
    from .cusps import cusp_count

    g = QuotientGraph(level, ray_len=ray_len, depth_cap=depth_cap, enum_cap=enum_cap, seed=seed)
    base = Vertex(0, g.lring.zero)
    g._register_vertex(base, 0, None)
    head = 0
    steps = 0
    while head < len(g.vertices):
        v = g.vertices[head]
        head += 1
        if v.beyond_tip or v.processed:
            continue
        if v.depth > depth_cap:
            raise NonTermination(
                "breadth-first sweep passed depth %d with %d rays of %d certified"
                % (depth_cap, len(g.rays), cusp_count(level))
            )
        g._process(v.id)
        steps += 1
        if steps > 5000:
            raise NonTermination("quotient sweep exceeded 5000 vertex expansions")
    expected = cusp_count(level)
    assert len(g.rays) == expected, "certified %d rays, cusp count says %d" % (
        len(g.rays),
        expected,
    )
    for w in g.vertices:
        assert w.processed or w.beyond_tip
    for c in g.classes:
        assert c.weight_fwd is not None and c.weight_bwd is not None
    return g
