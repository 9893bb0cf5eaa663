"""Command line front end.

Every subcommand emits a single JSON report (sorted keys, compact separators)
so identical job specifications produce identical bytes; the graph subcommand
can emit DOT instead.  Exit codes: 0 success, 1 a verify suite found a failing
claim, 2 argument or parse trouble, 3 a search gave up against its bounds.
"""

import argparse
import json
import os
import subprocess
import sys

from . import __version__
from .config import JobSpec
from .cusps import cusp_count, enumerate_cusps, rational_cusp_count
from .eisenstein import EisensteinCochain
from .errors import BoundExceeded, NonTermination, NoStabilization, PolyParseError
from .harmonic import CochainSpace
from .hecke import HeckeAction
from .intlinalg import identity, mat_scale, mat_sub, transpose
from .lattice import (
    component_group,
    eisenstein_quotient,
    gram_matrix,
    hecke_algebra_lattice,
    kernel_mod_lattice,
    lattice_index,
)
from .suites import SUITES, run_suite


def _provenance():
    here = os.path.dirname(os.path.abspath(__file__))
    git = None
    try:
        r = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            cwd=here, capture_output=True, text=True, timeout=10,
        )
        if r.returncode == 0:
            git = r.stdout.strip()
    except Exception:
        git = None
    return {"package": "hecketree", "version": __version__, "git": git}


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command, config, result, escalations=()):
    rep = {
        "schema": 1,
        "command": command,
        "config": config,
        "provenance": _provenance(),
        "escalations": list(escalations),
        "result": result,
    }
    return json.dumps(rep, sort_keys=True, separators=(",", ":")) + "\n"


def _add_common(p, with_level=True):
    p.add_argument("--q", type=int, default=None, help="field size, a prime power")
    p.add_argument("--char", type=int, default=None, help="field characteristic")
    p.add_argument("--ext", type=int, default=1, help="extension degree over the prime field")
    p.add_argument("--modulus", default="",
                   help="comma-separated field polynomial coefficients, low degree first")
    if with_level:
        p.add_argument("--level", required=True, help="level polynomial, e.g. 'T^2*(T-1)'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gen-deg", dest="gen_deg", type=int, default=2,
                   help="generate algebras by operators up to this degree")
    p.add_argument("--depth-cap", dest="depth_cap", type=int, default=40)
    p.add_argument("--enum-cap", dest="enum_cap", type=int, default=200000)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")


def _resolve_q(args, parser):
    if args.q is not None:
        return args.q
    if args.char is not None:
        return args.char ** args.ext
    parser.error("need --q, or --char (with optional --ext)")


def _spec(args, parser):
    q = _resolve_q(args, parser)
    modulus = tuple(int(x) for x in args.modulus.split(",") if x.strip())
    return JobSpec(
        q=q,
        level=args.level,
        modulus=modulus,
        depth_cap=args.depth_cap,
        enum_cap=args.enum_cap,
        seed=args.seed,
        gen_degree=args.gen_deg,
    )


def _warn(spec):
    for note in spec.warnings():
        print("warning: %s" % note, file=sys.stderr)


def cmd_graph(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    if args.dot:
        _emit(g.to_dot(), args.out)
        return 0
    result = g.summary()
    esc = result.pop("escalations")
    _emit(_report("graph", spec.echo(), result, esc), args.out)
    return 0


def cmd_cochains(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    sp = CochainSpace(g)
    result = {
        "level": g.level.label(),
        "q": g.q,
        "rank": sp.rank(),
        "finite_classes": len(sp.cids),
        "basis": sp.basis(),
    }
    _emit(_report("cochains", spec.echo(), result, g.escalations), args.out)
    return 0


def _operator_table(H, gen_degree):
    ring, level = H.ring, H.level
    ops = {}
    for d in range(1, gen_degree + 1):
        for p in ring.monic_irreducibles(d):
            tag = "U:" if ring.mod(level.n, p) == () else "T:"
            ops[tag + ring.to_str(p)] = H.hecke(p)
    for m in level.exact_divisors():
        if ring.deg(m) >= 1:
            ops["W:" + ring.to_str(m)] = H.atkin_lehner(m)
    return ops


def cmd_hecke(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    sp = CochainSpace(g)
    result = {"level": g.level.label(), "q": g.q, "rank": sp.rank(), "operators": {}}
    if sp.rank():
        H = HeckeAction(sp)
        result["operators"] = _operator_table(H, spec.gen_degree)
    _emit(_report("hecke", spec.echo(), result, g.escalations), args.out)
    return 0


def _scalar_congruences(H, E, rank):
    """For each prime at the level, the scalar its operator equals mod the ideal."""
    ring, level = H.ring, H.level
    q = level.fq.q
    eye = identity(rank)
    bound = q * q + q + 1
    out = []
    for p, _ in level.factors:
        U = H.hecke(p)
        found = None
        for c in range(-bound, bound + 1):
            if E.contains(mat_sub(U, mat_scale(c, eye))):
                found = c
                break
        out.append({"op": "U:" + ring.to_str(p), "congruent_to_scalar": found})
    return out


def cmd_ideal(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    sp = CochainSpace(g)
    level = g.level
    if sp.rank() == 0:
        result = {
            "level": level.label(), "q": g.q, "rank_T": 0, "rank_T0": 0,
            "index": 1, "T_mod_E": [], "Phi": [], "Phi_E_kernel": [],
            "congruences": [],
        }
        _emit(_report("ideal", spec.echo(), result, g.escalations), args.out)
        return 0
    H = HeckeAction(sp)
    G = gram_matrix(sp)
    Phi = component_group(G)
    T = hecke_algebra_lattice(H, gen_degree=spec.gen_degree)
    T0 = hecke_algebra_lattice(H, gen_degree=spec.gen_degree, coprime_only=True)
    index = lattice_index(T, T0)
    group, E, settled = eisenstein_quotient(
        T, H, settle_degree=spec.resolved_settle_degree(), cap=spec.eis_cap)
    ker = kernel_mod_lattice([transpose(M) for M in E.matrices()], G)
    result = {
        "level": level.label(),
        "q": g.q,
        "rank_T": T.rank(),
        "rank_T0": T0.rank(),
        "index": index,
        "T_mod_E": list(group.factors),
        "Phi": list(Phi.factors),
        "Phi_E_kernel": list(ker.factors),
        "congruences": _scalar_congruences(H, E, sp.rank()),
        "settled_degree": settled,
    }
    _emit(_report("ideal", spec.echo(), result, g.escalations), args.out)
    return 0


def cmd_phi(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    sp = CochainSpace(g)
    result = {"level": g.level.label(), "q": g.q, "rank": sp.rank(),
              "Phi": [], "Phi_E_kernel": []}
    if sp.rank():
        H = HeckeAction(sp)
        G = gram_matrix(sp)
        result["Phi"] = list(component_group(G).factors)
        T = hecke_algebra_lattice(H, gen_degree=spec.gen_degree)
        _, E, _ = eisenstein_quotient(
            T, H, settle_degree=spec.resolved_settle_degree(), cap=spec.eis_cap)
        ker = kernel_mod_lattice([transpose(M) for M in E.matrices()], G)
        result["Phi_E_kernel"] = list(ker.factors)
    _emit(_report("phi", spec.echo(), result, g.escalations), args.out)
    return 0


def cmd_cusps(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    level = spec.make_level()
    ring = level.ring
    pairs = enumerate_cusps(level)
    result = {
        "level": level.label(),
        "q": level.fq.q,
        "count": cusp_count(level),
        "rational_count": rational_cusp_count(level),
        "cusps": [[ring.to_str(a), ring.to_str(b)] for a, b in pairs],
    }
    _emit(_report("cusps", spec.echo(), result), args.out)
    return 0


def cmd_eis(args, parser):
    spec = _spec(args, parser)
    _warn(spec)
    g = spec.build()
    level, ring = g.level, g.ring
    fins = list(g.finite_classes())
    values = {}
    for m in level.divisors():
        d = ring.deg(m)
        if d < 1 or d > args.eis_deg:
            continue
        E = EisensteinCochain(ring, m, lring=g.lring)
        values[ring.to_str(m)] = [str(E.value(c.rep)) for c in fins]
    result = {
        "level": level.label(),
        "q": g.q,
        "classes": [c.id for c in fins],
        "values": values,
    }
    _emit(_report("eis", spec.echo(), result, g.escalations), args.out)
    return 0


def cmd_verify(args, parser):
    try:
        qs = [int(x) for x in str(args.q).split(",") if x.strip()] or [2]
    except ValueError:
        parser.error("--q wants an integer or a comma list like 2,3,4,5")
    claims = []
    for q in qs:
        claims.extend(run_suite(args.suite, q=q, seed=args.seed, jobs=args.jobs))
        if args.suite != "deg3":
            break  # only the deg3 suite is per-field
    failed = [c for c in claims if not c["ok"]]
    config = {"suite": args.suite, "q": qs, "seed": args.seed, "jobs": args.jobs}
    result = {
        "suite": args.suite,
        "claims": claims,
        "passed": len(claims) - len(failed),
        "failed": len(failed),
    }
    _emit(_report("verify", config, result), args.out)
    for c in claims:
        print("%s %s | %s" % ("PASS" if c["ok"] else "FAIL", c["claim"], c["detail"]),
              file=sys.stderr)
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecketree",
        description="Exact quotient graphs, harmonic cochains and Hecke "
                    "lattices for congruence groups over F_q[T].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build the quotient graph")
    _add_common(p)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("cochains", help="integral basis of the cochain lattice")
    _add_common(p)
    p.set_defaults(fn=cmd_cochains)

    p = sub.add_parser("hecke", help="operator matrices on the cochain basis")
    _add_common(p)
    p.set_defaults(fn=cmd_hecke)

    p = sub.add_parser("ideal", help="algebra, Eisenstein quotient, congruences")
    _add_common(p)
    p.set_defaults(fn=cmd_ideal)

    p = sub.add_parser("phi", help="component group and its ideal-killed part")
    _add_common(p)
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("cusps", help="enumerate the cusps of the level")
    _add_common(p)
    p.set_defaults(fn=cmd_cusps)

    p = sub.add_parser("eis", help="Eisenstein cochain values on the finite edge classes")
    _add_common(p)
    p.add_argument("--eis-deg", dest="eis_deg", type=int, default=5,
                   help="largest divisor degree to evaluate")
    p.set_defaults(fn=cmd_eis)

    p = sub.add_parser("verify", help="run a named claim suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--q", default="2",
                   help="field size(s) for the deg3 suite, e.g. 2 or 2,3,4,5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, parser)
    except PolyParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("bad argument: %s" % exc, file=sys.stderr)
        return 2
    except (NoStabilization, BoundExceeded, NonTermination) as exc:
        print("gave up: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
