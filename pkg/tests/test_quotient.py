"""Quotient graph construction: masses, degrees, determinism."""

import pytest

from hecketree.suites import mass_claims


LEVELS = [(2, "T^3"), (2, "T^3+T+1"), (2, "T*(T^2+T+1)"), (3, "T^2*(T-1)")]


@pytest.mark.parametrize("q,text", LEVELS)
def test_halfline_masses(q, text, bundle):
    for c in mass_claims(bundle(q, text).graph):
        assert c["ok"], c


def test_halfline_masses_degree_four(bundle):
    for c in mass_claims(bundle(2, "T^4+T^3+1").graph):
        assert c["ok"], c


@pytest.mark.parametrize("q,text", LEVELS)
def test_vertex_degrees(q, text, bundle):
    """Every processed vertex sees q+1 tree edges, counted with multiplicity."""
    g = bundle(q, text).graph
    for v in g.vertices:
        if not v.processed:
            continue
        deg = 0
        for c in g.classes:
            if c.o_vertex == v.id:
                deg += c.weight_bwd
            if c.t_vertex == v.id:
                deg += c.weight_fwd
        assert deg == g.q + 1, (v.id, deg)


@pytest.mark.parametrize("q,text", LEVELS)
def test_summary_is_consistent(q, text, bundle):
    g = bundle(q, text).graph
    s = g.summary()
    assert s["q"] == q
    assert s["num_edge_classes"] == len(s["classes"])
    assert s["num_rays"] == len(s["rays"])
    assert s["escalations"] == []
    ray_members = {cid for r in s["rays"] for cid in r["classes"]}
    finite = [c for c in s["classes"] if c["ray"] is None]
    assert len(finite) == s["num_finite_classes"]
    assert ray_members.isdisjoint({c["id"] for c in finite})


def test_builds_are_deterministic():
    from hecketree.levels import level_for
    from hecketree.quotient import build_quotient

    a = build_quotient(level_for(2, "T^2*(T+1)"), seed=0).summary()
    b = build_quotient(level_for(2, "T^2*(T+1)"), seed=0).summary()
    assert a == b
