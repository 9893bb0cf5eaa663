"""Cusp counting, rationality, and the Atkin-Lehner action on cusps."""

import pytest

from hecketree.cusps import (
    al_on_cusp,
    cusp_count,
    cusp_key,
    enumerate_cusps,
    is_rational_cusp,
    rational_cusp_count,
)
from hecketree.levels import level_for

LEVELS = [
    (2, "T"),
    (2, "T^2"),
    (2, "T^3"),
    (2, "T^3+T+1"),
    (2, "T*(T^2+T+1)"),
    (2, "(T^2+T+1)^2"),
    (2, "T^4+T^3+1"),
    (2, "T^2*(T^2+T+1)"),
    (2, "T^5+T^2+1"),
    (3, "T^3"),
    (3, "T^2*(T-1)"),
    (3, "T*(T-1)*(T-2)"),
    (4, "T^3+T+1"),
    (5, "T^2*(T-1)"),
]


@pytest.mark.parametrize("q,text", LEVELS)
def test_count_matches_enumeration(q, text):
    level = level_for(q, text)
    cusps = enumerate_cusps(level)
    assert len(cusps) == cusp_count(level)
    keys = {cusp_key(level, u, v) for u, v in cusps}
    assert len(keys) == len(cusps)


@pytest.mark.parametrize("q,text", LEVELS)
def test_rational_count(q, text):
    level = level_for(q, text)
    rational = [c for c in enumerate_cusps(level) if is_rational_cusp(level, c)]
    assert len(rational) == rational_cusp_count(level)


@pytest.mark.parametrize("q,text", LEVELS)
def test_atkin_lehner_is_an_involution(q, text):
    level = level_for(q, text)
    ring = level.ring
    for p, r in level.factors:
        pr = ring.one
        for _ in range(r):
            pr = ring.mul(pr, p)
        for u, v in enumerate_cusps(level):
            u1, v1 = al_on_cusp(level, pr, (u, v))
            u2, v2 = al_on_cusp(level, pr, (u1, v1))
            assert cusp_key(level, u2, v2) == cusp_key(level, u, v)


@pytest.mark.parametrize("q,text,want", [(2, "T^3", 4), (2, "T^3+T+1", 2)])
def test_ray_count_is_cusp_count(q, text, want, bundle):
    level = level_for(q, text)
    assert cusp_count(level) == want
    assert len(bundle(q, text).graph.rays) == want
