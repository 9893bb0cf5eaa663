"""The four degree-three quotient shapes match their expected pictures."""

import pytest

from hecketree.figures import figure_claims, level_shape
from hecketree.suites import deg3_panel, is_figure_level


def panel_cases():
    cases = []
    for q in (2, 3):
        for level in deg3_panel(q):
            shape = level_shape(level)
            if is_figure_level(level, shape):
                cases.append((q, level.ring.to_str(level.n).replace(" ", ""), shape))
    return cases


@pytest.mark.parametrize("q,text,shape", panel_cases())
def test_figure_matches(q, text, shape, bundle):
    g = bundle(q, text).graph
    claims = figure_claims(g, shape)
    bad = [c for c in claims if not c["ok"]]
    assert not bad, bad
