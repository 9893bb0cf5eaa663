"""Shared fixtures: one expensive bundle per level, reused across modules."""

import pytest

from hecketree.levels import level_for
from hecketree.suites import LevelBundle

_BUNDLES = {}


@pytest.fixture(scope="session")
def bundle():
    def get(q, text, seed=0):
        key = (q, text, seed)
        if key not in _BUNDLES:
            _BUNDLES[key] = LevelBundle(level_for(q, text), seed=seed)
        return _BUNDLES[key]

    return get
