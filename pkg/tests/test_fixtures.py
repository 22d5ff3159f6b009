from __future__ import annotations

import pytest

from quadtile.data import census, family_quad
from quadtile.fixtures import build_exceptional, build_threefold_special
from quadtile.geometry import realize
from quadtile.tiling import TilingError, canonical_key, validate


def test_exceptional_fixtures_validate():
    expected = {
        "f16_a": ("8bd2 8a2bg 2g4", 16),
        "f16_b": ("8bd2 8a2bg 2g4", 16),
        "f36_a": ("18bg2 6a2b2 6a3d 6abd3 2d6", 36),
        "f36_b": ("14a2b 10bg3 8ad3 6b2gd2", 36),
    }
    keys = {}
    for name, (cen, f) in expected.items():
        q, t = build_exceptional(name)
        assert q.f == f and t.f == f
        assert validate(t, q) == []
        assert t.census() == census(cen)
        keys[name] = canonical_key(t)
    assert keys["f16_a"] != keys["f16_b"]
    with pytest.raises(ValueError):
        build_exceptional("nope")


def test_exceptional_fixtures_realize():
    for name in ("f16_a", "f36_a", "f36_b"):
        q, t = build_exceptional(name)
        p = realize(t, q)
        assert p.worst_offset < 1e-6


def test_threefold_special():
    q = family_quad(2, 10)
    keys = set()
    for rot in (0, 1, 2):
        t = build_threefold_special(q, rot)
        assert validate(t, q) == []
        assert t.census() == census("4abd 2ad3 2a2bg 4bg2")
        keys.add(canonical_key(t))
    assert len(keys) == 3
    with pytest.raises(TilingError):
        build_threefold_special(q, 3)
    with pytest.raises(TilingError):
        build_threefold_special(family_quad(2, 12), 0)
