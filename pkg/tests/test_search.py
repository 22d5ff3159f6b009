from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from quadtile.data import census, family_quad, family_tiling_count
from quadtile.quad import make_quad
from quadtile.search import SearchCapExceeded, search_all_tilings
from quadtile.tiling import apply_flip_schedule, build_earth_map, canonical_key, validate

F = Fraction


def q(n1, n2, n3, n4, den):
    return make_quad((F(n1, den), F(n2, den), F(n3, den), F(n4, den)))


def test_single_earth_map_quads():
    for spor in ((6, 3, 4, 3, 6), (1, 8, 4, 3, 6), (12, 4, 6, 2, 9), (2, 10, 3, 6, 9)):
        quad = q(*spor)
        found = search_all_tilings(quad, cap=24)
        assert len(found) == 1
        (t,) = found.values()
        assert validate(t, quad) == []
        assert canonical_key(build_earth_map(quad)) in found


def test_sporadic_f18_three_tilings():
    quad = q(3, 20, 4, 13, 18)
    found = search_all_tilings(quad, cap=24)
    assert len(found) == 3
    censuses = [t.census() for t in found.values()]
    for text in ("18abd 2g9", "16abd 2ag5d 2bg4", "14abd 2a2gd2 4bg4"):
        assert census(text) in censuses


def test_exceptional_f16_two_tilings():
    quad = q(1, 4, 2, 2, 4)
    found = search_all_tilings(quad, cap=24)
    assert len(found) == 2
    for t in found.values():
        assert t.census() == census("8bd2 8a2bg 2g4")


def test_search_contains_all_constructive_tilings():
    quad = family_quad(2, 16)
    found = search_all_tilings(quad, cap=24)
    assert len(found) == family_tiling_count(2, 16) == 7
    for schedule in ([], [(2, 0)], [(2, 0), (2, 3)], [(2, 0), (2, 4)]):
        t = apply_flip_schedule(quad, schedule)
        assert canonical_key(t) in found


def test_negative_reproduction_f24():
    # the convex one-parameter class pinned at f = 24 passes balance but
    # admits no tiling
    quad = q(13, 12, 18, 9, 24)
    assert search_all_tilings(quad, cap=24) == {}


def test_census_pinned_search():
    quad = q(5, 4, 7, 3, 9)
    found = search_all_tilings(
        quad, census=census("18bg2 6a2b2 6a3d 6abd3 2d6"), cap=36
    )
    assert len(found) == 1
    (t,) = found.values()
    assert validate(t, quad) == []
    # a balance-feasible but unrealizable census comes back empty
    none = search_all_tilings(
        quad, census=census("18bg2 5a2b2 6a3d 8abd3 1d6"), cap=36
    )
    assert none == {}


def test_limit_and_cap():
    quad = family_quad(1, 12)
    found = search_all_tilings(quad, limit=2, cap=24)
    assert len(found) == 2
    with pytest.raises(SearchCapExceeded):
        search_all_tilings(family_quad(1, 28), cap=24)


def test_determinism():
    quad = family_quad(3, 14)
    keys1 = sorted(search_all_tilings(quad, cap=24))
    keys2 = sorted(search_all_tilings(quad, cap=24))
    assert keys1 == keys2 and len(keys1) == 5


def test_family_counts_match_reference_table():
    for n, f in ((1, 12), (1, 16), (2, 10), (2, 16), (3, 14), (3, 20)):
        quad = family_quad(n, f)
        assert len(search_all_tilings(quad, cap=24)) == family_tiling_count(n, f)


def test_count_tilings_for_f():
    from quadtile.search import count_tilings_for_f

    assert count_tilings_for_f(6) == (4, 4)
    assert count_tilings_for_f(16) == (4, 14)
    assert count_tilings_for_f(20) == (5, 13)
