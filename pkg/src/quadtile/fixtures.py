"""Builders for the exceptional tilings and the three-fold special family.

The four exceptional tilings (two at f = 16, one each for the two f = 36
quadrilaterals) and the three-fold modification of the second family are not
earth-map surgeries.  They are produced by census-pinned exhaustive search:
the target vertex census constrains the search so strongly that the
builders run in well under a second, and every result is validated
structurally and matched against its census before being returned.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import data
from .quad import Quad, make_quad
from .search import search_all_tilings
from .tiling import Tiling, TilingError, canonical_key, validate
from .vertices import VertexType

F = Fraction

EXCEPTIONAL_SPECS = {
    "f16_a": ((F(1, 4), F(1), F(1, 2), F(1, 2)), 16, "8bd2 8a2bg 2g4", 0),
    "f16_b": ((F(1, 4), F(1), F(1, 2), F(1, 2)), 16, "8bd2 8a2bg 2g4", 1),
    "f36_a": ((F(5, 9), F(4, 9), F(7, 9), F(3, 9)), 36, "18bg2 6a2b2 6a3d 6abd3 2d6", 0),
    "f36_b": ((F(15, 18), F(6, 18), F(10, 18), F(7, 18)), 36, "14a2b 10bg3 8ad3 6b2gd2", 0),
}


@lru_cache(maxsize=None)
def _census_search(angles, f: int, census_text: str) -> tuple[Tiling, ...]:
    q = make_quad(angles, f)
    census = data.census(census_text)
    found = search_all_tilings(q, census=census, cap=max(f, 36))
    tilings = [found[k] for k in sorted(found)]
    for t in tilings:
        problems = validate(t, q)
        if problems:
            raise TilingError(f"fixture failed validation: {problems}")
        if t.census() != census:
            raise TilingError("fixture census mismatch")
    return tuple(tilings)


def build_exceptional(which: str) -> tuple[Quad, Tiling]:
    """One of the four exceptional tilings: f16_a, f16_b, f36_a, f36_b."""
    if which not in EXCEPTIONAL_SPECS:
        raise ValueError(f"unknown exceptional tiling {which!r}")
    angles, f, census_text, index = EXCEPTIONAL_SPECS[which]
    tilings = _census_search(angles, f, census_text)
    if index >= len(tilings):
        raise TilingError(f"expected at least {index + 1} tilings for {which}")
    return make_quad(angles, f), tilings[index]


def threefold_census(f: int) -> dict[VertexType, int]:
    if f % 6 != 4 or f < 10:
        raise TilingError("three-fold modification needs a second-family f = 6k+4")
    k = (f - 4) // 6
    return {
        VertexType(1, 1, 0, 1): f - 6,
        VertexType(1, 0, 0, 3): 2,
        VertexType(2, 1, k, 0): 2,
        VertexType(0, 1, k + 1, 0): 4,
    }


def build_threefold_special(q: Quad, rotation: int) -> Tiling:
    """One of the three rotations of the special second-family modification."""
    if rotation not in (0, 1, 2):
        raise TilingError(f"rotation must be 0, 1 or 2, got {rotation}")
    expected = data.family_quad(2, q.f) if q.f % 6 == 4 and q.f >= 10 else None
    if expected is None or q.angles != expected.angles:
        raise TilingError("three-fold modification applies to second-family members only")
    census = threefold_census(q.f)
    found = search_all_tilings(q, census=census, cap=max(q.f, 36))
    tilings = [found[k] for k in sorted(found)]
    if len(tilings) != 3:
        raise TilingError(f"expected 3 three-fold tilings, found {len(tilings)}")
    keys = [canonical_key(t) for t in tilings]
    assert len(set(keys)) == 3
    return tilings[rotation]
