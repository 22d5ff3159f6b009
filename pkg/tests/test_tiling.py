from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quadtile.quad import make_quad
from quadtile.tiling import (
    TilingError,
    apply_flip_schedule,
    build_earth_map,
    canonical_key,
    flip_first,
    flip_second,
    tiling_from_json,
    validate,
)
from quadtile.vertices import VertexType

F = Fraction


def family(n: int, f: int):
    if n == 1:
        angles = (F(4, f), 1 - F(4, f), F(4, f), F(1))
    elif n == 2:
        angles = (F(2, f), F(4 * f - 4, 3 * f), F(4, f), F(2 * f - 2, 3 * f))
    else:
        angles = (F(2, f), F(2 * f - 4, 3 * f), F(4, f), F(4 * f - 2, 3 * f))
    return make_quad(angles, f, provenance=f"family{n}")


def census_of(t):
    return {str(k): v for k, v in t.census().items()}


def test_earth_map_basic():
    q = make_quad((F(1), F(1, 2), F(2, 3), F(1, 2)))
    t = build_earth_map(q)
    assert validate(t) == []
    assert census_of(t) == {"abd": 6, "g3": 2}

    q10 = family(1, 10)
    t10 = build_earth_map(q10)
    assert validate(t10) == []
    assert census_of(t10) == {"abd": 10, "g5": 2}

    with pytest.raises(TilingError):
        build_earth_map(make_quad((F(5, 9), F(4, 9), F(7, 9), F(1, 3))))


def test_earth_map_rotation_and_mirror_invariance():
    q = family(2, 16)
    t = build_earth_map(q)
    key = canonical_key(t)
    perm = [(i + 4) % 16 for i in range(16)]
    assert canonical_key(t.relabeled(perm)) == key
    assert canonical_key(t.mirrored()) == key


def test_flip_first_family3():
    # third family: beta = m*gamma with m = (f-2)/6
    f = 14
    q = family(3, f)
    t = build_earth_map(q)
    flipped = flip_first(t, q, 0)
    assert validate(flipped, q) == []
    k = (f - 2) // 6
    assert flipped.census() == {
        VertexType(1, 1, 0, 1): f - 2,
        VertexType(1, 0, k, 1): 2,
        VertexType(0, 1, (f + 1) // 3, 0): 2,
    }
    # involution
    again = flip_first(flipped, q, 0)
    assert validate(again, q) == []
    assert canonical_key(again) == canonical_key(t)


def test_flip_second_family2():
    f = 16  # 6k+4 with k = 2
    q = family(2, f)
    t = build_earth_map(q)
    flipped = flip_second(t, q, 3)
    assert validate(flipped, q) == []
    k = (f - 4) // 6
    assert flipped.census() == {
        VertexType(1, 1, 0, 1): f - 2,
        VertexType(0, 1, (f + 2) // 6, 0): 2,
        VertexType(1, 0, (f - 1) // 3, 1): 2,
    }
    assert canonical_key(flip_second(flipped, q, 3)) == canonical_key(t)


def test_flip_sporadic_f18():
    q = make_quad((F(1, 6), F(10, 9), F(2, 9), F(13, 18)))
    t = build_earth_map(q)
    assert census_of(t) == {"abd": 18, "g9": 2}
    one = flip_second(t, q, 0)
    assert validate(one, q) == []
    assert census_of(one) == {"abd": 16, "ag5d": 2, "bg4": 2}
    two = apply_flip_schedule(q, [(2, 0), (2, 4)])
    assert validate(two, q) == []
    assert census_of(two) == {"abd": 14, "a2gd2": 2, "bg4": 4}


def test_disjoint_flips_commute():
    q = family(1, 16)  # beta = 3*gamma, m = 3
    ab = apply_flip_schedule(q, [(1, 0), (1, 4)])
    ba = apply_flip_schedule(q, [(1, 4), (1, 0)])
    assert validate(ab, q) == []
    assert canonical_key(ab) == canonical_key(ba)
    assert census_of(ab) == {"abd": 12, "ag3d": 4, "b2g2": 2}


def test_family1_f12_triple_flip():
    q = family(1, 12)
    t = apply_flip_schedule(q, [(1, 0), (1, 2), (1, 4)])
    assert validate(t, q) == []
    assert census_of(t) == {"abd": 6, "ag2d": 6, "b3": 2}


def test_flip_guards():
    q = family(1, 16)
    t = build_earth_map(q)
    with pytest.raises(TilingError):
        flip_second(t, q, 0)  # alpha+delta = 5*gamma > f/4
    with pytest.raises(TilingError):
        apply_flip_schedule(q, [(1, 0), (1, 1)])  # overlap
    qq = make_quad((F(1), F(1, 2), F(2, 3), F(1, 2)))
    with pytest.raises(TilingError):
        flip_first(build_earth_map(qq), qq, 0)  # beta not a gamma multiple


def test_double_flip_spacings_distinct():
    # family 2 at f = 22 (k = 3): two flips with gap 0 or 1 are different
    q = family(2, 22)
    t0 = apply_flip_schedule(q, [(2, 0), (2, 4)])
    t1 = apply_flip_schedule(q, [(2, 0), (2, 5)])
    assert validate(t0, q) == [] and validate(t1, q) == []
    assert t0.census() == t1.census()
    assert canonical_key(t0) != canonical_key(t1)
    # same spacing placed elsewhere is isomorphic
    t0b = apply_flip_schedule(q, [(2, 1), (2, 5)])
    assert canonical_key(t0b) == canonical_key(t0)


def test_json_roundtrip():
    q = family(2, 10)
    t = apply_flip_schedule(q, [(2, 1)])
    doc = t.to_json()
    back = tiling_from_json(doc)
    assert canonical_key(back) == canonical_key(t)
    assert validate(back) == []


def test_random_flip_properties():
    rng = random.Random(5)
    cases = 0
    while cases < 60:
        n = rng.choice([1, 2, 3])
        f = rng.choice([10, 12, 14, 16, 20, 22, 26, 28])
        if n == 1 and f % 4:
            continue
        if n == 2 and f % 6 != 4:
            continue
        if n == 3 and f % 6 != 2:
            continue
        q = family(n, f)
        kind = 1 if n in (1, 3) else 2
        start = rng.randrange(f // 2)
        t = build_earth_map(q)
        flipped = flip_timezone_once(t, q, kind, start)
        assert validate(flipped, q) == []
        assert canonical_key(flip_timezone_once(flipped, q, kind, start)) == canonical_key(t)
        cases += 1


def flip_timezone_once(t, q, kind, start):
    return flip_first(t, q, start) if kind == 1 else flip_second(t, q, start)


def test_validate_flags_broken_gluing():
    q = make_quad((F(1), F(1, 2), F(2, 3), F(1, 2)))
    t = build_earth_map(q)
    assert validate(t, q) == []
    # rewire two a-edges; the involution stays intact but vertices break
    broken = t.copy()
    x, y = (0, 1), (2, 1)
    px, py = broken.glue[x], broken.glue[y]
    for side in (x, y, px, py):
        del broken.glue[side]
    broken.add_glue(x, py)
    broken.add_glue(y, px)
    assert validate(broken, q) != []
