"""Reference data: trusted tabulated inputs and verification targets.

Two kinds of tables live here.  Inputs the engine consumes but re-validates
(the sporadic convex quadrilaterals with three equal sides, whose dismissal
reasons are re-derived rather than trusted), and expected outputs the engine
must reproduce (the classified quadrilaterals with their vertex censuses and
tiling counts, the per-f tiling count table, and closed-form edge lengths with
their printed 4-decimal approximations).
"""

from __future__ import annotations

from fractions import Fraction

from .quad import Quad, make_quad
from .vertices import VertexType

F = Fraction


def _vt(text: str) -> VertexType:
    # "a2b" style shorthand
    exps = {"a": 0, "b": 0, "g": 0, "d": 0}
    i = 0
    while i < len(text):
        c = text[i]
        i += 1
        n = ""
        while i < len(text) and text[i].isdigit():
            n += text[i]
            i += 1
        exps[c] = int(n) if n else 1
    return VertexType(exps["a"], exps["b"], exps["g"], exps["d"])


def census(text: str) -> dict[VertexType, int]:
    # "6abd 2g3" -> {abd: 6, g3: 2}
    out = {}
    for part in text.split():
        i = 0
        while part[i].isdigit():
            i += 1
        out[_vt(part[i:])] = int(part[:i])
    return out


# ---------------------------------------------------------------------------
# sporadic convex quadrilaterals with three equal sides (trusted input data;
# the classifier re-derives whether each admits a tiling)

CONVEX_SPORADIC = [
    (29, 16, 18, 23, 42),
    (31, 16, 18, 23, 42),
    (35, 16, 30, 17, 42),
    (37, 16, 30, 17, 42),
    (35, 18, 40, 17, 42),
    (11, 30, 40, 7, 42),
    (29, 30, 40, 23, 42),
    (49, 16, 42, 17, 60),
    (53, 16, 42, 17, 60),
    (21, 8, 26, 7, 30),
    (49, 18, 56, 17, 60),
    (23, 10, 28, 9, 30),
    (11, 7, 9, 8, 15),
    (13, 7, 9, 8, 15),
    (17, 14, 28, 9, 30),
    (25, 16, 18, 19, 30),
    (23, 16, 18, 19, 30),
    (25, 16, 22, 17, 30),
    (27, 16, 22, 17, 30),
    (23, 32, 54, 13, 60),
    (31, 32, 54, 19, 60),
    (17, 16, 26, 11, 30),
    (31, 36, 50, 23, 60),
    (11, 9, 13, 8, 15),
    (19, 18, 28, 13, 30),
    (25, 18, 28, 17, 30),
    (19, 42, 56, 13, 60),
    (37, 42, 56, 29, 60),
    (23, 22, 28, 19, 30),
]


# sporadic solutions of the concave substitution systems that pass the range
# filters (verification targets for the audit tables)
CONCAVE_ALPHA_ROWS = [
    ((35, 16, 18, 11), 30, 6),
    ((35, 16, 18, 3), 30, 10),
    ((33, 16, 22, 1), 30, 10),
    ((19, 7, 9, 1), 15, 10),
    ((41, 10, 16, 3), 30, 12),
    ((17, 5, 9, 4), 15, 12),
    ((19, 3, 11, 2), 15, 12),
    ((67, 12, 50, 11), 60, 12),
    ((71, 8, 54, 7), 60, 12),
    ((41, 8, 18, 3), 30, 12),
    ((55, 16, 18, 7), 42, 14),
    ((49, 16, 30, 1), 42, 14),
    ((43, 6, 16, 1), 30, 20),
    ((43, 4, 18, 1), 30, 20),
    ((83, 16, 18, 13), 60, 24),
    ((71, 16, 42, 1), 60, 24),
    ((23, 3, 5, 1), 15, 30),
    ((41, 8, 10, 5), 30, 30),
    ((37, 8, 18, 1), 30, 30),
    ((67, 16, 42, 1), 60, 40),
    ((79, 16, 18, 13), 60, 40),
    ((43, 6, 8, 5), 30, 60),
    ((39, 8, 10, 5), 30, 60),
    ((35, 8, 18, 1), 30, 60),
    ((49, 4, 6, 3), 30, 60),
    ((39, 6, 16, 1), 30, 60),
    ((47, 4, 10, 1), 30, 60),
    ((77, 10, 36, 1), 60, 60),
    ((59, 6, 20, 1), 42, 84),
]
CONCAVE_ALPHA_SURVIVORS = {((17, 5, 9, 4), 15), ((41, 10, 16, 3), 30), ((43, 6, 16, 1), 30)}

CONCAVE_BETA_ROWS = [
    ((5, 32, 18, 11), 30, 20),
    ((5, 32, 6, 23), 30, 20),
    ((1, 42, 4, 17), 30, 30),
    ((1, 17, 9, 4), 15, 60),
    ((1, 21, 5, 8), 15, 12),
    ((13, 66, 32, 29), 60, 12),
    ((5, 32, 14, 13), 30, 30),
    ((3, 32, 22, 7), 30, 30),
    ((1, 19, 3, 8), 15, 60),
    ((7, 66, 8, 49), 60, 24),
]
CONCAVE_BETA_SURVIVORS = {((5, 32, 6, 23), 30), ((1, 42, 4, 17), 30), ((1, 21, 5, 8), 15)}


# ---------------------------------------------------------------------------
# expected classification: the fifteen sporadic quadrilaterals (canonical
# orientation) with their vertex censuses and tiling counts

SPORADIC_EXPECTED = [
    # (angles, den, f, tiling count, censuses)
    ((6, 3, 4, 3), 6, 6, 1, ["6abd 2g3"]),
    ((1, 8, 4, 3), 6, 6, 1, ["6abd 2g3"]),
    ((12, 4, 6, 2), 9, 6, 1, ["6abd 2g3"]),
    ((2, 10, 3, 6), 9, 12, 1, ["12abd 2g6"]),
    ((1, 21, 5, 8), 15, 12, 1, ["12abd 2g6"]),
    ((4, 9, 5, 17), 15, 12, 1, ["12abd 2g6"]),
    ((9, 28, 10, 23), 30, 12, 1, ["12abd 2g6"]),
    ((3, 16, 10, 41), 30, 12, 1, ["12abd 2g6"]),
    ((5, 32, 6, 23), 30, 20, 1, ["20abd 2g10"]),
    ((1, 16, 6, 43), 30, 20, 1, ["20abd 2g10"]),
    ((1, 42, 4, 17), 30, 30, 1, ["30abd 2g15"]),
    ((3, 20, 4, 13), 18, 18, 3, ["18abd 2g9", "16abd 2ag5d 2bg4", "14abd 2a2gd2 4bg4"]),
    ((1, 4, 2, 2), 4, 16, 2, ["8bd2 8a2bg 2g4", "8bd2 8a2bg 2g4"]),
    ((5, 4, 7, 3), 9, 36, 1, ["18bg2 6a2b2 6a3d 6abd3 2d6"]),
    ((15, 6, 10, 7), 18, 36, 1, ["14a2b 10bg3 8ad3 6b2gd2"]),
]


def sporadic_quads() -> list[Quad]:
    out = []
    for nums, den, f, _count, _cen in SPORADIC_EXPECTED:
        out.append(make_quad(tuple(F(n, den) for n in nums), f, provenance="sporadic"))
    return out


# ---------------------------------------------------------------------------
# the three infinite families (canonical earth-map orientation)

FAMILY_MIN_F = {1: 10, 2: 6, 3: 10}


def family_quad(n: int, f: int) -> Quad:
    if f % 2 or f < FAMILY_MIN_F[n]:
        raise ValueError(f"family {n} needs even f >= {FAMILY_MIN_F[n]}")
    if n == 1:
        angles = (F(4, f), 1 - F(4, f), F(4, f), F(1))
    elif n == 2:
        angles = (F(2, f), F(4 * f - 4, 3 * f), F(4, f), F(2 * f - 2, 3 * f))
    elif n == 3:
        angles = (F(2, f), F(2 * f - 4, 3 * f), F(4, f), F(4 * f - 2, 3 * f))
    else:
        raise ValueError(f"no family {n}")
    return make_quad(angles, f, provenance=f"family{n}")


def family_tiling_count(n: int, f: int) -> int:
    """Reference number of tilings of the family member at this f."""
    if n == 1:
        if f % 4 == 0:
            return 4 + (1 if f == 12 else 0)
        return 1
    if n == 2:
        if f % 6 == 4:
            k = (f - 4) // 6
            return 1 + 1 + (k + 2) // 2 + 3
        return 1
    if n == 3:
        if f % 6 == 2 and f >= 14:
            k = (f - 2) // 6
            return 1 + 1 + (k + 3) // 2 + 1
        return 1
    raise ValueError(f"no family {n}")


def family_members(f_max: int) -> list[Quad]:
    out = []
    for n in (1, 2, 3):
        for f in range(FAMILY_MIN_F[n], f_max + 1, 2):
            out.append(family_quad(n, f))
    return out


def expected_quads(f_max: int) -> set[tuple]:
    """Canonical (angles, f) pairs of every quadrilateral with f <= f_max."""
    out = set()
    for nums, den, f, _c, _cen in SPORADIC_EXPECTED:
        if f <= f_max:
            out.add((tuple(F(n, den) for n in nums), f))
    for q in family_members(f_max):
        out.add((q.angles, q.f))
    return out


def expected_qt(f: int) -> tuple[int, int]:
    """Reference (number of quadrilaterals, number of tilings) at tile count f."""
    special = {
        6: (4, 4),
        8: (1, 1),
        12: (8, 12),
        16: (4, 14),
        18: (4, 6),
        20: (5, 13),
        30: (4, 4),
        36: (5, 8),
    }
    if f in special:
        return special[f]
    if f % 2 or f < 6:
        return (0, 0)
    if f < 10:
        return (1, 1)  # only the second family exists at f = 8
    k, r = divmod(f, 12)
    t = {0: 6, 2: k + 6, 4: k + 11, 6: 3, 8: k + 10, 10: k + 8}[r]
    return (3, t)


# ---------------------------------------------------------------------------
# exact/numeric edge-length reference values; closed forms evaluate under an
# mpmath context, printed values are the reference 4-decimal approximations


def _appendix_rows(mp):
    pi = mp.pi
    sqrt3 = mp.sqrt(3)
    sqrt5 = mp.sqrt(5)

    def acospi(x):
        return mp.acos(x) / pi

    rows = {
        "(6,3,4,3)/6@6": (lambda: mp.mpf(1) / 2, lambda: mp.mpf(1) / 6, None, None),
        "(1,8,4,3)/6@6": (
            lambda: acospi(mp.mpf(1) / 3),
            lambda: mp.mpf(1),
            0.3918,
            None,
        ),
        "(12,4,6,2)/9@6": (
            lambda: 1
            - mp.asin(mp.sqrt(2) / (mp.sqrt(mp.cos(2 * pi / 9)) * (2 - 2 * mp.cos(4 * pi / 9))))
            / pi,
            lambda: acospi(
                (sqrt3 * mp.cot(2 * pi / 9) - mp.cot(2 * pi / 9) * mp.sin(pi / 9))
                / (1 + mp.cos(pi / 9))
            ),
            0.5673,
            0.1741,
        ),
        "(2,10,3,6)/9@12": (
            lambda: acospi(4 * sqrt3 * mp.sin(2 * pi / 9) / 3 - 1),
            lambda: acospi((8 * mp.cos(pi / 9) - 4 * sqrt3 * mp.sin(4 * pi / 9) - 1) / 3),
            0.3390,
            0.5324,
        ),
        "(1,21,5,8)/15@12": (
            lambda: acospi(
                (2 * mp.sin(pi / 15) - sqrt3 * mp.cos(7 * pi / 15)) / mp.sin(7 * pi / 15)
            ),
            lambda: acospi(
                (
                    51
                    - 90 * sqrt3 * mp.sin(2 * pi / 5)
                    - 96 * sqrt3 * mp.sin(7 * pi / 15)
                    + 88 * mp.cos(2 * pi / 15)
                    + 184 * mp.cos(pi / 15)
                )
                / (
                    1
                    + 6 * mp.cos(7 * pi / 15)
                    - 2 * mp.cos(2 * pi / 15)
                    + 6 * mp.cos(2 * pi / 5)
                    + 2 * mp.cos(pi / 5)
                )
            ),
            0.4241,
            0.7413,
        ),
        "(4,9,5,17)/15@12": (
            lambda: acospi(
                (2 * mp.sin(pi / 15) - sqrt3 * mp.cos(7 * pi / 15)) / mp.sin(7 * pi / 15)
            ),
            lambda: acospi(
                (-3 + 9 * sqrt5 - 5 * sqrt3 * mp.sqrt(10 - 2 * sqrt5))
                / (-9 - 9 * sqrt5 + sqrt3 * (sqrt5 + 4) * mp.sqrt(10 - 2 * sqrt5))
            ),
            0.4241,
            0.1654,
        ),
        "(9,28,10,23)/30@12": (
            lambda: acospi(
                (mp.cot(pi / 10) - 2 * mp.cot(pi / 10) * mp.cos(7 * pi / 30) * mp.sin(pi / 5))
                / (2 * mp.sin(pi / 5) * mp.sin(7 * pi / 30))
            ),
            lambda: acospi(
                (30 + 2 * sqrt5 - sqrt3 * (5 + sqrt5) * mp.sqrt(10 - 2 * sqrt5))
                / (2 - 10 * sqrt5 + 3 * sqrt3 * (sqrt5 + 1) * mp.sqrt(10 - 2 * sqrt5))
            ),
            0.3353,
            0.4159,
        ),
        "(3,16,10,41)/30@12": (
            lambda: acospi(
                (sqrt3 * mp.cos(11 * pi / 30) - 2 * mp.sin(pi / 10)) / mp.sin(11 * pi / 30)
            ),
            lambda: acospi(
                (
                    -28
                    + 60 * sqrt3 * mp.sin(7 * pi / 15)
                    + 61 * sqrt3 * mp.sin(4 * pi / 15)
                    + 61 * sqrt3 * mp.sin(pi / 15)
                    - 61 * mp.cos(2 * pi / 15)
                    - 120 * mp.cos(pi / 15)
                )
                / (mp.cos(2 * pi / 5) + 3 * mp.cos(2 * pi / 15))
            ),
            0.4698,
            0.1461,
        ),
        "(5,32,6,23)/30@20": (
            lambda: acospi(
                (mp.cot(pi / 10) - 2 * mp.cot(pi / 10) * mp.cos(7 * pi / 30) * mp.sin(pi / 5))
                / (2 * mp.sin(pi / 5) * mp.sin(7 * pi / 30))
            ),
            lambda: acospi(
                (30 + 2 * sqrt5 - sqrt3 * (5 + sqrt5) * mp.sqrt(10 - 2 * sqrt5))
                / (2 - 10 * sqrt5 + 3 * sqrt3 * (sqrt5 + 1) * mp.sqrt(10 - 2 * sqrt5))
            ),
            0.3353,
            0.4159,
        ),
        "(1,16,6,43)/30@20": (
            lambda: acospi(
                (sqrt3 * mp.cos(11 * pi / 30) - 2 * mp.sin(pi / 10)) / mp.sin(11 * pi / 30)
            ),
            lambda: acospi(
                (
                    -7 * sqrt3
                    + 22 * sqrt3 * mp.cos(pi / 15)
                    - 24 * sqrt3 * mp.cos(2 * pi / 15)
                    + 32 * mp.sin(7 * pi / 15)
                    - 18 * mp.sin(2 * pi / 5)
                )
                / (
                    21 * sqrt3
                    - 66 * sqrt3 * mp.cos(pi / 15)
                    + 80 * sqrt3 * mp.cos(2 * pi / 15)
                    - 104 * mp.sin(7 * pi / 15)
                    + 58 * mp.sin(2 * pi / 5)
                )
            ),
            0.4698,
            0.2730,
        ),
        "(1,42,4,17)/30@30": (
            lambda: acospi(
                (2 * mp.sin(pi / 15) - sqrt3 * mp.cos(7 * pi / 15)) / mp.sin(7 * pi / 15)
            ),
            lambda: acospi(
                (sqrt3 * (9 * sqrt5 + 29) * mp.sqrt(10 - 2 * sqrt5) - 58 * sqrt5 - 70)
                / ((15 * sqrt5 + 27) * sqrt3 * mp.sqrt(10 - 2 * sqrt5) - 46 * sqrt5 - 146)
            ),
            0.4241,
            0.5493,
        ),
        "(3,20,4,13)/18@18": (
            lambda: acospi(4 * sqrt3 * mp.sin(2 * pi / 9) / 3 - 1),
            lambda: acospi(
                (mp.cos(pi / 9) - 1) / (2 * sqrt3 * mp.sin(4 * pi / 9) - 3 * mp.cos(pi / 9) - 1)
            ),
            0.3390,
            0.4527,
        ),
        "(1,4,2,2)/4@16": (lambda: mp.mpf(1) / 4, lambda: mp.mpf(1) / 2, None, None),
        "(5,4,7,3)/9@36": (
            lambda: acospi(
                (sqrt3 * mp.cot(2 * pi / 9) - mp.cot(2 * pi / 9) * mp.sin(pi / 9))
                / (1 + mp.cos(pi / 9))
            ),
            lambda: acospi(
                (
                    68 * sqrt3
                    + 47 * sqrt3 * mp.cos(pi / 9)
                    + 162 * mp.sin(2 * pi / 9)
                    + 162 * mp.sin(pi / 9)
                )
                / (
                    99 * sqrt3
                    + 69 * sqrt3 * mp.cos(pi / 9)
                    + 234 * mp.sin(2 * pi / 9)
                    + 234 * mp.sin(pi / 9)
                )
            ),
            0.1741,
            0.2584,
        ),
        "(15,6,10,7)/18@36": (
            lambda: acospi(4 * mp.cos(pi / 9) - 3),
            lambda: acospi(28 * sqrt3 * mp.sin(4 * pi / 9) - 36 * mp.cos(pi / 9) - 13),
            0.2258,
            0.1183,
        ),
    }
    return rows


def appendix_sporadic_rows(mp) -> dict:
    return _appendix_rows(mp)


def appendix_family_forms(mp):
    """Closed edge-length forms for the three families as functions of f."""
    pi = mp.pi
    sqrt3 = mp.sqrt(3)

    def fam1(f):
        c = mp.cos(4 * pi / f)
        a = mp.acos(c * (1 - c) / mp.sin(4 * pi / f) ** 2) / pi
        return a, 1 - 2 * a

    def fam2(f):
        a = (
            mp.acos(
                (
                    sqrt3 * mp.sin(8 * pi / (3 * f))
                    - sqrt3 * mp.sin(4 * pi / (3 * f))
                    - mp.cos(4 * pi / (3 * f))
                    - mp.cos(8 * pi / (3 * f))
                    + 2
                )
                / (
                    sqrt3 * mp.sin(8 * pi / (3 * f))
                    + sqrt3 * mp.sin(4 * pi / (3 * f))
                    + mp.cos(4 * pi / (3 * f))
                    - mp.cos(8 * pi / (3 * f))
                )
            )
            / pi
        )
        b = (
            mp.acos(
                (sqrt3 * mp.sin(2 * pi / (3 * f)) + 4 * mp.cos(2 * pi / f) - mp.cos(2 * pi / (3 * f)))
                / (sqrt3 * mp.sin(2 * pi / (3 * f)) + 3 * mp.cos(2 * pi / (3 * f)))
            )
            + mp.acos(
                sqrt3
                * (mp.cos(2 * pi / f) - mp.cos(2 * pi / (3 * f)) + sqrt3 * mp.sin(2 * pi / (3 * f)))
                / (3 * mp.sin(2 * pi / f))
            )
        ) / pi
        return a, b

    def fam3(f):
        a_rad = mp.acos(
            (
                sqrt3 * mp.sin(2 * pi / (3 * f)) * mp.cos(2 * pi / f)
                + mp.cos(2 * pi / (3 * f)) * mp.cos(2 * pi / f)
                - 1
            )
            / (mp.sin(2 * pi / f) * (sqrt3 * mp.cos(2 * pi / (3 * f)) - mp.sin(2 * pi / (3 * f))))
        )
        # the auxiliary angle is signed; this concave family takes the
        # negative arccos branch (validated against the edge formulas)
        phi = -mp.acos(
            (mp.sin(2 * pi / f) - mp.sin((f + 4) * pi / (6 * f)) * mp.sin(4 * pi / f))
            / mp.sqrt(
                -2 * mp.sin(4 * pi / f) * mp.sin(2 * pi / f) * mp.sin((f + 4) * pi / (6 * f))
                - mp.cos(2 * pi / f) ** 2
                - mp.cos(4 * pi / f) ** 2
                + 2
            )
        )
        b_rad = mp.asin(
            mp.sin(a_rad)
            * mp.sin(-2 * pi / 3 + 4 * pi / (3 * f) + phi)
            / mp.sin(-4 * pi / 3 + 2 * pi / (3 * f) + phi)
        )
        return a_rad / pi, b_rad / pi

    return {
        1: (fam1, 10, 0.4241, 0.1517, (F(1, 3), F(1, 3))),
        2: (fam2, 6, 0.3390, 0.8065, ("acos13", "acos13")),
        3: (fam3, 10, 0.4698, 0.0898, ("acos13", "acos13")),
    }
