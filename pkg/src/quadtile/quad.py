"""The candidate quadrilateral record and its admissibility machinery.

A tile is a spherical quadrilateral with corners alpha, beta, gamma, delta in
cyclic order, three edges of length a (alpha-beta, beta-gamma, gamma-delta)
and one of length b (delta-alpha).  All angles are exact rationals in units of
pi; edge lengths are computed numerically at high precision.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import mpmath as mp

from .angles import fold_sine, sine_product_equal

Angles = tuple[Fraction, Fraction, Fraction, Fraction]

EDGE_CONSISTENCY_TOL = Fraction(1, 10**9)
EDGE_WORK_DIGITS = 50

CONVEX = "convex"
ALPHA_GE_1 = "alpha_ge_1"
BETA_GE_1 = "beta_ge_1"
ALPHA_EQ_1 = "alpha_eq_1"
BETA_EQ_1 = "beta_eq_1"


class NotRealizableError(ValueError):
    """The edge-length formulas have no solution for these angles."""


class EdgeInconsistencyError(ValueError):
    """The two closed forms for the a-edge disagree beyond tolerance."""


def angle_sum_f(alpha: Fraction, beta: Fraction, gamma: Fraction, delta: Fraction) -> int | None:
    """Tile count f implied by the angle sum 2 + 4/f, or None."""
    excess = alpha + beta + gamma + delta - 2
    if excess <= 0:
        return None
    f = Fraction(4) / excess
    if f.denominator != 1:
        return None
    f = int(f)
    if f < 6 or f % 2:
        return None
    return f


def mirror_angles(angles: Angles) -> Angles:
    """Interchange alpha<->delta and beta<->gamma."""
    a, b, g, d = angles
    return (d, g, b, a)


def is_earth_map_oriented(angles: Angles, f: int) -> bool:
    a, b, g, d = angles
    return a + b + d == 2 and g == Fraction(4, f)


def canonicalize_angles(angles: Angles, f: int) -> tuple[Angles, bool]:
    """Canonical mirror representative; returns (angles, swapped).

    Preference order: the orientation admitting the standard two-layer earth
    map (vertex alpha+beta+delta = 2 with gamma = 4/f poles); else the
    orientation with beta = 1; else the one with alpha > delta.
    """
    mirr = mirror_angles(angles)
    if is_earth_map_oriented(angles, f):
        return angles, False
    if is_earth_map_oriented(mirr, f):
        return mirr, True
    if angles[1] == 1:
        return angles, False
    if mirr[1] == 1:
        return mirr, True
    if angles[0] >= angles[3]:
        return angles, False
    return mirr, True


def convexity_class(angles: Angles) -> str:
    a, b, g, d = angles
    if a == 1 or d == 1:
        return ALPHA_EQ_1
    if b == 1 or g == 1:
        return BETA_EQ_1
    if a > 1 or d > 1:
        return ALPHA_GE_1
    if b > 1 or g > 1:
        return BETA_GE_1
    return CONVEX


@dataclass(frozen=True)
class Quad:
    """A quadrilateral candidate with exact angles and case provenance."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    f: int
    convexity_class: str
    provenance: str = ""

    @property
    def angles(self) -> Angles:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def mirrored(self) -> "Quad":
        return make_quad(mirror_angles(self.angles), self.f, self.provenance + "|mirror")

    def __str__(self) -> str:
        return quad_id(self)

    def to_json(self) -> dict:
        a, b = compute_edges(self)
        return {
            "angles": [f"{x.numerator}/{x.denominator}" for x in self.angles],
            "f": self.f,
            "class": self.convexity_class,
            "a": float(a),
            "b": float(b),
            "provenance": self.provenance,
        }


def make_quad(angles: Angles, f: int | None = None, provenance: str = "") -> Quad:
    angles = tuple(Fraction(x) for x in angles)
    derived = angle_sum_f(*angles)
    if derived is None:
        raise ValueError(f"angles {angles} have no valid tile count")
    if f is not None and f != derived:
        raise ValueError(f"angle sum implies f={derived}, got f={f}")
    return Quad(*angles, f=derived, convexity_class=convexity_class(angles), provenance=provenance)


def quad_id(q: Quad) -> str:
    den = lcm(*(x.denominator for x in q.angles))
    nums = ",".join(str(x.numerator * den // x.denominator) for x in q.angles)
    return f"({nums})/{den}@{q.f}"


def parse_quad_id(text: str) -> tuple[Angles, int]:
    """Parse "(n1,n2,n3,n4)/d@f" into (angles, f)."""
    body, _, ftext = text.partition("@")
    if not ftext:
        raise ValueError(f"quad id {text!r} lacks @f suffix")
    f = int(ftext)
    if not (body.startswith("(") and ")/" in body):
        raise ValueError(f"malformed quad id {text!r}")
    nums_part, _, den_part = body.rpartition("/")
    den = int(den_part)
    nums = [int(s) for s in nums_part.strip("()").split(",")]
    if len(nums) != 4:
        raise ValueError(f"quad id {text!r} must list four angles")
    return tuple(Fraction(n, den) for n in nums), f


def admissibility_filters(q: Quad) -> list[str]:
    """Tags of every violated angle-level admissibility condition."""
    a, b, g, d = q.angles
    out = []
    if not all(0 < x < 2 for x in q.angles):
        out.append("angle_range")
        return out
    if a == d and b == g:
        out.append("symmetric")
    if sum(1 for x in q.angles if x >= 1) > 1:
        out.append("two_angles_ge_1")
        return out
    # beta < gamma iff alpha > delta, hence also beta = gamma iff alpha = delta
    if (b < g) != (a > d) or (b == g) != (a == d):
        out.append("order_bg_ad")
    # beta = delta iff alpha = 1 (and the mirror statement)
    if (b == d) != (a == 1):
        out.append("bd_alpha1")
    if (a == g) != (d == 1):
        out.append("ag_delta1")
    if d <= 1 and (2 * a + b <= 1 or b + 2 * g <= 1):
        out.append("edge_sum_low")
    if a <= 1 and (2 * d + g <= 1 or g + 2 * b <= 1):
        out.append("edge_sum_low_mirror")
    if a > 1:
        if not (a > 1 > g > b > d):
            out.append("concave_alpha_order")
        if g <= Fraction(1, 3):
            out.append("concave_alpha_gamma_small")
        if d >= Fraction(1, 2):
            out.append("concave_alpha_delta_large")
    if d > 1:
        if not (d > 1 > b > g > a):
            out.append("concave_delta_order")
        if b <= Fraction(1, 3):
            out.append("concave_delta_beta_small")
        if a >= Fraction(1, 2):
            out.append("concave_delta_alpha_large")
    if b > 1:
        if not (a < g and a < d and a < Fraction(1, 2)):
            out.append("concave_beta_order")
        if b + d >= 2:
            out.append("concave_beta_delta_sum")
    if g > 1:
        if not (d < b and d < a and d < Fraction(1, 2)):
            out.append("concave_gamma_order")
        if g + a >= 2:
            out.append("concave_gamma_alpha_sum")
    if q.convexity_class == CONVEX:
        if (b > d) != (a < g) or (b < d) != (a > g):
            out.append("convex_order_bd_ag")
    # vertex-existence necessities (degree-3 companion vertices)
    if a > 1 or d > 1:
        if a + b + d != 2 and a + g + d != 2:
            out.append("no_abd_or_agd_vertex")
    from .vertices import has_vertex_containing

    if b > 1 and not has_vertex_containing(q.angles, (0, 1, 0, 1)):
        out.append("no_bd_vertex")
    if g > 1 and not has_vertex_containing(q.angles, (1, 0, 1, 0)):
        out.append("no_ag_vertex")
    return out


def check_sine_constraint(q: Quad) -> tuple[bool, bool]:
    """Exact test of the two sine identities every realizable tile satisfies.

    Returns (first_holds, second_holds); the quadrilateral is admissible at
    this level iff either component is true.
    """
    a, b, g, d = q.angles
    first = _folded_sides_equal(a - g / 2, b / 2, g / 2, d - b / 2, negate_rhs=False)
    second = _folded_sides_equal(a + g / 2, b / 2, g / 2, d + b / 2, negate_rhs=True)
    return first, second


def satisfies_sine_constraint(q: Quad) -> bool:
    first, second = check_sine_constraint(q)
    return first or second


def _folded_sides_equal(u, v, w, z, negate_rhs: bool) -> bool:
    fu, fv, fw, fz = fold_sine(u), fold_sine(v), fold_sine(w), fold_sine(z)
    sl = fu.sign * fv.sign
    sr = fw.sign * fz.sign * (-1 if negate_rhs else 1)
    if sl == 0 or sr == 0:
        return sl == 0 and sr == 0
    if sl != sr:
        return False
    return sine_product_equal(fu.folded, fv.folded, fw.folded, fz.folded)


def _mpf(x: Fraction) -> mp.mpf:
    return mp.mpf(x.numerator) / x.denominator


@functools.lru_cache(maxsize=None)
def _edges_cached(angles: Angles, dps: int) -> tuple[mp.mpf, mp.mpf]:
    a_, b_, g_, d_ = angles
    with mp.workdps(dps):
        sin = lambda x: mp.sinpi(_mpf(x))
        cos = lambda x: mp.cospi(_mpf(x))
        forms = []
        if d_ != 1:
            forms.append((sin(a_) + cos(d_) * sin(g_)) / (2 * sin(d_) * sin(g_ / 2) ** 2))
        if a_ != 1:
            forms.append((sin(d_) + cos(a_) * sin(b_)) / (2 * sin(a_) * sin(b_ / 2) ** 2))
        if not forms:
            raise NotRealizableError("alpha and delta cannot both be straight")
        tol = _mpf(EDGE_CONSISTENCY_TOL)
        if len(forms) == 2 and abs(forms[0] - forms[1]) > tol:
            raise EdgeInconsistencyError(f"cos(a) forms disagree: {forms[0]} vs {forms[1]}")
        cos_a = forms[0]
        if abs(cos_a) > 1 + tol:
            raise NotRealizableError(f"|cos a| = {abs(cos_a)} > 1")
        cos_a = max(mp.mpf(-1), min(mp.mpf(1), cos_a))
        edge_a = mp.acos(cos_a) / mp.pi

        cb, cg, sb, sg = cos(b_), cos(g_), sin(b_), sin(g_)
        cos_b = (
            cos_a**3 * (1 - cb) * (1 - cg)
            - cos_a**2 * sb * sg
            + cos_a * (cb + cg - cb * cg)
            + sb * sg
        )
        if abs(cos_b) > 1 + tol:
            raise NotRealizableError(f"|cos b| = {abs(cos_b)} > 1")
        cos_b = max(mp.mpf(-1), min(mp.mpf(1), cos_b))
        # b = 1 is a legitimate boundary (half great circle); snap exactly
        if 1 + cos_b < mp.mpf(10) ** (-dps // 2):
            edge_b = mp.mpf(1)
        else:
            edge_b = mp.acos(cos_b) / mp.pi

        if not (0 < edge_a < 1):
            raise NotRealizableError(f"edge a = {edge_a} outside (0, 1)")
        if not (0 < edge_b <= 1):
            raise NotRealizableError(f"edge b = {edge_b} outside (0, 1]")
        if abs(edge_a - edge_b) < tol:
            raise NotRealizableError("edges a and b coincide")
        return edge_a, edge_b


def compute_edges(q: Quad, dps: int = EDGE_WORK_DIGITS) -> tuple[mp.mpf, mp.mpf]:
    """Edge lengths (a, b) in units of pi, computed at dps working digits."""
    return _edges_cached(q.angles, dps)
