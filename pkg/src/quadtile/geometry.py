"""Numeric realization of combinatorial tilings on the unit sphere.

Each tile is a congruent copy of a template quadrilateral; placements are
rotations of the template (the mirror template serves the opposite
chirality).  Placement propagates over a breadth-first spanning tree of the
gluing graph; the remaining gluings and the fused vertex positions are the
closure checks.  Edge midpoints are carried along explicitly so that the
half-great-circle edge of the degenerate b = 1 case stays well defined.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .quad import Quad, compute_edges
from .tiling import CCW, Tiling

DEFAULT_CLOSURE_TOL = 1e-6
DEFAULT_REALIZE_DPS = 50


class RealizationError(ValueError):
    def __init__(self, msg: str, worst: float):
        super().__init__(f"{msg} (worst offset {worst:.3e})")
        self.worst = worst


class _FloatCtx:
    pi = math.pi
    cos = staticmethod(math.cos)
    sin = staticmethod(math.sin)
    acos = staticmethod(math.acos)
    atan2 = staticmethod(math.atan2)
    sqrt = staticmethod(math.sqrt)

    @staticmethod
    def num(x):
        return float(x)


class _MpCtx:
    def __init__(self):
        self.pi = mp.pi
        self.cos, self.sin, self.acos = mp.cos, mp.sin, mp.acos
        self.atan2, self.sqrt = mp.atan2, mp.sqrt

    @staticmethod
    def num(x):
        return mp.mpf(x.numerator) / x.denominator if hasattr(x, "numerator") else mp.mpf(x)


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _scale(u, s):
    return (u[0] * s, u[1] * s, u[2] * s)


def _add(*vs):
    return tuple(sum(c) for c in zip(*vs))


def _norm(ctx, u):
    n = ctx.sqrt(_dot(u, u))
    return _scale(u, 1 / n)


def _rotate(ctx, axis, angle, v):
    # Rodrigues rotation about a unit axis
    c, s = ctx.cos(angle), ctx.sin(angle)
    k = axis
    return _add(
        _scale(v, c),
        _scale(_cross(k, v), s),
        _scale(k, _dot(k, v) * (1 - c)),
    )


def _arc(ctx, u, v):
    d = _dot(u, v)
    d = max(-1, min(1, d))
    return ctx.acos(d)


def _tangent(ctx, frm, to):
    t = _add(to, _scale(frm, -_dot(frm, to)))
    return _norm(ctx, t)


def tile_template(q: Quad, ctx, dps: int) -> dict[int, dict]:
    """Corner and edge-midpoint coordinates for both chiralities.

    Chirality +1 corners are listed in ccw positions (alpha, delta, gamma,
    beta) as seen from outside the sphere, matching the combinatorial side
    numbering of :mod:`quadtile.tiling`.
    """
    al, be, ga, de = (ctx.num(x) * ctx.pi for x in q.angles)
    ea, eb = compute_edges(q, dps=max(dps, 30))
    a = ctx.num(ea) * ctx.pi
    b = ctx.num(eb) * ctx.pi

    B = (0, 0, 1)
    C = (ctx.sin(a), 0, ctx.cos(a))
    A = _rotate(ctx, B, -be, C)
    D = _rotate(ctx, C, ga, B)
    # consistency of the construction
    if abs(_arc(ctx, A, D) - b) > 1e-9:
        raise RealizationError("template does not close", float(abs(_arc(ctx, A, D) - b)))

    corners = [A, D, C, B]  # ccw positions of a +1 tile
    tangent_ad = _rotate(ctx, A, -al, _tangent(ctx, A, B))
    mid_b = _add(_scale(A, ctx.cos(b / 2)), _scale(tangent_ad, ctx.sin(b / 2)))
    mids = [
        mid_b,
        _norm(ctx, _add(D, C)),
        _norm(ctx, _add(C, B)),
        _norm(ctx, _add(B, A)),
    ]
    minus_corners = []
    minus_mids = []
    for i in range(4):
        x, y, z = corners[(-i) % 4]
        minus_corners.append((x, -y, z))
        x, y, z = mids[3 - i]
        minus_mids.append((x, -y, z))
    return {
        1: {"corners": corners, "mids": mids},
        -1: {"corners": minus_corners, "mids": minus_mids},
    }


@dataclass
class SphericalPlacement:
    tiling: Tiling
    corners: list[list[tuple]]  # per tile, ccw corner positions
    mids: list[list[tuple]]  # per tile, per side midpoint
    vertex_positions: list[tuple]
    vertex_of_corner: dict[tuple[int, int], int]
    worst_offset: float
    tile_areas: list[float]

    @property
    def total_area(self) -> float:
        return float(sum(self.tile_areas))


def _frame(ctx, u, v):
    e1 = u
    e2 = _norm(ctx, _add(v, _scale(u, -_dot(u, v))))
    e3 = _cross(e1, e2)
    return (e1, e2, e3)


def _frame_rotation(ctx, src_pair, dst_pair):
    # rotation taking the orthonormal frame of src onto dst
    fs = _frame(ctx, *src_pair)
    fd = _frame(ctx, *dst_pair)
    # R = fd * fs^T ; columns of fs are basis vectors
    rows = []
    for i in range(3):
        rows.append(tuple(sum(fd[k][i] * fs[k][j] for k in range(3)) for j in range(3)))
    return rows


def _apply(rows, v):
    return tuple(_dot(r, v) for r in rows)


def realize(
    t: Tiling,
    q: Quad | None = None,
    tol: float = DEFAULT_CLOSURE_TOL,
    dps: int | None = DEFAULT_REALIZE_DPS,
) -> SphericalPlacement:
    """Place every tile on the unit sphere and verify closure within tol."""
    q = q or t.quad
    if dps is None:
        ctx = _FloatCtx()
        return _realize(t, q, ctx, tol, 30)
    with mp.workdps(dps):
        ctx = _MpCtx()
        return _realize(t, q, ctx, tol, dps)


def _realize(t: Tiling, q: Quad, ctx, tol: float, dps: int) -> SphericalPlacement:
    tpl = tile_template(q, ctx, dps)
    f = t.f
    corners: list = [None] * f
    mids: list = [None] * f

    identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    corners[0] = [
        _apply(identity, v) for v in tpl[t.chirality[0]]["corners"]
    ]
    mids[0] = [_apply(identity, v) for v in tpl[t.chirality[0]]["mids"]]
    placed = {0}
    queue = [0]
    tree_edges = set()
    while queue:
        cur = queue.pop(0)
        for s in range(4):
            u, r = t.glue[(cur, s)]
            if u in placed:
                continue
            tree_edges.add(frozenset(((cur, s), (u, r))))
            # the neighbour's side r runs opposite to ours: its source corner
            # lands on our target corner, and the midpoints coincide
            dst = (corners[cur][(s + 1) % 4], mids[cur][s])
            tpl_u = tpl[t.chirality[u]]
            src = (tpl_u["corners"][r], tpl_u["mids"][r])
            rot = _frame_rotation(ctx, src, dst)
            corners[u] = [_apply(rot, v) for v in tpl_u["corners"]]
            mids[u] = [_apply(rot, v) for v in tpl_u["mids"]]
            placed.add(u)
            queue.append(u)
    if len(placed) != f:
        raise RealizationError("tiling not connected", math.inf)

    worst = 0.0
    for (x, y) in t.glue.items():
        if x > y or frozenset((x, y)) in tree_edges:
            continue
        (t1, s1), (t2, s2) = x, y
        d1 = _arc(ctx, corners[t1][(s1 + 1) % 4], corners[t2][s2])
        d2 = _arc(ctx, corners[t1][s1], corners[t2][(s2 + 1) % 4])
        d3 = _arc(ctx, mids[t1][s1], mids[t2][s2])
        worst = max(worst, float(d1), float(d2), float(d3))

    orbits = t.vertices()
    vertex_positions = []
    vertex_of_corner = {}
    for vid, orbit in enumerate(orbits):
        pts = [corners[tile][c] for tile, c in orbit]
        for tile, c in orbit:
            vertex_of_corner[(tile, c)] = vid
        base = pts[0]
        for p in pts[1:]:
            worst = max(worst, float(_arc(ctx, base, p)))
        vertex_positions.append(_norm(ctx, _add(*pts)) if len(pts) > 1 else base)
    if worst > tol:
        raise RealizationError("closure violation", worst)

    areas = []
    for tile in range(f):
        total = 0
        for c in range(4):
            p = corners[tile][c]
            # midpoints avoid the antipodal ambiguity of a length-pi edge
            nxt = mids[tile][c]
            prv = mids[tile][(c - 1) % 4]
            u = _tangent(ctx, p, nxt)
            v = _tangent(ctx, p, prv)
            ang = ctx.atan2(_dot(_cross(u, v), p), _dot(u, v))
            if ang < 0:
                ang += 2 * ctx.pi
            total += ang
        areas.append(float(total - 2 * ctx.pi))

    return SphericalPlacement(
        tiling=t,
        corners=corners,
        mids=mids,
        vertex_positions=vertex_positions,
        vertex_of_corner=vertex_of_corner,
        worst_offset=worst,
        tile_areas=areas,
    )


CLOSED_FORM_TOL = 1e-9
PRINTED_HALF_WIDTH = 5e-5  # printed 4-decimal values are truncations
FAMILY_LIMIT_TOL = 1e-3
FAMILY_LIMIT_F = 10_000


def _printed_dev(value: float, printed: float | None) -> float | None:
    # printed p means p <= value < p + 1e-4, i.e. |value - (p + 5e-5)| <= 5e-5
    if printed is None:
        return None
    return abs(value - printed - PRINTED_HALF_WIDTH)


def verify_appendix(dps: int = DEFAULT_REALIZE_DPS) -> dict:
    """Recompute every reference edge length and compare all three ways.

    For each sporadic row the engine value is checked against the closed form
    (1e-9) and the printed 4-decimal truncation (half-width 5e-5); the three
    family rows are checked at their sample f and at f = 10^4 against the
    common limit of both edge lengths.
    """
    from . import data
    from .quad import make_quad, parse_quad_id

    report = {"rows": [], "max_closed_dev": 0.0, "max_printed_dev": 0.0, "ok": True}
    with mp.workdps(dps):
        for key, (fa, fb, pa, pb) in data.appendix_sporadic_rows(mp).items():
            angles, f = parse_quad_id(key)
            q = make_quad(angles, f)
            a, b = compute_edges(q, dps=dps)
            closed_dev = float(max(abs(a - fa()), abs(b - fb())))
            devs = [d for d in (_printed_dev(float(a), pa), _printed_dev(float(b), pb)) if d is not None]
            printed_dev = max(devs) if devs else 0.0
            ok = closed_dev <= CLOSED_FORM_TOL and printed_dev <= PRINTED_HALF_WIDTH
            report["rows"].append(
                {
                    "id": key,
                    "a": float(a),
                    "b": float(b),
                    "closed_dev": closed_dev,
                    "printed_dev": printed_dev,
                    "ok": ok,
                }
            )
            report["max_closed_dev"] = max(report["max_closed_dev"], closed_dev)
            report["max_printed_dev"] = max(report["max_printed_dev"], printed_dev)
            report["ok"] &= ok

        limit_13 = 1 / 3
        limit_acos = float(mp.acos(mp.mpf(1) / 3) / mp.pi)
        for n, (form, f0, pa, pb, limits) in data.appendix_family_forms(mp).items():
            q = data.family_quad(n, f0)
            a, b = compute_edges(q, dps=dps)
            ca, cb = form(f0)
            closed_dev = float(max(abs(a - ca), abs(b - cb)))
            devs = [d for d in (_printed_dev(float(a), pa), _printed_dev(float(b), pb)) if d is not None]
            printed_dev = max(devs) if devs else 0.0
            qbig = data.family_quad(n, FAMILY_LIMIT_F)
            abig, bbig = compute_edges(qbig, dps=dps)
            target = limit_13 if limits[0] == Fraction(1, 3) else limit_acos
            limit_dev = float(max(abs(abig - target), abs(bbig - target)))
            ok = (
                closed_dev <= CLOSED_FORM_TOL
                and printed_dev <= PRINTED_HALF_WIDTH
                and limit_dev <= FAMILY_LIMIT_TOL
            )
            report["rows"].append(
                {
                    "id": f"family{n}@{f0}",
                    "a": float(a),
                    "b": float(b),
                    "closed_dev": closed_dev,
                    "printed_dev": printed_dev,
                    "limit_dev": limit_dev,
                    "ok": ok,
                }
            )
            report["max_closed_dev"] = max(report["max_closed_dev"], closed_dev)
            report["max_printed_dev"] = max(report["max_printed_dev"], printed_dev)
            report["ok"] &= ok
    return report


def export_coordinates(p: SphericalPlacement, path, samples_per_arc: int = 16) -> dict:
    """Write vertices and sampled edge arcs as documented JSON."""
    t = p.tiling
    ctx = _FloatCtx()
    arcs = []
    for (x, y) in sorted(p.tiling.glue.items()):
        if x > y:
            continue
        (t1, s1), (t2, s2) = x, y
        a = p.corners[t1][s1]
        mid = p.mids[t1][s1]
        b = p.corners[t1][(s1 + 1) % 4]
        pts = _sample_arc(ctx, a, mid, b, samples_per_arc)
        arcs.append(
            {
                "tiles": [t1, t2],
                "from": p.vertex_of_corner[(t1, s1)],
                "to": p.vertex_of_corner[(t1, (s1 + 1) % 4)],
                "points": pts,
            }
        )
    doc = {
        "format": "quadtile-coords/1",
        "f": t.f,
        "quad": t.quad.to_json(),
        "vertices": [[float(c) for c in v] for v in p.vertex_positions],
        "tiles": [
            {
                "chirality": t.chirality[i],
                "corners": [p.vertex_of_corner[(i, c)] for c in range(4)],
            }
            for i in range(t.f)
        ],
        "arcs": arcs,
    }
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    return doc


def _sample_arc(ctx, a, mid, b, n):
    out = []
    for seg_start, seg_end in ((a, mid), (mid, b)):
        ang = _arc(ctx, _vf(seg_start), _vf(seg_end))
        for i in range(n // 2 + 1):
            if out and i == 0:
                continue
            frac = i / (n // 2)
            if ang < 1e-12:
                v = seg_start
            else:
                s1 = math.sin((1 - frac) * ang) / math.sin(ang)
                s2 = math.sin(frac * ang) / math.sin(ang)
                v = _norm(ctx, _add(_scale(_vf(seg_start), s1), _scale(_vf(seg_end), s2)))
            out.append([float(c) for c in v])
    return out


def _vf(v):
    return tuple(float(c) for c in v)
