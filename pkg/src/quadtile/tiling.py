"""Combinatorial tilings: rotation-system maps of labeled quadrilaterals.

A tiling is a set of tiles, each carrying a chirality bit and four corners in
fixed cyclic order, plus a fixed-point-free involution gluing tile sides in
matching pairs (the single b-side of a tile may only meet another b-side).

Conventions.  Corner labels are 0=alpha, 1=beta, 2=gamma, 3=delta.  A tile of
chirality +1 has counterclockwise corner cycle (alpha, delta, gamma, beta) as
seen from outside the sphere; chirality -1 is the mirror image with ccw cycle
(alpha, beta, gamma, delta).  Side s runs from ccw corner s to ccw corner s+1,
so the b-side (between delta and alpha) is side 0 on a +1 tile and side 3 on a
-1 tile.  Mirroring a tile maps side s to side 3-s.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .quad import Quad, is_earth_map_oriented, make_quad, quad_id
from .vertices import VertexType, is_balance_solution

ALPHA, BETA, GAMMA, DELTA = range(4)

CCW = {1: (ALPHA, DELTA, GAMMA, BETA), -1: (ALPHA, BETA, GAMMA, DELTA)}

Side = tuple[int, int]


class TilingError(ValueError):
    pass


def side_labels(chirality: int, s: int) -> tuple[int, int]:
    order = CCW[chirality]
    return order[s], order[(s + 1) % 4]


def side_is_b(chirality: int, s: int) -> bool:
    return set(side_labels(chirality, s)) == {ALPHA, DELTA}


@dataclass
class Tiling:
    quad: Quad
    chirality: list[int]
    glue: dict[Side, Side] = field(default_factory=dict)

    @property
    def f(self) -> int:
        return len(self.chirality)

    def corner_label(self, t: int, c: int) -> int:
        return CCW[self.chirality[t]][c]

    def add_glue(self, x: Side, y: Side) -> None:
        if x in self.glue or y in self.glue or x == y:
            raise TilingError(f"conflicting gluing {x} {y}")
        if side_is_b(self.chirality[x[0]], x[1]) != side_is_b(self.chirality[y[0]], y[1]):
            raise TilingError(f"edge type mismatch gluing {x} {y}")
        self.glue[x] = y
        self.glue[y] = x

    def vertices(self) -> list[list[tuple[int, int]]]:
        """Corner orbits; each orbit lists (tile, ccw corner position)."""
        seen = set()
        orbits = []
        for t in range(self.f):
            for c in range(4):
                if (t, c) in seen:
                    continue
                orbit = []
                cur = (t, c)
                while cur not in seen:
                    seen.add(cur)
                    orbit.append(cur)
                    nt, ns = self.glue[(cur[0], (cur[1] - 1) % 4)]
                    cur = (nt, ns)
                orbits.append(orbit)
        return orbits

    def census(self) -> dict[VertexType, int]:
        counts: Counter[VertexType] = Counter()
        for orbit in self.vertices():
            exps = [0, 0, 0, 0]
            for t, c in orbit:
                exps[self.corner_label(t, c)] += 1
            counts[VertexType(*exps)] += 1
        return dict(counts)

    def copy(self) -> "Tiling":
        return Tiling(self.quad, list(self.chirality), dict(self.glue))

    def relabeled(self, perm: list[int]) -> "Tiling":
        """Tiling with tile t renamed to perm[t]."""
        chir = [0] * self.f
        for t, c in enumerate(self.chirality):
            chir[perm[t]] = c
        glue = {}
        for (t, s), (u, r) in self.glue.items():
            glue[(perm[t], s)] = (perm[u], r)
        return Tiling(self.quad, chir, glue)

    def mirrored(self) -> "Tiling":
        """Global reflection: flips every chirality bit, side s -> 3-s."""
        chir = [-c for c in self.chirality]
        glue = {}
        for (t, s), (u, r) in self.glue.items():
            glue[(t, 3 - s)] = (u, 3 - r)
        return Tiling(self.quad, chir, glue)

    def to_json(self) -> dict:
        gluings = sorted(
            [t1, s1, t2, s2]
            for (t1, s1), (t2, s2) in self.glue.items()
            if (t1, s1) < (t2, s2)
        )
        return {
            "format": "quadtile-tiling/1",
            "f": self.f,
            "quad": self.quad.to_json(),
            "tiles": [{"chirality": c} for c in self.chirality],
            "gluings": gluings,
            "census": {str(t): n for t, n in sorted(self.census().items())},
        }


def tiling_from_json(doc: dict) -> Tiling:
    if doc.get("format") != "quadtile-tiling/1":
        raise TilingError(f"unsupported tiling format {doc.get('format')!r}")
    angles = tuple(Fraction(s) for s in doc["quad"]["angles"])
    quad = make_quad(angles, doc["f"], doc["quad"].get("provenance", ""))
    t = Tiling(quad, [tile["chirality"] for tile in doc["tiles"]])
    for t1, s1, t2, s2 in doc["gluings"]:
        t.add_glue((t1, s1), (t2, s2))
    return t


def validate(t: Tiling, q: Quad | None = None) -> list[str]:
    """Structural invariant checks; empty list means valid."""
    q = q or t.quad
    out = []
    if t.f != q.f:
        out.append(f"tile count {t.f} != f {q.f}")
    all_sides = {(i, s) for i in range(t.f) for s in range(4)}
    if set(t.glue) != all_sides:
        out.append("not all sides glued")
        return out
    for x, y in t.glue.items():
        if t.glue[y] != x or x == y:
            out.append(f"gluing not an involution at {x}")
        if side_is_b(t.chirality[x[0]], x[1]) != side_is_b(t.chirality[y[0]], y[1]):
            out.append(f"edge type mismatch at {x} {y}")
    if out:
        return out

    # connectivity over the gluing graph
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for s in range(4):
            j = t.glue[(i, s)][0]
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != t.f:
        out.append("not connected")

    orbits = t.vertices()
    angles = q.angles
    for orbit in orbits:
        if len(orbit) < 3:
            out.append(f"vertex of degree {len(orbit)}")
        total = Fraction(0)
        ab_count = 0
        for tile, c in orbit:
            lbl = t.corner_label(tile, c)
            total += angles[lbl]
            if lbl in (ALPHA, DELTA):
                ab_count += 1
        if total != 2:
            out.append(f"vertex sum {total} != 2 at {orbit[0]}")
        if ab_count % 2:
            out.append(f"odd alpha/delta count at {orbit[0]}")
    if len(orbits) != t.f + 2:
        out.append(f"euler: v {len(orbits)} != f+2 {t.f + 2}")
    if not out and not is_balance_solution(q, t.census()):
        out.append("census is not a balance solution")
    return out


def canonical_key(t: Tiling) -> bytes:
    """Isomorphism-invariant key, allowing global reflection.

    Side indices are pinned by the corner labels, so a map isomorphism is
    determined by the image of one tile; the key is the minimum breadth-first
    encoding over all start tiles and both global orientations.
    """
    best = None
    for encoded in _encodings(t):
        if best is None or encoded < best:
            best = encoded
    return repr(best).encode()


def _encodings(t: Tiling):
    views = [(t.glue, t.chirality)]
    m = t.mirrored()
    views.append((m.glue, m.chirality))
    for glue, chir in views:
        for start in range(t.f):
            index = {start: 0}
            order = [start]
            rows = []
            for tile in order:
                row = [chir[tile]]
                for s in range(4):
                    u, r = glue[(tile, s)]
                    if u not in index:
                        index[u] = len(order)
                        order.append(u)
                    row.append((index[u], r))
                rows.append(tuple(row))
            yield tuple(rows)


# ---------------------------------------------------------------------------
# constructive builders


def build_earth_map(q: Quad) -> Tiling:
    """The two-layer belt tiling: f/2 timezones between two gamma poles.

    Tile 2i is the upper tile of timezone i (gamma at the north pole), tile
    2i+1 the lower one.  All tiles have chirality +1.
    """
    f = q.f
    if f % 2 or not is_earth_map_oriented(q.angles, f):
        raise TilingError(f"{quad_id(q)} is not in earth-map orientation")
    m = f // 2
    t = Tiling(q, [1] * f)
    for i in range(m):
        u, low = 2 * i, 2 * i + 1
        u_next = 2 * ((i + 1) % m)
        low_next = 2 * ((i + 1) % m) + 1
        low_prev = 2 * ((i - 1) % m) + 1
        t.add_glue((u, 0), (low, 0))
        t.add_glue((u, 1), (u_next, 2))
        t.add_glue((low, 2), (low_next, 1))
        t.add_glue((u, 3), (low_prev, 3))
    return t


def _mirror_side(side: Side) -> Side:
    return (side[0], 3 - side[1])


# boundary-edge permutations induced by the two reflection axes of the
# hexagonal patch; positions follow the cyclic boundary list built below
_SIGMA = {1: (0, 5, 4, 3, 2, 1), 2: (4, 3, 2, 1, 0, 5)}


def flip_timezone_block(t: Tiling, start: int, m: int, kind: int) -> Tiling:
    """Reflect the hexagonal patch of m consecutive timezones in place."""
    if kind not in (1, 2):
        raise TilingError(f"unknown flip kind {kind}")
    mtot = t.f // 2
    if not 1 <= m <= mtot - 1:
        raise TilingError(f"block of {m} timezones does not fit in {mtot}")
    zones = [(start + i) % mtot for i in range(m)]
    tiles = [2 * z + o for z in zones for o in (0, 1)]
    u_first, u_last = 2 * zones[0], 2 * zones[-1]
    l_first, l_last = u_first + 1, u_last + 1
    flipped = t.chirality[u_first] == -1
    if any(t.chirality[i] != (-1 if flipped else 1) for i in tiles):
        raise TilingError("block is not chirality-uniform")

    def ms(side: Side) -> Side:
        return _mirror_side(side) if flipped else side

    boundary = [
        ms((u_first, 2)),
        ms((u_first, 3)),
        ms((l_first, 1)),
        ms((l_last, 2)),
        ms((l_last, 3)),
        ms((u_last, 1)),
    ]
    new = t.copy()
    tile_set = set(tiles)
    outer = [t.glue[p] for p in boundary]
    if any(o[0] in tile_set for o in outer):
        raise TilingError("patch boundary folds back into the patch")

    # drop every gluing touching the patch, then rebuild
    for i in tiles:
        for s in range(4):
            partner = new.glue.pop((i, s), None)
            if partner is not None:
                new.glue.pop(partner, None)
    for i in tiles:
        new.chirality[i] = -new.chirality[i]
    # mirrored internal gluings
    for (x, y) in t.glue.items():
        if x < y and x[0] in tile_set and y[0] in tile_set:
            new.add_glue(_mirror_side(x), _mirror_side(y))
    # reflected boundary attachment
    sigma = _SIGMA[kind]
    for j in range(6):
        new.add_glue(outer[j], _mirror_side(boundary[sigma[j]]))
    return new


def _flip_m(q: Quad, kind: int) -> int:
    a, b, g, d = q.angles
    value = b if kind == 1 else a + d
    m = value / g
    if m.denominator != 1:
        raise TilingError(f"flip {kind} needs an integer gamma-multiple, got {m}")
    if kind == 1 and b >= 1:
        raise TilingError("first flip needs beta < 1")
    m = int(m)
    if not 1 <= m <= q.f // 4:
        raise TilingError(f"flip block of {m} timezones exceeds f/4 = {q.f // 4}")
    return m


def flip_first(t: Tiling, q: Quad, start_timezone: int) -> Tiling:
    """Reflect an m-timezone hexagon where beta = m*gamma."""
    return flip_timezone_block(t, start_timezone, _flip_m(q, 1), 1)


def flip_second(t: Tiling, q: Quad, start_timezone: int) -> Tiling:
    """Reflect an m-timezone hexagon where alpha + delta = m*gamma."""
    return flip_timezone_block(t, start_timezone, _flip_m(q, 2), 2)


def apply_flip_schedule(q: Quad, schedule: list[tuple[int, int]]) -> Tiling:
    """Earth map with the given (kind, start_timezone) flips applied.

    Flips must touch pairwise disjoint timezone blocks.
    """
    t = build_earth_map(q)
    mtot = q.f // 2
    used: set[int] = set()
    for kind, start in schedule:
        m = _flip_m(q, kind)
        zones = {(start + i) % mtot for i in range(m)}
        if zones & used:
            raise TilingError("overlapping flips")
        used |= zones
    for kind, start in sorted(schedule, key=lambda ks: (ks[1], ks[0])):
        t = flip_timezone_block(t, start, _flip_m(q, kind), kind)
    return t


def write_tiling(t: Tiling, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(t.to_json(), fh, indent=1)
        fh.write("\n")


def read_tiling(path) -> Tiling:
    with open(path, encoding="utf-8") as fh:
        return tiling_from_json(json.load(fh))
