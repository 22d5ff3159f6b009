"""Adjacent-corner viability filtering of vertex types.

Two corners that are consecutive around a tiling vertex share an edge, and
that edge's far endpoint forces another adjacent corner pair at a neighbouring
vertex.  Each corner has exactly two flanks (the tile edges on its two sides),
and b-flanks can only meet b-flanks.  Iterating "every adjacent pair used by a
vertex arrangement must be realizable by some other admissible vertex" to a
fixed point removes vertex types that cannot occur in any tiling.

This is a sound over-approximation: a type is only removed when no cyclic
arrangement of its corners survives, so every type realized by an actual
tiling is kept.  Types of large degree are kept unconditionally (their pairs
are treated as available), which preserves soundness.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .quad import Quad
from .vertices import VertexType, enumerate_vertex_types

A_EDGE, B_EDGE = "a", "b"

# flank 0 faces the previous corner in the (alpha, beta, gamma, delta) cycle,
# flank 1 the next one; entries are (edge type, far corner, far corner's flank)
FLANKS = (
    ((B_EDGE, 3, 1), (A_EDGE, 1, 0)),  # alpha
    ((A_EDGE, 0, 1), (A_EDGE, 2, 0)),  # beta
    ((A_EDGE, 1, 1), (A_EDGE, 3, 0)),  # gamma
    ((A_EDGE, 2, 1), (B_EDGE, 0, 0)),  # delta
)

Port = tuple[int, int]  # (corner label, flank index)
Pair = tuple[Port, Port]

MAX_ARRANGEMENT_DEGREE = 8


def _norm(p1: Port, p2: Port) -> Pair:
    return (p1, p2) if p1 <= p2 else (p2, p1)


def _legal(p1: Port, p2: Port) -> bool:
    return FLANKS[p1[0]][p1[1]][0] == FLANKS[p2[0]][p2[1]][0]


def far_pair(pair: Pair) -> Pair:
    (x, fx), (y, fy) = pair
    _, xl, xf = FLANKS[x][fx]
    _, yl, yf = FLANKS[y][fy]
    return _norm((xl, xf), (yl, yf))


ALL_PAIRS = frozenset(
    _norm((x, fx), (y, fy))
    for x in range(4)
    for fx in (0, 1)
    for y in range(4)
    for fy in (0, 1)
    if _legal((x, fx), (y, fy))
)


@lru_cache(maxsize=4096)
def _arrangement_pairs(corners: tuple[int, ...], allowed: frozenset[Pair]) -> frozenset[Pair]:
    """Union of adjacent pairs over all valid cyclic arrangements.

    ``corners`` is the sorted corner multiset of a vertex type.  A valid
    arrangement assigns a cyclic order and a flank orientation to every corner
    such that each adjacent pair and each induced far pair lies in ``allowed``.
    """
    n = len(corners)
    found: set[Pair] = set()

    def ok(pair: Pair) -> bool:
        return pair in allowed and far_pair(pair) in allowed

    # first corner fixed (cyclic symmetry); orientation of the rest explored
    first = corners[0]
    rest = corners[1:]
    seen_orders = set()
    for order in permutations(rest):
        if order in seen_orders:
            continue
        seen_orders.add(order)
        seq = (first,) + order

        def place(idx: int, first_left: int, prev_right: Port, pairs: list[Pair]) -> bool:
            if idx == n:
                closing = _norm(prev_right, (seq[0], first_left))
                if ok(closing):
                    found.update(pairs)
                    found.add(closing)
                    return True
                return False
            hit = False
            for left in (0, 1):
                pair = _norm(prev_right, (seq[idx], left))
                if ok(pair):
                    if place(idx + 1, first_left, (seq[idx], 1 - left), pairs + [pair]):
                        hit = True
            return hit

        for first_left in (0, 1):
            place(1, first_left, (first, 1 - first_left), [])

    return frozenset(found)


def _type_corners(t: VertexType) -> tuple[int, ...]:
    out = []
    for lbl, e in enumerate(t):
        out.extend([lbl] * e)
    return tuple(out)


def _big_type_pairs(t: VertexType) -> frozenset[Pair]:
    counts = tuple(t)
    pairs = set()
    for pair in ALL_PAIRS:
        (x, _), (y, _) = pair
        if x == y:
            if counts[x] >= 2:
                pairs.add(pair)
        elif counts[x] >= 1 and counts[y] >= 1:
            pairs.add(pair)
    return frozenset(pairs)


def aad_filter_types(
    q: Quad, types: list[VertexType] | None = None, max_degree: int = MAX_ARRANGEMENT_DEGREE
) -> list[VertexType]:
    """Vertex types surviving adjacent-corner viability to a fixed point."""
    if types is None:
        types = enumerate_vertex_types(q)
    viable = list(types)
    allowed = frozenset(ALL_PAIRS)
    while True:
        new_allowed: set[Pair] = set()
        survivors = []
        for t in viable:
            if t.degree > max_degree:
                survivors.append(t)
                new_allowed |= _big_type_pairs(t) & allowed
                continue
            pairs = _arrangement_pairs(_type_corners(t), allowed)
            if pairs:
                survivors.append(t)
                new_allowed |= pairs
        if survivors == viable and frozenset(new_allowed) == allowed:
            return survivors
        viable = survivors
        allowed = frozenset(new_allowed)
