"""Vertex types of a quadrilateral and the global counting system.

A vertex type is an exponent vector (i, j, k, l): a tiling vertex where i
alpha-corners, j beta-corners, k gamma-corners and l delta-corners meet.  Its
angles must sum to exactly 2 (units of pi), the degree must be at least 3, and
i + l must be even because the alpha and delta corners are the ones flanking
the single b-edge.

The balance system asks for multiplicities of vertex types such that every
angle is used exactly f times and the total vertex count is f + 2 (Euler).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .quad import Quad


class VertexType(NamedTuple):
    i: int  # alpha count
    j: int  # beta count
    k: int  # gamma count
    l: int  # delta count

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k + self.l

    def angle_sum(self, angles) -> Fraction:
        return sum(e * a for e, a in zip(self, angles))

    def __str__(self) -> str:
        names = "abgd"
        parts = []
        for n, e in zip(names, self):
            if e == 1:
                parts.append(n)
            elif e > 1:
                parts.append(f"{n}{e}")
        return "".join(parts) or "-"


BalanceSolution = dict[VertexType, int]


def enumerate_vertex_types(q: Quad) -> list[VertexType]:
    """All exponent vectors with angle sum exactly 2, degree >= 3, even i+l."""
    return _enumerate_types(q.angles)


def _enumerate_types(angles) -> list[VertexType]:
    target = Fraction(2)
    out = []

    def rec(idx: int, exps: list[int], remaining: Fraction):
        if idx == 4:
            if remaining == 0:
                vt = VertexType(*exps)
                if vt.degree >= 3 and (vt.i + vt.l) % 2 == 0:
                    out.append(vt)
            return
        ang = angles[idx]
        top = int(remaining / ang)
        for e in range(top + 1):
            exps.append(e)
            rec(idx + 1, exps, remaining - e * ang)
            exps.pop()

    rec(0, [], target)
    out.sort()
    return out


def has_vertex_containing(angles, base: tuple[int, int, int, int]) -> bool:
    """Is there a vertex type with at least the given exponents?"""
    rest = Fraction(2) - sum(b * a for b, a in zip(base, angles))
    if rest < 0:
        return False

    def rec(idx: int, remaining: Fraction, parity: int, degree: int) -> bool:
        if idx == 4:
            return remaining == 0 and parity % 2 == 0 and degree >= 3
        ang = angles[idx]
        top = int(remaining / ang)
        for e in range(top + 1):
            p = parity + e if idx in (0, 3) else parity
            if rec(idx + 1, remaining - e * ang, p, degree + e):
                return True
        return False

    return rec(0, rest, base[0] + base[3], sum(base))


def _balance_lemma_ok(solution: BalanceSolution) -> bool:
    """Global restriction pairing up alpha and delta corners.

    If no used vertex has two or more alphas, or none has two or more deltas,
    then every used vertex must have either no alpha/delta at all or exactly
    one of each.
    """
    used = [t for t, n in solution.items() if n > 0]
    has_a2 = any(t.i >= 2 for t in used)
    has_d2 = any(t.l >= 2 for t in used)
    if has_a2 and has_d2:
        return True
    return all((t.i, t.l) in ((0, 0), (1, 1)) for t in used)


def solve_balance(
    q: Quad,
    types: Iterable[VertexType],
    require: Iterable[VertexType] = (),
    exact: dict[VertexType, int] | None = None,
) -> list[BalanceSolution]:
    """All multiplicity assignments solving the five counting equations.

    Types listed in ``require`` must appear with positive multiplicity;
    ``exact`` pins multiplicities of specific types.  Solutions violating the
    alpha/delta pairing restriction are discarded.
    """
    types = sorted(set(types), key=lambda t: (-t.degree, t))
    f = q.f
    require = set(require)
    exact = dict(exact or {})
    for t in require | set(exact):
        if t not in types:
            return []

    solutions: list[BalanceSolution] = []
    counts = [f, f, f, f]  # remaining corner budget per angle
    chosen: list[int] = []

    def rec(idx: int, vertices_left: int):
        if idx == len(types):
            if vertices_left == 0 and all(c == 0 for c in counts):
                sol = {t: n for t, n in zip(types, chosen) if n > 0}
                if require <= set(sol) and _balance_lemma_ok(sol):
                    solutions.append(sol)
            return
        t = types[idx]
        top = vertices_left
        for pos, e in zip(counts, t):
            if e:
                top = min(top, pos // e)
        lo = 0
        if t in exact:
            lo = exact[t]
            top = min(top, exact[t])
        for n in range(lo, top + 1):
            for m in range(4):
                counts[m] -= n * t[m]
            chosen.append(n)
            # each remaining corner still needs a type that can host it
            feasible = vertices_left - n >= 0
            if feasible:
                rest = types[idx + 1 :]
                for m in range(4):
                    if counts[m] and not any(r[m] for r in rest):
                        feasible = False
                        break
            if feasible:
                rec(idx + 1, vertices_left - n)
            chosen.pop()
            for m in range(4):
                counts[m] += n * t[m]

    rec(0, f + 2)
    solutions.sort(key=lambda s: sorted(s.items()))
    return solutions


def is_balance_solution(q: Quad, census: BalanceSolution) -> bool:
    """Direct membership test (no enumeration): counting equations + pairing."""
    f = q.f
    if sum(census.values()) != f + 2:
        return False
    for m in range(4):
        if sum(n * t[m] for t, n in census.items()) != f:
            return False
    if any(t.angle_sum(q.angles) != 2 for t in census):
        return False
    return _balance_lemma_ok(census)


def census_to_str(census: BalanceSolution) -> str:
    return " ".join(f"{n}{t}" for t, n in sorted(census.items(), key=lambda kv: kv[0]))
