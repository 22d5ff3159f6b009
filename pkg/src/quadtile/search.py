"""Exhaustive backtracking enumeration of all tilings of a quadrilateral.

The search grows a connected patch one gluing at a time.  The branch point is
always the most-filled open vertex; its boundary slot is glued either to some
other open side or to a fresh tile.  Pruning uses exact vertex angle sums, the
admissible vertex-type list (adjacent-corner filtered), parity, and global
balance feasibility of the closed-vertex census.  Completed tilings are
deduplicated by canonical key, so the result is independent of exploration
order.
"""

from __future__ import annotations

from math import lcm

from .aad import aad_filter_types
from .quad import Quad
from .tiling import CCW, Tiling, canonical_key, side_is_b, validate
from .vertices import VertexType, enumerate_vertex_types, solve_balance

DEFAULT_SEARCH_CAP = 24


class SearchCapExceeded(RuntimeError):
    def __init__(self, f: int, cap: int):
        super().__init__(
            f"exhaustive search at f={f} exceeds the configured cap {cap}; "
            f"raise the cap explicitly to run it"
        )
        self.f = f
        self.cap = cap


class _Searcher:
    def __init__(self, q: Quad, census=None, use_aad: bool = True):
        self.q = q
        self.f = q.f
        den = lcm(*(a.denominator for a in q.angles))
        self.weight = [int(a * den) for a in q.angles]
        self.target = 2 * den

        types = enumerate_vertex_types(q)
        if use_aad:
            types = aad_filter_types(q, types)
        if census is not None:
            missing = set(census) - set(types)
            if missing:
                self.solutions = []
            else:
                self.solutions = [dict(census)]
        else:
            self.solutions = solve_balance(q, types)
        self.avc = [tuple(t) for t in types]
        self.avc_set = set(self.avc)
        if census is not None:
            self.avc = [tuple(t) for t in census]
            self.avc_set = set(self.avc)

        n = 4 * self.f
        self.parent = list(range(n))
        self.size = [1] * n
        self.vsum = [0] * n
        self.vcnt = [None] * n
        self.vopen = [0] * n
        self.chir = []
        self.glue: dict[tuple[int, int], tuple[int, int]] = {}
        self.open: set[tuple[int, int]] = set()
        self.closed_census: dict[tuple, int] = {}
        self.results: dict[bytes, Tiling] = {}
        self.limit = None

    # -- corners -------------------------------------------------------
    def corner_id(self, t: int, c: int) -> int:
        return 4 * t + c

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def new_tile(self, chirality: int) -> int:
        t = len(self.chir)
        self.chir.append(chirality)
        order = CCW[chirality]
        for c in range(4):
            cid = self.corner_id(t, c)
            self.parent[cid] = cid
            self.size[cid] = 1
            lbl = order[c]
            self.vsum[cid] = self.weight[lbl]
            cnt = [0, 0, 0, 0]
            cnt[lbl] = 1
            self.vcnt[cid] = cnt
            self.vopen[cid] = 2
            self.open.add((t, c))
        return t

    def pop_tile(self) -> None:
        t = len(self.chir) - 1
        self.chir.pop()
        for c in range(4):
            self.open.discard((t, c))

    # -- feasibility ---------------------------------------------------
    def vertex_ok(self, root: int) -> bool:
        s = self.vsum[root]
        if s > self.target:
            return False
        cnt = self.vcnt[root]
        if self.vopen[root] == 0:
            return tuple(cnt) in self.avc_set
        for t in self.avc:
            if cnt[0] <= t[0] and cnt[1] <= t[1] and cnt[2] <= t[2] and cnt[3] <= t[3]:
                return True
        return False

    def balance_ok(self) -> bool:
        for sol in self.solutions:
            if all(n <= sol.get(VertexType(*t), 0) for t, n in self.closed_census.items()):
                return True
        return False

    # -- gluing with undo ----------------------------------------------
    def glue_sides(self, x, y, trail) -> bool:
        """Glue two open sides, cascading forced closures.  False on failure."""
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if self.glue.get(x) == y:
                continue  # forced closure already performed from the other end
            if x == y or x not in self.open or y not in self.open:
                return False
            if side_is_b(self.chir[x[0]], x[1]) != side_is_b(self.chir[y[0]], y[1]):
                return False
            self.open.discard(x)
            self.open.discard(y)
            self.glue[x] = y
            self.glue[y] = x
            trail.append(("glue", x, y))
            c1 = self.corner_id(x[0], x[1])
            c2 = self.corner_id(y[0], (y[1] + 1) % 4)
            c3 = self.corner_id(x[0], (x[1] + 1) % 4)
            c4 = self.corner_id(y[0], y[1])
            roots = []
            for a, b in ((c1, c2), (c3, c4)):
                roots.append(self.union(a, b, trail))
            for r in roots:
                r = self.find(r)
                if not self.vertex_ok(r):
                    return False
                if self.vopen[r] == 0:
                    key = tuple(self.vcnt[r])
                    self.closed_census[key] = self.closed_census.get(key, 0) + 1
                    trail.append(("census", key))
                    if not self.balance_ok():
                        return False
                elif self.vsum[r] == self.target and self.vopen[r] == 2:
                    slots = self.open_slots(r)
                    if len(slots) != 2:
                        return False
                    stack.append((slots[0], slots[1]))
        return True

    def union(self, a: int, b: int, trail) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.vopen[ra] -= 2
            trail.append(("self", ra))
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        trail.append(("union", ra, rb, self.vsum[ra], list(self.vcnt[ra]), self.vopen[ra]))
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.vsum[ra] += self.vsum[rb]
        for m in range(4):
            self.vcnt[ra][m] += self.vcnt[rb][m]
        self.vopen[ra] += self.vopen[rb] - 2
        return ra

    def undo(self, trail) -> None:
        while trail:
            op = trail.pop()
            if op[0] == "glue":
                _, x, y = op
                del self.glue[x]
                del self.glue[y]
                self.open.add(x)
                self.open.add(y)
            elif op[0] == "union":
                _, ra, rb, s, cnt, opn = op
                self.parent[rb] = rb
                self.size[ra] -= self.size[rb]
                self.vsum[ra] = s
                self.vcnt[ra] = cnt
                self.vopen[ra] = opn
            elif op[0] == "self":
                self.vopen[op[1]] += 2
            else:  # census
                key = op[1]
                self.closed_census[key] -= 1
                if not self.closed_census[key]:
                    del self.closed_census[key]

    def open_slots(self, root: int) -> list[tuple[int, int]]:
        slots = []
        for (t, s) in self.open:
            if self.find(self.corner_id(t, s)) == root:
                slots.append((t, s))
            if self.find(self.corner_id(t, (s + 1) % 4)) == root:
                slots.append((t, s))
        slots.sort()
        return slots

    # -- main loop -------------------------------------------------------
    def run(self, limit=None) -> dict[bytes, Tiling]:
        self.limit = limit
        if not self.solutions:
            return {}
        self.new_tile(1)
        self.dfs()
        return self.results

    def harvest(self) -> None:
        t = Tiling(self.q, list(self.chir), dict(self.glue))
        assert validate(t, self.q) == [], "search produced an invalid tiling"
        self.results[canonical_key(t)] = t

    def dfs(self) -> bool:
        """Returns True when the harvest limit has been reached."""
        if not self.open:
            self.harvest()
            return self.limit is not None and len(self.results) >= self.limit
        edge = self.pick_side()
        # partner 1: an existing open side
        for other in sorted(self.open):
            if other == edge:
                continue
            trail = []
            if self.glue_sides(edge, other, trail):
                if self.dfs():
                    self.undo(trail)
                    return True
            self.undo(trail)
        # partner 2: a fresh tile
        if len(self.chir) < self.f:
            for chirality in (1, -1):
                for s2 in range(4):
                    if side_is_b(self.chir[edge[0]], edge[1]) != side_is_b(chirality, s2):
                        continue
                    trail = []
                    t = self.new_tile(chirality)
                    if self.glue_sides(edge, (t, s2), trail):
                        if self.dfs():
                            self.undo(trail)
                            self.pop_tile()
                            return True
                    self.undo(trail)
                    self.pop_tile()
        return False

    def pick_side(self) -> tuple[int, int]:
        best = None
        best_key = None
        for (t, s) in self.open:
            for c in (s, (s + 1) % 4):
                r = self.find(self.corner_id(t, c))
                key = (-self.vsum[r], -self.size[r], t, s)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (t, s)
        return best


def search_all_tilings(
    q: Quad,
    limit: int | None = None,
    census: dict[VertexType, int] | None = None,
    cap: int = DEFAULT_SEARCH_CAP,
    use_aad: bool = True,
) -> dict[bytes, Tiling]:
    """All tilings of the sphere by f copies of q, up to isomorphism.

    Isomorphism allows global reflection.  ``census`` restricts the search to
    tilings with exactly the given vertex census; ``limit`` stops after that
    many distinct tilings have been found.
    """
    if q.f > cap:
        raise SearchCapExceeded(q.f, cap)
    return _Searcher(q, census=census, use_aad=use_aad).run(limit)


def count_tilings(q: Quad, cap: int = DEFAULT_SEARCH_CAP) -> int:
    return len(search_all_tilings(q, cap=cap))


def count_tilings_for_f(f: int, cap: int = DEFAULT_SEARCH_CAP) -> tuple[int, int]:
    """(number of classified quadrilaterals, total tilings) at tile count f."""
    from .classifier import classify_all

    quads = [q for q in classify_all(f) if q.f == f]
    return len(quads), sum(count_tilings(q, cap=cap) for q in quads)
