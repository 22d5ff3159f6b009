from __future__ import annotations

from fractions import Fraction
from math import lcm

import pytest

from quadtile import data
from quadtile.classifier import Classifier, brute_force_sweep, classify_all
from quadtile.quad import canonicalize_angles, quad_id

F = Fraction


def test_classify_36_matches_reference():
    quads = classify_all(36)
    got = {(q.angles, q.f) for q in quads}
    assert got == data.expected_quads(36)


def test_classify_rejects_bad_bounds():
    with pytest.raises(ValueError):
        classify_all(5)
    with pytest.raises(ValueError):
        classify_all(7)


def test_convex_sporadic_decisions():
    _, records = classify_all(64, audit=True)
    rows = {r.detail: r for r in records if r.source == "convex/sporadic"}
    assert rows["(23,10,28,9)/30"].survived
    assert rows["(37,16,30,17)/42"].dismissal == "no_even_f"
    assert rows["(21,8,26,7)/30"].dismissal == "balance_infeasible"
    assert rows["(17,16,26,11)/30"].dismissal == "balance_infeasible"
    assert rows["(29,16,18,23)/42"].dismissal == "no_degree3_vertex"
    assert rows["(25,16,22,17)/30"].dismissal == "angle_not_extendable:a"
    # exactly one sporadic convex row admits a tiling
    assert sum(1 for r in rows.values() if r.survived) == 1


def _case_rows(records, source):
    out = {}
    for r in records:
        if r.source == source and r.f is not None:
            canon, _ = canonicalize_angles(r.angles, r.f)
            out.setdefault((canon, r.f), set()).add(r.dismissal)
    return out


def test_concave_alpha_table_rows():
    # every reference range-surviving row is re-derived; exactly three
    # admit tilings and the other 26 lack a three-corner vertex through
    # alpha and delta
    _, records = classify_all(20, audit=True)
    rows = _case_rows(records, "concave_alpha/case4")
    for nums, den, f in data.CONCAVE_ALPHA_ROWS:
        angles = tuple(F(n, den) for n in nums)
        canon, _ = canonicalize_angles(angles, f)
        assert (canon, f) in rows, f"row {nums}/{den} not re-derived"
        survivor = (nums, den) in data.CONCAVE_ALPHA_SURVIVORS
        assert (None in rows[(canon, f)]) == survivor
        if not survivor:
            a, b, g, d = angles
            assert a + b + d != 2 and a + g + d != 2
    survivors = {quad_id(r.quad) for r in records if r.source == "concave_alpha/case4" and r.survived}
    assert survivors == {"(4,9,5,17)/15@12", "(3,16,10,41)/30@12", "(1,16,6,43)/30@20"}


def test_concave_beta_table_rows():
    _, records = classify_all(30, audit=True)
    rows = _case_rows(records, "concave_beta/case4")
    for nums, den, f in data.CONCAVE_BETA_ROWS:
        angles = tuple(F(n, den) for n in nums)
        canon, _ = canonicalize_angles(angles, f)
        assert (canon, f) in rows, f"row {nums}/{den} not re-derived"
        survivor = (nums, den) in data.CONCAVE_BETA_SURVIVORS
        assert (None in rows[(canon, f)]) == survivor
    survivors = {quad_id(r.quad) for r in records if r.source == "concave_beta/case4" and r.survived}
    assert survivors == {
        "(5,32,6,23)/30@20",
        "(1,42,4,17)/30@30",
        "(1,21,5,8)/15@12",
    }
    # the one near-miss fails balance, the rest lack degree-3 vertices
    from quadtile.quad import make_quad
    from quadtile.vertices import enumerate_vertex_types, solve_balance

    near = make_quad(tuple(F(n, 30) for n in (5, 32, 14, 13)))
    assert solve_balance(near, enumerate_vertex_types(near)) == []
    for nums, den, f in data.CONCAVE_BETA_ROWS:
        if (nums, den) in data.CONCAVE_BETA_SURVIVORS or nums == (5, 32, 14, 13):
            continue
        quad = make_quad(tuple(F(n, den) for n in nums))
        assert not any(t.degree == 3 for t in enumerate_vertex_types(quad))


def test_negative_convex_classes():
    _, records = classify_all(24, audit=True)
    for src in ("convex/class3", "convex/class5"):
        rows = [r for r in records if r.source == src]
        assert rows and all(not r.survived for r in rows)
        assert any(
            r.dismissal in ("balance_infeasible", "angle_not_extendable:a") for r in rows
        )
    # the f = 24 member of the last convex class dies only by search
    row24 = [r for r in records if r.source == "convex/class7" and r.detail == "f=24"]
    assert row24 and row24[0].dismissal == "no_tiling_by_search"


def test_case2_survivor_line():
    _, records = classify_all(8, audit=True)
    keep = [r for r in records if r.source == "concave_beta/case2" and r.survived]
    assert keep and all(quad_id(r.quad) == "(1,8,4,3)/6@6" for r in keep)


def test_degenerate_rows():
    _, records = classify_all(16, audit=True)
    keep = {quad_id(r.quad) for r in records if r.source == "degenerate_alpha" and r.survived}
    assert "(6,3,4,3)/6@6" in keep
    keep_b = {quad_id(r.quad) for r in records if r.source == "degenerate_beta" and r.survived}
    assert keep_b == {"(1,4,2,2)/4@16"}
    gd_neq = [r for r in records if r.source == "degenerate_beta" and "gd_neq" in r.detail]
    assert gd_neq and all(r.dismissal == "sine_constraint" for r in gd_neq)
    note = [r for r in records if r.dismissal == "irrational_angles"]
    assert len(note) == 1


def test_no_survivor_needs_second_identity_only():
    quads, records = classify_all(36, audit=True)
    for r in records:
        if r.survived:
            assert "sine_second_only" not in r.note


def test_brute_force_sweep_completeness_small():
    # denominator-bounded oracle: every sine-satisfying rational vector that
    # passes the pipeline is already classified
    for f in (6, 8, 12):
        den = lcm(60, 3 * f)
        cl = Classifier(f_max=f)
        found = set()
        for angles in brute_force_sweep(f, den=den):
            cand = cl.evaluate(angles, "sweep", str(angles))
            if cand.survived:
                found.add((cand.quad.angles, cand.quad.f))
        want = {
            (a, ff)
            for (a, ff) in data.expected_quads(f)
            if ff == f and all(den % x.denominator == 0 for x in a)
        }
        assert found == want, f"sweep mismatch at f={f}"
