"""Command-line front door.

Subcommands: classify (table of quadrilaterals), tile (construct a tiling
from a flip schedule), search (exhaustive enumeration for one quadrilateral),
verify (structural validation of a tiling file), realize (spherical
coordinates), report (tiling counts per f, diffed against the reference
table).  Outputs are TSV with a header row plus an optional machine-readable
JSON summary; angles and edge lengths are in units of pi.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import data
from .classifier import classify_all
from .geometry import export_coordinates, realize, verify_appendix
from .quad import Quad, make_quad, parse_quad_id, quad_id
from .search import DEFAULT_SEARCH_CAP, search_all_tilings
from .tiling import apply_flip_schedule, read_tiling, validate, write_tiling
from .vertices import census_to_str

OUT_ENV = "QUADTILE_OUT"


def _out_dir(args) -> Path:
    out = args.out or os.environ.get(OUT_ENV) or "."
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _resolve_quad(text: str, f_hint: int | None = None) -> Quad:
    if text.startswith("family"):
        name, _, ftext = text.partition("@")
        n = int(name.removeprefix("family"))
        f = int(ftext) if ftext else f_hint
        if f is None:
            raise SystemExit(f"family id {text!r} needs @f")
        return data.family_quad(n, f)
    angles, f = parse_quad_id(text)
    return make_quad(angles, f)


def _emit_table(rows: list[dict], header: list[str], args, name: str):
    out = _out_dir(args)
    fmt = getattr(args, "format", "tsv")
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(str(row.get(h, "")) for h in header))
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if fmt == "json":
        (out / f"{name}.json").write_text(json.dumps(rows, indent=1) + "\n")
    else:
        (out / f"{name}.tsv").write_text(text)


def cmd_classify(args) -> int:
    if args.f_max < 6 or args.f_max % 2:
        print("error: --f-max must be an even integer >= 6", file=sys.stderr)
        return 2
    result = classify_all(args.f_max, audit=args.audit)
    quads, records = result if args.audit else (result, None)
    rows = []
    for q in quads:
        a, b = (float(x) for x in _edges(q))
        rows.append(
            {
                "id": quad_id(q),
                "f": q.f,
                "class": q.convexity_class,
                "a": f"{a:.6f}",
                "b": f"{b:.6f}",
                "provenance": q.provenance,
            }
        )
    _emit_table(rows, ["id", "f", "class", "a", "b", "provenance"], args, "quads")
    if args.audit:
        audit_rows = [
            {
                "source": r.source,
                "detail": r.detail,
                "angles": "(" + ",".join(str(x) for x in r.angles) + ")" if r.angles else "",
                "f": r.f if r.f else "",
                "decision": "keep" if r.survived else "dismiss",
                "reason": r.dismissal or "",
            }
            for r in records
        ]
        _emit_table(
            audit_rows,
            ["source", "detail", "angles", "f", "decision", "reason"],
            args,
            "audit",
        )
    summary = {"f_max": args.f_max, "count": len(rows), "quads": [r["id"] for r in rows]}
    (_out_dir(args) / "classify_summary.json").write_text(json.dumps(summary, indent=1) + "\n")
    return 0


def _edges(q: Quad):
    from .quad import compute_edges

    return compute_edges(q)


def _parse_schedule(text: str) -> list[tuple[int, int]]:
    # "1:0,2:3" -> [(kind 1, start 0), (kind 2, start 3)]
    out = []
    if not text:
        return out
    for part in text.split(","):
        kind, _, start = part.partition(":")
        out.append((int(kind), int(start)))
    return out


def cmd_tile(args) -> int:
    q = _resolve_quad(args.quad)
    if args.special is not None:
        from .fixtures import build_threefold_special

        t = build_threefold_special(q, args.special)
    elif args.exceptional:
        from .fixtures import build_exceptional

        q, t = build_exceptional(args.exceptional)
    else:
        t = apply_flip_schedule(q, _parse_schedule(args.schedule))
    problems = validate(t, q)
    if problems:
        print("invalid construction: " + "; ".join(problems), file=sys.stderr)
        return 1
    out = _out_dir(args) / (args.name or "tiling.json")
    write_tiling(t, out)
    print(f"wrote {out}  census: {census_to_str(t.census())}")
    return 0


def cmd_search(args) -> int:
    q = _resolve_quad(args.quad)
    found = search_all_tilings(q, limit=args.limit, cap=args.search_cap)
    out = _out_dir(args)
    rows = []
    for i, key in enumerate(sorted(found)):
        t = found[key]
        path = out / f"tiling_{q.f}_{i}.json"
        write_tiling(t, path)
        rows.append(
            {
                "quad": quad_id(q),
                "f": q.f,
                "index": i,
                "census": census_to_str(t.census()),
                "file": path.name,
            }
        )
    _emit_table(rows, ["quad", "f", "index", "census", "file"], args, "search_summary")
    print(f"{len(found)} tilings")
    return 0


def cmd_verify(args) -> int:
    try:
        t = read_tiling(args.tiling)
    except (KeyError, ValueError) as exc:
        print(f"FAIL: unreadable tiling file: {exc}", file=sys.stderr)
        return 1
    problems = validate(t)
    if problems:
        for p in problems:
            print(f"FAIL: {p}")
        return 1
    print(f"PASS: f={t.f} census {census_to_str(t.census())}")
    return 0


def cmd_realize(args) -> int:
    t = read_tiling(args.tiling)
    try:
        p = realize(t, tol=args.tolerance, dps=args.precision)
    except Exception as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    out = _out_dir(args) / (args.name or "coords.json")
    export_coordinates(p, out)
    print(f"PASS: worst closure offset {p.worst_offset:.3e}; wrote {out}")
    return 0


def cmd_report(args) -> int:
    quads = classify_all(args.f_max)
    by_f: dict[int, list[Quad]] = {}
    for q in quads:
        by_f.setdefault(q.f, []).append(q)
    rows = []
    all_ok = True
    for f in sorted(by_f):
        if f > args.search_cap:
            continue
        count = 0
        for q in by_f[f]:
            count += len(search_all_tilings(q, cap=args.search_cap))
        exp_q, exp_t = data.expected_qt(f)
        ok = (len(by_f[f]), count) == (exp_q, exp_t)
        all_ok &= ok
        rows.append(
            {
                "f": f,
                "quads": len(by_f[f]),
                "tilings": count,
                "expected_quads": exp_q,
                "expected_tilings": exp_t,
                "match": "yes" if ok else "NO",
            }
        )
    _emit_table(
        rows,
        ["f", "quads", "tilings", "expected_quads", "expected_tilings", "match"],
        args,
        "report",
    )
    summary = {"rows": rows, "ok": all_ok}
    (_out_dir(args) / "report_summary.json").write_text(json.dumps(summary, indent=1) + "\n")
    print("OK" if all_ok else "MISMATCH")
    return 0 if all_ok else 1


def cmd_appendix(args) -> int:
    report = verify_appendix(dps=args.precision or 50)
    rows = [
        {k: r.get(k, "") for k in ("id", "a", "b", "closed_dev", "printed_dev", "limit_dev", "ok")}
        for r in report["rows"]
    ]
    _emit_table(rows, ["id", "a", "b", "closed_dev", "printed_dev", "limit_dev", "ok"], args, "appendix")
    print("OK" if report["ok"] else "MISMATCH")
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadtile",
        description="classify, construct and verify sphere tilings by "
        "congruent a3b-quadrilaterals with rational angles",
    )
    ap.add_argument("--out", help=f"output directory (default ${OUT_ENV} or .)")
    ap.add_argument("--format", choices=["tsv", "json"], default="tsv")
    ap.add_argument("--precision", type=int, default=None, help="working digits")
    ap.add_argument("--tolerance", type=float, default=1e-6, help="closure tolerance")
    ap.add_argument("--den-max", type=int, default=360, help="denominator bound")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="enumerate all tileable quadrilaterals")
    c.add_argument("--f-max", type=int, default=64)
    c.add_argument("--audit", action="store_true", help="emit dismissal tables")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("tile", help="build an earth map with a flip schedule")
    t.add_argument("quad", help='"(3,20,4,13)/18@18" or "family2@16"')
    t.add_argument("--schedule", default="", help='flips as "kind:start,..."')
    t.add_argument("--special", type=int, default=None, help="three-fold rotation 0|1|2")
    t.add_argument("--exceptional", choices=["f16_a", "f16_b", "f36_a", "f36_b"])
    t.add_argument("--name", default=None)
    t.set_defaults(func=cmd_tile)

    s = sub.add_parser("search", help="exhaustively enumerate tilings")
    s.add_argument("quad")
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP)
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", help="validate a tiling JSON file")
    v.add_argument("tiling")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("realize", help="place a tiling on the unit sphere")
    r.add_argument("tiling")
    r.add_argument("--name", default=None)
    r.set_defaults(func=cmd_realize)

    p = sub.add_parser("report", help="tiling counts per f vs reference table")
    p.add_argument("--f-max", type=int, default=20)
    p.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.set_defaults(func=cmd_report)

    a = sub.add_parser("appendix", help="golden test of edge-length data")
    a.set_defaults(func=cmd_appendix)
    return ap


def _validate_config(args) -> str | None:
    if args.den_max <= 0:
        return "--den-max must be positive"
    if args.tolerance <= 0:
        return "--tolerance must be positive"
    if args.precision is not None and args.precision < 15:
        return "--precision must be at least 15 digits"
    # the exact sine decision is guarded numerically; larger denominators
    # need more working digits to keep the separation argument valid
    digits = args.precision or 50
    if args.den_max > 360 and digits < args.den_max // 7:
        return "--den-max above 360 requires raising --precision accordingly"
    return None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    problem = _validate_config(args)
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
