"""Command line front end.

Exit codes: 0 success, 1 domain or input error, 2 usage error.  Errors go to
stderr as one JSON object per line.  ``RGBTILING_LOG`` sets the log level.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import os
import sys
from pathlib import Path

from . import formats
from .canal import (
    bank_triangle_identity,
    boundary_matching,
    build_canal_system,
    cycle_black_parity_equivalence,
    deja_vu_edges,
    is_grand,
    orient_canal_system,
)
from .coloring import coloring_to_rgb, find_4coloring, tiling_to_coloring
from .embedding import find_nontrivial_cycles3
from .errors import DomainError
from .generator import enumerate_mpgs
from .harness import SUITES, annulus_corpus, hunt_counterexample, run_suite
from .stats import black_quadrangulation, check_degree_bounds, degree_table, red_degree_table, euler_degree_residual
from .tiling import Color, count_rgb_extensions, enumerate_r_tilings, extend_to_rgb, validate

log = logging.getLogger("rgbtiling")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def _out(args, text: str | bytes) -> None:
    if args.out:
        formats.write_atomic(args.out, text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path):
    return formats.graph_from_dict(formats.read_json(path))


def _load_tiling(host, path):
    return formats.tiling_from_dict(host, formats.read_json(path))


def _json(args, obj) -> str:
    if isinstance(obj, dict) and args.seed is not None:
        obj = {**obj, "seed": args.seed}
    return formats.dumps(obj)


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args):
    run = enumerate_mpgs(args.max_n)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for n, graphs in run.classes_per_n.items():
            for i, g in enumerate(graphs):
                formats.write_atomic(out / f"mpg_n{n:02d}_{i:05d}.json", formats.dumps(formats.graph_to_dict(g)))
        if args.planar_code:
            formats.write_atomic(out / "mpgs.pc", formats.write_planar_code(run.all()))
    elif args.planar_code:
        sys.stdout.buffer.write(formats.write_planar_code(run.all()))
        return 0
    counts = {str(n): c for n, c in run.counts().items()}
    sys.stdout.write(_json(args, {"counts": counts}))
    return 0


def cmd_check(args):
    m = _load_graph(args.input)
    emb = m.embedding
    report = {
        "kind": m.kind,
        "one_piece": m.one_piece,
        "summary": f"{m.kind}, One Piece" if m.one_piece else m.kind,
        "V": m.n,
        "E": len(m.edges),
        "F": len(m.faces),
        "euler": m.n - len(m.edges) + len(m.faces),
        "outer_facets": [list(c) for c in m.outer_cycles()],
    }
    if m.is_mpg:
        report["nontrivial_3cycles"] = [list(c) for c in find_nontrivial_cycles3(m)]
        report["degree_identity_residual"] = euler_degree_residual(degree_table(emb))
    _out(args, _json(args, report))
    return 0


def cmd_tile(args):
    m = _load_graph(args.input)
    if args.mode == "r":
        stream = enumerate_r_tilings(m, limit=args.limit, free=args.free)
    else:
        stream = (e for t in enumerate_r_tilings(m, free=args.free) for e in extend_to_rgb(t))
        if args.limit is not None:
            stream = itertools.islice(stream, args.limit)
    if args.emit:
        lines = [json.dumps(formats.tiling_to_dict(t)) for t in stream]
        _out(args, "".join(line + "\n" for line in lines))
    else:
        _out(args, f"{sum(1 for _ in stream)}\n")
    return 0


def cmd_canal(args):
    m = _load_graph(args.input)
    t = _load_tiling(m, args.tiling)
    color = Color.parse(args.color)
    system = build_canal_system(t, color)
    out = {
        "color": color.value,
        "lines": [
            {
                "kind": line.kind,
                "triangles": [list(m.faces[f].vertices) for f in line.triangles],
                "black_edges": [list(e) for e in line.black_edges],
                "deja_vu": [list(e) for e in deja_vu_edges(system, line)],
            }
            for line in system.lines
        ],
    }
    g = is_grand(t, color, base=args.base)
    out["grand"] = g.grand
    if g.grand:
        out["partition"] = {"v13": sorted(g.partition.v13), "v24": sorted(g.partition.v24)}
    else:
        out["witness"] = {"cycle": g.witness.cycle, "kind": g.witness.kind}
    if args.orient:
        ori = orient_canal_system(system, base=args.base)
        out["orientation"] = {
            "feasible": ori.feasible,
            "lines": [line.orientation for line in ori.lines],
            "right": sorted(ori.right_vertices),
            "left": sorted(ori.left_vertices),
            "conflict": [list(e) for e in ori.conflict] if ori.conflict else None,
        }
    if args.report == "banks":
        rows = []
        for i, line in enumerate(system.lines):
            if line.kind == "ring":
                r = bank_triangle_identity(system, i)
                rows.append({"line": i, "triangles": r.triangles, "e_right": r.e_right, "e_left": r.e_left, "holds": r.holds})
        out["banks"] = rows
    elif args.report == "matching":
        bm = boundary_matching(system)
        out["matching"] = {"pairs": [[list(a), list(b)] for a, b in bm.pairs], "non_crossing": bm.non_crossing}
    elif args.report == "parity":
        r = cycle_black_parity_equivalence(m, t, color)
        out["parity"] = {
            "cycles_even": r.cycles_even,
            "outer_faces_even": r.outer_faces_even,
            "grand": r.grand,
            "agree": r.agree,
            "method": r.method,
            "odd_cycle": r.odd_cycle,
        }
    _out(args, _json(args, out))
    return 0


def cmd_color(args):
    m = _load_graph(args.input)
    if args.to_tiling:
        if args.coloring:
            f = formats.coloring_from_dict(formats.read_json(args.coloring))
        else:
            f = find_4coloring(m).colors
        _out(args, _json(args, formats.tiling_to_dict(coloring_to_rgb(m, f))))
    elif args.from_tiling:
        t = _load_tiling(m, args.tiling)
        f = tiling_to_coloring(m, t, base=args.base)
        _out(args, _json(args, formats.coloring_to_dict(f.colors)))
    else:
        f = find_4coloring(m)
        _out(args, _json(args, formats.coloring_to_dict(f.colors)))
    return 0


def cmd_stats(args):
    m = _load_graph(args.input)
    table = degree_table(m)
    rows = [{"section": "degree", "k": k, "j": "", "count": c} for k, c in table.rows()]
    out = {"V": table.V, "E": table.E, "F": table.F, "v_k": {str(k): c for k, c in table.rows()}}
    if m.is_mpg:
        out["degree_identity_residual"] = euler_degree_residual(table)
    if args.tiling:
        t = _load_tiling(m, args.tiling)
        drop = Color.parse(args.drop)
        q = black_quadrangulation(m, t, drop)
        rd = red_degree_table(m, t, drop)
        out["quadrangulation"] = {
            "dropped": drop.value,
            "V": q.table.V,
            "E": q.table.E,
            "F": q.table.F,
            "v_j": {str(k): c for k, c in q.table.rows()},
            "residual": q.residual,
            "counts_ok": q.counts_ok,
        }
        out["colored_degree"] = [[k, i, c] for (k, i), c in sorted(rd.v_ki_red.items())]
        out["cross_identity"] = rd.cross_identity_holds()
        out["bound_violations"] = [[b.vertex, b.color.value] for b in check_degree_bounds(m, t)]
        rows += [{"section": "quad", "k": k, "j": "", "count": c} for k, c in q.table.rows()]
        rows += [{"section": "colored", "k": k, "j": i, "count": c} for (k, i), c in sorted(rd.v_ki_red.items())]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["section", "k", "j", "count"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _out(args, buf.getvalue())
    else:
        _out(args, _json(args, out))
    return 0


def cmd_verify(args):
    run = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs, annuli=not args.no_annuli)
    text = _json(args, run.to_dict())
    if args.report:
        formats.write_atomic(args.report, text)
    for r in run.reports:
        status = "PASS" if r.ok else "FAIL"
        sys.stdout.write(f"{status} {r.theorem}: {r.passed}/{r.instances} over {r.hosts} hosts\n")
    return 0 if run.ok else 1


def cmd_hunt(args):
    shapes = [tuple(int(x) for x in s.split(",")) for s in args.shape]
    corpus = annulus_corpus(shapes, args.max_vertices, args.insert)
    res = hunt_counterexample(corpus=corpus, per_host=args.per_host, limit=args.limit, jobs=args.jobs)
    out = {
        "hosts": res.hosts,
        "tilings": res.tilings,
        "found": len(res.instances),
        "instances": [i.to_dict() for i in res.instances],
    }
    if not res.found:
        out["status"] = "NoneFound"
    _out(args, _json(args, out))
    return 0


def cmd_convert(args):
    src = Path(args.input).read_bytes() if args.input else sys.stdin.buffer.read()
    if args.from_ == "planar-code":
        graphs = [formats.graph_from_dict({"rot": [list(r) for r in e.rot]}) for e in formats.read_planar_code(src)]
    else:
        d = json.loads(src)
        graphs = [formats.graph_from_dict(g) for g in d["graphs"]] if "graphs" in d else [formats.graph_from_dict(d)]
    if args.to == "planar-code":
        _out(args, formats.write_planar_code(graphs, args.endian))
    elif args.to == "dot":
        _out(args, "".join(formats.to_dot(g) for g in graphs))
    else:
        dicts = [formats.graph_to_dict(g) for g in graphs]
        _out(args, formats.dumps(dicts[0] if len(dicts) == 1 else {"graphs": dicts}))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="recorded in JSON outputs")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", default=None)

    p = _Parser(prog="rgbtiling", description="R-/RGB-tilings of maximal planar graphs")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="enumerate MPG classes")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--planar-code", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", parents=[common], help="classify a graph")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("tile", parents=[common], help="count or list tilings")
    s.add_argument("--input", required=True)
    s.add_argument("--mode", choices=["r", "rgb"], default="r")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", default=True)
    g.add_argument("--emit", action="store_true")
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--free", choices=["black", "both"], default="black")
    s.set_defaults(func=cmd_tile)

    s = sub.add_parser("canal", parents=[common], help="canal system of a tiling")
    s.add_argument("--input", required=True)
    s.add_argument("--tiling", required=True)
    s.add_argument("--color", default="r")
    s.add_argument("--base", type=int, default=0)
    s.add_argument("--orient", action="store_true")
    s.add_argument("--report", choices=["parity", "banks", "matching"])
    s.set_defaults(func=cmd_canal)

    s = sub.add_parser("color", parents=[common], help="colorings and tilings")
    s.add_argument("--input", required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--to-tiling", action="store_true")
    g.add_argument("--from-tiling", action="store_true")
    s.add_argument("--coloring")
    s.add_argument("--tiling")
    s.add_argument("--base", type=int, default=0)
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("stats", parents=[common], help="degree statistics")
    s.add_argument("--input", required=True)
    s.add_argument("--tiling")
    s.add_argument("--drop", default="r")
    s.add_argument("--format", choices=["csv", "json"], default="json")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--report")
    s.add_argument("--no-annuli", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("hunt", parents=[common], help="search annuli for non-grand tilings")
    s.add_argument("--shape", action="append", default=None, help="n1,n2 (repeatable)")
    s.add_argument("--max-vertices", type=int, default=12)
    s.add_argument("--insert", action="store_true")
    s.add_argument("--per-host", type=int, default=1)
    s.add_argument("--limit", type=int, default=None)
    s.set_defaults(func=cmd_hunt)

    s = sub.add_parser("convert", parents=[common], help="convert graph formats")
    s.add_argument("--from", dest="from_", choices=["json", "planar-code"], required=True)
    s.add_argument("--to", choices=["json", "planar-code", "dot"], required=True)
    s.add_argument("--input")
    s.add_argument("--endian", choices=["le", "be"])
    s.set_defaults(func=cmd_convert)
    return p


def _validate(args) -> None:
    for name in ("max_n", "jobs", "limit", "max_vertices", "per_host"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if args.command == "hunt" and args.shape is None:
        args.shape = ["5,5", "5,7"]
    if args.command == "color" and args.from_tiling and not args.tiling:
        raise UsageError("--from-tiling needs --tiling")
    if args.command == "stats" and args.tiling and args.format == "csv" and not args.drop:
        raise UsageError("--drop is required with --tiling")


def run(argv: list[str] | None = None) -> int:
    level = os.environ.get("RGBTILING_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
        return args.func(args)
    except UsageError as e:
        _emit_error("UsageError", str(e))
        return 2
    except DomainError as e:
        _emit_error(type(e).__name__, str(e))
        return 1
    except (OSError, ValueError, KeyError, TypeError) as e:
        _emit_error("InputError", f"{type(e).__name__}: {e}")
        return 1


def main() -> None:
    sys.exit(run())
