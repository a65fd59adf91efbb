"""Command-line surface: table emission, verification, knitting, words.

Subcommands:
  tables     re-derive and print a canonical table (numerics|defalg|gv|helix)
  verify     run every named verification check; exit 0 iff all pass
  knit       run a knitting problem on a chosen diagram and print the trace
  monodromy  evaluate a word in the strip groupoid and print its K-matrix

All output is deterministic; it goes to standard output unless --out is given.
Exit codes: 0 success, 1 domain/verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .defalg import gv_bounds, profile
from .dynkin import DynkinType, build_diagram
from .helix import simple_at
from .knitting import KnitProblem, KnittingError, WalkError, knit
from .monodromy import (WordSyntaxError, WordTypeError, k_matrix, parse_word,
                        reduce)
from .numerics import LENGTHS, for_length
from .verification import run_all

__all__ = ["main"]


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _table_numerics(fmt):
    if fmt == "json":
        return json.dumps([for_length(l).to_json() for l in LENGTHS],
                          indent=2) + "\n"
    rows = [["ell", "N", "ranks", "ns"]]
    for ell in LENGTHS:
        num = for_length(ell)
        rows.append([ell, num.N, " ".join(map(str, num.ranks)),
                     " ".join(map(str, num.ns))])
    if fmt == "csv":
        return _csv(rows)
    widths = [max(len(str(r[c])) for r in rows) for c in range(4)]
    return "".join("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip()
                   + "\n" for r in rows)


def _table_defalg(fmt):
    profs = [profile(ell, i) for ell in LENGTHS
             for i in range(for_length(ell).N // 2 + 1)]
    if fmt == "json":
        return json.dumps([p.to_json() for p in profs], indent=2) + "\n"
    rows = [["ell", "i", "loops", "dim", "dim_ab", "commutative",
             "presentation"]]
    for q in profs:
        rows.append([q.ell, q.i, q.loops, q.dim_sliced, q.dim_ab_sliced,
                     "yes" if q.commutative else "no", q.presentation or ""])
    if fmt == "csv":
        return _csv(rows)
    widths = [max(len(str(r[c])) for r in rows) for c in range(7)]
    return "".join("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip()
                   + "\n" for r in rows)


def _table_gv(fmt):
    bounds = [gv_bounds(ell) for ell in LENGTHS]
    if fmt == "json":
        return json.dumps([g.to_json() for g in bounds], indent=2) + "\n"
    rows = [["ell"] + [f"n{k}" for k in range(1, 7)] + ["acon"]]
    for g in bounds:
        padded = list(g.bounds) + [""] * (6 - len(g.bounds))
        rows.append([g.ell] + padded + [g.acon_bound])
    if fmt == "csv":
        return _csv(rows)
    widths = [max(len(str(r[c])) for r in rows) for c in range(8)]
    return "".join("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip()
                   + "\n" for r in rows)


def _table_helix(fmt, ell):
    N = for_length(ell).N
    simples = [(i, simple_at(i, ell)) for i in range(N)]
    if fmt == "json":
        return json.dumps([{"i": i, "name": str(s), **s.to_json()}
                           for i, s in simples], indent=2) + "\n"
    rows = [["i", "S_i"]] + [[i, str(s)] for i, s in simples]
    if fmt == "csv":
        return _csv(rows)
    widths = [max(len(str(r[c])) for r in rows) for c in range(2)]
    return "".join("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip()
                   + "\n" for r in rows)


def cmd_tables(args) -> int:
    if args.which == "helix":
        if args.ell is None:
            print("tables helix requires --ell", file=sys.stderr)
            return 2
        text = _table_helix(args.format, args.ell)
    else:
        text = {"numerics": _table_numerics, "defalg": _table_defalg,
                "gv": _table_gv}[args.which](args.format)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    results = run_all()
    if args.format == "json":
        report = {"checks": [r.to_json() for r in results],
                  "summary": {"pass": sum(r.passed for r in results),
                              "fail": sum(not r.passed for r in results)}}
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = [f"{r.name}: {'pass' if r.passed else 'fail'}"
                 f"  [{r.provenance}]" for r in results]
        failed = [r for r in results if not r.passed]
        lines.append(f"{len(results) - len(failed)} passed, "
                     f"{len(failed)} failed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if all(r.passed for r in results) else 1


def _resolve_vertex(diagram, name: str) -> str:
    name = name.strip()
    if name == "extending":
        if diagram.extending is None:
            raise ValueError("'extending' refers to the affine vertex; "
                             "pass --affine")
        return diagram.extending
    if name in ("branch", "centre"):
        finite = [v for v in diagram.vertices if v != diagram.extending]
        forks = [v for v in finite
                 if sum(1 for w, _ in diagram.neighbours(v) if w in finite) >= 3]
        if len(forks) != 1:
            raise ValueError(f"no unambiguous {name} vertex in {diagram.dtype}")
        return forks[0]
    if name.isdigit():
        name = f"v{name}"
    if name not in diagram.vertices:
        raise ValueError(f"unknown vertex {name!r} in {diagram.dtype}")
    return name


def cmd_knit(args) -> int:
    dtype = DynkinType.parse(args.type)
    diagram = build_diagram(dtype, affine=args.affine)
    start = _resolve_vertex(diagram, args.start)
    read = _resolve_vertex(diagram, args.read if args.read else args.start)
    kill = frozenset(_resolve_vertex(diagram, v)
                     for v in (args.kill or []))
    trace = knit(KnitProblem(diagram, start, read, kill))
    if args.format == "json":
        payload = {"diagram": diagram.to_json(), "start": start, "read": read,
                   "kill": sorted(kill), **trace.to_json()}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        verts = list(diagram.vertices)
        rows = [["layer"] + verts]
        for k, layer in enumerate(trace.layers):
            rows.append([k] + [layer.get(v, "") for v in verts])
        widths = [max(len(str(r[c])) for r in rows) for c in range(len(verts) + 1)]
        grid = "".join("  ".join(str(v).rjust(w) for v, w in zip(r, widths))
                       + "\n" for r in rows)
        text = (grid + f"read_values: "
                f"{' '.join(map(str, trace.read_values))}\n"
                f"total: {trace.total}\n")
    _emit(text, args.out)
    return 0


def cmd_monodromy(args) -> int:
    word = parse_word(args.word, args.ell)
    red = reduce(word)
    try:
        matrix = [list(r) for r in k_matrix(word, args.ell)]
    except ValueError:
        matrix = None
    payload = {
        "ell": args.ell,
        "word": args.word,
        "source": str(word.source),
        "target": str(word.target),
        "reduced": "identity" if not red.letters else str(red),
        "k_matrix": matrix,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flophelix",
        description="Exact combinatorics of length-l flop helices")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="print a canonical table")
    t.add_argument("which", choices=["numerics", "defalg", "gv", "helix"])
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--ell", type=int, choices=LENGTHS,
                   help="length (required for helix)")
    t.add_argument("--out")
    t.set_defaults(fn=cmd_tables)

    v = sub.add_parser("verify", help="run every verification check")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    k = sub.add_parser("knit", help="run a knitting problem")
    k.add_argument("--type", required=True, help="Dynkin type, e.g. E6")
    k.add_argument("--affine", action="store_true")
    k.add_argument("--start", required=True,
                   help="vertex id, number, or alias extending/branch/centre")
    k.add_argument("--read", help="defaults to --start")
    k.add_argument("--kill", action="append", default=[],
                   help="killed vertex (repeatable)")
    k.add_argument("--format", choices=["text", "json"], default="text")
    k.add_argument("--out")
    k.set_defaults(fn=cmd_knit)

    m = sub.add_parser("monodromy", help="evaluate a strip-groupoid word")
    m.add_argument("--ell", type=int, choices=LENGTHS, required=True)
    m.add_argument("--word", required=True,
                   help='e.g. "inv(q0).qplus.qminus" or "phi_fwd(0)"')
    m.add_argument("--out")
    m.set_defaults(fn=cmd_monodromy)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except WordSyntaxError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except (KnittingError, WalkError, WordTypeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
