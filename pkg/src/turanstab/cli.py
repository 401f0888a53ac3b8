"""Command-line entry point: ``turanstab <command> ...``.

Exit status is 0 on success, 1 when a verification report carries a
counterexample, and 2 on usage or I/O errors.  JSON output is compact with
sorted keys, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions as C
from ._parallel import default_workers
from .enumeration import (
    EnumerationCapExceeded,
    EnumSpec,
    enumerate_clique_free,
    ingest_graph6,
    summarize,
)
from .frontier import (
    asymptotic_dr,
    asymptotic_shape,
    frontier_csv,
    frontier_table,
    optimize_for_delta,
    optimize_ptg,
)
from .graph import Graph
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .partition import CapExceeded, dr_bruteforce, dr_exact
from .reduction import ReductionError, dense_reduce, general_reduce
from . import verify as V


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number such as 3/2 or 0.001, got {text!r}") from None


def _require(cond: bool, flag: str, msg: str) -> None:
    if not cond:
        raise UsageError(f"{flag}: {msg}")


def _read_graphs(args) -> list[Graph]:
    graphs = []
    for s in args.graph6 or []:
        try:
            graphs.append(decode_graph6(s))
        except Graph6Error as exc:
            raise UsageError(f"--graph6 {s!r}: {exc}") from None
    if args.input:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                lines = Path(args.input).read_text().splitlines()
            except OSError as exc:
                raise UsageError(f"--in {args.input}: {exc.strerror or exc}") from None
        ing = ingest_graph6(lines, strict=not args.lenient)
        try:
            graphs.extend(ing)
        except Graph6Error as exc:
            raise UsageError(f"--in {args.input}: {exc}") from None
        for lineno, msg in ing.errors:
            print(f"warning: {args.input} line {lineno}: {msg}", file=sys.stderr)
    if not graphs:
        raise UsageError("--in/--graph6: no input graphs given")
    return graphs


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"--out {args.out}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)


def _emit_graph(args, g: Graph, extra: dict | None = None) -> None:
    if args.format == "graph6":
        _emit(args, encode_graph6(g))
    elif args.format == "csv":
        _emit(args, "n,edges,graph6\n" + f"{g.n},{g.edge_count},{encode_graph6(g)}")
    else:
        out = {"n": g.n, "edges": g.edge_count, "graph6": encode_graph6(g)}
        out.update(extra or {})
        _emit(args, dumps(out))


def _emit_report(args, rep: V.VerificationReport) -> int:
    _emit(args, dumps(rep.to_json()))
    return 0 if rep.passed else 1


# -- commands ----------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    _require(args.r is None or args.r >= 1, "--r", "must be at least 1")
    if kind == "turan":
        _require(args.r is not None and args.n is not None, "--r/--n", "required for turan")
        _require(args.n >= 0, "--n", "must be nonnegative")
        _emit_graph(args, C.turan_graph(args.r, args.n), {"spec": C.turan_spec(args.r, args.n).to_json()}
                    if args.r >= 2 else None)
    elif kind == "ptg":
        _require(args.r is not None and args.x is not None and args.y is not None and args.z is not None,
                 "--r/--x/--y/--z", "required for ptg")
        try:
            spec = C.PentagonalSpec(args.r, args.x, args.y, args.z)
        except ValueError as exc:
            raise UsageError(f"--z: {exc}") from None
        _emit_graph(args, C.ptg_build(spec), {"spec": spec.to_json(), "pent_r_partite": spec.is_pent_r_partite,
                                              "pent_turan": spec.is_pent_turan})
    elif kind == "sample-ptg":
        _require(args.r is not None and args.n is not None and args.s is not None, "--r/--n/--s",
                 "required for sample-ptg")
        try:
            spec = C.sample_ptg(args.r, args.n, args.s)
        except ValueError as exc:
            raise UsageError(f"--s: {exc}") from None
        _emit_graph(args, C.ptg_build(spec), {"spec": spec.to_json(), "dr": spec.x * spec.y})
    else:
        _require(args.base is not None and args.sizes is not None, "--base/--sizes", "required for blowup")
        try:
            base = decode_graph6(args.base)
        except Graph6Error as exc:
            raise UsageError(f"--base: {exc}") from None
        _require(len(args.sizes) == base.n, "--sizes", f"need {base.n} sizes for the base graph")
        _require(min(args.sizes, default=0) >= 0, "--sizes", "sizes must be nonnegative")
        _emit_graph(args, C.blowup(C.BlowupSpec(base, args.sizes)), {"sizes": list(args.sizes)})
    return 0


def cmd_dr(args) -> int:
    _require(args.r >= 1, "--r", "must be at least 1")
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        if args.method == "brute":
            try:
                res = dr_bruteforce(g, args.r)
            except CapExceeded as exc:
                raise UsageError(f"--in: {exc}") from None
        else:
            res = dr_exact(g, args.r, time_budget=args.time_budget)
        rows.append({"graph6": encode_graph6(g), "dr": res.value, "exact": res.exact,
                     "partition": res.partition.to_json() if res.partition is not None else None})
    if args.format == "csv":
        _emit(args, "graph6,dr,exact\n" + "\n".join(f"{d['graph6']},{d['dr']},{str(d['exact']).lower()}"
                                                     for d in rows))
    else:
        _emit(args, dumps(rows))
    return 0


def cmd_enumerate(args) -> int:
    if args.input:
        ing = ingest_graph6(_lines(args), strict=not args.lenient, forbidden_clique=args.q,
                            min_edges=args.min_edges)
        try:
            graphs = list(ing)
        except Graph6Error as exc:
            raise UsageError(f"--in {args.input}: {exc}") from None
        extra = {"errors": [{"line": ln, "message": m} for ln, m in ing.errors], "filtered": ing.filtered}
    else:
        _require(args.n is not None and args.n >= 0, "--n", "required and nonnegative")
        _require(args.q is not None and args.q >= 1, "--q", "required and at least 1")
        try:
            graphs = list(enumerate_clique_free(EnumSpec(args.n, args.q, args.min_edges or 0), cap=args.cap))
        except EnumerationCapExceeded as exc:
            raise UsageError(f"--n: {exc}") from None
        extra = {}
    if args.format == "graph6":
        _emit(args, "".join(encode_graph6(g) + "\n" for g in graphs) or "\n")
    elif args.format == "csv":
        _emit(args, "graph6,edges\n" + "".join(f"{encode_graph6(g)},{g.edge_count}\n" for g in graphs))
    else:
        out = summarize(graphs)
        out.update(extra)
        _emit(args, dumps(out))
    return 0


def _lines(args) -> list[str]:
    if args.input == "-":
        return sys.stdin.read().splitlines()
    try:
        return Path(args.input).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"--in {args.input}: {exc.strerror or exc}") from None


def cmd_verify(args) -> int:
    which = args.statement
    try:
        if which == "folklore":
            if args.sizes:
                return _emit_report(args, V.verify_folklore(args.sizes))
            _require(args.r is not None, "--r/--sizes", "give --sizes or --r for the grid")
            merged = V.VerificationReport("folklore", {"r": args.r, "max_edges": args.max_edges})
            for sizes in V.folklore_grid(args.r, args.max_edges):
                rep = V.verify_folklore(sizes)
                merged.instances += 1
                merged.counterexamples.extend(rep.counterexamples)
            return _emit_report(args, merged)
        if which == "matching":
            return _emit_report(args, V.verify_matching(args.count, args.seed))
        if which == "turan-identities":
            return _emit_report(args, V.verify_turan_identities(range(2, args.r_max + 1), args.n_max, args.samples))
        _require(args.r is not None and args.r >= 2, "--r", "required and at least 2")
        if which == "cor26":
            return _emit_report(args, V.verify_pentagonal_dr(args.r, args.max_n, args.workers))
        _require(args.n is not None, "--n", "required")
        if which == "aes":
            return _emit_report(args, V.verify_aes(args.r, args.n, args.workers, args.cap))
        return _emit_report(args, V.verify_brouwer(args.r, args.n, args.workers, args.cap))
    except EnumerationCapExceeded as exc:
        raise UsageError(f"--n: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_reduce(args) -> int:
    _require(args.r >= 2, "--r", "must be at least 2")
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        row = {"graph6": encode_graph6(g)}
        try:
            if args.method == "dense":
                red = dense_reduce(g, args.r)
                row["result"] = red.result.to_json()
                row["witness_vertex"] = red.vertex
                row["a"] = list(red.a)
            else:
                state, res = general_reduce(g, args.r, args.theta, strict=args.strict)
                row["result"] = res.to_json()
                row["state"] = state.to_json()
        except ReductionError as exc:
            row["error"] = str(exc)
        except ValueError as exc:
            raise UsageError(f"--in: {exc}") from None
        rows.append(row)
    _emit(args, dumps(rows))
    return 0


def cmd_frontier(args) -> int:
    _require(args.r >= 2, "--r", "must be at least 2")
    _require(args.n >= 0, "--n", "must be nonnegative")
    t_values = [args.t] if args.t is not None else list(range(0, (args.t_max or 0) + 1))
    _require(args.t is not None or args.t_max is not None, "--t/--t-max", "one is required")
    try:
        records = frontier_table(args.r, args.n, t_values, args.workers, args.cap)
    except EnumerationCapExceeded as exc:
        raise UsageError(f"--n: {exc}") from None
    if args.format == "csv":
        _emit(args, frontier_csv(records))
    elif len(records) == 1 and args.t is not None:
        _emit(args, dumps(records[0].to_json()))
    else:
        _emit(args, dumps([rec.to_json() for rec in records]))
    return 0


def cmd_optimize(args) -> int:
    _require(args.r >= 2, "--r", "must be at least 2")
    _require(args.n >= 0, "--n", "must be nonnegative")
    _require((args.min_edges is None) != (args.delta is None), "--min-edges/--delta", "give exactly one")
    try:
        if args.delta is not None:
            _require(args.delta >= 0, "--delta", "must be nonnegative")
            opt = optimize_for_delta(args.r, args.n, args.delta)
        else:
            opt = optimize_ptg(args.r, args.n, args.min_edges)
    except ValueError as exc:
        raise UsageError(f"--min-edges: {exc}") from None
    out = opt.to_json()
    out["budget"] = args.min_edges if args.delta is None else str(args.delta)
    _emit(args, dumps(out))
    return 0


def cmd_asymptotic(args) -> int:
    _require(args.delta >= 0, "--delta", "must be nonnegative")
    d = float(args.delta)
    x, y = asymptotic_shape(args.r, args.n, d)
    _emit(args, dumps({"r": args.r, "n": args.n, "delta": str(args.delta),
                       "dr": asymptotic_dr(args.r, args.n, d), "x": x, "y": y}))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "graph6"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--workers", type=int, default=default_workers())
    common.add_argument("--cap", type=int, default=None, help="enumeration vertex cap (default from TURANSTAB_ENUM_CAP)")
    common.add_argument("--lenient", action="store_true", help="skip malformed graph6 lines instead of failing")

    graphs_in = argparse.ArgumentParser(add_help=False)
    graphs_in.add_argument("--in", dest="input", help="graph6 file, or - for stdin")
    graphs_in.add_argument("--graph6", action="append", help="a graph6 string (repeatable)")

    p = argparse.ArgumentParser(prog="turanstab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a graph")
    c.add_argument("kind", choices=("turan", "ptg", "sample-ptg", "blowup"))
    c.add_argument("--r", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--x", type=int)
    c.add_argument("--y", type=int)
    c.add_argument("--z", type=_int_list)
    c.add_argument("--base", help="base graph in graph6")
    c.add_argument("--sizes", type=_int_list)
    c.set_defaults(func=cmd_construct)

    d = sub.add_parser("dr", parents=[common, graphs_in], help="minimum deletions to r-partite")
    d.add_argument("method", choices=("exact", "brute"))
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--time-budget", type=float, default=None)
    d.set_defaults(func=cmd_dr)

    e = sub.add_parser("enumerate", parents=[common, graphs_in], help="K_q-free graphs up to isomorphism")
    e.add_argument("--n", type=int)
    e.add_argument("--q", type=int, help="forbidden clique size")
    e.add_argument("--min-edges", type=int, default=None)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[common], help="exhaustive checks")
    v.add_argument("statement", choices=("folklore", "matching", "aes", "brouwer", "cor26", "turan-identities"))
    v.add_argument("--r", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--sizes", type=_int_list)
    v.add_argument("--max-edges", type=int, default=16)
    v.add_argument("--max-n", type=int, default=12)
    v.add_argument("--count", type=int, default=500)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--r-max", type=int, default=8)
    v.add_argument("--n-max", type=int, default=500)
    v.add_argument("--samples", type=int, default=50)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", parents=[common, graphs_in], help="build a dominating pentagonal spec")
    r.add_argument("method", choices=("dense", "general"))
    r.add_argument("--r", type=int, required=True)
    r.add_argument("--theta", type=_rational, default=Fraction(0), help="peeling threshold (rational)")
    r.add_argument("--strict", action="store_true", help="fail if the peeled residual is not r-partite")
    r.set_defaults(func=cmd_reduce)

    f = sub.add_parser("frontier", parents=[common], help="exact f_r(n, t)")
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--t", type=int)
    f.add_argument("--t-max", type=int)
    f.set_defaults(func=cmd_frontier)

    o = sub.add_parser("optimize-ptg", parents=[common], help="best pentagonal-Turán spec under an edge budget")
    o.add_argument("--r", type=int, required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--min-edges", type=int)
    o.add_argument("--delta", type=_rational, help="budget t_r(n) - ceil(delta n^2)")
    o.set_defaults(func=cmd_optimize)

    a = sub.add_parser("asymptotic", parents=[common], help="large-n estimate of the worst D_r")
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--delta", type=_rational, required=True)
    a.set_defaults(func=cmd_asymptotic)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers: must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
