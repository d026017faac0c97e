"""Command-line interface.

Subcommands: classify, decompose, verify, gen, batch, dot. Graph arguments are
graph6 strings; ``-`` reads the first line of stdin instead.

Exit codes: 0 good / ok, 1 not good / verification failed, 2 search budget
exhausted, 64 usage error (bad input, precondition failure), 70 an impossible
branch of the claw-free construction was reached.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import generators
from .clawfree import decompose_auto, decompose_clawfree
from .decomposition import DecompositionError, from_json_obj, to_json_obj, verify
from .errors import PreconditionError, TheoremViolation
from .exact import OutcomeKind, SearchLimits, default_max_nodes, find_good_decomposition
from .graph import GraphError, parse_graph6, to_dot, write_graph6
from .predicates import (
    SearchBudgetExceeded,
    bridges,
    degree_class,
    DegreeClass,
    find_claw,
    find_induced_cycle_longer_than,
    is_connected,
    is_two_edge_connected,
    triangles,
)

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_USAGE, EXIT_THEOREM = 0, 1, 2, 64, 70
EXIT_FOR_KIND = {OutcomeKind.GOOD: EXIT_OK, OutcomeKind.NOT_GOOD: EXIT_FAIL, OutcomeKind.BUDGET_EXCEEDED: EXIT_BUDGET}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which would read as "budget exhausted"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def _read_graph(arg: str):
    text = sys.stdin.readline() if arg == "-" else arg
    try:
        return parse_graph6(text)
    except GraphError as exc:
        raise UsageError(f"cannot parse graph6 input: {exc}") from exc


def _limits(args) -> SearchLimits:
    max_nodes = args.max_nodes if args.max_nodes is not None else default_max_nodes()
    return SearchLimits(max_nodes, args.max_seconds)


def classify(g, cycle_budget: int = 10_000_000) -> dict:
    claw = find_claw(g)
    try:
        cyc = find_induced_cycle_longer_than(g, 4, cycle_budget)
        four_chordal: Optional[bool] = cyc is None
    except SearchBudgetExceeded:
        cyc, four_chordal = None, None
    dc = degree_class(g)
    return {
        "n": g.n,
        "m": g.num_edges,
        "degree_class": dc.value,
        "subcubic": dc is not DegreeClass.EXCEEDS_THREE,
        "cubic": dc is DegreeClass.CUBIC,
        "connected": is_connected(g),
        "two_edge_connected": is_two_edge_connected(g),
        "claw_free": claw is None,
        "claw": None if claw is None else {"center": claw.center, "leaves": list(claw.leaves)},
        "four_chordal": four_chordal,
        "long_induced_cycle": None if cyc is None else list(cyc.cycle),
        "triangles": [list(t.vertices) for t in triangles(g)],
        "bridges": [list(e) for e in sorted(bridges(g))],
    }


def cmd_classify(args) -> int:
    g = _read_graph(args.graph)
    _emit({"schema": SCHEMA, "graph6": write_graph6(g), **classify(g)})
    return EXIT_OK


def _solve(g, method: str, limits: SearchLimits) -> dict:
    """Run one solver; returns a result dict with ``status`` and friends."""
    start = time.perf_counter()
    if method == "clawfree":
        d, trace = decompose_clawfree(g)
        return {"method": "clawfree", "status": OutcomeKind.GOOD.value, "decomposition": d,
                "trace": trace, "nodes": len(trace), "elapsed": time.perf_counter() - start}
    if method == "exact":
        out = find_good_decomposition(g, limits)
        return {"method": "exact", "status": out.kind.value, "decomposition": out.decomposition,
                "trace": None, "nodes": out.nodes, "elapsed": out.elapsed}
    res = decompose_auto(g, limits)
    return {"method": res.method, "status": res.kind.value, "decomposition": res.decomposition,
            "trace": res.trace, "nodes": res.nodes, "elapsed": time.perf_counter() - start}


def cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    try:
        res = _solve(g, args.method, _limits(args))
    except PreconditionError as exc:
        witness = exc.witness
        _emit({"schema": SCHEMA, "status": "error", "code": exc.code, "message": str(exc),
               "witness": None if witness is None else {"center": witness.center, "leaves": list(witness.leaves)}})
        return EXIT_USAGE
    except TheoremViolation as exc:
        _emit({"schema": SCHEMA, "status": "error", "code": exc.code, "message": str(exc), "graph6": exc.graph6,
               "trace": [e.to_json_obj() for e in exc.trace or []]})
        return EXIT_THEOREM

    d = res["decomposition"]
    record = {
        "schema": SCHEMA,
        "graph6": write_graph6(g),
        "method": res["method"],
        "status": res["status"],
        "nodes": res["nodes"],
        "elapsed": round(res["elapsed"], 6),
        "decomposition": None if d is None else to_json_obj(d),
    }
    if args.trace and res["trace"] is not None:
        record["trace"] = res["trace"].to_json_obj()
    if args.dot:
        dot = to_dot(g, d)
        if args.dot == "-":
            sys.stdout.write(dot)
        else:
            with open(args.dot, "w") as fh:
                fh.write(dot)
    if args.dot != "-":
        _emit(record)
    return EXIT_FOR_KIND[OutcomeKind(res["status"])]


def _read_decomposition(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        with open(arg) as fh:
            text = fh.read()
    obj = json.loads(text)
    # accept the bare decomposition or a decompose record wrapping one
    if isinstance(obj, dict) and "decomposition" in obj and "tree" not in obj:
        obj = obj["decomposition"]
    return from_json_obj(obj)


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        d = _read_decomposition(args.decomposition)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read decomposition: {exc}") from exc
    report = verify(g, d)
    _emit({"schema": SCHEMA, "graph6": write_graph6(g), **report.to_json_obj()})
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_dot(args) -> int:
    g = _read_graph(args.graph)
    d = None
    if args.decomposition:
        try:
            d = _read_decomposition(args.decomposition)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read decomposition: {exc}") from exc
    try:
        sys.stdout.write(to_dot(g, d))
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_gen(args) -> int:
    for i in range(args.count):
        spec = generators.GenSpec(args.family, args.n, args.seed + i, args.filter, args.density, args.retry_cap)
        g = spec.build()
        if args.inflate:
            g = generators.triangle_inflation(g)
        sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def batch_record(job) -> dict:
    """Process one graph6 line; never raises for bad input."""
    lineno, text, method, max_nodes, max_seconds, with_decomposition = job
    rec = {"schema": SCHEMA, "line": lineno, "graph6": text}
    try:
        g = parse_graph6(text)
    except GraphError as exc:
        rec.update(outcome="error", error=f"PARSE_ERROR: {exc}")
        return rec
    info = classify(g)
    rec["predicates"] = {k: info[k] for k in ("subcubic", "cubic", "connected", "claw_free", "four_chordal",
                                              "two_edge_connected")}
    try:
        res = _solve(g, method, SearchLimits(max_nodes, max_seconds))
    except (PreconditionError, TheoremViolation) as exc:
        rec.update(method=method, outcome="error", error=str(exc))
        return rec
    rec.update(method=res["method"], outcome=res["status"], nodes=res["nodes"], elapsed=round(res["elapsed"], 6))
    if with_decomposition and res["decomposition"] is not None:
        rec["decomposition"] = to_json_obj(res["decomposition"])
    return rec


def run_batch(lines, method="auto", max_nodes=None, max_seconds=None, jobs=1, with_decomposition=False):
    """Yield batch records in input order, then the summary record."""
    max_nodes = max_nodes if max_nodes is not None else default_max_nodes()
    work = [
        (i, line.strip(), method, max_nodes, max_seconds, with_decomposition)
        for i, line in enumerate(lines, start=1)
        if line.strip()
    ]
    counts = {k.value: 0 for k in OutcomeKind}
    counts["error"] = 0
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = pool.map(batch_record, work, chunksize=8)
            for rec in records:
                counts[rec["outcome"]] += 1
                yield rec
    else:
        for job in work:
            rec = batch_record(job)
            counts[rec["outcome"]] += 1
            yield rec
    yield {"schema": SCHEMA, "summary": {"total": len(work), **counts}}


def cmd_batch(args) -> int:
    if args.input == "-":
        lines = sys.stdin.readlines()
    else:
        with open(args.input) as fh:
            lines = fh.readlines()
    max_nodes = args.max_nodes if args.max_nodes is not None else default_max_nodes()
    for rec in run_batch(lines, args.method, max_nodes, args.max_seconds, args.jobs, args.decomposition):
        _emit(rec)
        sys.stdout.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gooddecomp", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_limits(p):
        p.add_argument("--method", choices=("exact", "clawfree", "auto"), default="auto")
        p.add_argument("--max-nodes", type=int, default=None,
                       help="exact search node budget (default: $GOODDECOMP_MAX_NODES or 10^7)")
        p.add_argument("--max-seconds", type=float, default=None, help="exact search wall-clock budget")

    p = sub.add_parser("classify", help="report structural predicates as JSON")
    p.add_argument("graph", help="graph6 string, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="find a good decomposition")
    p.add_argument("graph", help="graph6 string, or - for stdin")
    add_limits(p)
    p.add_argument("--trace", action="store_true", help="include the claw-free case trace")
    p.add_argument("--dot", metavar="PATH", help="also write coloured DOT to PATH (- prints DOT instead of JSON)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition against a graph")
    p.add_argument("graph", help="graph6 string")
    p.add_argument("decomposition", help="decomposition JSON: a file, inline JSON, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", help="export DOT, optionally coloured by a decomposition")
    p.add_argument("graph", help="graph6 string, or - for stdin")
    p.add_argument("--decomposition", help="decomposition JSON file or inline JSON")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("gen", help="emit graph6 lines for a graph family")
    p.add_argument("--family", choices=generators.FAMILIES, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--seed", type=int, default=0, help="first seed; line i uses seed + i")
    p.add_argument("--filter", choices=generators.FILTERS, default="none")
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--retry-cap", type=int, default=10_000)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--inflate", action="store_true", help="apply triangle inflation (cubic families only)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="decompose a graph6 stream, one JSON record per line")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, default stdin")
    add_limits(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--decomposition", action="store_true", help="include decompositions in records")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, generators.GeneratorError, GraphError, DecompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
