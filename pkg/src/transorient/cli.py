"""Command line: orient, verify, trace, generate, bench.

Exit codes: 0 success, 1 verification failure (or the pipeline detected a
non-prime / non-comparability input), 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, format_edge_list, parse_edge_list, read_edge_list
from .oracle import verify_transitive
from .orientation import PHASES, LinearExtensionResult, OrientationError, transitive_orientation
from .slices import SliceError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# below this many vertices plus edges the Python engine is used by default;
# it needs no compilation and is fast enough
AUTO_ENGINE_LIMIT = 20_000


@dataclass
class RunReport:
    n: int
    m: int
    order: list[int]
    counters: dict[str, int]
    wall_time: float
    source: int | None = None
    transitive: bool | None = None
    arcs: list[tuple[int, int]] = field(default_factory=list)


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _load(path: str) -> Graph:
    try:
        if path == "-":
            return parse_edge_list(sys.stdin.read())
        return read_edge_list(path)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_INPUT) from None
    except GraphError as e:
        raise CliError(f"{path}: {e}", EXIT_INPUT) from None


def _pick_engine(engine: str, g: Graph, need_python: bool) -> str:
    if engine == "auto":
        return "python" if need_python or g.n + g.m < AUTO_ENGINE_LIMIT else "numba"
    if engine == "numba" and need_python:
        raise CliError("--debug and --trace need --engine python", EXIT_INPUT)
    return engine


def run_orient(g: Graph, *, engine: str = "python", debug: bool = False, trace: bool = False,
               verify: bool = False, source: int | None = None) -> tuple[RunReport, LinearExtensionResult]:
    """Pipeline plus optional verification; raises CliError on failure."""
    t0 = time.perf_counter()
    try:
        if engine == "numba":
            from .fast import transitive_orientation_fast

            res = transitive_orientation_fast(g, source=source)
        else:
            res = transitive_orientation(g, debug=debug, trace=trace, source=source)
    except (OrientationError, SliceError) as e:
        raise CliError(f"orientation not transitive: {e}", EXIT_FAIL) from None
    except GraphError as e:
        raise CliError(str(e), EXIT_INPUT) from None
    wall = time.perf_counter() - t0
    verdict = verify_transitive(g, res.orientation) if verify else None
    report = RunReport(g.n, g.m, res.order, res.counters, wall, res.source, verdict,
                       sorted(res.orientation))
    return report, res


def _parse_vertex(text: str | None, g: Graph) -> int | None:
    if text is None:
        return None
    try:
        v = int(text)
    except ValueError:
        raise CliError(f"vertex must be an integer, got {text!r}", EXIT_INPUT) from None
    if not 0 <= v < g.n:
        raise CliError(f"vertex {v} not in graph with n={g.n}", EXIT_INPUT)
    return v


def cmd_orient(args: argparse.Namespace) -> int:
    g = _load(args.path)
    engine = _pick_engine(args.engine, g, args.debug or args.trace)
    report, res = run_orient(g, engine=engine, debug=args.debug, trace=args.trace,
                             verify=args.verify, source=_parse_vertex(args.source, g))
    out = sys.stdout
    fmt = "json" if args.json else args.format
    if fmt == "json":
        doc = asdict(report)
        doc["arcs"] = [list(a) for a in report.arcs]
        if report.transitive is None:
            del doc["transitive"]
        if args.trace and res.trace is not None:
            doc["snapshots"] = res.trace.snapshots
        json.dump(doc, out)
        out.write("\n")
    else:
        out.write(" ".join(map(str, report.order)) + "\n")
        if fmt == "arcs":
            for a, b in report.arcs:
                out.write(f"{a} -> {b}\n")
        if args.trace and res.trace is not None:
            for i, snap in enumerate(res.trace.snapshots):
                out.write(f"# after slice {i}: " + "".join(
                    "[" + " ".join(map(str, c)) + "]" for c in snap) + "\n")
        if report.transitive is not None:
            out.write(f"transitive: {'true' if report.transitive else 'false'}\n")
    if report.transitive is False:
        print("orientation not transitive", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _read_orientation(path: str, g: Graph) -> frozenset[tuple[int, int]]:
    from .graph import orientation_from_order

    try:
        text = open(path, encoding="utf-8").read() if path != "-" else sys.stdin.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_INPUT) from None
    try:
        if text.lstrip().startswith("{"):
            doc = json.loads(text)
            if "order" in doc:
                return orientation_from_order(g, [int(v) for v in doc["order"]])
            return frozenset((int(a), int(b)) for a, b in doc["arcs"])
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if any("->" in ln for ln in lines):
            arcs = []
            for ln in lines:
                a, b = ln.split("->")
                arcs.append((int(a), int(b)))
            return frozenset(arcs)
        return orientation_from_order(g, [int(t) for t in " ".join(lines).split()])
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as e:
        raise CliError(f"{path}: cannot parse orientation ({e})", EXIT_INPUT) from None
    except GraphError as e:
        raise CliError(f"{path}: {e}", EXIT_INPUT) from None


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    o = _read_orientation(args.orientation, g)
    try:
        ok = verify_transitive(g, o)
    except GraphError as e:
        raise CliError(str(e), EXIT_INPUT) from None
    print(f"transitive: {'true' if ok else 'false'}")
    if not ok:
        print("orientation not transitive", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def trace_document(g: Graph, source: int | None = None) -> dict:
    """Slices, active edges, co-components and partition snapshots as JSON."""
    from .lbfs import lbfs_from
    from .orientation import PipelineTrace, linear_extension, source_vertex
    from .slices import analyze

    x = source_vertex(g) if source is None else source
    r = lbfs_from(g, x)
    t, ann = analyze(g, r)
    pt = PipelineTrace()
    res = linear_extension(g, t, ann, trace=pt)
    slices = []
    for i in range(g.n):
        slices.append({
            "index": i,
            "initial": t.sigma[i],
            "label": list(r.labels[t.sigma[i]]),
            "parent": t.parent[i],
            "subslices": list(t.children[i]),
            "members": ann.members(i),
            "active_edges": [list(e) for e in ann.active_edges(i)],
            "connected": list(ann.connected[i]),
            "cocomponents": [sorted(c) for c in ann.cocomponents(i)],
        })
    return {
        "n": g.n,
        "m": g.m,
        "source": x,
        "lbfs": list(r.sigma),
        "slices": slices,
        "snapshots": [
            {"slice": i, "partition": snap, "pivots": pt.pivots[i] or []}
            for i, snap in enumerate(pt.snapshots)
        ],
        "order": res.order,
    }


def cmd_trace(args: argparse.Namespace) -> int:
    g = _load(args.path)
    if g.n == 0 or not g.is_connected():
        raise CliError("trace needs a non-empty connected graph", EXIT_INPUT)
    try:
        doc = trace_document(g, _parse_vertex(args.source, g))
    except (OrientationError, SliceError) as e:
        raise CliError(f"orientation not transitive: {e}", EXIT_FAIL) from None
    json.dump(doc, sys.stdout, indent=args.indent)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    from .generators import GeneratorConfig, generate

    try:
        g = generate(args.family, GeneratorConfig(args.n, args.density, args.seed))
    except GraphError as e:
        raise CliError(str(e), EXIT_INPUT) from None
    text = f"# family={args.family} n={args.n} density={args.density} seed={args.seed}\n"
    text += format_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def bench_graph(family: str, size: int, seed: int = 0) -> Graph:
    """A member of ``family`` with n + m close to ``size``."""
    from .generators import GeneratorConfig, even_cycle, path_graph, random_bipartite

    if family == "path":
        return path_graph(max(4, (size + 1) // 2))
    if family == "cycle":
        n = max(6, size // 2)
        return even_cycle(n + n % 2)
    if family == "bipartite":
        n = max(8, size // 11)
        density = min(1.0, max(0.0, (size - 2 * n) / (n * n / 4)))
        return random_bipartite(GeneratorConfig(n, density, seed))
    raise CliError(f"unknown bench family {family!r}", EXIT_INPUT)


BENCH_FAMILIES = ("path", "cycle", "bipartite")


def cmd_bench(args: argparse.Namespace) -> int:
    if any(s < 10 for s in args.sizes):
        raise CliError("sizes must be at least 10", EXIT_INPUT)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "size", "n", "m", "seed", *PHASES, "total", "ops_per_size", "wall_s"])
    for size in args.sizes:
        for rep in range(args.repeat):
            seed = args.seed + rep
            for _ in range(args.max_regen):
                g = bench_graph(args.family, size, seed)
                engine = _pick_engine(args.engine, g, False)
                try:
                    report, _ = run_orient(g, engine=engine)
                    break
                except CliError:
                    if args.family != "bipartite":
                        raise
                    seed += 1000  # regenerate a non-prime instance
            else:
                raise CliError(f"no usable {args.family} instance of size {size}", EXIT_FAIL)
            total = sum(report.counters.values())
            writer.writerow([
                args.family, size, g.n, g.m, seed,
                *(report.counters[p] for p in PHASES),
                total, f"{total / (g.n + g.m):.4f}", f"{report.wall_time:.4f}",
            ])
            sys.stdout.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .generators import FAMILIES

    p = argparse.ArgumentParser(prog="transorient", description="Transitive orientation of prime comparability graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    o = sub.add_parser("orient", help="compute a linear extension / transitive orientation")
    o.add_argument("path", help="edge-list file ('-' for stdin)")
    o.add_argument("--verify", action="store_true", help="check the orientation is transitive")
    o.add_argument("--json", action="store_true", help="same as --format json")
    o.add_argument("--format", choices=("order", "arcs", "json"), default="order")
    o.add_argument("--trace", action="store_true", help="print the partition after every slice")
    o.add_argument("--debug", action="store_true", help="check the consistency invariant after every slice")
    o.add_argument("--source", help="use this vertex as the source instead of searching for one")
    o.add_argument("--engine", choices=("auto", "python", "numba"), default="auto")
    o.set_defaults(func=cmd_orient)

    v = sub.add_parser("verify", help="check an orientation for transitivity")
    v.add_argument("graph", help="edge-list file")
    v.add_argument("orientation", help="vertex order, 'u -> v' lines, or orient --json output")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", help="JSON diagnostics: slices, active edges, co-components, snapshots")
    t.add_argument("path")
    t.add_argument("--source", help="start the LBFS here instead of at a computed source")
    t.add_argument("--indent", type=int, default=None)
    t.set_defaults(func=cmd_trace)

    gsub = sub.add_parser("generate", help="write a generated graph in edge-list format")
    gsub.add_argument("--family", choices=FAMILIES, required=True)
    gsub.add_argument("--n", type=int, required=True)
    gsub.add_argument("--density", type=float, default=0.5)
    gsub.add_argument("--seed", type=int, default=0)
    gsub.add_argument("-o", "--output")
    gsub.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="CSV of per-phase counters and wall time")
    b.add_argument("--family", choices=BENCH_FAMILIES, required=True)
    b.add_argument("--sizes", type=int, nargs="+", required=True, help="target n + m values")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--engine", choices=("auto", "python", "numba"), default="auto")
    b.add_argument("--max-regen", type=int, default=5, help=argparse.SUPPRESS)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
