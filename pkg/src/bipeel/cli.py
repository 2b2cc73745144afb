"""Command surface: dataset ingestion, decompositions, profile emission.

Subcommands: count, tip, wing, core, frac-core, nucleus23, hierarchy,
fetch. Every decomposition writes a value dump, a profile CSV (one row
per subgraph in the hierarchy, filterable by density and side sizes) and,
on request, per-node member lists and a phase-timing file. Outputs are
byte-identical across repeated runs on the same input.

Exit codes: 0 success, 1 usage error, 2 input error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .baselines import (
    core_decompose,
    core_hierarchy,
    fractional_core_decompose,
    fractional_core_hierarchy,
    nucleus23_decompose,
    nucleus23_hierarchy,
    triangle_supports,
)
from .butterflies import count_per_edge, count_per_vertex
from .datasets import fetch_dataset
from .errors import BipeelError, DatasetError, EdgeListParseError, EmptyGraphError
from .graph import BipartiteGraph, load_bipartite
from .hierarchy import NucleusTree, build_hierarchy, subgraph_profiles
from .projection import project_unweighted, project_weighted
from .tip import tip_decompose
from .wing import wing_decompose

__all__ = ["RunConfig", "run", "main", "ALGORITHMS"]

ALGORITHMS = ("tip", "wing", "core", "frac-core", "nucleus23", "count")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_RUNTIME = 3

PROFILE_HEADER = "node_id,parent_id,kind,k,u_size,v_size,edges,density"


@dataclass
class RunConfig:
    """One CLI invocation, validated before any work starts."""

    input_path: str
    algorithm: str = "count"
    primary_side: str = "left"
    min_density: float = 0.0
    min_u: int = 0
    min_v: int = 0
    output_dir: str = "."
    emit_members: bool = False
    emit_timings: bool = False
    emit_values: bool = True

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise UsageError(
                f"unknown algorithm {self.algorithm!r}; choose from {', '.join(ALGORITHMS)}"
            )
        if self.primary_side not in ("left", "right"):
            raise UsageError("primary side must be 'left' or 'right'")
        if not 0.0 <= self.min_density <= 1.0:
            raise UsageError("min density must lie in [0, 1]")
        if self.min_u < 0 or self.min_v < 0:
            raise UsageError("size filters must be nonnegative")


class UsageError(ValueError):
    pass


def run(config: RunConfig) -> None:
    """Execute one configured run, writing artifacts into the output dir."""
    config.validate()
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    timings: dict[str, float] = {}
    started = time.perf_counter()
    graph = load_bipartite(config.input_path, config.primary_side)
    timings["load_s"] = time.perf_counter() - started
    stats = graph.load_stats
    print(
        f"loaded |U|={graph.u_count} |V|={graph.v_count} |E|={graph.edge_count}"
        f" (duplicate edges collapsed: {stats.duplicate_edges})"
    )

    algo = config.algorithm
    tag = algo.replace("-", "_")
    if algo == "count":
        t0 = time.perf_counter()
        per_vertex = count_per_vertex(graph)
        per_edge = count_per_edge(graph)
        timings["counting_s"] = time.perf_counter() - t0
        if per_vertex.total != per_edge.total:
            raise RuntimeError(
                f"counting paths disagree: {per_vertex.total} vs {per_edge.total}"
            )
        line = f"butterflies={per_vertex.total}"
        (out_dir / "counts.txt").write_text(line + "\n")
        print(line)
    else:
        tree = _run_decomposition(config, graph, out_dir, timings, tag)
        rows = _filtered_profiles(tree, config)
        _write_profiles(out_dir / f"{tag}_profiles.csv", rows)
        print(
            f"{algo}: {len(tree)} subgraphs, {len(rows)} pass the filters "
            f"(density >= {config.min_density:g}, |U| >= {config.min_u}, "
            f"|V| >= {config.min_v})"
        )
        if config.emit_members:
            _write_members(out_dir / f"{tag}_members.tsv", tree, graph)

    timings["total_s"] = time.perf_counter() - started
    if config.emit_timings:
        rounded = {k: round(v, 3) for k, v in timings.items()}
        (out_dir / "timings.json").write_text(json.dumps(rounded, indent=2) + "\n")


def _run_decomposition(
    config: RunConfig,
    graph: BipartiteGraph,
    out_dir: Path,
    timings: dict[str, float],
    tag: str,
) -> NucleusTree:
    algo = config.algorithm
    t0 = time.perf_counter()
    if algo in ("tip", "wing"):
        counts = count_per_vertex(graph) if algo == "tip" else count_per_edge(graph)
        timings["counting_s"] = time.perf_counter() - t0
        t1 = time.perf_counter()
        result = (
            tip_decompose(graph, counts)
            if algo == "tip"
            else wing_decompose(graph, counts)
        )
        timings["peeling_s"] = time.perf_counter() - t1
        t2 = time.perf_counter()
        tree = build_hierarchy(graph, result)
        timings["hierarchy_s"] = time.perf_counter() - t2
        values = (
            result.tip_numbers if algo == "tip" else result.wing_numbers
        )
        _print_summary(algo, values)
        if config.emit_values:
            with open(out_dir / f"{tag}_values.tsv", "w", encoding="utf-8") as fh:
                if algo == "tip":
                    for u, value in enumerate(values):
                        fh.write(f"{graph.labels_u[u]}\t{value}\n")
                else:
                    for e, value in enumerate(values):
                        u, v = graph.edge_endpoints(e)
                        fh.write(
                            f"{graph.labels_u[u]}\t{graph.labels_v[v]}\t{value}\n"
                        )
        return tree

    if algo == "core":
        gp = project_unweighted(graph)
        timings["counting_s"] = time.perf_counter() - t0
        t1 = time.perf_counter()
        result = core_decompose(gp)
        timings["peeling_s"] = time.perf_counter() - t1
        t2 = time.perf_counter()
        tree = core_hierarchy(graph, gp, result)
        timings["hierarchy_s"] = time.perf_counter() - t2
        _print_summary(algo, result.core_numbers)
        if config.emit_values:
            with open(out_dir / f"{tag}_values.tsv", "w", encoding="utf-8") as fh:
                for u, value in enumerate(result.core_numbers):
                    fh.write(f"{graph.labels_u[u]}\t{value}\n")
        return tree

    if algo == "frac-core":
        gwp = project_weighted(graph)
        timings["counting_s"] = time.perf_counter() - t0
        t1 = time.perf_counter()
        result = fractional_core_decompose(gwp)
        timings["peeling_s"] = time.perf_counter() - t1
        t2 = time.perf_counter()
        tree = fractional_core_hierarchy(graph, gwp, result)
        timings["hierarchy_s"] = time.perf_counter() - t2
        print(f"max frac-core value: {max(result.core_numbers, default=0):.6f}")
        if config.emit_values:
            with open(out_dir / f"{tag}_values.tsv", "w", encoding="utf-8") as fh:
                for u, value in enumerate(result.core_numbers):
                    fh.write(f"{graph.labels_u[u]}\t{value:.6f}\n")
        return tree

    # nucleus23
    gp = project_unweighted(graph)
    supports = triangle_supports(gp)
    timings["counting_s"] = time.perf_counter() - t0
    t1 = time.perf_counter()
    result = nucleus23_decompose(gp, supports)
    timings["peeling_s"] = time.perf_counter() - t1
    t2 = time.perf_counter()
    tree = nucleus23_hierarchy(graph, gp, result)
    timings["hierarchy_s"] = time.perf_counter() - t2
    _print_summary(algo, result.nucleus_numbers)
    if config.emit_values:
        with open(out_dir / f"{tag}_values.tsv", "w", encoding="utf-8") as fh:
            for eid, value in enumerate(result.nucleus_numbers):
                a, b = gp.edge_list[eid]
                fh.write(f"{graph.labels_u[a]}\t{graph.labels_u[b]}\t{value}\n")
    return tree


def _print_summary(algo: str, values) -> None:
    histogram = Counter(values)
    top = max(values, default=0)
    print(f"max {algo} value: {top}")
    body = " ".join(f"{k}:{histogram[k]}" for k in sorted(histogram))
    print(f"{algo} histogram: {body}")


def _filtered_profiles(tree: NucleusTree, config: RunConfig) -> list[dict]:
    rows = []
    for row in subgraph_profiles(tree):
        if row["density"] < config.min_density:
            continue
        if row["u_size"] < config.min_u or row["v_size"] < config.min_v:
            continue
        rows.append(row)
    return rows


def _format_level(value) -> str:
    if isinstance(value, float) and not value.is_integer():
        return f"{value:.6f}"
    return str(int(value))


def _write_profiles(path: Path, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(PROFILE_HEADER + "\n")
        for row in rows:
            parent = "" if row["parent_id"] is None else str(row["parent_id"])
            fh.write(
                f"{row['node_id']},{parent},{row['kind']},"
                f"{_format_level(row['k'])},{row['u_size']},{row['v_size']},"
                f"{row['edges']},{row['density']:.6f}\n"
            )


def _write_members(path: Path, tree: NucleusTree, graph: BipartiteGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for node in tree.nodes:
            if tree.kind in ("tip", "core", "frac-core"):
                for u in node.members:
                    fh.write(f"{node.node_id}\t{graph.labels_u[u]}\n")
            elif tree.kind == "wing":
                for e in node.members:
                    u, v = graph.edge_endpoints(e)
                    fh.write(
                        f"{node.node_id}\t{graph.labels_u[u]}\t{graph.labels_v[v]}\n"
                    )
            else:  # nucleus23: members are projected edges between primaries
                for e in node.members:
                    fh.write(f"{node.node_id}\t{e}\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bipeel",
        description="Butterfly-based dense subgraph discovery in bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="edge-list file (tokenA tokenB per line)")
        p.add_argument(
            "--primary-side",
            choices=("left", "right"),
            default="left",
            help="which column drives the decomposition (default: left)",
        )
        p.add_argument("--min-density", type=float, default=0.0)
        p.add_argument("--min-u", type=int, default=0)
        p.add_argument("--min-v", type=int, default=0)
        p.add_argument("--output-dir", default=".")
        p.add_argument(
            "--members", action="store_true", help="emit per-node member lists"
        )
        p.add_argument(
            "--timings", action="store_true", help="emit phase wall times"
        )

    helps = {
        "count": "total butterfly count (verified on both counting paths)",
        "tip": "tip numbers of primary vertices plus the k-tip hierarchy",
        "wing": "wing numbers of edges plus the k-wing hierarchy",
        "core": "k-core numbers on the unweighted projection",
        "frac-core": "fractional core values on the weighted projection",
        "nucleus23": "triangle-nucleus decomposition on the projection",
    }
    for name in ALGORITHMS:
        p = sub.add_parser(name, help=helps[name])
        add_run_flags(p)

    hier = sub.add_parser("hierarchy", help="profile CSV of the nucleus forest")
    add_run_flags(hier)
    hier.add_argument(
        "--algorithm", choices=("tip", "wing"), default="wing", dest="hier_algorithm"
    )

    fetch = sub.add_parser("fetch", help="download and normalize a known dataset")
    fetch.add_argument("name")
    fetch.add_argument("--cache-dir", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fetch":
            path = fetch_dataset(args.name, cache_dir=args.cache_dir)
            print(path)
            return EXIT_OK
        algorithm = (
            args.hier_algorithm if args.command == "hierarchy" else args.command
        )
        config = RunConfig(
            input_path=args.input,
            algorithm=algorithm,
            primary_side=args.primary_side,
            min_density=args.min_density,
            min_u=args.min_u,
            min_v=args.min_v,
            output_dir=args.output_dir,
            emit_members=args.members,
            emit_timings=args.timings,
            emit_values=args.command != "hierarchy",
        )
        run(config)
        return EXIT_OK
    except UsageError as exc:
        print(f"bipeel: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdgeListParseError, EmptyGraphError, DatasetError) as exc:
        print(f"bipeel: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        if isinstance(exc, (FileNotFoundError, IsADirectoryError)):
            print(f"bipeel: input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"bipeel: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except BipeelError as exc:
        print(f"bipeel: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # pragma: no cover - defensive
        print(f"bipeel: internal error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
