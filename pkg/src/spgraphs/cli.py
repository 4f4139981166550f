"""Command-line interface: compute, reduce, construct, grid, cayley,
verify, export.

Exit codes: 0 on success or a passing check, 1 when a check fails (the
witness is printed), 2 on usage or input errors. Every run prints the
limits (and seed, where one applies) on stderr, and output is
deterministic for fixed flags and seed. The environment variable
SPG_LIMIT overrides the default geodesic limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from .constructions import (
    complete_base,
    even_cycle_base,
    hypercube_base,
    odd_cycle_host_base,
    parallel_paths,
    path_base,
    ConstructionResult,
)
from .geodesics import (
    DEFAULT_GEODESIC_LIMIT,
    GeodesicOverflowError,
    NoGeodesicError,
    reduce_instance,
)
from .graphs import (
    BaseInstance,
    Graph,
    GraphError,
    graph_from_edge_list,
    graph_from_json,
    graph_to_json,
)
from .grid import (
    GridSpec,
    LatticePoint,
    NotInImageError,
    cayley_adjacent_transpositions,
    enumerate_sequences,
    grid_base,
    parse_move_sequence,
    phi,
    phi_inverse,
)
from .isomorphism import find_isomorphism
from .patterns import DEFAULT_WORK_LIMIT, WorkLimitExceeded
from .spg import (
    SpGraph,
    SpgStructureError,
    build_spg,
    difference_index,
    spg_from_json,
    spg_to_dot,
    spg_to_json,
)
from .verify import (
    STANDARD_CHECKS,
    CheckReport,
    check_cayley,
    check_decomposition,
    check_grid_embedding,
    check_staircase,
    check_sum_theorems,
    check_tournament_bijection,
    exhaustive_instances,
    random_instances,
    run_corpus,
)

CHECK_ALIASES = {
    "p3c4": "p3-c4",
    "noc5": "no-induced-c5",
    "claw": "claw-in-c4",
    "oddcycle": "odd-cycle-c4",
    "girth5": "girth5-classification",
    "complete": "complete-iff-same-index",
}


def _default_limit() -> int:
    raw = os.environ.get("SPG_LIMIT")
    if raw is None:
        return DEFAULT_GEODESIC_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise GraphError(f"SPG_LIMIT must be an integer, got {raw!r}") from exc
    if value < 1:
        raise GraphError("SPG_LIMIT must be positive")
    return value


def _banner(args: argparse.Namespace) -> None:
    seed = getattr(args, "seed_in_effect", None)
    seed_part = "none" if seed is None else str(seed)
    print(
        f"# limits: geodesics={args.limit} work={DEFAULT_WORK_LIMIT} seed={seed_part}",
        file=sys.stderr,
    )


def load_instance(path: str, source: str, target: str) -> BaseInstance:
    """Read a graph file (JSON or edge list, by content) into an instance."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        graph = graph_from_json(text)
    else:
        graph = graph_from_edge_list(text)
    return BaseInstance(graph, source, target)


def _write_or_print(payload: str, out: str | None) -> None:
    if out is None:
        print(payload)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")


def _report_exit(report: CheckReport) -> int:
    print(report)
    return 0 if report.passed else 1


# -- subcommand handlers -----------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    inst = load_instance(args.input, args.a, args.b)
    if args.reduce:
        red = reduce_instance(inst)
        if red.collapsed:
            print("reduced instance collapsed to a single vertex; "
                  "the shortest path graph is one lone geodesic")
            h = SpGraph(((red.source,),), {}, 0)
        else:
            inst = red.instance
            h = build_spg(inst, limit=args.limit)
    else:
        h = build_spg(inst, limit=args.limit)
    print(f"geodesics={h.num_vertices} edges={h.num_edges} d={h.d}")
    _write_or_print(spg_to_json(h), args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(spg_to_dot(h))
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    inst = load_instance(args.input, args.a, args.b)
    red = reduce_instance(inst)
    payload = json.dumps(
        {
            "collapsed": red.collapsed,
            "source": red.source,
            "target": red.target,
            "vertex_map": {v: red.vertex_map[v] for v in sorted(red.vertex_map)},
            "graph": json.loads(graph_to_json(red.graph)),
        },
        sort_keys=True,
        indent=2,
    )
    _write_or_print(payload, args.out)
    return 0


def _build_construction(args: argparse.Namespace) -> ConstructionResult:
    kind = args.what
    if kind == "path":
        return path_base(args.k)
    if kind == "complete":
        return complete_base(args.k)
    if kind == "cycle":
        if args.k % 2 != 0 or args.k < 4:
            raise GraphError("cycle length must be an even number >= 4")
        return even_cycle_base(args.k // 2)
    if kind == "oddhost":
        return odd_cycle_host_base(args.k)
    if kind == "hypercube":
        return hypercube_base(args.k)
    if kind == "parallel":
        return parallel_paths(args.k, args.length)
    raise GraphError(f"unknown construction {kind!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    result = _build_construction(args)
    inst = result.instance
    payload = json.dumps(
        {
            "name": result.name,
            "source": inst.source,
            "target": inst.target,
            "graph": json.loads(graph_to_json(inst.graph)),
        },
        sort_keys=True,
        indent=2,
    )
    _write_or_print(payload, args.out)
    if not args.check:
        return 0
    h = build_spg(inst, limit=args.limit)
    if result.predicted is not None:
        ok = find_isomorphism(h.to_graph(), result.predicted) is not None
        verdict = "pass" if ok else "FAIL"
        print(f"check {result.name}: shortest path graph as predicted: {verdict}")
        return 0 if ok else 1
    # witness-style construction: the listed geodesics must induce a cycle
    witness = result.witness or ()
    have = set(h.geodesics)
    missing = [w for w in witness if w not in have]
    if missing:
        print(f"check {result.name}: FAIL (witness geodesic absent: {missing[0]})")
        return 1
    n = len(witness)
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = difference_index(witness[i], witness[j]) is not None
            consecutive = j - i == 1 or (i == 0 and j == n - 1)
            if adjacent != consecutive:
                print(f"check {result.name}: FAIL (witness pair {i},{j} breaks the cycle)")
                return 1
    print(f"check {result.name}: witness induces a {n}-cycle: pass")
    return 0


def _parse_dims(text: str) -> GridSpec:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise GraphError(f"bad dims {text!r}: expected comma-separated integers") from exc
    return GridSpec(dims)


def cmd_grid(args: argparse.Namespace) -> int:
    sub = args.gridcmd
    if sub == "phi":
        spec = _parse_dims(args.dims)
        ms = parse_move_sequence(spec, args.seq)
        point = phi(ms)
        print("(" + ",".join(str(c) for c in point.coords) + ")")
        return 0
    if sub == "unphi":
        spec = _parse_dims(args.dims)
        try:
            coords = tuple(int(part) for part in args.coords.split(","))
        except ValueError as exc:
            raise GraphError(f"bad coords {args.coords!r}") from exc
        try:
            point = LatticePoint(spec, coords)
            ms = phi_inverse(point)
        except (NotInImageError, GraphError) as exc:
            print(f"not in image: {exc}")
            return 0
        print(ms)
        return 0
    if sub == "enum":
        spec = _parse_dims(args.dims)
        sequences = enumerate_sequences(spec, limit=args.limit)
        print(f"count={len(sequences)}")
        for ms in sequences:
            print(ms)
        return 0
    if sub == "base":
        spec = _parse_dims(args.dims)
        inst = grid_base(spec)
        payload = json.dumps(
            {
                "source": inst.source,
                "target": inst.target,
                "graph": json.loads(graph_to_json(inst.graph)),
            },
            sort_keys=True,
            indent=2,
        )
        _write_or_print(payload, args.out)
        return 0
    if sub == "staircase":
        return _report_exit(check_staircase(args.n1, args.n2, limit=args.limit))
    if sub == "check":
        spec = _parse_dims(args.dims)
        return _report_exit(check_grid_embedding(spec, limit=args.limit))
    raise GraphError(f"unknown grid subcommand {sub!r}")


def cmd_cayley(args: argparse.Namespace) -> int:
    if args.check:
        report = check_cayley(args.m, limit=args.limit)
        print(report)
        bijection = check_tournament_bijection(args.m)
        print(bijection)
        return 0 if report.passed and bijection.passed else 1
    g = cayley_adjacent_transpositions(args.m, limit=args.limit)
    _write_or_print(graph_to_json(g), args.out)
    return 0


def _int_or_usage(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise GraphError(f"{what} must be an integer, got {text!r}") from exc


def _corpus_from_flag(args: argparse.Namespace) -> tuple[Iterable[BaseInstance], int | None]:
    """Instances plus the seed in effect (None when not seeded)."""
    flag = args.corpus
    if flag is None:
        raise GraphError("verify needs --corpus (exhaustive:N, random:COUNT:MAXN:SEED, file:PATH)")
    kind, _, rest = flag.partition(":")
    if kind == "exhaustive":
        n = _int_or_usage(rest, "exhaustive corpus size")
        if not 2 <= n <= 8:
            raise GraphError("exhaustive corpus supports 2..8 vertices")
        return list(exhaustive_instances(n)), None
    if kind == "random":
        parts = rest.split(":")
        if len(parts) != 3:
            raise GraphError("random corpus spec is random:COUNT:MAXN:SEED")
        count, max_n, seed = (_int_or_usage(p, "random corpus field") for p in parts)
        return random_instances(count, max_vertices=max_n, seed=seed), seed
    if kind == "file":
        with open(rest, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        entries = payload if isinstance(payload, list) else [payload]
        out = []
        for entry in entries:
            if not isinstance(entry, dict) or {"graph", "source", "target"} - entry.keys():
                raise GraphError(
                    "corpus file entries need graph, source, and target fields"
                )
            graph = graph_from_json(json.dumps(entry["graph"]))
            out.append(BaseInstance(graph, entry["source"], entry["target"]))
        return out, None
    raise GraphError(f"unknown corpus kind {kind!r}")


def _verify_sums(args: argparse.Namespace) -> int:
    kind, _, rest = (args.corpus or "").partition(":")
    parts_raw = rest.split(":")
    if kind != "random" or len(parts_raw) != 3:
        raise GraphError("verify sums needs --corpus random:COUNT:MAXN:SEED")
    count, max_n, seed = (_int_or_usage(p, "random corpus field") for p in parts_raw)
    args.seed_in_effect = seed
    _banner(args)
    parts = random_instances(2 * count, max_vertices=max_n, seed=seed)
    failures = 0
    for t in range(count):
        i1, i2 = parts[2 * t], parts[2 * t + 1]
        for sum_kind in ("one-sum", "union"):
            report = check_sum_theorems(sum_kind, i1, i2, limit=args.limit)
            if not report.passed:
                failures += 1
                print(report)
    print(f"sums: {2 * count} glueings, {failures} failures")
    return 0 if failures == 0 else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.check == "sums":
        return _verify_sums(args)
    if args.spg is not None:
        _banner(args)
        with open(args.spg, "r", encoding="utf-8") as handle:
            h = spg_from_json(handle.read())
        if args.check == "all":
            reports = [fn(h) for fn in STANDARD_CHECKS.values()]
            reports.append(check_decomposition(h))
        elif args.check == "decomp":
            reports = [check_decomposition(h, args.index)]
        else:
            reports = [STANDARD_CHECKS[CHECK_ALIASES[args.check]](h)]
        for report in reports:
            print(report)
        return 0 if all(r.passed for r in reports) else 1
    instances, seed = _corpus_from_flag(args)
    args.seed_in_effect = seed
    _banner(args)
    if args.check == "decomp":
        failures = 0
        total = 0
        first = None
        for inst in instances:
            total += 1
            report = check_decomposition(inst, args.index, limit=args.limit)
            if not report.passed:
                failures += 1
                if first is None:
                    first = report
        print(f"decomposition: {total} instances, {failures} failures")
        if first is not None:
            print(first)
        return 0 if failures == 0 else 1
    checks = None if args.check == "all" else [CHECK_ALIASES[args.check]]
    summary = run_corpus(
        instances,
        checks=checks,
        include_decomposition=args.check == "all",
        limit=args.limit,
    )
    print(summary.table())
    print("PASS" if summary.passed else "FAIL")
    return 0 if summary.passed else 1


def cmd_export(args: argparse.Namespace) -> int:
    with open(args.spg, "r", encoding="utf-8") as handle:
        h = spg_from_json(handle.read())
    dot = spg_to_dot(h, args.name)
    _write_or_print(dot.rstrip("\n"), args.out)
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spgraphs",
        description="Shortest path graphs: construction, reduction, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limit(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--limit",
            type=int,
            default=None,
            help="geodesic count guard (default: SPG_LIMIT or 1000000)",
        )

    p = sub.add_parser("compute", help="build the shortest path graph of an instance")
    p.add_argument("--in", dest="input", required=True, help="graph file (JSON or edge list)")
    p.add_argument("--a", required=True, help="source vertex")
    p.add_argument("--b", required=True, help="target vertex")
    p.add_argument("--out", help="write SpGraph JSON here (default: stdout)")
    p.add_argument("--dot", help="also write DOT with index-colored edges")
    p.add_argument("--reduce", action="store_true", help="reduce the instance first")
    add_limit(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("reduce", help="delete off-geodesic material, contract forced edges")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--out", help="write reduction JSON here (default: stdout)")
    add_limit(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("construct", help="emit a named base instance")
    p.add_argument(
        "what",
        choices=["path", "complete", "cycle", "oddhost", "hypercube", "parallel"],
    )
    p.add_argument("k", type=int, help="size parameter (cycle: even cycle length)")
    p.add_argument("length", type=int, nargs="?", default=3, help="path length (parallel only)")
    p.add_argument("--check", action="store_true", help="verify the predicted shortest path graph")
    p.add_argument("--out", help="write instance JSON here (default: stdout)")
    add_limit(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("grid", help="words, the lattice embedding, staircases")
    gridsub = p.add_subparsers(dest="gridcmd", required=True)
    g = gridsub.add_parser("phi", help="embed a move sequence")
    g.add_argument("--dims", required=True)
    g.add_argument("--seq", required=True)
    add_limit(g)
    g.set_defaults(func=cmd_grid)
    g = gridsub.add_parser("unphi", help="invert the embedding")
    g.add_argument("--dims", required=True)
    g.add_argument("--coords", required=True)
    add_limit(g)
    g.set_defaults(func=cmd_grid)
    g = gridsub.add_parser("enum", help="list all move sequences")
    g.add_argument("--dims", required=True)
    add_limit(g)
    g.set_defaults(func=cmd_grid)
    g = gridsub.add_parser("base", help="emit the grid instance as JSON")
    g.add_argument("--dims", required=True)
    g.add_argument("--out")
    add_limit(g)
    g.set_defaults(func=cmd_grid)
    g = gridsub.add_parser("staircase", help="check the two-axis staircase")
    g.add_argument("--n1", type=int, required=True)
    g.add_argument("--n2", type=int, required=True)
    add_limit(g)
    g.set_defaults(func=cmd_grid)
    g = gridsub.add_parser("check", help="full embedding check for one dims tuple")
    g.add_argument("--dims", required=True)
    add_limit(g)
    g.set_defaults(func=cmd_grid)

    p = sub.add_parser("cayley", help="permutations under adjacent switches")
    p.add_argument("m", type=int)
    p.add_argument("--check", action="store_true")
    p.add_argument("--out")
    add_limit(p)
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("verify", help="run theorem checkers over a corpus")
    p.add_argument(
        "check",
        choices=["all", "p3c4", "noc5", "claw", "oddcycle", "girth5", "complete", "decomp", "sums"],
    )
    p.add_argument("--corpus", help="exhaustive:N | random:COUNT:MAXN:SEED | file:PATH")
    p.add_argument("--spg", help="check one SpGraph JSON file instead of a corpus")
    p.add_argument("--index", type=int, default=None, help="decomp: only this position")
    add_limit(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="SpGraph JSON to DOT")
    p.add_argument("--spg", required=True)
    p.add_argument("--out", help="write DOT here (default: stdout)")
    p.add_argument("--name", default="spg", help="DOT graph name")
    add_limit(p)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.limit is None:
            args.limit = _default_limit()
        if not hasattr(args, "seed_in_effect"):
            args.seed_in_effect = None
        if args.func not in (cmd_verify,):
            _banner(args)
        return args.func(args)
    except (
        GraphError,
        SpgStructureError,
        NoGeodesicError,
        GeodesicOverflowError,
        WorkLimitExceeded,
        NotInImageError,
        OSError,
        KeyError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
