"""Executable checks for the structural facts this library is built around.

Each checker takes a shortest path graph (or a base instance, which it
builds first) and returns a CheckReport: pass, or fail with a concrete
witness that a one-line predicate can re-verify. Checkers never assume
their input is realizable as a shortest path graph, so deliberately broken
hand-built inputs can demonstrate that every checker is able to fail.

The module also carries the corpus machinery (exhaustive small graphs up
to isomorphism, seeded random instances) and the heavier whole-family
checks for grids, staircases, and permutation graphs.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from .constructions import (
    CASE_OVERLAP,
    one_sum,
    predict_two_sum,
    two_sum,
    union_base,
)
from .geodesics import DEFAULT_GEODESIC_LIMIT, GeodesicOverflowError, enumerate_geodesics
from .graphs import (
    BaseInstance,
    Graph,
    GraphError,
    cartesian_product,
    connected_components,
    distances,
    girth,
    is_connected,
)
from .grid import (
    GridSpec,
    cayley_adjacent_transpositions,
    grid_base,
    iter_words,
    MoveSequence,
    name_coords,
    phi_batch,
    staircase,
    tournament_of,
    words_array,
)
from .isomorphism import find_isomorphism, iso_invariant
from .patterns import DEFAULT_WORK_LIMIT, find_induced, has_induced
from .spg import (
    SpGraph,
    SpgStructureError,
    build_spg,
    decompose_at_index,
    difference_positions,
    spg_from_geodesics,
)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check: a verdict plus the evidence for it."""

    name: str
    passed: bool
    witness: str | None = None
    stats: dict[str, object] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "passed": self.passed,
                "witness": self.witness,
                "stats": self.stats,
            },
            sort_keys=True,
            default=str,
        )

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        tail = "" if self.witness is None else f" [{self.witness}]"
        return f"{self.name}: {verdict}{tail}"


def _as_spg(obj: BaseInstance | SpGraph, *, limit: int) -> SpGraph:
    if isinstance(obj, BaseInstance):
        return build_spg(obj, limit=limit)
    if isinstance(obj, SpGraph):
        return obj
    raise TypeError(f"expected BaseInstance or SpGraph, got {type(obj).__name__}")


def _neighbor_masks(h: SpGraph) -> list[int]:
    masks = [0] * h.num_vertices
    for i, j in h.edge_index:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def _geo_str(h: SpGraph, i: int) -> str:
    return " ".join(h.geodesics[i])


# -- single-structure checkers ----------------------------------------------


def check_p3_c4(
    obj: BaseInstance | SpGraph, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """Induced paths on three vertices whose two difference indices are at
    least two apart must sit inside an induced four-cycle."""
    h = _as_spg(obj, limit=limit)
    masks = _neighbor_masks(h)
    triples = 0
    for mid in range(h.num_vertices):
        nbrs = h.neighbors[mid]
        for u, w in combinations(nbrs, 2):
            if masks[u] >> w & 1:
                continue
            iu = h.edge_index[(u, mid) if u < mid else (mid, u)]
            iw = h.edge_index[(w, mid) if w < mid else (mid, w)]
            if abs(iu - iw) < 2:
                continue
            triples += 1
            fourth = masks[u] & masks[w] & ~masks[mid] & ~(1 << mid)
            if not fourth:
                return CheckReport(
                    "p3-c4",
                    False,
                    f"no four-cycle through {_geo_str(h, u)} | "
                    f"{_geo_str(h, mid)} | {_geo_str(h, w)} "
                    f"(indices {iu}, {iw})",
                    {"far_triples": triples},
                )
    return CheckReport("p3-c4", True, None, {"far_triples": triples})


def check_no_induced_c5(
    obj: BaseInstance | SpGraph,
    *,
    limit: int = DEFAULT_GEODESIC_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> CheckReport:
    """No shortest path graph contains an induced five-cycle."""
    h = _as_spg(obj, limit=limit)
    g = h.to_graph()
    found = find_induced(g, "C5", work_limit=work_limit)
    stats = {"vertices": h.num_vertices, "edges": h.num_edges}
    if found:
        return CheckReport(
            "no-induced-c5", False, f"induced five-cycle {found[0]}", stats
        )
    return CheckReport("no-induced-c5", True, None, stats)


def check_claw_in_c4(
    obj: BaseInstance | SpGraph,
    *,
    limit: int = DEFAULT_GEODESIC_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> CheckReport:
    """Every induced claw has a four-cycle through two of its edges.

    The four-cycle runs center, leaf, opposite vertex, other leaf; it does
    not need to be induced.
    """
    h = _as_spg(obj, limit=limit)
    g = h.to_graph()
    masks = _neighbor_masks(h)
    claws = find_induced(g, "claw", work_limit=work_limit)
    for claw in claws:
        center, *leaves = (int(name[1:]) for name in claw)
        hit = False
        for p, q in combinations(leaves, 2):
            if masks[p] & masks[q] & ~(1 << center):
                hit = True
                break
        if not hit:
            return CheckReport(
                "claw-in-c4",
                False,
                f"claw {claw} lies on no four-cycle through two of its edges",
                {"claws": len(claws)},
            )
    return CheckReport("claw-in-c4", True, None, {"claws": len(claws)})


def check_odd_cycle_c4(
    obj: BaseInstance | SpGraph,
    *,
    cap: int = 9,
    limit: int = DEFAULT_GEODESIC_LIMIT,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> CheckReport:
    """An induced odd cycle longer than a triangle forces an induced
    four-cycle. The odd-cycle search stops at length ``cap``."""
    h = _as_spg(obj, limit=limit)
    g = h.to_graph()
    stats: dict[str, object] = {"cap": cap, "odd_cycle": None}
    for k in range(5, cap + 1, 2):
        found = find_induced(g, f"C{k}", work_limit=work_limit)
        if found:
            stats["odd_cycle"] = k
            if has_induced(g, "C4", work_limit=work_limit):
                return CheckReport("odd-cycle-c4", True, None, stats)
            return CheckReport(
                "odd-cycle-c4",
                False,
                f"induced {k}-cycle {found[0]} but no induced four-cycle",
                stats,
            )
    return CheckReport("odd-cycle-c4", True, None, stats)


def check_girth5_classification(
    obj: BaseInstance | SpGraph, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """Without cycles shorter than five, every nontrivial component must be
    a path or an even cycle on at least six vertices.

    "Even length greater than 5" is read as length at least six; the girth
    bound already rules out shorter cycles. A graph of girth exactly five
    fails (an odd cycle is neither allowed shape), which is the point: no
    shortest path graph has girth five.
    """
    h = _as_spg(obj, limit=limit)
    g = h.to_graph()
    gr = girth(g)
    stats: dict[str, object] = {"girth": gr, "components": 0}
    if gr < 5:
        return CheckReport("girth5-classification", True, None, stats)
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        stats["components"] = int(stats["components"]) + 1
        sub = g.subgraph(comp)
        max_deg = max(sub.degree(v) for v in sub.vertices)
        is_path = sub.num_edges == sub.num_vertices - 1 and max_deg <= 2
        is_even_cycle = (
            max_deg == 2
            and min(sub.degree(v) for v in sub.vertices) == 2
            and sub.num_vertices % 2 == 0
            and sub.num_vertices >= 6
        )
        if not (is_path or is_even_cycle):
            return CheckReport(
                "girth5-classification",
                False,
                f"component {comp} is neither a path nor an even cycle >= 6",
                stats,
            )
    return CheckReport("girth5-classification", True, None, stats)


def check_complete_iff_same_index(
    obj: BaseInstance | SpGraph, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """The graph is complete exactly when all geodesic pairs differ at one
    shared position. Completeness is read off the edge set, the shared
    position off the sequences, so the two sides are independent."""
    h = _as_spg(obj, limit=limit)
    n = h.num_vertices
    stats = {"vertices": n, "edges": h.num_edges}
    if n <= 1:
        return CheckReport("complete-iff-same-index", True, None, stats)
    complete = h.num_edges == n * (n - 1) // 2
    same_index = True
    common: int | None = None
    for u, w in combinations(range(n), 2):
        diffs = difference_positions(h.geodesics[u], h.geodesics[w])
        if len(diffs) != 1 or (common is not None and diffs[0] != common):
            same_index = False
            break
        common = diffs[0]
    if complete == same_index:
        return CheckReport("complete-iff-same-index", True, None, stats)
    return CheckReport(
        "complete-iff-same-index",
        False,
        f"complete={complete} but single shared difference index={same_index}",
        stats,
    )


def _sub_spg(h: SpGraph, members: tuple[int, ...]) -> SpGraph:
    renumber = {old: new for new, old in enumerate(members)}
    kept = set(members)
    edges = {
        (renumber[a], renumber[b]): pos
        for (a, b), pos in h.edge_index.items()
        if a in kept and b in kept
    }
    return SpGraph([h.geodesics[i] for i in members], edges)


def check_decomposition(
    obj: BaseInstance | SpGraph,
    i: int | None = None,
    *,
    limit: int = DEFAULT_GEODESIC_LIMIT,
) -> CheckReport:
    """Splitting at interior position i groups geodesics by their vertex
    there; edges cross groups exactly at difference index i and form
    partial matchings between group pairs, and each group (given the base
    instance) is the Cartesian product of the two one-sided shortest path
    graphs through its middle vertex. With ``i=None`` every interior
    position is checked."""
    inst = obj if isinstance(obj, BaseInstance) else None
    h = _as_spg(obj, limit=limit)
    name = "decomposition" if i is None else f"decomposition@{i}"
    stats: dict[str, object] = {"indices": 0, "products": 0}
    if h.num_vertices == 0 or h.d is None or h.d < 2:
        return CheckReport(name, True, None, stats)
    if i is not None and not 1 <= i <= h.d - 1:
        raise SpgStructureError(f"index {i} is not interior for d={h.d}")
    for idx in range(1, h.d) if i is None else (i,):
        try:
            dec = decompose_at_index(h, idx)
        except SpgStructureError as exc:
            return CheckReport(name, False, str(exc), stats)
        group_of = {}
        for k, comp in enumerate(dec.components):
            for vi in comp:
                group_of[vi] = k
        taken: set[tuple[int, int]] = set()
        for u, w in dec.cross_edges:
            for src, other in ((u, group_of[w]), (w, group_of[u])):
                if (src, other) in taken:
                    return CheckReport(
                        name,
                        False,
                        f"two edges at index {idx} join geodesic {src} "
                        f"to the group of {dec.middle_vertices[other]}",
                        stats,
                    )
                taken.add((src, other))
        stats["indices"] = int(stats["indices"]) + 1
        if inst is None:
            continue
        for k, v in enumerate(dec.middle_vertices):
            comp_graph = _sub_spg(h, dec.components[k]).to_graph()
            left = build_spg(BaseInstance(inst.graph, inst.source, v), limit=limit)
            right = build_spg(BaseInstance(inst.graph, v, inst.target), limit=limit)
            prod = cartesian_product(left.to_graph("l"), right.to_graph("r"))
            if find_isomorphism(comp_graph, prod) is None:
                return CheckReport(
                    name,
                    False,
                    f"group through {v} at position {idx} is not the product "
                    f"of the one-sided shortest path graphs",
                    stats,
                )
            stats["products"] = int(stats["products"]) + 1
    return CheckReport(name, True, None, stats)


# -- sum checkers ------------------------------------------------------------


def check_sum_theorems(
    kind: str, *parts, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """Compare a glued instance's shortest path graph with the composition
    predicted from its parts.

    kind "one-sum" and "union" take two base instances; kind "two-sum"
    takes (g1, a, g2, b, x, y) with (x, y) the shared edge. For two-sums
    whose case is not "overlap", the check also deletes the shared edge
    and requires the geodesics and the shortest path graph to be untouched.
    """
    if kind == "one-sum" or kind == "union":
        if len(parts) != 2:
            raise GraphError(f"{kind} expects two instances")
        result = (one_sum if kind == "one-sum" else union_base)(*parts)
        direct = build_spg(result.instance, limit=limit)
        stats: dict[str, object] = {
            "vertices": direct.num_vertices,
            "edges": direct.num_edges,
        }
        if find_isomorphism(direct.to_graph(), result.predicted) is None:
            return CheckReport(
                kind, False, "direct shortest path graph differs from prediction", stats
            )
        return CheckReport(kind, True, None, stats)
    if kind != "two-sum":
        raise GraphError(f"unknown sum kind {kind!r}")
    if len(parts) != 6:
        raise GraphError("two-sum expects (g1, a, g2, b, x, y)")
    g1, a, g2, b, x, y = parts
    prediction = predict_two_sum(g1, a, g2, b, x, y, limit=limit)
    inst = two_sum(g1, a, g2, b, x, y)
    direct = build_spg(inst, limit=limit)
    stats = {
        "case": prediction.case,
        "vertices": direct.num_vertices,
        "edges": direct.num_edges,
    }
    if find_isomorphism(direct.to_graph(), prediction.predicted) is None:
        return CheckReport(
            "two-sum",
            False,
            f"case {prediction.case}: direct shortest path graph differs "
            f"from prediction",
            stats,
        )
    if prediction.case != CASE_OVERLAP:
        pruned = BaseInstance(
            inst.graph.without_edge(x, y), inst.source, inst.target
        )
        after = build_spg(pruned, limit=limit)
        if after.geodesics != direct.geodesics or after.edge_index != direct.edge_index:
            return CheckReport(
                "two-sum",
                False,
                f"case {prediction.case}: deleting the shared edge changed "
                f"the shortest path graph",
                stats,
            )
    return CheckReport("two-sum", True, None, stats)


# -- corpora ------------------------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs on exactly n vertices, one per isomorphism class.

    Builds up one vertex at a time: every graph on n vertices arises from
    some graph on n-1 vertices by adding one vertex with some neighborhood,
    so scanning all neighborhoods of all smaller classes is exhaustive.

    >>> [len(enumerate_graphs(n)) for n in range(1, 5)]
    [1, 2, 4, 11]
    """
    if n < 1:
        raise GraphError("n must be positive")
    if n == 1:
        return (Graph(["0"]),)
    out: list[Graph] = []
    buckets: dict[object, list[Graph]] = {}
    new_vertex = str(n - 1)
    for g in enumerate_graphs(n - 1):
        base = g.vertices
        for mask in range(2 ** (n - 1)):
            edges = list(g.sorted_edges())
            edges += [
                (base[t], new_vertex) for t in range(n - 1) if mask >> t & 1
            ]
            h = Graph(base + (new_vertex,), edges)
            key = iso_invariant(h)
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(h, seen) is not None for seen in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return tuple(out)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """The connected isomorphism classes on exactly n vertices.

    >>> [len(connected_graphs(n)) for n in range(1, 5)]
    [1, 1, 2, 6]
    """
    return tuple(g for g in enumerate_graphs(n) if is_connected(g))


def exhaustive_instances(max_n: int) -> Iterator[BaseInstance]:
    """Every connected graph on 2..max_n vertices (up to isomorphism) with
    every ordered endpoint pair."""
    for n in range(2, max_n + 1):
        for g in connected_graphs(n):
            for a in g.vertices:
                for b in g.vertices:
                    if a != b:
                        yield BaseInstance(g, a, b)


def random_instances(
    count: int, *, max_vertices: int = 10, seed: int = 0
) -> list[BaseInstance]:
    """Seeded random instances: G(n, p) with n in 4..max_vertices and
    p in {0.3, 0.5}, endpoints redrawn until connected."""
    rng = random.Random(seed)
    out: list[BaseInstance] = []
    while len(out) < count:
        n = rng.randint(4, max_vertices)
        p = rng.choice((0.3, 0.5))
        names = [str(t) for t in range(n)]
        edges = [
            (u, v) for u, v in combinations(names, 2) if rng.random() < p
        ]
        g = Graph(names, edges)
        a, b = rng.sample(names, 2)
        if distances(g, a)[b] == math.inf:
            continue
        out.append(BaseInstance(g, a, b))
    return out


def instance_label(inst: BaseInstance) -> str:
    return (
        f"{inst.graph.num_vertices}v{inst.graph.num_edges}e:"
        f"{inst.source}->{inst.target}"
    )


STANDARD_CHECKS: dict[str, Callable[..., CheckReport]] = {
    "p3-c4": check_p3_c4,
    "no-induced-c5": check_no_induced_c5,
    "claw-in-c4": check_claw_in_c4,
    "odd-cycle-c4": check_odd_cycle_c4,
    "girth5-classification": check_girth5_classification,
    "complete-iff-same-index": check_complete_iff_same_index,
}


@dataclass
class CheckRollup:
    ran: int = 0
    failed: int = 0
    first_failure: str | None = None


@dataclass
class CorpusSummary:
    instances: int
    rollups: dict[str, CheckRollup]

    @property
    def passed(self) -> bool:
        return all(r.failed == 0 for r in self.rollups.values())

    def table(self) -> str:
        width = max(len(name) for name in self.rollups) if self.rollups else 4
        lines = [f"instances: {self.instances}"]
        for name in sorted(self.rollups):
            r = self.rollups[name]
            verdict = "pass" if r.failed == 0 else f"FAIL ({r.failed})"
            lines.append(f"  {name:<{width}}  ran {r.ran:>6}  {verdict}")
            if r.first_failure is not None:
                lines.append(f"    first failure: {r.first_failure}")
        return "\n".join(lines)


def run_corpus(
    instances: Iterable[BaseInstance],
    *,
    checks: Iterable[str] | None = None,
    include_decomposition: bool = False,
    limit: int = DEFAULT_GEODESIC_LIMIT,
) -> CorpusSummary:
    """Run the named checks (default: all standard ones) over a corpus and
    aggregate the outcomes per check."""
    names = list(STANDARD_CHECKS) if checks is None else list(checks)
    unknown = [name for name in names if name not in STANDARD_CHECKS]
    if unknown:
        raise GraphError(f"unknown checks: {', '.join(unknown)}")
    rollups: dict[str, CheckRollup] = {name: CheckRollup() for name in names}
    if include_decomposition:
        rollups["decomposition"] = CheckRollup()
    total = 0
    for pos, inst in enumerate(instances):
        total += 1
        h = build_spg(inst, limit=limit)
        reports = [(name, STANDARD_CHECKS[name](h)) for name in names]
        if include_decomposition:
            reports.append(("decomposition", check_decomposition(inst, limit=limit)))
        for name, report in reports:
            roll = rollups[name]
            roll.ran += 1
            if not report.passed:
                roll.failed += 1
                if roll.first_failure is None:
                    roll.first_failure = (
                        f"#{pos} {instance_label(inst)}: {report.witness}"
                    )
    return CorpusSummary(total, rollups)


# -- whole-family checks -------------------------------------------------------


def _column_multipliers(radixes: list[int]) -> np.ndarray:
    """Mixed-radix place values packing one row into one int64.

    Column c holds values in 0..radixes[c]-1. Nine grid moves keep the
    packed range under 2^63 (the widest case is 36 three-valued columns);
    the product is checked anyway.
    """
    if math.prod(radixes) >= 2**62:
        raise GraphError("embedding too wide to pack into one machine word")
    mult = np.ones(len(radixes), dtype=np.int64)
    for c in range(len(radixes) - 2, -1, -1):
        mult[c] = mult[c + 1] * radixes[c + 1]
    return mult


def check_grid_embedding(
    spec: GridSpec, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """End-to-end check of one grid: the embedding is injective, respects
    adjacency in both directions and the image constraints, and the grid's
    shortest path graph matches the word graph edge for edge.

    The geodesic-to-word correspondence is exact (each geodesic is decoded
    along grid edges and located in the lexicographic word list), so the
    final comparison certifies an isomorphism rather than searching for
    one.
    """
    name = "grid-embedding-" + "x".join(str(n) for n in spec.dims)
    count = spec.word_count()
    if count > limit:
        raise GeodesicOverflowError(count, limit)
    words = words_array(spec)
    total, n_moves = words.shape
    dim = spec.embedding_dim
    stats: dict[str, object] = {"words": total, "dimension": dim}

    def fail(witness: str) -> CheckReport:
        return CheckReport(name, False, witness, stats)

    coords = phi_batch(spec, words)
    wpow = (spec.m + 1) ** np.arange(n_moves - 1, -1, -1, dtype=np.int64)
    wcodes = words.astype(np.int64) @ wpow
    if total > 1 and not bool(np.all(np.diff(wcodes) > 0)):
        return fail("word enumeration is not strictly lexicographic")

    # image constraints: bounds per pair, weakly decreasing within a pair
    layout = spec.coordinate_layout()
    for c, (i, j, k) in enumerate(layout):
        col = coords[:, c]
        if int(col.min()) < 0 or int(col.max()) > spec.dims[i - 1]:
            return fail(f"coordinate ({i},{j},{k}) leaves 0..{spec.dims[i - 1]}")
        if k > 1 and bool(np.any(col > coords[:, c - 1])):
            return fail(f"coordinate ({i},{j},{k}) exceeds ({i},{j},{k - 1})")

    if dim:
        # one more than each column's widest query value (bound + 1)
        radixes = [spec.dims[i - 1] + 2 for (i, j, k) in layout]
        mult = _column_multipliers(radixes)
        codes = coords.astype(np.int64) @ mult
        order = np.argsort(codes, kind="stable")
        sorted_codes = codes[order]
        dup = sorted_codes[1:] == sorted_codes[:-1]
        if bool(dup.any()):
            r = int(np.nonzero(dup)[0][0])
            return fail(
                f"embedding collides on words {int(order[r])} and {int(order[r + 1])}"
            )

    # forward: words one switch apart sit at lattice distance one
    eu_parts: list[np.ndarray] = []
    ev_parts: list[np.ndarray] = []
    for r in range(n_moves - 1):
        rows = np.nonzero(words[:, r] != words[:, r + 1])[0]
        if rows.size == 0:
            continue
        swapped = words[rows].copy()
        swapped[:, [r, r + 1]] = swapped[:, [r + 1, r]]
        scodes = swapped.astype(np.int64) @ wpow
        pos = np.searchsorted(wcodes, scodes)
        if bool(np.any(wcodes[np.minimum(pos, total - 1)] != scodes)):
            return fail(f"a switch at position {r} left the word set")
        keep = rows < pos
        u, v = rows[keep].astype(np.int64), pos[keep].astype(np.int64)
        if dim:
            gap = np.abs(
                coords[u].astype(np.int32) - coords[v].astype(np.int32)
            ).sum(axis=1)
            if bool(np.any(gap != 1)):
                bad = int(np.nonzero(gap != 1)[0][0])
                return fail(
                    f"adjacent words {int(u[bad])} and {int(v[bad])} land "
                    f"{int(gap[bad])} lattice steps apart"
                )
        eu_parts.append(u)
        ev_parts.append(v)
    empty = np.empty(0, dtype=np.int64)
    eu = np.concatenate(eu_parts) if eu_parts else empty
    ev = np.concatenate(ev_parts) if ev_parts else empty
    word_edges = np.sort(eu * total + ev)
    stats["edges"] = int(word_edges.size)

    # reverse: lattice steps inside the image are exactly those switches
    if dim:
        lat_parts: list[np.ndarray] = []
        for c in range(dim):
            qcodes = codes + mult[c]
            pos = np.searchsorted(sorted_codes, qcodes)
            cand = np.minimum(pos, total - 1)
            hit = (pos < total) & (sorted_codes[cand] == qcodes)
            # a +1 step that overflows the column can alias a higher column;
            # packing radixes exceed every query value, so it cannot happen,
            # but the bounds check above already confines coords anyway
            u = np.nonzero(hit)[0].astype(np.int64)
            v = order[cand[hit]].astype(np.int64)
            lat_parts.append(np.minimum(u, v) * total + np.maximum(u, v))
        lat_edges = np.sort(np.concatenate(lat_parts) if lat_parts else empty)
        if not np.array_equal(lat_edges, word_edges):
            return fail("image-induced lattice adjacency differs from word switches")

    # the shortest path graph side
    inst = grid_base(spec)
    geodesics = enumerate_geodesics(inst, limit=limit)
    if len(geodesics) != total:
        return fail(f"{len(geodesics)} geodesics but {total} words")
    axis_of: dict[tuple[str, str], int] = {}
    for u_name, v_name in inst.graph.edges:
        cu, cv = name_coords(u_name), name_coords(v_name)
        axis = next(t for t in range(spec.m) if cu[t] != cv[t])
        axis_of[(u_name, v_name)] = axis_of[(v_name, u_name)] = axis + 1
    mul = [int(p) for p in wpow]
    geo_codes = np.empty(total, dtype=np.int64)
    for gi, geo in enumerate(geodesics):
        code = 0
        for s in range(n_moves):
            code += axis_of[(geo[s], geo[s + 1])] * mul[s]
        geo_codes[gi] = code
    rows = np.searchsorted(wcodes, geo_codes)
    if bool(np.any(wcodes[np.minimum(rows, total - 1)] != geo_codes)):
        return fail("a geodesic decodes to an unknown word")
    if np.unique(rows).size != total:
        return fail("two geodesics decode to one word")
    h = spg_from_geodesics(geodesics)
    ne = h.num_edges
    se_u = np.fromiter((e[0] for e in h.edge_index), np.int64, ne)
    se_w = np.fromiter((e[1] for e in h.edge_index), np.int64, ne)
    ru, rw = rows[se_u], rows[se_w]
    spg_edges = np.sort(np.minimum(ru, rw) * total + np.maximum(ru, rw))
    if not np.array_equal(spg_edges, word_edges):
        return fail("shortest path graph edges differ from word switches")
    return CheckReport(name, True, None, stats)


def check_staircase(
    n1: int, n2: int, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> CheckReport:
    """The two-axis grid's shortest path graph is the staircase graph, with
    the binomial vertex count."""
    name = f"staircase-{n1}x{n2}"
    h = build_spg(grid_base(GridSpec((n1, n2))), limit=limit)
    stair = staircase(n1, n2)
    expected = math.comb(n1 + n2, n2)
    stats = {"vertices": expected}
    if h.num_vertices != expected or stair.num_vertices != expected:
        return CheckReport(
            name,
            False,
            f"vertex counts {h.num_vertices} / {stair.num_vertices}, "
            f"expected {expected}",
            stats,
        )
    if find_isomorphism(h.to_graph(), stair) is None:
        return CheckReport(name, False, "not isomorphic to the staircase", stats)
    return CheckReport(name, True, None, stats)


def check_cayley(m: int, *, limit: int = DEFAULT_GEODESIC_LIMIT) -> CheckReport:
    """The hypercube-chain grid on m axes of length one has the permutation
    graph under adjacent switches as its shortest path graph."""
    name = f"cayley-{m}"
    h = build_spg(grid_base(GridSpec((1,) * m)), limit=limit)
    cay = cayley_adjacent_transpositions(m, limit=limit)
    stats = {"vertices": cay.num_vertices, "edges": cay.num_edges}
    if h.num_vertices != cay.num_vertices:
        return CheckReport(name, False, "vertex counts differ", stats)
    if find_isomorphism(h.to_graph(), cay) is None:
        return CheckReport(name, False, "not isomorphic to the switch graph", stats)
    return CheckReport(name, True, None, stats)


def check_tournament_bijection(m: int) -> CheckReport:
    """Words with every symbol once map one-to-one onto the transitive
    tournaments; the ranking recovers the word."""
    name = f"tournaments-{m}"
    spec = GridSpec((1,) * m)
    seen: set[tuple[bool, ...]] = set()
    total = 0
    for word in iter_words(spec):
        total += 1
        ms = MoveSequence(spec, word)
        t = tournament_of(ms)
        if t.ranking() != word:
            return CheckReport(
                name,
                False,
                f"ranking of {word} came back as {t.ranking()}",
                {"words": total},
            )
        seen.add(t.beats)
    stats = {"words": total, "tournaments": len(seen)}
    if len(seen) != total:
        return CheckReport(name, False, "two words share a tournament", stats)
    return CheckReport(name, True, None, stats)
