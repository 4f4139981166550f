"""The shortest path graph of an instance.

Vertices are the geodesics of a fixed instance, kept in lexicographic
order. Two geodesics are adjacent exactly when they differ in one single
position, necessarily interior; that position (1-based from the source) is
the edge's difference index.

Adjacency is found by bucketing: for each interior position every geodesic
drops that position to form a key, and geodesics sharing a key form a
clique of edges with that difference index. Two geodesics differing in two
or more positions never share a key, so the edge set is exact. Bucketing
keeps large instances (hundreds of thousands of geodesics) tractable where
all-pairs comparison would not be; tests pin it to the brute-force pairwise
definition on small instances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .geodesics import (
    DEFAULT_GEODESIC_LIMIT,
    Geodesic,
    NoGeodesicError,
    ReducedInstance,
    enumerate_geodesics,
)
from .graphs import BaseInstance, Graph


class SpgStructureError(ValueError):
    """An SpGraph-shaped object violates a structural requirement."""


class SpGraph:
    """A shortest path graph: indexed geodesics plus indexed edges.

    ``edge_index`` maps each edge (i, j) with i < j to its difference
    index. Instances built by hand (or loaded from JSON) are validated for
    shape only, not for realizability, so theorem checkers can be fed
    deliberately broken inputs.
    """

    __slots__ = ("geodesics", "edge_index", "d", "_neighbors")

    def __init__(
        self,
        geodesics: Iterable[Geodesic],
        edge_index: Mapping[tuple[int, int], int],
        d: int | None = None,
    ):
        self.geodesics: tuple[Geodesic, ...] = tuple(tuple(g) for g in geodesics)
        n = len(self.geodesics)
        if self.geodesics:
            lengths = {len(g) for g in self.geodesics}
            if len(lengths) != 1:
                raise SpgStructureError("geodesics must share one length")
            inferred = lengths.pop() - 1
            if d is not None and d != inferred:
                raise SpgStructureError(f"stated d={d} but sequences have length {inferred + 1}")
            self.d: int | None = inferred
            if len(set(self.geodesics)) != n:
                raise SpgStructureError("duplicate geodesic")
        else:
            if edge_index:
                raise SpgStructureError("edges without geodesics")
            self.d = d
        checked: dict[tuple[int, int], int] = {}
        for (i, j), pos in edge_index.items():
            if not (0 <= i < j < n):
                raise SpgStructureError(f"edge ({i}, {j}) out of range")
            if self.d is None or not (1 <= pos <= self.d - 1):
                raise SpgStructureError(f"difference index {pos} out of range for d={self.d}")
            checked[(i, j)] = pos
        self.edge_index: dict[tuple[int, int], int] = checked
        self._neighbors: list[tuple[int, ...]] | None = None

    @property
    def num_vertices(self) -> int:
        return len(self.geodesics)

    @property
    def num_edges(self) -> int:
        return len(self.edge_index)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_index)

    @property
    def neighbors(self) -> list[tuple[int, ...]]:
        if self._neighbors is None:
            nbrs: list[list[int]] = [[] for _ in range(self.num_vertices)]
            for i, j in self.edge_index:
                nbrs[i].append(j)
                nbrs[j].append(i)
            self._neighbors = [tuple(sorted(ws)) for ws in nbrs]
        return self._neighbors

    def indices_present(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.edge_index.values())))

    def to_graph(self, prefix: str = "g") -> Graph:
        verts = [f"{prefix}{i}" for i in range(self.num_vertices)]
        edges = [(f"{prefix}{i}", f"{prefix}{j}") for i, j in self.edge_index]
        return Graph(verts, edges)

    def __repr__(self) -> str:
        return f"SpGraph({self.num_vertices} geodesics, {self.num_edges} edges, d={self.d})"


def difference_positions(u: Geodesic, w: Geodesic) -> list[int]:
    if len(u) != len(w):
        raise SpgStructureError("geodesics of different lengths are incomparable")
    return [p for p in range(len(u)) if u[p] != w[p]]


def difference_index(u: Geodesic, w: Geodesic) -> int | None:
    """The single differing position of two equal-endpoint geodesics, else None.

    >>> difference_index(("a", "x", "b"), ("a", "y", "b"))
    1
    >>> difference_index(("a", "x", "y", "b"), ("a", "u", "v", "b")) is None
    True"""
    if len(u) != len(w):
        raise SpgStructureError("geodesics of different lengths are incomparable")
    if not u or u[0] != w[0] or u[-1] != w[-1]:
        raise SpgStructureError("geodesics must share both endpoints")
    diffs = difference_positions(u, w)
    return diffs[0] if len(diffs) == 1 else None


def build_spg(
    inst: BaseInstance, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> SpGraph:
    """Construct the shortest path graph of an instance.

    Disconnected endpoints yield the empty SpGraph. A geodesic count above
    ``limit`` raises GeodesicOverflowError before any materialization.
    """
    try:
        geodesics = enumerate_geodesics(inst, limit=limit)
    except NoGeodesicError:
        return SpGraph((), {}, None)
    return spg_from_geodesics(geodesics)


def spg_from_geodesics(geodesics: list[Geodesic]) -> SpGraph:
    """Adjacency from a ready geodesic list (see module docstring)."""
    if not geodesics:
        return SpGraph((), {}, None)
    d = len(geodesics[0]) - 1
    edge_index: dict[tuple[int, int], int] = {}
    for pos in range(1, d):
        buckets: dict[tuple[str, ...], list[int]] = {}
        for i, geo in enumerate(geodesics):
            buckets.setdefault(geo[:pos] + geo[pos + 1 :], []).append(i)
        for members in buckets.values():
            for a in range(len(members) - 1):
                ia = members[a]
                for b in range(a + 1, len(members)):
                    edge_index[(ia, members[b])] = pos
    return SpGraph(geodesics, edge_index)


def spg_of_reduced(red: ReducedInstance, *, limit: int = DEFAULT_GEODESIC_LIMIT) -> SpGraph:
    """SpGraph of a reduction; a collapsed reduction means a one-vertex graph."""
    if red.collapsed:
        return SpGraph(((red.source,),), {}, 0)
    return build_spg(red.instance, limit=limit)


def edges_at_index(h: SpGraph, i: int) -> list[tuple[int, int]]:
    """Edges whose difference index equals i, sorted."""
    return sorted(e for e, pos in h.edge_index.items() if pos == i)


@dataclass(frozen=True)
class Decomposition:
    """Grouping of an SpGraph by the vertex at one interior position.

    ``components[k]`` holds the geodesic indices whose position-``index``
    vertex is ``middle_vertices[k]``; together they partition the vertex
    set. ``cross_edges`` are exactly the edges with difference index
    ``index``, each joining two different groups.
    """

    index: int
    middle_vertices: tuple[str, ...]
    components: tuple[tuple[int, ...], ...]
    cross_edges: tuple[tuple[int, int], ...]

    def group_of(self, geodesic_index: int) -> int:
        for k, comp in enumerate(self.components):
            if geodesic_index in comp:
                return k
        raise KeyError(geodesic_index)


def decompose_at_index(h: SpGraph, i: int) -> Decomposition:
    """Split h at interior position i.

    Verifies the grouping against connectivity: an edge must cross groups
    exactly when its difference index is i. Violations raise
    SpgStructureError (possible only for hand-built inputs).
    """
    if h.d is None or not (1 <= i <= h.d - 1):
        raise SpgStructureError(f"index {i} is not interior for d={h.d}")
    groups: dict[str, list[int]] = {}
    for idx, geo in enumerate(h.geodesics):
        groups.setdefault(geo[i], []).append(idx)
    middles = tuple(sorted(groups))
    group_id = {}
    for k, v in enumerate(middles):
        for idx in groups[v]:
            group_id[idx] = k
    cross = []
    for (u, w), pos in h.edge_index.items():
        crosses = group_id[u] != group_id[w]
        if crosses != (pos == i):
            raise SpgStructureError(
                f"edge ({u}, {w}) with index {pos} is inconsistent with the "
                f"grouping at position {i}"
            )
        if crosses:
            cross.append((u, w))
    return Decomposition(
        index=i,
        middle_vertices=middles,
        components=tuple(tuple(groups[v]) for v in middles),
        cross_edges=tuple(sorted(cross)),
    )


def vertex_slice(h: SpGraph, v: str) -> SpGraph:
    """The sub-SpGraph induced on the geodesics through vertex v."""
    keep = [i for i, geo in enumerate(h.geodesics) if v in geo]
    if not keep:
        raise ValueError(f"{v!r} lies on no geodesic")
    renumber = {old: new for new, old in enumerate(keep)}
    kept = set(keep)
    edges = {
        (renumber[a], renumber[b]): pos
        for (a, b), pos in h.edge_index.items()
        if a in kept and b in kept
    }
    return SpGraph([h.geodesics[i] for i in keep], edges)


# -- serialization ---------------------------------------------------------


def spg_to_json(h: SpGraph) -> str:
    payload = {
        "geodesics": [list(g) for g in h.geodesics],
        "edges": [
            {"u": i, "w": j, "index": h.edge_index[(i, j)]} for i, j in h.sorted_edges()
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def spg_from_json(text: str) -> SpGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpgStructureError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "geodesics" not in payload or "edges" not in payload:
        raise SpgStructureError("SpGraph JSON needs 'geodesics' and 'edges'")
    geodesics = payload["geodesics"]
    if not isinstance(geodesics, list) or not all(
        isinstance(g, list) and all(isinstance(x, str) for x in g) for g in geodesics
    ):
        raise SpgStructureError("'geodesics' must be a list of vertex-id lists")
    edge_index: dict[tuple[int, int], int] = {}
    for k, e in enumerate(payload["edges"]):
        if not isinstance(e, dict) or not {"u", "w", "index"} <= set(e):
            raise SpgStructureError(f"edge #{k} needs fields u, w, index")
        u, w, pos = e["u"], e["w"], e["index"]
        if not all(isinstance(x, int) for x in (u, w, pos)):
            raise SpgStructureError(f"edge #{k} fields must be integers")
        if u > w:
            u, w = w, u
        if (u, w) in edge_index:
            raise SpgStructureError(f"edge #{k} duplicates ({u}, {w})")
        edge_index[(u, w)] = pos
    return SpGraph([tuple(g) for g in geodesics], edge_index)


_PALETTE = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
)


def index_color(i: int) -> str:
    return _PALETTE[(i - 1) % len(_PALETTE)]


def spg_to_dot(h: SpGraph, name: str = "spg") -> str:
    """Graphviz source; edges are labeled and colored by difference index."""
    lines = [f"graph {json.dumps(name)} {{"]
    lines.append("  node [shape=box, fontsize=10];")
    for i, geo in enumerate(h.geodesics):
        lines.append(f"  {i} [label={json.dumps(' '.join(geo))}];")
    for i, j in h.sorted_edges():
        pos = h.edge_index[(i, j)]
        lines.append(
            f'  {i} -- {j} [label="{pos}", color={json.dumps(index_color(pos))}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
