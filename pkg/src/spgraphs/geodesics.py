"""Geodesics between two endpoints: the DAG view, counting, enumeration,
and instance reduction.

An edge (u, v) lies on a shortest source,target-path exactly when
``dist(source, u) + 1 + dist(v, target) == dist(source, target)``. Orienting
every such edge away from the source yields a DAG whose source-to-target
paths are precisely the geodesics. Counting walks over that DAG with exact
integers gives both the geodesic count and, per edge, the number of
geodesics through it; an edge on every geodesic is called mandatory here.

Reduction deletes all off-geodesic vertices and edges and contracts every
mandatory edge simultaneously. When the endpoints themselves merge the
instance had a unique geodesic and the reduction reports ``collapsed``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

from .graphs import BaseInstance, Graph, distances

Geodesic = tuple[str, ...]

DEFAULT_GEODESIC_LIMIT = 10**6


class NoGeodesicError(ValueError):
    """The two endpoints are not connected."""


class GeodesicOverflowError(RuntimeError):
    """More geodesics than the caller's limit; carries the exact count."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} geodesics exceed the limit of {limit}")
        self.count = count
        self.limit = limit


@dataclass(frozen=True)
class GeodesicDag:
    """All geodesic structure of one instance, edges oriented to the target."""

    instance: BaseInstance
    d: int
    dist_from_source: Mapping[str, int | float]
    dist_to_target: Mapping[str, int | float]
    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]

    @property
    def successors(self) -> dict[str, tuple[str, ...]]:
        succ: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            succ[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in succ.items()}


def build_dag(inst: BaseInstance) -> GeodesicDag:
    """Two-sided BFS; raises NoGeodesicError when the endpoints are apart."""
    g = inst.graph
    dist_a = distances(g, inst.source)
    dist_b = distances(g, inst.target)
    d = dist_a[inst.target]
    if d == math.inf:
        raise NoGeodesicError(
            f"no path between {inst.source!r} and {inst.target!r}"
        )
    on_geo = frozenset(v for v in g.vertices if dist_a[v] + dist_b[v] == d)
    edges = []
    for u, v in g.edges:
        if dist_a[u] + 1 + dist_b[v] == d:
            edges.append((u, v))
        elif dist_a[v] + 1 + dist_b[u] == d:
            edges.append((v, u))
    return GeodesicDag(
        instance=inst,
        d=int(d),
        dist_from_source=dist_a,
        dist_to_target=dist_b,
        vertices=on_geo,
        edges=frozenset(edges),
    )


def _as_dag(inst: BaseInstance | GeodesicDag) -> GeodesicDag:
    return inst if isinstance(inst, GeodesicDag) else build_dag(inst)


def paths_to_target(dag: GeodesicDag) -> dict[str, int]:
    """For each on-geodesic vertex, the number of geodesic continuations."""
    order = sorted(dag.vertices, key=lambda v: -dag.dist_from_source[v])
    succ = dag.successors
    ways: dict[str, int] = {dag.instance.target: 1}
    for v in order:
        if v == dag.instance.target:
            continue
        ways[v] = sum(ways[w] for w in succ[v])
    return ways


def paths_from_source(dag: GeodesicDag) -> dict[str, int]:
    """For each on-geodesic vertex, the number of geodesic prefixes."""
    order = sorted(dag.vertices, key=lambda v: dag.dist_from_source[v])
    pred: dict[str, list[str]] = {v: [] for v in dag.vertices}
    for u, v in dag.edges:
        pred[v].append(u)
    ways: dict[str, int] = {dag.instance.source: 1}
    for v in order:
        if v == dag.instance.source:
            continue
        ways[v] = sum(ways[u] for u in pred[v])
    return ways


def count_geodesics(inst: BaseInstance | GeodesicDag) -> int:
    """Exact number of geodesics, without materializing them.

    >>> from .graphs import complete_bipartite_graph
    >>> g = complete_bipartite_graph(2, 3)
    >>> count_geodesics(BaseInstance(g, "a0", "a1"))
    3
    """
    dag = _as_dag(inst)
    return paths_to_target(dag)[dag.instance.source]


def iter_geodesics(inst: BaseInstance | GeodesicDag) -> Iterator[Geodesic]:
    """Yield geodesics in lexicographic vertex-sequence order."""
    dag = _as_dag(inst)
    succ = dag.successors
    target = dag.instance.target
    path: list[str] = [dag.instance.source]

    def walk() -> Iterator[Geodesic]:
        head = path[-1]
        if head == target:
            yield tuple(path)
            return
        for w in succ[head]:
            path.append(w)
            yield from walk()
            path.pop()

    yield from walk()


def enumerate_geodesics(
    inst: BaseInstance | GeodesicDag, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> list[Geodesic]:
    """All geodesics, lexicographically ordered.

    Raises GeodesicOverflowError (carrying the exact count) rather than
    materializing more than ``limit`` paths.
    """
    dag = _as_dag(inst)
    count = count_geodesics(dag)
    if count > limit:
        raise GeodesicOverflowError(count, limit)
    return list(iter_geodesics(dag))


def mandatory_edges(dag: GeodesicDag) -> frozenset[tuple[str, str]]:
    """Directed DAG edges that lie on every geodesic."""
    total = count_geodesics(dag)
    from_source = paths_from_source(dag)
    to_target = paths_to_target(dag)
    return frozenset(
        (u, v) for u, v in dag.edges if from_source[u] * to_target[v] == total
    )


@dataclass(frozen=True)
class ReducedInstance:
    """Result of reducing an instance.

    ``vertex_map`` sends each original vertex to its surviving class
    representative, or to None when the vertex was off every geodesic.
    When the endpoints merged (``collapsed``), the original instance had a
    unique geodesic and the reduced graph is a single vertex.
    """

    graph: Graph
    source: str
    target: str
    vertex_map: Mapping[str, str | None]
    collapsed: bool

    @property
    def instance(self) -> BaseInstance:
        if self.collapsed:
            raise NoGeodesicError("collapsed reduction has no two-endpoint instance")
        return BaseInstance(self.graph, self.source, self.target)


class _DisjointSets:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def reduce_instance(inst: BaseInstance) -> ReducedInstance:
    """Delete off-geodesic material, contract mandatory edges.

    One pass reaches a fixpoint: every surviving edge is on some geodesic
    and no surviving edge is on all of them.
    """
    dag = build_dag(inst)
    forced = mandatory_edges(dag)
    sets = _DisjointSets(dag.vertices)
    for u, v in forced:
        sets.union(u, v)
    classes: dict[str, list[str]] = {}
    for v in dag.vertices:
        classes.setdefault(sets.find(v), []).append(v)
    rep = {root: min(members) for root, members in classes.items()}

    def image(v: str) -> str:
        return rep[sets.find(v)]

    reduced_edges = set()
    for u, v in dag.edges:
        iu, iv = image(u), image(v)
        if iu != iv:
            reduced_edges.add((iu, iv) if iu < iv else (iv, iu))
    graph = Graph({image(v) for v in dag.vertices}, reduced_edges)
    vertex_map = {
        v: image(v) if v in dag.vertices else None for v in inst.graph.vertices
    }
    source = image(inst.source)
    target = image(inst.target)
    return ReducedInstance(
        graph=graph,
        source=source,
        target=target,
        vertex_map=vertex_map,
        collapsed=source == target,
    )
