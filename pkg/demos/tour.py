"""A short tour: build a shortest path graph, reduce an instance, export DOT.

Run with ``python3 demos/tour.py``.
"""

from spgraphs import (
    BaseInstance,
    Graph,
    build_spg,
    complete_bipartite_graph,
    enumerate_geodesics,
    reduce_instance,
    spg_to_dot,
)


def main() -> None:
    # Two opposite vertices of K_{2,3} are joined by three geodesics, one
    # through each middle vertex. Any two of them differ in the single
    # interior position, so the shortest path graph is a triangle.
    g = complete_bipartite_graph(2, 3)
    inst = BaseInstance(g, "a0", "a1")
    print("geodesics from a0 to a1 in K_{2,3}:")
    for path in enumerate_geodesics(inst):
        print("  " + " - ".join(path))
    h = build_spg(inst)
    print(f"shortest path graph: {h.num_vertices} vertices, {h.num_edges} edges")
    print(f"edge difference positions: {sorted(h.edge_index.items())}\n")

    # Decorations that no geodesic uses, and forced stretches that every
    # geodesic uses, never change the shortest path graph. The reduction
    # removes both kinds: it deletes off-geodesic vertices and contracts
    # edges lying on every geodesic.
    decorated = Graph(
        ["a", "m1", "m2", "c", "t", "b", "dead"],
        [
            ("a", "m1"),
            ("a", "m2"),
            ("m1", "c"),
            ("m2", "c"),
            ("c", "t"),
            ("t", "b"),
            ("a", "dead"),
        ],
    )
    red = reduce_instance(BaseInstance(decorated, "a", "b"))
    print("reduced instance vertices:", ", ".join(red.graph.vertices))
    print("vertex fate:", {v: red.vertex_map[v] for v in decorated.vertices})
    print()

    print("DOT export of the triangle above:")
    print(spg_to_dot(h, name="k23"))


if __name__ == "__main__":
    main()
