"""Graph isomorphism by color refinement plus backtracking search.

The search is exact: refinement only prunes. On success a full vertex
bijection is returned so callers can verify the witness independently.
Intended for desk-scale graphs (a few hundred vertices).
"""

from __future__ import annotations

from collections import Counter

from .graphs import Graph

DEFAULT_MAX_VERTICES = 200


class IsomorphismSizeError(ValueError):
    """Raised when an input exceeds the configured vertex cap."""


def _triangle_counts(g: Graph) -> list[int]:
    bits = g.adjacency_bits
    counts = [0] * g.num_vertices
    idx = g.index
    for u, v in g.edges:
        iu, iv = idx[u], idx[v]
        common = (bits[iu] & bits[iv]).bit_count()
        counts[iu] += common
        counts[iv] += common
    return counts


def color_refinement(g: Graph) -> list[int]:
    """Stable vertex coloring refined from (degree, triangle count).

    Color ids are canonical: two graphs related by an isomorphism receive
    identical color multisets, and matching vertices get equal ids.
    """
    n = g.num_vertices
    bits = g.adjacency_bits
    tri = _triangle_counts(g)
    signature: list[object] = [(bits[i].bit_count(), tri[i]) for i in range(n)]
    ranks = {sig: r for r, sig in enumerate(sorted(set(signature)))}
    colors = [ranks[sig] for sig in signature]
    neighbors = [[] for _ in range(n)]
    idx = g.index
    for u, v in g.edges:
        iu, iv = idx[u], idx[v]
        neighbors[iu].append(iv)
        neighbors[iv].append(iu)
    while True:
        signature = [
            (colors[i], tuple(sorted(colors[w] for w in neighbors[i]))) for i in range(n)
        ]
        ranks = {sig: r for r, sig in enumerate(sorted(set(signature)))}
        new_colors = [ranks[sig] for sig in signature]
        if len(set(new_colors)) == len(set(colors)):
            return new_colors
        colors = new_colors


def iso_invariant(g: Graph) -> tuple:
    """A hashable isomorphism invariant, useful for bucketing candidates."""
    n = g.num_vertices
    colors = color_refinement(g)
    neighbors: dict[int, list[int]] = {i: [] for i in range(n)}
    idx = g.index
    for u, v in g.edges:
        iu, iv = idx[u], idx[v]
        neighbors[iu].append(iv)
        neighbors[iv].append(iu)
    profile = tuple(
        sorted((colors[i], tuple(sorted(colors[w] for w in neighbors[i]))) for i in range(n))
    )
    return (n, g.num_edges, profile)


def _search_order(g: Graph, colors: list[int]) -> list[int]:
    """Static variable order: rare colors first, then stay connected."""
    n = g.num_vertices
    bits = g.adjacency_bits
    class_size = Counter(colors)
    chosen: list[int] = []
    chosen_mask = 0
    remaining = set(range(n))
    while remaining:
        def key(i: int) -> tuple:
            mapped_nbrs = (bits[i] & chosen_mask).bit_count()
            return (-mapped_nbrs, class_size[colors[i]], i)

        pick = min(remaining, key=key)
        chosen.append(pick)
        chosen_mask |= 1 << pick
        remaining.discard(pick)
    return chosen


def find_isomorphism(
    g1: Graph, g2: Graph, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> dict[str, str] | None:
    """Return a vertex bijection realizing g1 ~ g2, or None.

    Raises IsomorphismSizeError when either graph has more than
    ``max_vertices`` vertices.
    """
    if g1.num_vertices > max_vertices or g2.num_vertices > max_vertices:
        raise IsomorphismSizeError(
            f"isomorphism search capped at {max_vertices} vertices"
        )
    n = g1.num_vertices
    if n != g2.num_vertices or g1.num_edges != g2.num_edges:
        return None
    if n == 0:
        return {}
    colors1 = color_refinement(g1)
    colors2 = color_refinement(g2)
    if sorted(colors1) != sorted(colors2):
        return None

    bits1 = g1.adjacency_bits
    bits2 = g2.adjacency_bits
    order = _search_order(g1, colors1)
    # For each position, the earlier positions whose g1 vertex is adjacent.
    earlier_nbrs: list[list[int]] = []
    for pos, v in enumerate(order):
        earlier_nbrs.append([p for p in range(pos) if bits1[v] >> order[p] & 1])
    by_color: dict[int, list[int]] = {}
    for j in range(n):
        by_color.setdefault(colors2[j], []).append(j)

    image = [-1] * n  # g1 index -> g2 index
    used_mask = 0
    stack: list[list[int]] = []

    def candidates(pos: int) -> list[int]:
        v = order[pos]
        required = 0
        for p in earlier_nbrs[pos]:
            required |= 1 << image[order[p]]
        out = []
        for w in by_color.get(colors1[v], ()):
            if used_mask >> w & 1:
                continue
            if bits2[w] & used_mask == required:
                out.append(w)
        return out

    pos = 0
    stack.append(candidates(0))
    while stack:
        cands = stack[-1]
        if not cands:
            stack.pop()
            pos -= 1
            if pos >= 0:
                w = image[order[pos]]
                image[order[pos]] = -1
                used_mask ^= 1 << w
            continue
        w = cands.pop()
        image[order[pos]] = w
        used_mask |= 1 << w
        if pos == n - 1:
            return {g1.vertices[order[p]]: g2.vertices[image[order[p]]] for p in range(n)}
        pos += 1
        stack.append(candidates(pos))
    return None


def is_isomorphic(
    g1: Graph, g2: Graph, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    return find_isomorphism(g1, g2, max_vertices=max_vertices) is not None
