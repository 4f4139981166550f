"""Enumeration of small induced subgraphs: paths, claws, and cycles.

Each occurrence is reported once, as a canonical vertex tuple:

* ``P3``: (u, m, w) with m the middle vertex and u < w,
* ``claw``: (c, x, y, z) with c the center and x < y < z,
* ``C<k>``: the cycle written from its smallest vertex, walking toward the
  smaller of that vertex's two cycle neighbors.

Searches count the candidate extensions they examine and abort once the
work limit is hit, so a pathological input fails loudly instead of hanging.
"""

from __future__ import annotations

import re
from itertools import combinations

from .graphs import Graph

DEFAULT_WORK_LIMIT = 10**8

_CYCLE_RE = re.compile(r"^C(\d+)$")


class WorkLimitExceeded(RuntimeError):
    def __init__(self, pattern: str, limit: int):
        super().__init__(f"work limit {limit} exceeded while searching for {pattern}")
        self.pattern = pattern
        self.limit = limit


class _Budget:
    __slots__ = ("left", "pattern", "limit")

    def __init__(self, pattern: str, limit: int):
        self.left = limit
        self.pattern = pattern
        self.limit = limit

    def spend(self, amount: int) -> None:
        self.left -= amount
        if self.left < 0:
            raise WorkLimitExceeded(self.pattern, self.limit)


def find_induced(
    g: Graph, pattern: str, *, work_limit: int = DEFAULT_WORK_LIMIT
) -> list[tuple[str, ...]]:
    """All induced occurrences of ``pattern`` in ``g``, sorted.

    ``pattern`` is one of ``"P3"``, ``"claw"`` or ``"C<k>"`` with k >= 3.

    >>> from .graphs import cycle_graph, star_graph
    >>> find_induced(cycle_graph(5), "C5")
    [('0', '1', '2', '3', '4')]
    >>> find_induced(star_graph(3), "claw")
    [('c', 'l0', 'l1', 'l2')]
    >>> find_induced(cycle_graph(4), "claw")
    []
    """
    budget = _Budget(pattern, work_limit)
    if pattern == "P3":
        found = _induced_p3(g, budget)
    elif pattern == "claw":
        found = _induced_claws(g, budget)
    else:
        match = _CYCLE_RE.match(pattern)
        if not match:
            raise ValueError(f"unknown pattern {pattern!r}")
        k = int(match.group(1))
        if k < 3:
            raise ValueError("cycles need k >= 3")
        found = _triangles(g, budget) if k == 3 else _induced_cycles(g, k, budget)
    return sorted(found)


def has_induced(g: Graph, pattern: str, *, work_limit: int = DEFAULT_WORK_LIMIT) -> bool:
    """Whether at least one induced occurrence exists (still full search)."""
    return bool(find_induced(g, pattern, work_limit=work_limit))


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _induced_p3(g: Graph, budget: _Budget) -> list[tuple[str, ...]]:
    out = []
    names = g.vertices
    bits = g.adjacency_bits
    for mid in range(len(names)):
        nbrs = list(_iter_bits(bits[mid]))
        budget.spend(len(nbrs) * max(len(nbrs) - 1, 0) // 2)
        for i, j in combinations(nbrs, 2):
            if not bits[i] >> j & 1:
                u, w = names[i], names[j]
                out.append((u, names[mid], w) if u < w else (w, names[mid], u))
    return out


def _induced_claws(g: Graph, budget: _Budget) -> list[tuple[str, ...]]:
    out = []
    names = g.vertices
    bits = g.adjacency_bits
    for center in range(len(names)):
        nbrs = list(_iter_bits(bits[center]))
        if len(nbrs) < 3:
            continue
        combos = len(nbrs) * (len(nbrs) - 1) * (len(nbrs) - 2) // 6
        budget.spend(combos)
        for i, j, l in combinations(nbrs, 3):
            if bits[i] >> j & 1 or bits[i] >> l & 1 or bits[j] >> l & 1:
                continue
            leaves = sorted((names[i], names[j], names[l]))
            out.append((names[center], *leaves))
    return out


def _triangles(g: Graph, budget: _Budget) -> list[tuple[str, ...]]:
    out = []
    names = g.vertices
    bits = g.adjacency_bits
    n = len(names)
    for i in range(n):
        higher = bits[i] >> (i + 1) << (i + 1)
        for j in _iter_bits(higher):
            both = bits[j] & higher
            budget.spend(1)
            for l in _iter_bits(both >> (j + 1) << (j + 1)):
                budget.spend(1)
                out.append((names[i], names[j], names[l]))
    return out


def _induced_cycles(g: Graph, k: int, budget: _Budget) -> list[tuple[str, ...]]:
    """Induced k-cycles for k >= 4 by DFS over induced paths.

    A cycle is generated exactly once: its smallest vertex s is the DFS
    root, only vertices above s are used, and the orientation with
    path[1] < path[-1] is kept.
    """
    out = []
    names = g.vertices
    bits = g.adjacency_bits
    n = len(names)
    all_mask = (1 << n) - 1
    for s in range(n):
        gt_mask = all_mask >> (s + 1) << (s + 1)
        adj_s = bits[s]
        first_steps = adj_s & gt_mask
        # path: [s, v1, ..., vt]; banned: union of adjacencies of interior
        # vertices p[1..t-1]; adjacency to s is excluded until the final step.
        stack = [([s, v1], 1 << s | 1 << v1, 0) for v1 in _iter_bits(first_steps)]
        budget.spend(first_steps.bit_count())
        while stack:
            path, path_mask, banned = stack.pop()
            last = path[-1]
            if len(path) == k - 1:
                closers = bits[last] & adj_s & gt_mask & ~path_mask & ~banned
                budget.spend(closers.bit_count())
                v1 = path[1]
                for x in _iter_bits(closers):
                    if v1 < x:
                        out.append(tuple(names[v] for v in path) + (names[x],))
                continue
            nxt = bits[last] & gt_mask & ~path_mask & ~banned & ~adj_s
            budget.spend(max(nxt.bit_count(), 1))
            new_banned = banned | bits[last]
            for x in _iter_bits(nxt):
                stack.append((path + [x], path_mask | 1 << x, new_banned))
    return out
