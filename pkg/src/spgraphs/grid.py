"""Grids of paths, their geodesics as multiset words, and the coordinate
embedding of the word graph into an integer lattice.

A geodesic of the grid P_{n_1} x ... x P_{n_m} (Cartesian product of paths,
endpoints at opposite corners) makes n_i unit moves along axis i, so it is
exactly a word over {1..m} with symbol i appearing n_i times. Two geodesics
are adjacent in the shortest path graph exactly when their words differ by
switching two different consecutive symbols.

The embedding sends a word to the vector listing, for every pair i < j and
every k, how many i's follow the k-th j; coordinates are grouped by j, then
by i, then by k. It is injective and both it and its inverse preserve
adjacency, so the word graph is the subgraph of the integer lattice induced
by the image.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterator, Sequence

import numpy as np

from .geodesics import Geodesic, GeodesicOverflowError, DEFAULT_GEODESIC_LIMIT
from .graphs import BaseInstance, Graph, GraphError

Word = tuple[int, ...]


class NotInImageError(ValueError):
    """A lattice point that no word maps to."""


@dataclass(frozen=True)
class GridSpec:
    """Axis lengths (n_1, ..., n_m) of a grid of paths, all positive."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims or any(n < 1 for n in self.dims):
            raise GraphError("dims must be a nonempty tuple of positive ints")
        object.__setattr__(self, "dims", tuple(int(n) for n in self.dims))

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def total_moves(self) -> int:
        return sum(self.dims)

    @property
    def embedding_dim(self) -> int:
        return sum((j - 1) * self.dims[j - 1] for j in range(2, self.m + 1))

    def word_count(self) -> int:
        """Number of words: the multinomial coefficient over the dims."""
        return math.factorial(self.total_moves) // reduce(
            lambda acc, n: acc * math.factorial(n), self.dims, 1
        )

    def coordinate_layout(self) -> list[tuple[int, int, int]]:
        """The (i, j, k) meaning of each embedding coordinate, in order."""
        return [
            (i, j, k)
            for j in range(2, self.m + 1)
            for i in range(1, j)
            for k in range(1, self.dims[j - 1] + 1)
        ]


@dataclass(frozen=True)
class MoveSequence:
    """A word over the grid's axes: symbol i in 1..m appears dims[i-1] times."""

    spec: GridSpec
    symbols: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        counts = [0] * self.spec.m
        for s in self.symbols:
            if not 1 <= s <= self.spec.m:
                raise GraphError(f"symbol {s} outside 1..{self.spec.m}")
            counts[s - 1] += 1
        if tuple(counts) != self.spec.dims:
            raise GraphError(
                f"symbol counts {tuple(counts)} do not match dims {self.spec.dims}"
            )

    def __str__(self) -> str:
        if self.spec.m <= 9:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)


def parse_move_sequence(spec: GridSpec, text: str) -> MoveSequence:
    """Inverse of str(): digit string when m <= 9, comma-separated otherwise."""
    text = text.strip()
    if "," in text:
        symbols = tuple(int(part) for part in text.split(","))
    else:
        symbols = tuple(int(ch) for ch in text)
    return MoveSequence(spec, symbols)


@dataclass(frozen=True)
class LatticePoint:
    """An integer vector in the embedding space of one grid spec.

    Construction checks the necessary image conditions: bounds
    0 <= a_ijk <= n_i and, for fixed i and j, weakly decreasing in k.
    Membership in the image is only decided by ``phi_inverse``.
    """

    spec: GridSpec
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        layout = self.spec.coordinate_layout()
        if len(self.coords) != len(layout):
            raise GraphError(
                f"expected {len(layout)} coordinates, got {len(self.coords)}"
            )
        prev: dict[tuple[int, int], int] = {}
        for value, (i, j, k) in zip(self.coords, layout):
            n_i = self.spec.dims[i - 1]
            if not 0 <= value <= n_i:
                raise GraphError(f"coordinate a[{i},{j},{k}]={value} outside 0..{n_i}")
            if (i, j) in prev and value > prev[(i, j)]:
                raise GraphError(
                    f"coordinate a[{i},{j},{k}]={value} exceeds a[{i},{j},{k - 1}]"
                )
            prev[(i, j)] = value

    def to_json(self) -> str:
        return json.dumps({"dims": list(self.spec.dims), "coords": list(self.coords)})


def lattice_point_from_json(text: str) -> LatticePoint:
    payload = json.loads(text)
    return LatticePoint(GridSpec(tuple(payload["dims"])), tuple(payload["coords"]))


# -- the grid instance ------------------------------------------------------


def coord_name(coords: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def name_coords(name: str) -> tuple[int, ...]:
    return tuple(int(part) for part in name.strip("()").split(","))


def grid_base(spec: GridSpec) -> BaseInstance:
    """The grid of paths as an instance: origin corner to opposite corner."""
    ranges = [range(n + 1) for n in spec.dims]
    verts = [coord_name(c) for c in product(*ranges)]
    edges = []
    for c in product(*ranges):
        for axis in range(spec.m):
            if c[axis] < spec.dims[axis]:
                step = list(c)
                step[axis] += 1
                edges.append((coord_name(c), coord_name(step)))
    source = coord_name([0] * spec.m)
    target = coord_name(spec.dims)
    return BaseInstance(Graph(verts, edges), source, target)


def path_to_word(spec: GridSpec, path: Geodesic) -> MoveSequence:
    """Decode a monotone corner-to-corner path into its move word."""
    if len(path) != spec.total_moves + 1:
        raise GraphError(f"path has {len(path) - 1} steps, expected {spec.total_moves}")
    coords = [name_coords(name) for name in path]
    if coords[0] != (0,) * spec.m or coords[-1] != spec.dims:
        raise GraphError("path must run from the origin corner to the far corner")
    symbols = []
    for here, there in zip(coords, coords[1:]):
        deltas = [there[t] - here[t] for t in range(spec.m)]
        moved = [t for t, delta in enumerate(deltas) if delta != 0]
        if len(moved) != 1 or deltas[moved[0]] != 1:
            raise GraphError(f"step {here} -> {there} is not a unit move forward")
        symbols.append(moved[0] + 1)
    return MoveSequence(spec, tuple(symbols))


def word_to_path(ms: MoveSequence) -> Geodesic:
    """The corner-to-corner grid path taking the word's moves in order."""
    here = [0] * ms.spec.m
    names = [coord_name(here)]
    for s in ms.symbols:
        here[s - 1] += 1
        names.append(coord_name(here))
    return tuple(names)


# -- word enumeration and adjacency -----------------------------------------


def iter_words(spec: GridSpec) -> Iterator[Word]:
    """All words in lexicographic order (repeated-symbol next-permutation)."""
    w = []
    for sym, count in enumerate(spec.dims, start=1):
        w += [sym] * count
    n = len(w)
    yield tuple(w)
    while True:
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1 :] = reversed(w[i + 1 :])
        yield tuple(w)


def enumerate_sequences(
    spec: GridSpec, *, limit: int = DEFAULT_GEODESIC_LIMIT
) -> list[MoveSequence]:
    """All move sequences in lexicographic order, guarded by ``limit``."""
    count = spec.word_count()
    if count > limit:
        raise GeodesicOverflowError(count, limit)
    return [MoveSequence(spec, w) for w in iter_words(spec)]


def words_adjacent(u: Word, w: Word) -> bool:
    """Whether two words differ by switching two different consecutive symbols."""
    if len(u) != len(w):
        raise GraphError("words of different lengths are incomparable")
    diffs = [t for t in range(len(u)) if u[t] != w[t]]
    return (
        len(diffs) == 2
        and diffs[1] == diffs[0] + 1
        and u[diffs[0]] == w[diffs[1]]
        and u[diffs[1]] == w[diffs[0]]
    )


# -- the lattice embedding ---------------------------------------------------


def phi(ms: MoveSequence) -> LatticePoint:
    """Embed a word: coordinate (i, j, k) counts the i's after the k-th j.

    >>> spec = GridSpec((3, 3, 2))
    >>> phi(parse_move_sequence(spec, "32121231")).coords
    (3, 2, 1, 3, 1, 3, 0)
    """
    word = ms.symbols
    spec = ms.spec
    n = len(word)
    after = [[0] * (spec.m + 1)]
    running = [0] * (spec.m + 1)
    for s in reversed(word):
        running = running.copy()
        running[s] += 1
        after.append(running)
    after.reverse()
    # after[t][s] counts symbol s at positions >= t; strictly after t is t+1.
    occurrences: dict[int, list[int]] = {j: [] for j in range(1, spec.m + 1)}
    for t, s in enumerate(word):
        occurrences[s].append(t)
    coords = []
    for j in range(2, spec.m + 1):
        for i in range(1, j):
            for t in occurrences[j]:
                coords.append(after[t + 1][i])
    return LatticePoint(spec, tuple(coords))


def phi_inverse(point: LatticePoint) -> MoveSequence:
    """Rebuild the word from its embedding, symbol by symbol.

    Symbols 1..j-1 determine, for each slot, how many of each smaller
    symbol lie to the right; the k-th j must land in the unique slot whose
    suffix counts match its coordinates. A missing slot, or slots out of
    order, mean the point is outside the image.
    """
    spec = point.spec
    layout = point.spec.coordinate_layout()
    by_ij: dict[tuple[int, int], list[int]] = {}
    for value, (i, j, k) in zip(point.coords, layout):
        by_ij.setdefault((i, j), []).append(value)
    word: list[int] = [1] * spec.dims[0]
    for j in range(2, spec.m + 1):
        suffix_of_slot: dict[tuple[int, ...], int] = {}
        running = [0] * j
        suffix_of_slot[tuple(running[1:])] = len(word)
        for t in range(len(word) - 1, -1, -1):
            running[word[t]] += 1
            suffix_of_slot[tuple(running[1:])] = t
        slots = []
        for k in range(spec.dims[j - 1]):
            wanted = tuple(by_ij[(i, j)][k] for i in range(1, j))
            slot = suffix_of_slot.get(wanted)
            if slot is None:
                raise NotInImageError(
                    f"no slot with suffix counts {wanted} for the {k + 1}-th {j}"
                )
            slots.append(slot)
        if any(s2 < s1 for s1, s2 in zip(slots, slots[1:])):
            raise NotInImageError(f"occurrences of {j} would be out of order")
        for offset, slot in enumerate(slots):
            word.insert(slot + offset, j)
    return MoveSequence(spec, tuple(word))


# -- batch embedding (used by the exhaustive verifier) ------------------------


def words_array(spec: GridSpec) -> np.ndarray:
    """All words as a (count, total_moves) uint8 array, lexicographic rows."""
    count = spec.word_count()
    arr = np.empty((count, spec.total_moves), dtype=np.uint8)
    for row, word in enumerate(iter_words(spec)):
        arr[row] = word
    return arr


def phi_batch(spec: GridSpec, words: np.ndarray) -> np.ndarray:
    """Row-wise ``phi`` over a word array; returns int16 coordinates."""
    count, n = words.shape
    if n != spec.total_moves:
        raise GraphError(f"word array has {n} columns, expected {spec.total_moves}")
    if spec.embedding_dim == 0:
        return np.zeros((count, 0), dtype=np.int16)
    after = {}
    for i in range(1, spec.m):
        hits = (words == i).astype(np.int16)
        suffix = np.cumsum(hits[:, ::-1], axis=1, dtype=np.int16)[:, ::-1]
        after[i] = np.concatenate(
            [suffix[:, 1:], np.zeros((count, 1), dtype=np.int16)], axis=1
        )
    cols = []
    for j in range(2, spec.m + 1):
        mask = words == j
        positions = np.argsort(~mask, axis=1, kind="stable")[:, : spec.dims[j - 1]]
        for i in range(1, j):
            cols.append(np.take_along_axis(after[i], positions, axis=1))
    return np.concatenate(cols, axis=1)


# -- staircases, permutations, tournaments -----------------------------------


def staircase(n1: int, n2: int) -> Graph:
    """Lattice graph on weakly decreasing vectors n1 >= a_1 >= ... >= a_n2 >= 0,
    adjacent when they differ by one in one coordinate."""
    if n1 < 1 or n2 < 1:
        raise GraphError("staircase needs positive side lengths")
    vectors = [
        tuple(sorted(vec, reverse=True))
        for vec in combinations_with_replacement(range(n1 + 1), n2)
    ]
    names = {vec: coord_name(vec) for vec in vectors}
    edges = []
    for vec in vectors:
        for t in range(n2):
            bumped = list(vec)
            bumped[t] += 1
            key = tuple(bumped)
            if key in names and key != vec:
                edges.append((names[vec], names[key]))
    return Graph(names.values(), set(edges))


def cayley_adjacent_transpositions(m: int, *, limit: int = DEFAULT_GEODESIC_LIMIT) -> Graph:
    """Permutations of 1..m, adjacent when one adjacent swap apart."""
    if m < 1:
        raise GraphError("m must be positive")
    if m > 9:
        raise GraphError("permutation vertices are digit strings; m is capped at 9")
    if math.factorial(m) > limit:
        raise GeodesicOverflowError(math.factorial(m), limit)
    verts = ["".join(map(str, p)) for p in permutations(range(1, m + 1))]
    edges = []
    for name in verts:
        for t in range(m - 1):
            swapped = name[:t] + name[t + 1] + name[t] + name[t + 2 :]
            if name < swapped:
                edges.append((name, swapped))
    return Graph(verts, edges)


@dataclass(frozen=True)
class TransitiveTournament:
    """An orientation of all pairs 1..m with no directed triangle.

    ``beats[(i, j)]`` for i < j is True when i points at j.
    """

    m: int
    beats: tuple[bool, ...]

    def __post_init__(self) -> None:
        pairs = list(combinations(range(1, self.m + 1), 2))
        if len(self.beats) != len(pairs):
            raise GraphError(f"need {len(pairs)} orientation bits")
        wins = {pair: flag for pair, flag in zip(pairs, self.beats)}

        def points_at(i: int, j: int) -> bool:
            return wins[(i, j)] if i < j else not wins[(j, i)]

        for i, j, l in combinations(range(1, self.m + 1), 3):
            if points_at(i, j) and points_at(j, l) and points_at(l, i):
                raise GraphError(f"directed triangle on ({i}, {j}, {l})")

    def ranking(self) -> tuple[int, ...]:
        """Elements ordered so that earlier ones point at all later ones."""
        pairs = list(combinations(range(1, self.m + 1), 2))
        score = {i: 0 for i in range(1, self.m + 1)}
        for (i, j), flag in zip(pairs, self.beats):
            score[i if flag else j] += 1
        return tuple(sorted(score, key=lambda i: -score[i]))


def tournament_of(ms: MoveSequence) -> TransitiveTournament:
    """For all-ones dims: orient each pair toward the earlier symbol."""
    if any(n != 1 for n in ms.spec.dims):
        raise GraphError("tournaments need every symbol to appear exactly once")
    position = {s: t for t, s in enumerate(ms.symbols)}
    bits = tuple(
        position[i] < position[j]
        for i, j in combinations(range(1, ms.spec.m + 1), 2)
    )
    return TransitiveTournament(ms.spec.m, bits)
