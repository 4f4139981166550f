"""Tests for grid words, the lattice embedding, and the related families."""

import itertools
import json
import math

import numpy as np
import pytest

import oracles
from spgraphs import (
    GeodesicOverflowError,
    GraphError,
    GridSpec,
    LatticePoint,
    MoveSequence,
    NotInImageError,
    TransitiveTournament,
    build_spg,
    cayley_adjacent_transpositions,
    cycle_graph,
    enumerate_sequences,
    grid_base,
    is_isomorphic,
    iter_words,
    lattice_point_from_json,
    parse_move_sequence,
    path_to_word,
    phi,
    phi_batch,
    phi_inverse,
    staircase,
    tournament_of,
    word_to_path,
    words_adjacent,
    words_array,
)


def test_grid_spec_basics():
    spec = GridSpec((3, 3, 2))
    assert spec.m == 3
    assert spec.total_moves == 8
    assert spec.embedding_dim == 7
    assert spec.word_count() == 560
    assert spec.coordinate_layout() == [
        (1, 2, 1),
        (1, 2, 2),
        (1, 2, 3),
        (1, 3, 1),
        (1, 3, 2),
        (2, 3, 1),
        (2, 3, 2),
    ]
    with pytest.raises(GraphError):
        GridSpec(())
    with pytest.raises(GraphError):
        GridSpec((2, 0))


def test_move_sequence_validation_and_text_forms():
    spec = GridSpec((2, 1))
    ms = parse_move_sequence(spec, "121")
    assert ms.symbols == (1, 2, 1)
    assert str(ms) == "121"
    with pytest.raises(GraphError):
        MoveSequence(spec, (1, 1, 3))
    with pytest.raises(GraphError):
        MoveSequence(spec, (1, 2, 2))
    wide = GridSpec((1,) * 10)
    ms = MoveSequence(wide, tuple(range(1, 11)))
    assert str(ms) == "1,2,3,4,5,6,7,8,9,10"
    assert parse_move_sequence(wide, str(ms)).symbols == ms.symbols


def test_lattice_point_validation_and_json():
    spec = GridSpec((3, 3, 2))
    point = LatticePoint(spec, (3, 2, 1, 3, 1, 3, 0))
    again = lattice_point_from_json(point.to_json())
    assert again.spec == spec and again.coords == point.coords
    with pytest.raises(GraphError, match="expected 7"):
        LatticePoint(spec, (0, 0))
    with pytest.raises(GraphError, match="outside"):
        LatticePoint(spec, (4, 2, 1, 3, 1, 3, 0))
    with pytest.raises(GraphError, match="exceeds"):
        LatticePoint(spec, (1, 2, 1, 3, 1, 3, 0))


def test_grid_base_instance():
    inst = grid_base(GridSpec((2, 2)))
    assert inst.graph.num_vertices == 9
    assert inst.graph.num_edges == 12
    assert inst.source == "(0,0)"
    assert inst.target == "(2,2)"


def test_word_path_roundtrip_and_validation():
    spec = GridSpec((2, 2))
    for word in iter_words(spec):
        ms = MoveSequence(spec, word)
        assert path_to_word(spec, word_to_path(ms)).symbols == word
    with pytest.raises(GraphError, match="steps"):
        path_to_word(spec, ("(0,0)", "(2,2)"))
    with pytest.raises(GraphError, match="corner"):
        path_to_word(spec, ("(0,1)", "(1,1)", "(1,2)", "(2,2)", "(2,2)"))
    with pytest.raises(GraphError, match="unit move"):
        path_to_word(
            spec, ("(0,0)", "(1,1)", "(2,1)", "(2,2)", "(2,2)")
        )


def test_enumeration_is_lexicographic_and_guarded():
    spec = GridSpec((2, 2))
    sequences = enumerate_sequences(spec)
    words = [ms.symbols for ms in sequences]
    assert words == sorted(words)
    assert len(words) == 6
    assert words[0] == (1, 1, 2, 2)
    assert words[-1] == (2, 2, 1, 1)
    with pytest.raises(GeodesicOverflowError) as info:
        enumerate_sequences(spec, limit=5)
    assert info.value.count == 6


def test_words_adjacent_examples():
    assert words_adjacent((1, 2, 1), (2, 1, 1))
    assert not words_adjacent((1, 2, 1), (1, 2, 1))
    assert not words_adjacent((1, 2, 2), (2, 2, 1))
    assert not words_adjacent((1, 1, 2), (2, 2, 1))
    with pytest.raises(GraphError):
        words_adjacent((1, 2), (1, 2, 1))


def test_phi_worked_example():
    spec = GridSpec((3, 3, 2))
    point = phi(parse_move_sequence(spec, "32121231"))
    assert point.coords == (3, 2, 1, 3, 1, 3, 0)
    assert phi_inverse(point).symbols == (3, 2, 1, 2, 1, 2, 3, 1)


@pytest.mark.parametrize("dims", [(2, 2), (1, 1, 1), (2, 1, 2), (3, 2)])
def test_phi_matches_direct_counting_and_inverts(dims):
    spec = GridSpec(dims)
    for word in iter_words(spec):
        ms = MoveSequence(spec, word)
        point = phi(ms)
        assert point.coords == oracles.brute_phi(dims, word)
        assert phi_inverse(point).symbols == word


@pytest.mark.parametrize("dims", [(1, 1, 1), (1, 1, 2)])
def test_inverse_decides_image_membership(dims):
    spec = GridSpec(dims)
    image = {phi(MoveSequence(spec, w)).coords for w in iter_words(spec)}
    layout = spec.coordinate_layout()
    ranges = [range(spec.dims[i - 1] + 1) for (i, j, k) in layout]
    hits = set()
    for coords in itertools.product(*ranges):
        try:
            point = LatticePoint(spec, coords)
        except GraphError:
            continue
        try:
            ms = phi_inverse(point)
        except NotInImageError:
            continue
        assert phi(ms).coords == coords
        hits.add(coords)
    assert hits == image


def test_known_points_outside_the_image():
    spec = GridSpec((1, 1, 1))
    for coords in ((0, 1, 0), (1, 0, 1)):
        with pytest.raises(NotInImageError):
            phi_inverse(LatticePoint(spec, coords))


def test_phi_batch_matches_the_scalar_map():
    spec = GridSpec((3, 2, 2))
    words = words_array(spec)
    assert words.shape == (spec.word_count(), spec.total_moves)
    coords = phi_batch(spec, words)
    assert coords.shape == (spec.word_count(), spec.embedding_dim)
    for row, word in enumerate(iter_words(spec)):
        assert tuple(int(c) for c in coords[row]) == phi(MoveSequence(spec, word)).coords
    with pytest.raises(GraphError):
        phi_batch(spec, np.zeros((2, 3), dtype=np.uint8))


def test_phi_batch_on_a_single_axis_is_empty():
    spec = GridSpec((3,))
    coords = phi_batch(spec, words_array(spec))
    assert coords.shape == (1, 0)


@pytest.mark.parametrize("n1, n2", [(1, 1), (2, 2), (3, 2)])
def test_staircase_counts_and_spg(n1, n2):
    stair = staircase(n1, n2)
    assert stair.num_vertices == math.comb(n1 + n2, n2)
    h = build_spg(grid_base(GridSpec((n1, n2))))
    assert is_isomorphic(h.to_graph(), stair)


def test_staircase_validation():
    with pytest.raises(GraphError):
        staircase(0, 1)


def test_cayley_graphs():
    assert cayley_adjacent_transpositions(1).num_vertices == 1
    c6 = cayley_adjacent_transpositions(3)
    assert c6.num_vertices == 6 and c6.num_edges == 6
    assert is_isomorphic(c6, cycle_graph(6))
    four = cayley_adjacent_transpositions(4)
    assert four.num_vertices == 24 and four.num_edges == 36
    with pytest.raises(GraphError):
        cayley_adjacent_transpositions(10)
    with pytest.raises(GeodesicOverflowError):
        cayley_adjacent_transpositions(6, limit=100)


def test_tournament_validation_and_ranking():
    t = TransitiveTournament(3, (True, True, True))
    assert t.ranking() == (1, 2, 3)
    with pytest.raises(GraphError, match="triangle"):
        TransitiveTournament(3, (True, False, True))
    with pytest.raises(GraphError, match="orientation bits"):
        TransitiveTournament(3, (True,))


def test_tournament_of_recovers_every_word():
    spec = GridSpec((1, 1, 1, 1))
    seen = set()
    for word in iter_words(spec):
        t = tournament_of(MoveSequence(spec, word))
        assert t.ranking() == word
        seen.add(t.beats)
    assert len(seen) == 24
    with pytest.raises(GraphError):
        tournament_of(MoveSequence(GridSpec((2,)), (1, 1)))


def test_lattice_point_json_payload_shape():
    point = LatticePoint(GridSpec((1, 1)), (1,))
    payload = json.loads(point.to_json())
    assert payload == {"dims": [1, 1], "coords": [1]}
