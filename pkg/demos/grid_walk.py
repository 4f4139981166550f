"""Grid geodesics as words, their lattice embedding, and sorting networks.

A geodesic across an n1 x ... x nm box is a word recording which axis each
unit step advances. Two geodesics are adjacent exactly when they swap two
different consecutive moves, and the whole structure embeds into an integer
lattice: a word maps to the vector counting, for each later-axis move, how
many smaller-axis moves come after it. Run with ``python3 demos/grid_walk.py``.
"""

from spgraphs import (
    GridSpec,
    cayley_adjacent_transpositions,
    check_cayley,
    check_grid_embedding,
    check_staircase,
    parse_move_sequence,
    phi,
    phi_inverse,
)


def main() -> None:
    spec = GridSpec((3, 3, 2))
    word = parse_move_sequence(spec, "32121231")
    point = phi(word)
    print(f"grid {spec.dims}: word {word} sits at lattice point {point.coords}")
    print(f"round trip: {phi_inverse(point)}")
    print(f"embedding coordinates: {spec.coordinate_layout()}\n")

    for dims in [(2, 2), (3, 2), (2, 2, 2)]:
        print(" ", check_grid_embedding(GridSpec(dims)))
    print(" ", check_staircase(3, 2), "(staircase polygon vs 3x2 grid)\n")

    # With all box sides equal to one, words are permutations read as sorting
    # networks: the shortest path graph is the Cayley graph of the symmetric
    # group under adjacent transpositions.
    g = cayley_adjacent_transpositions(3)
    print(f"Cayley graph for m=3: {g.num_vertices} permutations, {g.num_edges} swaps")
    print(" ", check_cayley(3))


if __name__ == "__main__":
    main()
