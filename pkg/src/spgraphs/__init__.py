"""Shortest path graphs: geodesics of a fixed vertex pair, adjacent when
they differ in exactly one position.

The package builds these graphs for arbitrary finite simple graphs,
provides base-graph constructions with known outcomes (paths, complete
graphs, cycles, hypercubes, sums of instances), embeds grid geodesics into
integer lattices, and ships mechanical checkers for the structural
theorems that govern all of it.
"""

from .graphs import (
    BaseInstance,
    Graph,
    GraphError,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    distances,
    empty_graph,
    girth,
    graph_from_edge_list,
    graph_from_json,
    graph_to_edge_list,
    graph_to_json,
    hypercube_graph,
    is_connected,
    path_graph,
    product_vertex,
    star_graph,
)
from .geodesics import (
    DEFAULT_GEODESIC_LIMIT,
    GeodesicDag,
    GeodesicOverflowError,
    NoGeodesicError,
    ReducedInstance,
    build_dag,
    count_geodesics,
    enumerate_geodesics,
    iter_geodesics,
    mandatory_edges,
    paths_from_source,
    paths_to_target,
    reduce_instance,
)
from .isomorphism import (
    DEFAULT_MAX_VERTICES,
    IsomorphismSizeError,
    color_refinement,
    find_isomorphism,
    is_isomorphic,
    iso_invariant,
)
from .patterns import (
    DEFAULT_WORK_LIMIT,
    WorkLimitExceeded,
    find_induced,
    has_induced,
)
from .spg import (
    Decomposition,
    SpGraph,
    SpgStructureError,
    build_spg,
    decompose_at_index,
    difference_index,
    difference_positions,
    edges_at_index,
    index_color,
    spg_from_geodesics,
    spg_from_json,
    spg_of_reduced,
    spg_to_dot,
    spg_to_json,
    vertex_slice,
)
from .constructions import (
    CASE_MATCHING,
    CASE_OVERLAP,
    CASE_THROUGH_X,
    CASE_THROUGH_Y,
    ConstructionResult,
    TwoSumPrediction,
    complete_base,
    even_cycle_base,
    extend_distance,
    hypercube_base,
    odd_cycle_host_base,
    one_sum,
    parallel_paths,
    path_base,
    predict_two_sum,
    two_sum,
    union_base,
)
from .grid import (
    GridSpec,
    LatticePoint,
    MoveSequence,
    NotInImageError,
    TransitiveTournament,
    cayley_adjacent_transpositions,
    coord_name,
    enumerate_sequences,
    grid_base,
    iter_words,
    lattice_point_from_json,
    name_coords,
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
from .verify import (
    CheckReport,
    CheckRollup,
    CorpusSummary,
    STANDARD_CHECKS,
    check_cayley,
    check_claw_in_c4,
    check_complete_iff_same_index,
    check_decomposition,
    check_girth5_classification,
    check_grid_embedding,
    check_no_induced_c5,
    check_odd_cycle_c4,
    check_p3_c4,
    check_staircase,
    check_sum_theorems,
    check_tournament_bijection,
    connected_graphs,
    enumerate_graphs,
    exhaustive_instances,
    instance_label,
    random_instances,
    run_corpus,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
