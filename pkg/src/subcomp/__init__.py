"""Exact toolkit for subgraph complementation numbers over GF(2).

Computes c2 (minimum number of vertex subsets whose pair parities realize
a graph), the GF(2) minimum rank over all fitting matrices, and t2 (the
triclique analogue), together with verifiable certificates: set systems,
Gram factorizations, triclique collections, path covers, and bound
constructions.
"""

from .bounds import BoundReport, cycle_system, edge_bound_system, min_vertex_cover, vertex_cover_system
from .forbidden import (
    CATALOG,
    SET_A,
    SET_B,
    classify_c2_le1,
    classify_c2_le2,
    classify_mr_le2,
    find_minimal_forbidden,
)
from .forests import (
    PathCover,
    forest_path_cover,
    forest_system,
    path_cover_number,
    tree_path_cover,
)
from .gf2 import (
    BitMatrix,
    BlockKind,
    CongruenceDecomposition,
    GramCase,
    GramFactorization,
    congruence_decompose,
    gram_factor,
    merge_unit_hyperbolic,
    rank_gf2,
)
from .graphs import (
    CanonicalForm,
    Graph,
    canonical_form,
    components,
    contains_induced,
    emit_graph6,
    enumerate_nonisomorphic,
    parse_graph6,
    symmetric_difference,
)
from .minrank import MinRankResult, component_minrank, is_exceptional, min_rank_f2
from .systems import (
    C2Result,
    ComplementationSystem,
    appearance_parity,
    brute_force_c2,
    c2,
    c2_value,
    distance,
    has_even_minimum_system,
    symdiff_transform,
    verify_system,
)
from .tricliques import (
    Triclique,
    TricliqueSystem,
    brute_force_t2,
    build_triclique_system,
    t2,
    verify_triclique_system,
)

__version__ = "0.1.0"
