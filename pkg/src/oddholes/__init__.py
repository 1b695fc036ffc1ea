"""Structural analysis of graphs with odd girth and no long odd holes:
hole enumeration, cut structure, exact coloring and criticality,
K4-subdivision detection, and a corpus-level verification suite.
"""

from .budget import Budget, DEFAULT_LIMIT
from .coloring import (
    CriticalityVerdict,
    chromatic_number,
    greedy_clique,
    is_k_colorable,
    is_k_vertex_critical,
    verify_coloring,
)
from .cuts import (
    CutWitness,
    DirectConnection,
    all_same_length,
    constrained_vertex_cuts,
    direct_connections,
    edge_connectivity,
    induced_paths_between,
    k1_cuts,
    k2_cuts,
    pi_cuts,
    two_edge_cuts,
)
from .errors import (
    ExhaustedAttempts,
    MalformedInput,
    NoConnection,
    OddHolesError,
    SearchBudgetExceeded,
)
from .formats import (
    detect_format,
    iter_graphs,
    parse_dimacs,
    parse_graph6,
    parse_json_graph,
    write_dimacs,
    write_graph6,
    write_json_graph,
)
from .generators import (
    CorpusEntry,
    SplitMix64,
    builtin_corpus,
    cycle,
    generalized_petersen,
    grotzsch,
    k4_subdivision,
    k4_subdivision_custom,
    mycielski,
    odd_wheel,
    petersen,
    random_girth_graph,
    theta,
)
from .graph import (
    Block,
    Graph,
    blocks_and_cutvertices,
    closed_neighborhood,
    edge_symmetric_difference,
    from_edge_list,
    induced_subgraph,
    is_induced_cycle,
    is_induced_path,
    remove_edges,
    remove_vertices,
)
from .holes import (
    ChordalPathRecord,
    GellVerdict,
    INFINITY,
    chordal_paths,
    enumerate_induced_cycles,
    g_ell_membership,
    girth,
    is_induced_theta,
    odd_holes,
)
from .lemmas import (
    LEMMA_IDS,
    LemmaVerdict,
    SuiteConfig,
    SuiteReport,
    check_graph,
    run_suite,
)
from .subdivisions import (
    K4Subdivision,
    OddK4Verdict,
    arris_pairs,
    difference,
    edge_count_check,
    enumerate_k4_subdivisions,
    find_odd_k4_subdivision,
    is_odd_k4_subdivision,
    verify_subdivision,
)

__version__ = "0.1.0"
