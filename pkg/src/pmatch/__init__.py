"""Exact solvers, brute-force oracles, and executable theorem checks for
matching variants on simple graphs."""

from .graph import (
    Graph,
    Block,
    BlockDecomposition,
    ParseError,
    parse_graph,
    serialize_graph,
    generate,
    from_edge_mask,
    edge_mask_of,
    FIGURE_MATCHINGS,
    open_neighborhood,
    closed_neighborhood,
    induced_subgraph,
    complement,
    components,
    is_connected,
    is_bipartite,
    is_acyclic_graph,
    block_decomposition,
    is_edge_cut,
)
from .properties import (
    PropertyId,
    Matching,
    Orientation,
    MixedSet,
    BoundFunction,
    HEREDITARY_PROPERTIES,
    as_matching,
    is_matching,
    matching_violation,
    is_maximal_matching,
    is_perfect_matching,
    has_property,
    is_induced_matching,
    find_alternating_cycle,
    is_uniquely_restricted,
    is_connected_matching,
    is_isolate_free_matching,
    is_disconnected_matching,
    is_acyclic_matching,
    find_independent_orientation,
    is_independent_matching,
    find_bipartite_orientation,
    is_bipartite_matching,
    are_cnbr_adjacent,
    is_cnbr_matching,
    are_onbr_adjacent,
    is_onbr_matching,
    is_vertex_irredundant_matching,
    is_edge_irredundant_matching,
    is_separating_matching,
    is_total_matching,
    is_maximal_total_matching,
    is_b_matching,
    is_maximal_p_matching,
)
from .matching import (
    maximum_matching,
    max_matching_size,
    lexmin_maximum_matching,
    hopcroft_karp,
    bipartite_matching_and_cover,
)
from .solvers import (
    ParameterId,
    ParameterResult,
    EngineConfig,
    BudgetExceededError,
    SetSystem,
    SdrResult,
    max_matching,
    min_maximal_matching,
    perfect_matching_exists,
    compute_beta_p,
    compute_beta_minus_p,
    classic_parameters,
    tree_b_matching_max,
    total_matching_bounds,
    min_separating_matching,
    block_class_fast_path,
    sdr_solve,
    compute_parameter,
)
from .oracle import (
    OracleReport,
    OracleLimitError,
    oracle_parameter,
    oracle_orientation_feasible,
    oracle_perfect_matchings,
    all_matchings,
)
from .theorems import (
    TheoremVerdict,
    NordhausGaddumRecord,
    check_gallai,
    check_konig,
    check_frobenius,
    check_hall,
    check_proposition_chains,
    check_connected_theorem,
    check_ur_characterization,
    check_block_class_identity,
    nordhaus_gaddum_scan,
    all_graphs,
    random_graphs,
    graph_id,
)

__version__ = "0.1.0"
