"""Exact enumerators for parking functions, labeled-tree inversions and
connected graphs, Tutte polynomials by two independent routes, and
log-concavity diagnostics over everything."""

from .enumerators import (
    LabeledTree,
    connected_edge_enumerator,
    inversion_count,
    inversion_enumerator,
    prufer_decode,
)
from .matroid import RankOracleMatroid, dual_rank, graphic_rank, tutte_by_rank_sum
from .multigraph import (
    MultiGraph,
    banana_graph,
    canonical_key,
    complete_graph,
    component_count,
    contract_edge,
    cycle_graph,
    delete_edge,
    enumerate_connected_multigraphs,
    path_graph,
)
from .parking import (
    d_out,
    gpf_sum_enumerator,
    is_gparking,
    is_parking_function,
    pf_sum_enumerator,
    sum_statistic,
)
from .polyalg import (
    BivariatePolynomial,
    IntPolynomial,
    LcReport,
    lc_diagnostics,
    poly_mul,
    reciprocal_reverse,
    shift_compose,
)
from .tutte import spanning_tree_count, specialize, tutte_delcon
from .verify import CheckResult, run_default_suite

__version__ = "0.1.0"
