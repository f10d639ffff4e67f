"""Perfect matchings of K_2n with prescribed circular edge lengths.

The package decides whether a multiset of n lengths can be realized as the
edge-length list of a perfect matching on 2n circularly arranged vertices,
constructs an explicit matching for every settled family, and cross-validates
both answers with an independent exhaustive search.
"""

from .core import (
    InvalidEdgeError,
    InvalidListError,
    LengthList,
    Matching,
    Verdict,
    edge_length,
    length_list,
    reduced_length,
    verify_realizes,
)
from .feasibility import (
    TwoLengthInstance,
    decide,
    decide_two_lengths,
    decide_uniform,
    divisor_condition,
    even_count_condition,
    projection_parity_condition,
    signed_sum_condition,
)
from .constructors import (
    ConstructionError,
    InfeasibleListError,
    NotApplicableError,
    SolveOutcome,
    SolveReport,
    construct_chain,
    construct_consecutive,
    construct_even_x_pair,
    construct_odd_pair,
    construct_one_n,
    construct_one_x,
    construct_one_x_large_a,
    construct_skolem_stack,
    construct_sparse,
    construct_two_lengths,
    construct_uniform,
    construct_uniform_even,
    construct_uniform_odd,
    skolem_matching,
    solve,
    two_lengths_plan,
)
from .oracle import (
    ConjectureReport,
    SearchStats,
    check_conjecture,
    check_coprime_theorem,
    count_solutions,
    enumerate_lists,
    oracle_solve,
)
from .skolem import (
    SkolemError,
    is_skolem_sequence,
    skolem_order_exists,
    skolem_pairs,
    skolem_sequence,
)
from .transforms import (
    ResidueDecomposition,
    TransformError,
    concat,
    concat_all,
    lift,
    project,
    scale_by_unit,
    translate,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
