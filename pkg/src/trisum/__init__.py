"""Constructive witnesses and exhaustive verification for sums of triangular numbers."""

from .core_arith import (
    MAX_INPUT,
    Quad1,
    Quad2,
    check_nat,
    eval_quad,
    indices_to_quad1,
    split_square_plus_double_tri,
    triangular,
)
from .squares import (
    NoRepresentation,
    NotRepresentable,
    ThreeSquares,
    TwoSquares,
    eligible_three_squares,
    is_square,
    three_squares,
    two_squares,
)
from .ternary import (
    COMPOSITE_MODULUS,
    MODULI,
    PreconditionViolated,
    TernaryRep,
    balance_odd_pair,
    lift_even_odd_pair,
    lift_odd_pair,
    rep_2t_t_t,
    rep_4t_t_t,
    rep_square_two_tri,
    rep_tt4t_mixed,
    rep_ttt_mixed,
)
from .theorem1 import fallback_count, represent_thm1, reset_fallback_count
from .theorem2 import (
    FourSquareForm,
    NoOffset,
    NotCoprime,
    branch_counts,
    find_offset,
    four_squares_to_quad2,
    quad2_to_four_squares,
    represent_thm2,
    reset_branch_counts,
    solve_offset_congruence,
)
from .verifier import (
    FORMS,
    BudgetExceeded,
    RangeReport,
    brute_quad,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_INPUT",
    "Quad1",
    "Quad2",
    "check_nat",
    "eval_quad",
    "indices_to_quad1",
    "split_square_plus_double_tri",
    "triangular",
    "NoRepresentation",
    "NotRepresentable",
    "ThreeSquares",
    "TwoSquares",
    "eligible_three_squares",
    "is_square",
    "three_squares",
    "two_squares",
    "COMPOSITE_MODULUS",
    "MODULI",
    "PreconditionViolated",
    "TernaryRep",
    "balance_odd_pair",
    "lift_even_odd_pair",
    "lift_odd_pair",
    "rep_2t_t_t",
    "rep_4t_t_t",
    "rep_square_two_tri",
    "rep_tt4t_mixed",
    "rep_ttt_mixed",
    "fallback_count",
    "represent_thm1",
    "reset_fallback_count",
    "FourSquareForm",
    "NoOffset",
    "NotCoprime",
    "branch_counts",
    "find_offset",
    "four_squares_to_quad2",
    "quad2_to_four_squares",
    "represent_thm2",
    "reset_branch_counts",
    "solve_offset_congruence",
    "FORMS",
    "BudgetExceeded",
    "RangeReport",
    "brute_quad",
    "verify_range",
    "__version__",
]
