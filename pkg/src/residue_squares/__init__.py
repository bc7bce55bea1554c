"""Sums of squares of integers lying in a fixed residue class d mod m.

Decomposition engines, exact universality thresholds, a constrained
four-square solver, brute-force minimal-count oracles, and empirical
three-square exception scans.
"""

__version__ = "0.1.0"

from .arith import (
    NotRepresentable,
    Pow4Normalization,
    ThreeSquareDecomposition,
    decompose_three_squares,
    decompose_two_squares,
    is_prime,
    is_three_square_representable,
    pow4_normalize,
)
from .cauchy import (
    CauchyInstance,
    CauchyWitness,
    Infeasible,
    cauchy_feasible,
    cauchy_solve,
)
from .engine import (
    BelowBound,
    ConstructionFailed,
    NoAdmissibleS,
    NoSU,
    NotCoprime,
    OutOfRange,
    ResidueClass,
    ResidueConstraints,
    SquareRepresentation,
    ThresholdProfile,
    asu_value,
    decompose_asu,
    decompose_effective,
    decompose_small,
    decompose_su,
    effective_bound,
    make_class,
    min_squares_oracle,
    min_squares_table,
    min_squares_terms,
    residue_constraints,
    su_exists,
    su_value,
    threshold_profile,
    verify_representation,
)
from .scanner import (
    ExceptionClassification,
    ScanReport,
    SearchExhausted,
    asu_lower_witnesses,
    classify_exception,
    count_three_term,
    scan_exceptions,
    su_extremal_witness,
)
from .verify import CriterionResult, run_criterion, run_suite

__all__ = [
    "BelowBound",
    "CauchyInstance",
    "CauchyWitness",
    "ConstructionFailed",
    "CriterionResult",
    "ExceptionClassification",
    "Infeasible",
    "NoAdmissibleS",
    "NoSU",
    "NotCoprime",
    "NotRepresentable",
    "OutOfRange",
    "Pow4Normalization",
    "ResidueClass",
    "ResidueConstraints",
    "ScanReport",
    "SearchExhausted",
    "SquareRepresentation",
    "ThreeSquareDecomposition",
    "ThresholdProfile",
    "asu_lower_witnesses",
    "asu_value",
    "cauchy_feasible",
    "cauchy_solve",
    "classify_exception",
    "count_three_term",
    "decompose_asu",
    "decompose_effective",
    "decompose_small",
    "decompose_su",
    "decompose_three_squares",
    "decompose_two_squares",
    "effective_bound",
    "is_prime",
    "is_three_square_representable",
    "make_class",
    "min_squares_oracle",
    "min_squares_table",
    "min_squares_terms",
    "pow4_normalize",
    "residue_constraints",
    "run_criterion",
    "run_suite",
    "scan_exceptions",
    "su_exists",
    "su_extremal_witness",
    "su_value",
    "threshold_profile",
    "verify_representation",
    "__version__",
]
