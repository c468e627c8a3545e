"""Finite-ring engine: constructions, distinguished subsets, taxonomy
classification with certificates, and a corpus-quantified check suite."""

__version__ = "0.1.0"

from .kernel import (
    CapacityError,
    ConstructionError,
    Element,
    ElementSet,
    FiniteRing,
    MalformedTableError,
    RingError,
    ValidationReport,
    element_capacity,
    validate_ring,
)
from .constructions import (
    BimoduleRingAction,
    NonUnitalRing,
    corner,
    dorroh,
    h_ring,
    ideal_action,
    ideal_generated,
    matrix_ring,
    product,
    quotient,
    quotient_by_generators,
    self_action,
    table_ring,
    upper_triangular,
    zero_action,
    zn,
)
from .analysis import (
    ann_left,
    ann_right,
    center,
    comm,
    comm2,
    delta,
    delta_alternative_forms,
    idempotents,
    jacobson_radical,
    nilpotents,
    qnil,
    units,
)
from .classify import (
    ClassificationReport,
    classification_report,
    clean_decompositions,
    is_abelian,
    is_clean,
    is_delta_quasipolar,
    is_j_clean,
    is_j_quasipolar,
    is_local,
    is_quasipolar,
    is_strongly_clean,
    is_strongly_delta_clean,
    is_strongly_pi_regular,
    is_uniquely_clean,
    is_uniquely_delta_clean,
    spectral_idempotents,
)
from .ringspec import BuildContext, RingSpecError, build_ring, parse_ring_spec
from .harness import (
    CheckResult,
    SuiteReport,
    build_corpus,
    check_dorroh,
    check_h_ring_equivalence,
    run_check,
    run_suite,
)

__all__ = [
    "BimoduleRingAction",
    "BuildContext",
    "CapacityError",
    "CheckResult",
    "ClassificationReport",
    "ConstructionError",
    "Element",
    "ElementSet",
    "FiniteRing",
    "MalformedTableError",
    "NonUnitalRing",
    "RingError",
    "RingSpecError",
    "SuiteReport",
    "ValidationReport",
    "ann_left",
    "ann_right",
    "build_corpus",
    "build_ring",
    "center",
    "check_dorroh",
    "check_h_ring_equivalence",
    "classification_report",
    "clean_decompositions",
    "comm",
    "comm2",
    "corner",
    "delta",
    "delta_alternative_forms",
    "dorroh",
    "element_capacity",
    "h_ring",
    "idempotents",
    "ideal_action",
    "ideal_generated",
    "is_abelian",
    "is_clean",
    "is_delta_quasipolar",
    "is_j_clean",
    "is_j_quasipolar",
    "is_local",
    "is_quasipolar",
    "is_strongly_clean",
    "is_strongly_delta_clean",
    "is_strongly_pi_regular",
    "is_uniquely_clean",
    "is_uniquely_delta_clean",
    "jacobson_radical",
    "matrix_ring",
    "nilpotents",
    "parse_ring_spec",
    "product",
    "qnil",
    "quotient",
    "quotient_by_generators",
    "run_check",
    "run_suite",
    "self_action",
    "spectral_idempotents",
    "table_ring",
    "units",
    "upper_triangular",
    "validate_ring",
    "zero_action",
    "zn",
]
