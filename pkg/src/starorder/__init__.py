"""Finite *-ring toolkit: construction, classification, Conrad order,
central covers, orthomodularity of initial segments, and a theorem suite
verified by exhaustive enumeration."""

from .analysis import (
    AnnihilatorResult,
    CentralCoverTable,
    CheckResult,
    ClassificationReport,
    center,
    central_cover,
    central_projections,
    classify,
    cover_table,
    ideal_intersection,
    idempotents,
    left_annihilator,
    principal_right_ideal,
    projections,
    right_ann_principal,
    right_annihilator,
    verify_annihilator_identity,
    verify_cover_lemma,
)
from .errors import (
    CoverAbsentError,
    ForeignElementError,
    OrderCapError,
    PreconditionError,
    RingSpecError,
    TableValidationError,
    VerificationError,
)
from .fuzz import FAMILIES, FuzzConfig, FuzzReport, fuzz, structural_specs
from .order import (
    OrderStructure,
    SegmentPoset,
    build_order,
    cancellation_check,
    has_cub,
    hasse_dot,
    initial_segment,
    is_lattice,
    is_pseudo_lattice,
    join,
    leq_bruteforce,
    leq_cover,
    leq_star_bruteforce,
    meet,
    orthogonal,
    orthogonality_axioms,
    ortho_join_check,
    orthomodular_decomposition,
    problem2_check,
    quasi_orthomodular_check,
    subtractivity_check,
)
from .rings import (
    DEFAULT_ORDER_CAP,
    MatrixSpec,
    ModularSpec,
    ProductSpec,
    RingSpec,
    StarRing,
    TableSpec,
    build_from_tables,
    build_matrix,
    build_modular,
    build_product,
    realize,
    ring_to_table_spec,
    spec_from_json,
    spec_to_json,
)
from .theorems import THEOREM_IDS, TheoremVerdict, replay, run_suite, run_theorem

__version__ = "0.1.0"
