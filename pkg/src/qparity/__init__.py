"""qparity: exact two-qubit circuit analysis of two-bit Boolean functions.

The package decides, with two oracle queries, whether a function
f: {0,1}^2 -> {0,1} has an even or odd number of ones in its output, and
exposes the supporting machinery: phase-oracle construction, statevector
simulation, entanglement measures, coherence-order readout analysis, and an
exhaustive classical query-count baseline.
"""

from .algorithms import (
    STEP_LABELS,
    AlgorithmResult,
    DJVerdict,
    classical_min_queries,
    constant_balanced_promise_functions,
    run_deutsch_jozsa_2bit,
    run_even_odd,
)
from .entanglement import EntanglementReport, analyze_pure_state, is_idempotent
from .gates import hadamard, hadamard_both, hadamard_first, hadamard_second, identity
from .linalg import (
    DEFAULT_TOL,
    DensityMatrix,
    StateVector,
    UnitaryOperator,
    apply,
    basis_state,
    compose,
    density_from_state,
    overlap,
    partial_trace,
    purity,
    states_equal,
    tensor_product,
)
from .nmr import (
    COHERENCE_ORDERS,
    CoherenceDecomposition,
    ObservabilityReport,
    coherence_order,
    decompose_coherences,
    magnetization_classifies_parity,
    observability,
    spin1_indistinguishability_check,
    threshold_separates,
    transverse_magnetization,
)
from .oracles import (
    FunctionClass,
    Parity,
    TruthTable,
    build_oracle,
    classify,
    enumerate_functions,
    is_separable_oracle,
)
from .reports import ClassificationReport, classification_report, to_canonical_json
from .verification import CheckResult, VerificationOutcome, run_all_checks

__version__ = "0.1.0"

__all__ = [
    "AlgorithmResult",
    "COHERENCE_ORDERS",
    "CheckResult",
    "ClassificationReport",
    "CoherenceDecomposition",
    "DEFAULT_TOL",
    "DJVerdict",
    "DensityMatrix",
    "EntanglementReport",
    "FunctionClass",
    "ObservabilityReport",
    "Parity",
    "STEP_LABELS",
    "StateVector",
    "TruthTable",
    "UnitaryOperator",
    "VerificationOutcome",
    "analyze_pure_state",
    "apply",
    "basis_state",
    "build_oracle",
    "classical_min_queries",
    "classification_report",
    "classify",
    "coherence_order",
    "compose",
    "constant_balanced_promise_functions",
    "decompose_coherences",
    "density_from_state",
    "enumerate_functions",
    "hadamard",
    "hadamard_both",
    "hadamard_first",
    "hadamard_second",
    "identity",
    "is_idempotent",
    "is_separable_oracle",
    "magnetization_classifies_parity",
    "observability",
    "overlap",
    "partial_trace",
    "purity",
    "run_all_checks",
    "run_deutsch_jozsa_2bit",
    "run_even_odd",
    "spin1_indistinguishability_check",
    "states_equal",
    "tensor_product",
    "threshold_separates",
    "to_canonical_json",
    "transverse_magnetization",
]
