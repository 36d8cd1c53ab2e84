"""Classical two-mode field simulator for pseudorandom-phase quantum analogies.

The package models optical two-mode fields phase-modulated with
pseudorandom phase sequences, routes them through gate arrays, reads the
results back out by quadrature demodulation, and reconstructs simulated
multi-qubit states from the resulting mode-status matrices.
"""
from .errors import (
    SimulationError,
    DegenerateStateError,
    NonPrimitivePolynomialError,
    ClosureError,
    DimensionMismatchError,
    PeriodUnusableError,
    UnrepresentableStateError,
    FormatError,
)
from .sequences import (
    PI,
    HALF_PI,
    PRIMITIVE_POLYNOMIALS,
    BitSequence,
    PhaseSequence,
    PpsSet,
    generate_m_sequence,
    build_pps_set,
    correlate,
    balance_sum,
    sequence_product,
)
from .fields import (
    MODE0,
    MODE1,
    ClassicalField,
    Unitary2,
    zero_field,
    make_single_pps_field,
    canonical_inputs,
    modulate,
    apply_unitary,
    beam_split,
    mode_split,
    combine,
    field_inner_product,
)
from .demod import (
    DEFAULT_THRESHOLD,
    ModeStatus,
    ModeStatusMatrix,
    demodulate_mode,
    quantize,
    mode_status,
    mode_status_matrix,
)
from .gates import (
    GATE_KINDS,
    BELL_VARIANTS,
    Input,
    Output,
    Split,
    ModeGate,
    Unitary,
    PhaseFlip,
    Combine,
    GateArray,
    PlacementTable,
    apply_mode_gate,
    run_array,
    parse_cell,
    format_cell,
    compile_placement,
    product_array,
    bell_array,
    ghz_array,
    w_array,
)
from .reconstruct import (
    SequencePermutation,
    SimulatedState,
    cyclic_permutations,
    term_for_permutation,
    reconstruct,
    sample_measurement,
)
from .symbolic import (
    SymbolicField,
    ProductExpansion,
    to_waveform,
    symbolic_demodulate,
    direct_product,
)
from .algorithms import (
    TYPICAL_KINDS,
    ShorInstance,
    ShorResult,
    GroverDatabase,
    GroverResult,
    TypicalState,
    shor_encode,
    shor_factor,
    period_from_state,
    grover_symbolic,
    grover_encode,
    grover_search,
    typical_state,
    builder_for,
)
from .fileformats import (
    save_pps_set,
    load_pps_set,
    save_fields,
    load_fields,
    save_matrix,
    load_matrix,
    load_placement,
    save_state,
    load_state,
    save_circuit,
    load_circuit,
    save_symbolic_field,
    load_symbolic_field,
    save_grover_db,
    load_grover_db,
)
from .bench import BenchReport, run_benchmarks, format_reports

__version__ = "0.1.0"

__all__ = [
    "SimulationError",
    "DegenerateStateError",
    "NonPrimitivePolynomialError",
    "ClosureError",
    "DimensionMismatchError",
    "PeriodUnusableError",
    "UnrepresentableStateError",
    "FormatError",
    "PI",
    "HALF_PI",
    "PRIMITIVE_POLYNOMIALS",
    "BitSequence",
    "PhaseSequence",
    "PpsSet",
    "generate_m_sequence",
    "build_pps_set",
    "correlate",
    "balance_sum",
    "sequence_product",
    "MODE0",
    "MODE1",
    "ClassicalField",
    "Unitary2",
    "zero_field",
    "make_single_pps_field",
    "canonical_inputs",
    "modulate",
    "apply_unitary",
    "beam_split",
    "mode_split",
    "combine",
    "field_inner_product",
    "DEFAULT_THRESHOLD",
    "ModeStatus",
    "ModeStatusMatrix",
    "demodulate_mode",
    "quantize",
    "mode_status",
    "mode_status_matrix",
    "GATE_KINDS",
    "BELL_VARIANTS",
    "Input",
    "Output",
    "Split",
    "ModeGate",
    "Unitary",
    "PhaseFlip",
    "Combine",
    "GateArray",
    "PlacementTable",
    "apply_mode_gate",
    "run_array",
    "parse_cell",
    "format_cell",
    "compile_placement",
    "product_array",
    "bell_array",
    "ghz_array",
    "w_array",
    "SequencePermutation",
    "SimulatedState",
    "cyclic_permutations",
    "term_for_permutation",
    "reconstruct",
    "sample_measurement",
    "SymbolicField",
    "ProductExpansion",
    "to_waveform",
    "symbolic_demodulate",
    "direct_product",
    "TYPICAL_KINDS",
    "ShorInstance",
    "ShorResult",
    "GroverDatabase",
    "GroverResult",
    "TypicalState",
    "shor_encode",
    "shor_factor",
    "period_from_state",
    "grover_symbolic",
    "grover_encode",
    "grover_search",
    "typical_state",
    "builder_for",
    "save_pps_set",
    "load_pps_set",
    "save_fields",
    "load_fields",
    "save_matrix",
    "load_matrix",
    "load_placement",
    "save_state",
    "load_state",
    "save_circuit",
    "load_circuit",
    "save_symbolic_field",
    "load_symbolic_field",
    "save_grover_db",
    "load_grover_db",
    "BenchReport",
    "run_benchmarks",
    "format_reports",
    "__version__",
]
