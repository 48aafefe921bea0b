"""Transversal switching between stabilizer codes.

Construct generator-exchange circuits mapping any [[n1,k,d1]] stabilizer
code to any [[n2,k,d2]] one, verify that every intermediate code along
the circuit keeps its distance, simulate the measure-and-correct channel
on stabilizer states, and evaluate how many ancilla qubits suffice for a
random draw to succeed.
"""

from . import analysis, catalog, fixtures, gadgets, gf2, pauli, rewiring, tableau
from .analysis import (
    DistanceReport,
    ErrorClass,
    code_distance,
    classify_error,
    commutativity_check,
    detectable,
    failure_bound,
    masking_enumerate,
    masking_exact,
    masking_mc,
    min_ancilla,
    step_subsystem_distance,
    verify_path,
)
from .gadgets import CircuitBundle, Gadget, emit, gate_count
from .pauli import (
    PauliOp,
    StabilizerCode,
    format_code,
    in_group,
    normalizer_basis,
    parse_code,
    random_stabilizer_code,
    syndrome,
)
from .rewiring import (
    ConversionPath,
    ConversionStep,
    Decomposition,
    RewiringConfig,
    SearchExhaustedError,
    SearchResult,
    build_path,
    decompose,
    load_fixture_decomposition,
    pad,
    randomize,
    search,
    solve_bridges,
)
from .tableau import (
    LogicalFrame,
    Tableau,
    encode,
    inject_and_check,
    logical_frame,
    run_path,
    run_step,
    transport_logicals,
)

__version__ = "0.1.0"
