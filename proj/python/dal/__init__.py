"""Steady-state entanglement of two qubits coupled to a dissipative ancilla."""

from ._core import (
    DalError,
    ModelParams,
    __version__,
    eigenstate_negativity,
    find_crossover,
    fidelities,
    fidelity_trajectory,
    hamiltonian,
    hamiltonian_spectrum,
    maximize_entanglement,
    negativity,
    optimal_two_qubit_coupling,
    partial_trace_c,
    scan_gamma_c,
    steady_negativity,
    steady_state,
    sweep_2d,
    truncated_mixture_negativity,
    two_qubit_analytic,
)

__all__ = [
    "DalError",
    "ModelParams",
    "__version__",
    "eigenstate_negativity",
    "find_crossover",
    "fidelities",
    "fidelity_trajectory",
    "hamiltonian",
    "hamiltonian_spectrum",
    "maximize_entanglement",
    "negativity",
    "optimal_two_qubit_coupling",
    "partial_trace_c",
    "scan_gamma_c",
    "steady_negativity",
    "steady_state",
    "sweep_2d",
    "truncated_mixture_negativity",
    "two_qubit_analytic",
]
