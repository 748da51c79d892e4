"""Sequential-measurement statistics and entropic uncertainty bounds.

Thin wrapper around the compiled core. Matrices are numpy arrays; spins are
passed as the integer 2s so half-integer values stay exact.
"""

from ._core import (
    BoundReport,
    bell_state,
    berta_check,
    binary_entropy,
    conditional_entropy,
    conditional_von_neumann,
    conditioned_bound_check,
    eig_hermitian,
    evolved_sz,
    expm_skew_hermitian,
    kron,
    maassen_uffink_check,
    max_overlap,
    measure_distribution,
    memory_witness,
    mutual_information,
    partial_trace,
    relative_entropy,
    robertson_check,
    run_checks,
    run_scan,
    sequential_joint,
    sequential_joint_spin,
    shannon,
    spin_operators,
    steering_witness,
    von_neumann_entropy,
    wigner_small_d,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "bell_state",
    "berta_check",
    "binary_entropy",
    "conditional_entropy",
    "conditional_von_neumann",
    "conditioned_bound_check",
    "eig_hermitian",
    "evolved_sz",
    "expm_skew_hermitian",
    "kron",
    "maassen_uffink_check",
    "max_overlap",
    "measure_distribution",
    "memory_witness",
    "mutual_information",
    "partial_trace",
    "relative_entropy",
    "robertson_check",
    "run_checks",
    "run_scan",
    "sequential_joint",
    "sequential_joint_spin",
    "shannon",
    "spin_operators",
    "steering_witness",
    "von_neumann_entropy",
    "wigner_small_d",
]
