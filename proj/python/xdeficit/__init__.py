"""Quantum deficit of two-qubit X states."""

from ._core import (
    RNG_ALGORITHM,
    CaseMismatchError,
    DomainError,
    G,
    InvalidStateError,
    NormalizationError,
    bell_diagonal_deficit,
    classify_case,
    deficit,
    entropy,
    grid_oracle,
    maximize_G,
    measured_spectrum,
    random_states,
    spectrum,
    su2_to_bloch,
    validate_state,
)

__all__ = [
    "RNG_ALGORITHM",
    "CaseMismatchError",
    "DomainError",
    "G",
    "InvalidStateError",
    "NormalizationError",
    "bell_diagonal_deficit",
    "classify_case",
    "deficit",
    "entropy",
    "grid_oracle",
    "maximize_G",
    "measured_spectrum",
    "random_states",
    "spectrum",
    "su2_to_bloch",
    "validate_state",
]
