"""Steady-state entanglement of two driven polaritonic qubits."""

from ._core import (
    Error,
    InvalidArgument,
    NotEntangled,
    NumericalError,
    closed_form,
    closed_form_matrix,
    concurrence,
    dynamics,
    map_physical,
    negativity,
    steady_state,
    sweep,
    validate,
    witness,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "NotEntangled",
    "NumericalError",
    "closed_form",
    "closed_form_matrix",
    "concurrence",
    "dynamics",
    "map_physical",
    "negativity",
    "steady_state",
    "sweep",
    "validate",
    "witness",
]
__version__ = "0.1.0"
