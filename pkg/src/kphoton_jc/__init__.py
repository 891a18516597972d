"""Exact solution of the k-photon Jaynes-Cummings model with a brute-force oracle."""

from .eigensolver import EigenResult, hermitian_eigen, residual
from .fock import FockSpace
from .model import (
    ModelParams,
    SpectrumEntry,
    Spinor,
    analytic_eigenspinor,
    analytic_spectrum,
    block_decompose,
    build_hamiltonian,
    build_interaction_hamiltonian,
    mixing_angle,
    spectrum_discrepancy_report,
)
from .su2 import PerelomovState, TiltParams

__all__ = [
    "EigenResult",
    "FockSpace",
    "ModelParams",
    "PerelomovState",
    "SpectrumEntry",
    "Spinor",
    "TiltParams",
    "analytic_eigenspinor",
    "analytic_spectrum",
    "block_decompose",
    "build_hamiltonian",
    "build_interaction_hamiltonian",
    "hermitian_eigen",
    "mixing_angle",
    "residual",
    "spectrum_discrepancy_report",
]

__version__ = "0.1.0"
