"""Amplitude damping on Bell states: fully entangled fraction, teleportation
fidelity, and repair of noisy states by damping the second qubit."""

from .channels import KrausChannel, QubitSite, adc, apply, damp, extend_to_site
from .fidelity import (
    FefReport,
    NoImprovementPossible,
    analyze,
    concurrence,
    crossover_equal_damping,
    fef_max_after_repair,
    fef_numeric,
    fef_one_damped,
    fef_oracle,
    fef_two_damped_phi,
    fef_two_damped_phi_equal,
    fef_two_damped_psi,
    fef_two_damped_psi_equal,
    improvement_bound_g,
    improvement_limit,
    optimal_pa,
    teleportation_fidelity,
)
from .qmat import (
    DensityMatrix,
    HermiticityViolation,
    PositivityViolation,
    TraceViolation,
    adjoint,
    hermitian_eigen,
    make_density,
    matmul,
    tensor,
)
from .scenarios import BellKind, DampingScenario, ScenarioResult, bell, printed_matrix_check, run

__version__ = "0.1.0"
