"""Fully entangled fraction, teleportation fidelity and the repair thresholds.

The fully entangled fraction (FEF) of a two-qubit state is the largest
overlap ``<psi|rho|psi>`` over maximally entangled ``|psi>``. It is computed
exactly with the magic-basis method and can be cross-checked by
:func:`fef_oracle`, which samples maximally entangled states at random.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .channels import check_probability
from .qmat import DensityMatrix, hermitian_eigen

# strict thresholds (f > 1/2, improvement) are decided outside this band
GUARD = 1e-12

TELEPORT_THRESHOLD = 0.5
ONE_DAMPED_THRESHOLD = 2.0 * math.sqrt(2.0) - 2.0  # f = 1/2 for the one-damped state
REPAIR_ONSET = 0.75  # smallest p_b admitting an improving p_a
BOUND_SATURATES = math.sqrt(3.0) / 2.0  # g(p_b) reaches 1 here

_S = 1.0 / math.sqrt(2.0)
# columns: |Phi+>, i|Phi->, i|Psi+>, |Psi->
MAGIC_BASIS = np.array(
    [
        [_S, 1j * _S, 0, 0],
        [0, 0, 1j * _S, _S],
        [0, 0, 1j * _S, -_S],
        [_S, -1j * _S, 0, 0],
    ],
    dtype=np.complex128,
)

_YY = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]])


class NoImprovementPossible(ValueError):
    """Raised when no second damping can raise the FEF (p_b < 3/4)."""


def _two_qubit(rho: DensityMatrix) -> np.ndarray:
    m = rho.mat
    if m.shape != (4, 4):
        raise ValueError(f"expected a two-qubit state, got dim {m.shape[0]}")
    return m


def fef_numeric(rho: DensityMatrix) -> float:
    """Fully entangled fraction via the magic basis.

    Every maximally entangled state is, up to a global phase, a real unit
    vector in the magic basis, so the FEF is the top eigenvalue of the real
    part of ``rho`` written in that basis.
    """
    m = _two_qubit(rho)
    in_magic = MAGIC_BASIS.conj().T @ m @ MAGIC_BASIS
    return float(hermitian_eigen(in_magic.real).eigenvalues[0])


def haar_unitaries(n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` Haar-random 2x2 unitaries, shape ``(n, 2, 2)``.

    Uses the Euler-angle form with ``sin^2(theta)`` uniform, which is the
    Haar weighting on U(2).
    """
    alpha, psi, chi = rng.uniform(0.0, 2.0 * np.pi, size=(3, n))
    theta = np.arcsin(np.sqrt(rng.uniform(0.0, 1.0, size=n)))
    c, s = np.cos(theta), np.sin(theta)
    u = np.empty((n, 2, 2), dtype=np.complex128)
    u[:, 0, 0] = np.exp(1j * psi) * c
    u[:, 0, 1] = np.exp(1j * chi) * s
    u[:, 1, 0] = -np.exp(-1j * chi) * s
    u[:, 1, 1] = np.exp(-1j * psi) * c
    return u * np.exp(1j * alpha)[:, None, None]


def fef_oracle(rho: DensityMatrix, samples: int, seed: int, chunk: int = 1 << 16) -> float:
    """Brute-force lower bound on the FEF.

    Maximises ``<psi|rho|psi>`` over ``samples`` states ``(U x I)|Phi+>``
    with Haar-random ``U``. Deterministic for a given ``seed``.
    """
    m = _two_qubit(rho)
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    best = -np.inf
    left = samples
    while left > 0:
        n = min(chunk, left)
        # (U x I)|Phi+> has amplitude U[i, j] / sqrt(2) on |ij>
        psi = haar_unitaries(n, rng).reshape(n, 4) * _S
        vals = np.einsum("ni,ij,nj->n", psi.conj(), m, psi).real
        best = max(best, float(vals.max()))
        left -= n
    return best


def fef_one_damped(p: float) -> float:
    """FEF of any Bell state after damping one qubit with strength ``p``."""
    p = check_probability(p)
    return 0.25 * (1.0 + math.sqrt(1.0 - p)) ** 2


def fef_two_damped_phi_equal(p: float) -> float:
    p = check_probability(p)
    return 1.0 - p + 0.5 * p * p


def fef_two_damped_psi_equal(p: float) -> float:
    p = check_probability(p)
    return max(1.0 - p, 0.5 * p)


def fef_two_damped_phi(pa: float, pb: float) -> float:
    """FEF of a Phi-source state damped with ``pb`` on B, then ``pa`` on A."""
    pa, pb = check_probability(pa, "pa"), check_probability(pb, "pb")
    return 0.25 * (pa * pb + (1.0 + math.sqrt((1.0 - pa) * (1.0 - pb))) ** 2)


def psi_candidates(pa: float, pb: float) -> tuple[float, float]:
    """The two competing overlaps for a doubly damped Psi-source state."""
    pa, pb = check_probability(pa, "pa"), check_probability(pb, "pb")
    f1 = 0.25 * (pa + pb)
    f2 = 0.25 * (math.sqrt(1.0 - pa) + math.sqrt(1.0 - pb)) ** 2
    return f1, f2


def fef_two_damped_psi(pa: float, pb: float) -> float:
    return max(psi_candidates(pa, pb))


def teleportation_fidelity(f: float) -> float:
    return (2.0 * f + 1.0) / 3.0


def classify(f: float) -> str:
    """``"teleporting"``, ``"non-teleporting"`` or ``"boundary"`` (within GUARD of 1/2)."""
    if f > TELEPORT_THRESHOLD + GUARD:
        return "teleporting"
    if f < TELEPORT_THRESHOLD - GUARD:
        return "non-teleporting"
    return "boundary"


def improvement_bound_g(pb: float) -> float | None:
    """Closed-form bound ``g(p_b)``; ``None`` at the singular point ``p_b = 1/2``.

    A second damping ``p_a < g(p_b)`` raises the FEF of a Phi-source state.
    The bound comes from squaring an inequality, so it is the exact edge of
    the improving region only while ``g(p_b) <= 1`` on the rising branch,
    i.e. for ``p_b <= sqrt(3)/2``. Past that point every ``p_a`` in (0, 1]
    improves; see :func:`improvement_limit`.
    """
    pb = check_probability(pb, "pb")
    d = 2.0 * pb - 1.0
    if d == 0.0:
        return None
    return 4.0 * (math.sqrt(1.0 - pb) * d - (1.0 - pb)) / (d * d)


def improvement_limit(pb: float) -> float | None:
    """Supremum of the ``p_a`` values that raise the Phi-source FEF.

    ``None`` when no ``p_a > 0`` helps (``p_b <= 3/4``).
    """
    pb = check_probability(pb, "pb")
    if pb <= REPAIR_ONSET:
        return None
    if pb >= BOUND_SATURATES:
        return 1.0
    return min(1.0, improvement_bound_g(pb))


def improves(pa: float, pb: float) -> bool:
    """Whether damping A with ``pa`` raises the FEF of a Phi-source state damped on B."""
    return fef_two_damped_phi(pa, pb) > fef_one_damped(pb) + GUARD


def optimal_pa(pb: float) -> float:
    """Second damping strength that maximises the Phi-source FEF at fixed ``pb``."""
    pb = check_probability(pb, "pb")
    if pb < REPAIR_ONSET:
        raise NoImprovementPossible(f"no improving p_a exists for p_b = {pb} < 3/4")
    return pb * (4.0 * pb - 3.0) / (2.0 * pb - 1.0) ** 2


def fef_max_after_repair(pb: float) -> float:
    pb = check_probability(pb, "pb")
    if pb < REPAIR_ONSET:
        raise NoImprovementPossible(f"no improving p_a exists for p_b = {pb} < 3/4")
    return pb * pb / (2.0 * (2.0 * pb - 1.0))


def crossover_equal_damping(xtol: float = 1e-10) -> float:
    """Equal damping strength above which damping both qubits beats damping one.

    Root in (1/2, 1) of ``1 - p + p^2/2 = (1 + sqrt(1-p))^2 / 4``.
    """

    def gap(p):
        return fef_two_damped_phi_equal(p) - fef_one_damped(p)

    lo, hi = 0.5, 0.99
    if gap(lo) * gap(hi) >= 0:
        raise RuntimeError("crossover bracket has no sign change")
    return bisect(gap, lo, hi, xtol=xtol)


# eigenvalues of rho at or below this are rounding noise around an exact zero
_RANK_CUTOFF = 64 * np.finfo(float).eps


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit state.

    The ``lambda_i`` are the square roots of the eigenvalues of
    ``sqrt(rho) rho_tilde sqrt(rho)``. They are taken here as the singular
    values of ``tau = phi^T (Y x Y) phi`` with ``phi = V sqrt(W)`` from
    ``rho = V W V^dag``; ``tau tau^dag`` has that same spectrum, and the
    singular values avoid square-rooting rounding noise in zero eigenvalues.
    """
    m = _two_qubit(rho)
    eig = hermitian_eigen(m)
    keep = eig.eigenvalues > _RANK_CUTOFF
    phi = eig.eigenvectors[:, keep] * np.sqrt(eig.eigenvalues[keep])
    tau = phi.T @ _YY @ phi
    lam = np.zeros(4)
    if tau.size:
        lam[: tau.shape[0]] = np.linalg.svd(tau, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


@dataclass(frozen=True)
class FefReport:
    fef_numeric: float
    fef_closed: float | None
    teleport_fidelity: float
    is_teleporting: bool
    directly_distillable: bool

    @property
    def closed_residual(self) -> float | None:
        if self.fef_closed is None:
            return None
        return abs(self.fef_numeric - self.fef_closed)

    @property
    def classification(self) -> str:
        return classify(self.fef_numeric)


def analyze(rho: DensityMatrix, closed_form: float | None = None) -> FefReport:
    f = fef_numeric(rho)
    useful = f > TELEPORT_THRESHOLD + GUARD
    return FefReport(
        fef_numeric=f,
        fef_closed=closed_form,
        teleport_fidelity=teleportation_fidelity(f),
        is_teleporting=useful,
        directly_distillable=useful,
    )
