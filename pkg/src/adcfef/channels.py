"""Kraus channels, the amplitude damping channel, and its two-qubit extensions."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .qmat import DensityMatrix, as_matrix, make_density, tensor

COMPLETENESS_TOL = 1e-12


class QubitSite(enum.Enum):
    A = "A"  # Alice, left tensor factor
    B = "B"  # Bob, right tensor factor


def check_probability(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p!r}")
    return p


def completeness_residual(ops) -> float:
    """Max-abs deviation of ``sum K^dag K`` from the identity."""
    total = sum(k.conj().T @ k for k in ops)
    return float(np.max(np.abs(total - np.eye(total.shape[0]))))


@dataclass(frozen=True, eq=False)
class KrausChannel:
    ops: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.ops:
            raise ValueError("a channel needs at least one Kraus operator")
        ops = tuple(as_matrix(k) for k in self.ops)
        if len({k.shape for k in ops}) != 1:
            raise ValueError("Kraus operators must share one dimension")
        res = completeness_residual(ops)
        if res > COMPLETENESS_TOL:
            raise ValueError(f"Kraus operators are not complete (residual {res:.3e})")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "ops", ops)

    @property
    def dim(self) -> int:
        return self.ops[0].shape[0]

    def __call__(self, rho: DensityMatrix) -> DensityMatrix:
        return apply(self, rho)


def adc(p: float) -> KrausChannel:
    """Amplitude damping with decay probability ``p``.

    The no-jump operator is ``diag(1, sqrt(1-p))`` and the jump operator
    carries ``sqrt(p)`` from ``|1>`` to ``|0>``. The jump operator is kept
    even when it is zero (``p = 0``).
    """
    p = check_probability(p)
    k1 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=np.complex128)
    k2 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=np.complex128)
    return KrausChannel((k1, k2))


def extend_to_site(c: KrausChannel, site: QubitSite) -> KrausChannel:
    """Lift a one-qubit channel to two qubits, acting on ``site`` only."""
    if c.dim != 2:
        raise ValueError(f"expected a single-qubit channel, got dim {c.dim}")
    site = QubitSite(site)
    eye = np.eye(2)
    if site is QubitSite.B:
        return KrausChannel(tuple(tensor(eye, k) for k in c.ops))
    return KrausChannel(tuple(tensor(k, eye) for k in c.ops))


def apply(c: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """``sum_i K_i rho K_i^dag``, revalidated as a density matrix."""
    m = rho.mat
    if m.shape[0] != c.dim:
        raise ValueError(f"dimension mismatch: channel {c.dim}, state {m.shape[0]}")
    return make_density(sum(k @ m @ k.conj().T for k in c.ops))


@functools.lru_cache(maxsize=4096)
def _site_adc(p: float, site: QubitSite) -> KrausChannel:
    return extend_to_site(adc(p), site)


def damp(rho: DensityMatrix, p: float, site: QubitSite) -> DensityMatrix:
    """Amplitude-damp one qubit of a two-qubit state."""
    return apply(_site_adc(check_probability(p), QubitSite(site)), rho)
