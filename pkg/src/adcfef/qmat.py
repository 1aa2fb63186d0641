"""Small dense complex linear algebra for one- and two-qubit states.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Basis order for
two qubits is ``|00>, |01>, |10>, |11>`` with qubit A (Alice) as the left
tensor factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10


class DensityMatrixError(ValueError):
    """Base class for rejected density matrices."""


class HermiticityViolation(DensityMatrixError):
    pass


class TraceViolation(DensityMatrixError):
    pass


class PositivityViolation(DensityMatrixError):
    pass


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square, finite complex matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def tensor(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``; ``a`` acts on the left (A) factor."""
    return np.kron(as_matrix(a), as_matrix(b))


def hermitian_residual(a) -> float:
    a = as_matrix(a)
    return float(np.max(np.abs(a - a.conj().T)))


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted descending; ``eigenvectors[:, k]`` pairs with ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eigen(a) -> EigenDecomposition:
    """Full eigensystem of a Hermitian matrix.

    Raises:
        ValueError: if ``a`` is not Hermitian to within ``HERMITIAN_TOL``.
        numpy.linalg.LinAlgError: if LAPACK fails to converge.
    """
    a = as_matrix(a)
    res = hermitian_residual(a)
    if res > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max |A - A^dag| = {res:.3e})")
    w, v = np.linalg.eigh(a)
    order = np.argsort(w)[::-1]
    w, v = w[order], v[:, order]
    w.setflags(write=False)
    v.setflags(write=False)
    return EigenDecomposition(w, v)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated quantum state. Build it through :func:`make_density`."""

    mat: np.ndarray

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.mat if dtype is None else self.mat.astype(dtype)

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def make_density(m) -> DensityMatrix:
    """Validate ``m`` as a density matrix. Invalid input is rejected, never repaired."""
    m = np.array(as_matrix(m))
    herm = hermitian_residual(m)
    if herm > HERMITIAN_TOL:
        raise HermiticityViolation(f"not Hermitian: max |rho - rho^dag| = {herm:.3e}")
    tr = np.trace(m)
    if abs(tr - 1) > TRACE_TOL:
        raise TraceViolation(f"trace is {tr.real:.12g}, |tr - 1| = {abs(tr - 1):.3e}")
    lam_min = float(np.linalg.eigvalsh(m)[0])
    if lam_min < -POSITIVITY_TOL:
        raise PositivityViolation(f"not positive semidefinite: smallest eigenvalue {lam_min:.3e}")
    m.setflags(write=False)
    return DensityMatrix(m)


def pure_state(psi) -> DensityMatrix:
    psi = np.asarray(psi, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return make_density(np.outer(psi, psi.conj()))


def maximally_mixed(dim: int = 4) -> DensityMatrix:
    return make_density(np.eye(dim) / dim)


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced state of a two-qubit matrix; ``keep`` is ``"A"`` or ``"B"``."""
    r = np.asarray(rho, dtype=np.complex128).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "B":
        return np.einsum("jijk->ik", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
