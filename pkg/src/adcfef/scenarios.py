"""Bell source -> damp Bob's qubit -> optionally damp Alice's qubit."""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .channels import QubitSite, check_probability, damp
from .fidelity import (
    GUARD,
    FefReport,
    analyze,
    fef_one_damped,
    fef_two_damped_phi,
    fef_two_damped_psi,
)
from .qmat import DensityMatrix, make_density, pure_state


class BellKind(enum.Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    @classmethod
    def parse(cls, name: "str | BellKind") -> "BellKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown Bell state {name!r}; expected one of phi+, phi-, psi+, psi-"
            ) from None

    @property
    def is_phi(self) -> bool:
        return self in (BellKind.PHI_PLUS, BellKind.PHI_MINUS)

    @property
    def sign(self) -> int:
        return 1 if self in (BellKind.PHI_PLUS, BellKind.PSI_PLUS) else -1


_S = 1.0 / math.sqrt(2.0)


def bell_vector(kind: BellKind) -> np.ndarray:
    kind = BellKind.parse(kind)
    v = np.zeros(4, dtype=np.complex128)
    if kind.is_phi:
        v[0], v[3] = _S, kind.sign * _S
    else:
        v[1], v[2] = _S, kind.sign * _S
    return v


def bell(kind: BellKind) -> DensityMatrix:
    """Projector onto a Bell state."""
    return _bell(BellKind.parse(kind))


@functools.lru_cache(maxsize=None)
def _bell(kind: BellKind) -> DensityMatrix:
    return pure_state(bell_vector(kind))


@dataclass(frozen=True)
class DampingScenario:
    source: BellKind
    pb: float
    pa: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "source", BellKind.parse(self.source))
        object.__setattr__(self, "pb", check_probability(self.pb, "pb"))
        if self.pa is not None:
            object.__setattr__(self, "pa", check_probability(self.pa, "pa"))


@dataclass(frozen=True)
class ScenarioResult:
    scenario: DampingScenario
    initial: DensityMatrix
    after_b: DensityMatrix
    after_ab: DensityMatrix | None
    report_one: FefReport
    report_two: FefReport | None
    improved: bool | None


def closed_form_fef(s: DampingScenario) -> float:
    """Closed-form FEF of the final state of ``s``."""
    if s.pa is None:
        return fef_one_damped(s.pb)
    if s.source.is_phi:
        return fef_two_damped_phi(s.pa, s.pb)
    return fef_two_damped_psi(s.pa, s.pb)


def run(s: DampingScenario) -> ScenarioResult:
    """Execute the pipeline, damping B first and then (if ``s.pa`` is set) A."""
    initial = bell(s.source)
    after_b = damp(initial, s.pb, QubitSite.B)
    report_one = analyze(after_b, fef_one_damped(s.pb))
    after_ab = report_two = improved = None
    if s.pa is not None:
        after_ab = damp(after_b, s.pa, QubitSite.A)
        report_two = analyze(after_ab, closed_form_fef(s))
        improved = report_two.fef_numeric > report_one.fef_numeric + GUARD
    return ScenarioResult(s, initial, after_b, after_ab, report_one, report_two, improved)


def printed_one_damped(kind: BellKind, p: float) -> np.ndarray:
    """Closed-form state after damping Bob's qubit, with unit trace."""
    kind = BellKind.parse(kind)
    p = check_probability(p)
    c = kind.sign * math.sqrt(1.0 - p)
    if kind.is_phi:
        m = [[1, 0, 0, c], [0, 0, 0, 0], [0, 0, p, 0], [c, 0, 0, 1 - p]]
    else:
        m = [[p, 0, 0, 0], [0, 1 - p, c, 0], [0, c, 1, 0], [0, 0, 0, 0]]
    return 0.5 * np.array(m, dtype=np.complex128)


def printed_two_damped_psi(kind: BellKind, pa: float, pb: float) -> np.ndarray:
    """Closed-form Psi-source state after damping B then A, with unit trace."""
    kind = BellKind.parse(kind)
    if kind.is_phi:
        raise ValueError("no closed-form matrix is tabulated for a doubly damped Phi source")
    pa, pb = check_probability(pa, "pa"), check_probability(pb, "pb")
    c = kind.sign * math.sqrt((1.0 - pa) * (1.0 - pb))
    m = [[pa + pb, 0, 0, 0], [0, 1 - pb, c, 0], [0, c, 1 - pa, 0], [0, 0, 0, 0]]
    return 0.5 * np.array(m, dtype=np.complex128)


def printed_matrix(s: DampingScenario) -> DensityMatrix:
    if s.pa is None:
        return make_density(printed_one_damped(s.source, s.pb))
    return make_density(printed_two_damped_psi(s.source, s.pa, s.pb))


def printed_matrix_check(s: DampingScenario) -> float:
    """Max-abs residual between the pipeline state and its tabulated closed form.

    Raises:
        ValueError: for a doubly damped Phi source, which has no tabulated form.
    """
    golden = printed_matrix(s).mat
    res = run(s)
    state = res.after_b if s.pa is None else res.after_ab
    return float(np.max(np.abs(state.mat - golden)))
