"""Golden-value checks behind ``adcfef verify``.

Each check yields :class:`VerificationOutcome` rows. Inequality and
counting checks are encoded as an expected count of zero violations, or as
an indicator that must equal 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import fidelity as fd
from .channels import QubitSite, adc, apply, completeness_residual, extend_to_site
from .qmat import pure_state
from .scenarios import BellKind, DampingScenario, printed_matrix_check, run


@dataclass(frozen=True)
class VerificationOutcome:
    name: str
    expected: float
    computed: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.expected - self.computed) <= self.tolerance


def _row(name, expected, computed, tol) -> VerificationOutcome:
    return VerificationOutcome(name, float(expected), float(computed), float(tol))


def _flag(name, ok: bool) -> VerificationOutcome:
    return VerificationOutcome(name, 1.0, 1.0 if ok else 0.0, 0.0)


def random_pure_state(rng: np.random.Generator):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return pure_state(v)


def random_scenario(rng: np.random.Generator) -> DampingScenario:
    source = list(BellKind)[rng.integers(4)]
    pb = float(rng.uniform())
    pa = float(rng.uniform()) if rng.uniform() < 0.75 else None
    return DampingScenario(source, pb, pa)


def check_one_damped(grid=None) -> Iterator[VerificationOutcome]:
    grid = np.round(np.linspace(0, 1, 11), 12) if grid is None else grid
    worst = 0.0
    for kind in BellKind:
        for p in grid:
            f = run(DampingScenario(kind, p)).report_one.fef_numeric
            worst = max(worst, abs(f - fd.fef_one_damped(p)))
    yield _row("one-damped FEF vs closed form, all sources (max residual)", 0.0, worst, 1e-9)
    yield _row("one-damped FEF at p=0.5", 0.7285533905932737, fd.fef_one_damped(0.5), 1e-10)


def check_threshold() -> Iterator[VerificationOutcome]:
    t = fd.ONE_DAMPED_THRESHOLD
    yield _row("f_one at 2*sqrt(2)-2", 0.5, fd.fef_one_damped(t), 1e-12)
    below = run(DampingScenario(BellKind.PHI_PLUS, t - 1e-6)).report_one
    above = run(DampingScenario(BellKind.PHI_PLUS, t + 1e-6)).report_one
    yield _flag("teleporting just below 2*sqrt(2)-2", below.is_teleporting)
    yield _flag("non-teleporting just above 2*sqrt(2)-2", not above.is_teleporting)
    at_09 = run(DampingScenario(BellKind.PHI_PLUS, 0.9)).report_one
    yield _flag("one-damped phi+ at p=0.9 is non-teleporting", not at_09.is_teleporting)


def check_equal_damping(n: int = 101) -> Iterator[VerificationOutcome]:
    worst_phi = worst_psi = 0.0
    for p in np.linspace(0, 1, n):
        for kind in BellKind:
            f = run(DampingScenario(kind, p, p)).report_two.fef_numeric
            if kind.is_phi:
                worst_phi = max(worst_phi, abs(f - fd.fef_two_damped_phi_equal(p)))
            else:
                worst_psi = max(worst_psi, abs(f - fd.fef_two_damped_psi_equal(p)))
    yield _row("equal damping, phi sources vs 1-p+p^2/2 (max residual)", 0.0, worst_phi, 1e-9)
    yield _row("equal damping, psi sources vs max(1-p, p/2) (max residual)", 0.0, worst_psi, 1e-9)
    yield _row("psi equal-damping branch point p=2/3", 1 / 3, fd.fef_two_damped_psi_equal(2 / 3), 1e-12)


def check_crossover() -> Iterator[VerificationOutcome]:
    r = fd.crossover_equal_damping()
    yield _row("crossover", 0.80585, r, 5e-6)
    yield _row(
        "crossover is a root", 0.0, fd.fef_two_damped_phi_equal(r) - fd.fef_one_damped(r), 1e-9
    )


def check_improvement_region() -> Iterator[VerificationOutcome]:
    yield _row("g(3/4)", 0.0, fd.improvement_bound_g(0.75), 1e-12)
    for pb in (0.8, 0.9, 0.95):
        g = fd.improvement_bound_g(pb)
        for k in (0.25, 0.5, 0.75):
            pa = g * k
            yield _flag(
                f"f_two > f_one at pb={pb}, pa={k}*g(pb)",
                fd.fef_two_damped_phi(pa, pb) > fd.fef_one_damped(pb),
            )
        pa = min(1.0, g * 1.05)
        if pa > g:
            yield _flag(
                f"f_two <= f_one at pb={pb}, pa=min(1, 1.05*g(pb))",
                fd.fef_two_damped_phi(pa, pb) <= fd.fef_one_damped(pb),
            )


def check_optimal_repair() -> Iterator[VerificationOutcome]:
    for pb in (0.76, 0.8, 0.85, 0.9, 0.95, 0.99):
        f_opt = fd.fef_two_damped_phi(fd.optimal_pa(pb), pb)
        yield _row(f"f at optimal pa vs f_max, pb={pb}", fd.fef_max_after_repair(pb), f_opt, 1e-12)
        yield _flag(f"f_max > 1/2 at pb={pb}", f_opt > 0.5)
    yield _row("optimal pa at pb=0.9", 0.84375, fd.optimal_pa(0.9), 1e-12)
    yield _row("f_max at pb=0.9", 0.50625, fd.fef_max_after_repair(0.9), 1e-12)
    res = run(DampingScenario(BellKind.PHI_PLUS, 0.9, fd.optimal_pa(0.9)))
    yield _flag("phi+ at (optimal pa, 0.9) becomes teleporting", res.report_two.is_teleporting)


def check_psi_no_repair(n: int = 201, n_pipeline: int = 41) -> Iterator[VerificationOutcome]:
    grid = np.linspace(0, 1, n)
    bad = sum(
        1
        for pa in grid
        for pb in grid
        if fd.fef_two_damped_psi(pa, pb) > 0.5 + fd.GUARD and fd.fef_one_damped(pb) <= 0.5 + fd.GUARD
    )
    yield _row(f"psi no-repair counterexamples, closed form {n}x{n}", 0, bad, 0)
    grid = np.linspace(0, 1, n_pipeline)
    bad = 0
    for kind in (BellKind.PSI_PLUS, BellKind.PSI_MINUS):
        for pa in grid:
            for pb in grid:
                r = run(DampingScenario(kind, pb, pa))
                bad += r.report_two.is_teleporting and not r.report_one.is_teleporting
    yield _row(f"psi no-repair counterexamples, pipeline {n_pipeline}x{n_pipeline}", 0, bad, 0)


def check_oracle(samples: int, seed: int, n_states: int = 20) -> Iterator[VerificationOutcome]:
    rng = np.random.default_rng(seed)
    worst_gap = 0.0
    worst_excess = -np.inf
    for i in range(n_states):
        res = run(random_scenario(rng))
        state = res.after_ab if res.after_ab is not None else res.after_b
        exact = fd.fef_numeric(state)
        sampled = fd.fef_oracle(state, samples, seed + i)
        worst_gap = max(worst_gap, abs(exact - sampled))
        worst_excess = max(worst_excess, sampled - exact)
    yield _row(f"oracle vs magic basis, {n_states} states, {samples} samples", 0.0, worst_gap, 5e-4)
    yield _flag("oracle never exceeds magic basis by > 1e-9", worst_excess <= 1e-9)


def check_channels(trials: int, seed: int) -> Iterator[VerificationOutcome]:
    rng = np.random.default_rng(seed)
    worst_trace = 0.0
    min_eig = np.inf
    for _ in range(trials):
        rho = random_pure_state(rng)
        site = QubitSite.A if rng.uniform() < 0.5 else QubitSite.B
        out = apply(extend_to_site(adc(rng.uniform()), site), rho).mat
        worst_trace = max(worst_trace, abs(np.trace(out) - 1))
        min_eig = min(min_eig, np.linalg.eigvalsh(out)[0])
    yield _row(f"trace preservation, {trials} trials (max |tr-1|)", 0.0, worst_trace, 1e-12)
    yield _flag(f"positivity, {trials} trials (min eigenvalue >= -1e-10)", min_eig >= -1e-10)
    worst = max(completeness_residual(adc(p).ops) for p in np.linspace(0, 1, 1001))
    yield _row("Kraus completeness residual, 1001-point grid", 0.0, worst, 1e-15)


GOLDEN_POINTS_ONE = (0.0, 0.2, 0.3, 0.55, 0.9)
GOLDEN_POINTS_TWO = ((0.2, 0.4), (0.0, 0.7), (0.5, 0.5), (0.9, 0.1), (1.0, 0.35))


def check_printed_matrices() -> Iterator[VerificationOutcome]:
    worst_one = max(
        printed_matrix_check(DampingScenario(kind, p))
        for kind in BellKind
        for p in GOLDEN_POINTS_ONE
    )
    yield _row("one-damped states vs tabulated matrices (max residual)", 0.0, worst_one, 1e-12)
    worst_two = max(
        printed_matrix_check(DampingScenario(kind, pb, pa))
        for kind in (BellKind.PSI_PLUS, BellKind.PSI_MINUS)
        for pa, pb in GOLDEN_POINTS_TWO
    )
    yield _row("two-damped psi states vs tabulated matrix (max residual)", 0.0, worst_two, 1e-12)


def check_concurrence(n: int = 21) -> Iterator[VerificationOutcome]:
    grid = np.linspace(0, 1, n)
    bad = 0
    for kind in BellKind:
        for pb in grid:
            for pa in grid:
                r = run(DampingScenario(kind, pb, pa))
                bad += fd.concurrence(r.after_ab) > fd.concurrence(r.after_b) + 1e-10
    yield _row(f"concurrence increases under second damping, {n}x{n} x 4 sources", 0, bad, 0)
    r = run(DampingScenario(BellKind.PHI_PLUS, 0.9, fd.optimal_pa(0.9)))
    yield _flag(
        "phi+ repair raises FEF while concurrence drops",
        r.report_two.fef_numeric > r.report_one.fef_numeric
        and fd.concurrence(r.after_ab) < fd.concurrence(r.after_b),
    )


def run_all(samples: int = 1_000_000, seed: int = 0) -> list[VerificationOutcome]:
    """Run every golden check and return the rows in a fixed order."""
    rows: list[VerificationOutcome] = []
    for gen in (
        check_one_damped(),
        check_threshold(),
        check_equal_damping(),
        check_crossover(),
        check_improvement_region(),
        check_optimal_repair(),
        check_psi_no_repair(),
        check_oracle(samples, seed),
        check_channels(2000, seed),
        check_printed_matrices(),
        check_concurrence(),
    ):
        rows.extend(gen)
    return rows


def _fmt(x: float) -> str:
    return f"{x:.6g}" if math.isfinite(x) else str(x)


def format_table(rows: list[VerificationOutcome]) -> str:
    width = max(len(r.name) for r in rows)
    lines = [f"{'check':<{width}}  {'expected':>12}  {'computed':>14}  {'tol':>8}  result"]
    for r in rows:
        mark = "PASS" if r.passed else "FAIL  <<<"
        lines.append(
            f"{r.name:<{width}}  {_fmt(r.expected):>12}  {_fmt(r.computed):>14}"
            f"  {r.tolerance:>8.0e}  {mark}"
        )
    n_fail = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - n_fail}/{len(rows)} checks passed")
    return "\n".join(lines)
