"""Exit criteria, one test per criterion, each at its stated tolerance."""

import math

import numpy as np
import pytest

from adcfef import fidelity as fd
from adcfef.channels import QubitSite, adc, apply, completeness_residual, damp, extend_to_site
from adcfef.cli import main
from adcfef.qmat import pure_state
from adcfef.scenarios import BellKind, DampingScenario, printed_matrix_check, run
from adcfef.verification import GOLDEN_POINTS_ONE, GOLDEN_POINTS_TWO, random_scenario

PSI = (BellKind.PSI_PLUS, BellKind.PSI_MINUS)
PHI = (BellKind.PHI_PLUS, BellKind.PHI_MINUS)


@pytest.mark.criterion(1, "one-damped FEF equals (1+sqrt(1-p))^2/4 within 1e-9")
def test_c01_one_damped_fef():
    for kind in BellKind:
        for p in np.round(np.linspace(0, 1, 11), 12):
            f = run(DampingScenario(kind, p)).report_one.fef_numeric
            assert abs(f - 0.25 * (1 + math.sqrt(1 - p)) ** 2) <= 1e-9, (kind, p)


@pytest.mark.criterion(2, "teleporting classification flips at 2*sqrt(2)-2")
def test_c02_teleporting_threshold():
    t = 2 * math.sqrt(2) - 2
    assert t == pytest.approx(0.8284271, abs=1e-7)
    for kind in BellKind:
        below = run(DampingScenario(kind, t - 1e-6)).report_one
        above = run(DampingScenario(kind, t + 1e-6)).report_one
        assert below.is_teleporting
        assert not above.is_teleporting


@pytest.mark.criterion(3, "equal-damping closed forms within 1e-9 on 101 points")
def test_c03_equal_damping():
    for p in np.linspace(0, 1, 101):
        for kind in BellKind:
            f = run(DampingScenario(kind, p, p)).report_two.fef_numeric
            ref = 1 - p + 0.5 * p * p if kind.is_phi else max(1 - p, p / 2)
            assert abs(f - ref) <= 1e-9, (kind, p)


@pytest.mark.criterion(4, "crossover root in [0.80580, 0.80590]")
def test_c04_crossover():
    r = fd.crossover_equal_damping()
    assert 0.80580 <= r <= 0.80590
    assert abs(r - 0.80585) <= 5e-5


@pytest.mark.criterion(5, "g(3/4)=0; f_two > f_one below g(p_b), <= just above it")
def test_c05_improvement_region():
    assert abs(fd.improvement_bound_g(0.75)) <= 1e-12
    failures = []
    for pb in (0.8, 0.9, 0.95):
        g = fd.improvement_bound_g(pb)
        for k in (0.25, 0.5, 0.75):
            if not fd.fef_two_damped_phi(g * k, pb) > fd.fef_one_damped(pb):
                failures.append(f"no improvement at pb={pb}, pa={k}*g")
        pa = min(1.0, g * 1.05)
        if pa > g and not fd.fef_two_damped_phi(pa, pb) <= fd.fef_one_damped(pb):
            failures.append(
                f"still improving above g at pb={pb}, pa={pa:.6f} "
                f"(f_two={fd.fef_two_damped_phi(pa, pb):.6f} > f_one={fd.fef_one_damped(pb):.6f})"
            )
    assert not failures, "; ".join(failures)


@pytest.mark.criterion(6, "optimal p_a reaches p_b^2/(2(2p_b-1)) > 1/2")
def test_c06_optimal_repair():
    for pb in (0.76, 0.8, 0.85, 0.9, 0.95, 0.99):
        f = fd.fef_two_damped_phi(fd.optimal_pa(pb), pb)
        assert abs(f - pb**2 / (2 * (2 * pb - 1))) <= 1e-12
        assert f > 0.5


@pytest.mark.criterion(7, "no psi-source state turned teleporting, 201x201 grid")
def test_c07_psi_no_repair():
    grid = np.linspace(0, 1, 201)
    counterexamples = 0
    for kind in PSI:
        for pb in grid:
            parent = run(DampingScenario(kind, pb))
            for pa in grid:
                child = fd.analyze(damp(parent.after_b, pa, QubitSite.A))
                counterexamples += child.is_teleporting and not parent.report_one.is_teleporting
    assert counterexamples == 0


@pytest.mark.criterion(8, "oracle (1e6 samples) within 5e-4 of magic basis on 20 states")
def test_c08_oracle_consistency():
    rng = np.random.default_rng(2024)
    for i in range(20):
        res = run(random_scenario(rng))
        state = res.after_ab if res.after_ab is not None else res.after_b
        exact = fd.fef_numeric(state)
        sampled = fd.fef_oracle(state, 1_000_000, seed=i)
        assert abs(exact - sampled) <= 5e-4
        assert sampled <= exact + 1e-9


@pytest.mark.criterion(9, "trace/positivity over 1e4 trials; completeness <= 1e-15")
def test_c09_channel_sanity():
    rng = np.random.default_rng(99)
    for _ in range(10_000):
        rho = pure_state(rng.normal(size=4) + 1j * rng.normal(size=4))
        site = QubitSite.A if rng.integers(2) else QubitSite.B
        out = apply(extend_to_site(adc(rng.uniform()), site), rho).mat
        assert abs(np.trace(out) - 1) <= 1e-12
        assert np.linalg.eigvalsh(out)[0] >= -1e-10
    for p in np.linspace(0, 1, 1001):
        assert completeness_residual(adc(p).ops) <= 1e-15


@pytest.mark.criterion(10, "pipeline states match tabulated matrices within 1e-12")
def test_c10_printed_matrices():
    for kind in BellKind:
        for p in GOLDEN_POINTS_ONE:
            assert printed_matrix_check(DampingScenario(kind, p)) <= 1e-12
    for kind in PSI:
        for pa, pb in GOLDEN_POINTS_TWO:
            assert printed_matrix_check(DampingScenario(kind, pb, pa)) <= 1e-12


@pytest.mark.criterion(11, "concurrence never rises under the second damping")
def test_c11_entanglement_monotone():
    grid = np.linspace(0, 1, 101)
    for kind in BellKind:
        for pb in grid:
            c_one = fd.concurrence(run(DampingScenario(kind, pb)).after_b)
            for pa in grid:
                r = run(DampingScenario(kind, pb, pa))
                assert fd.concurrence(r.after_ab) <= c_one + 1e-10, (kind, pb, pa)
    # the paradox: FEF up, entanglement down
    r = run(DampingScenario("phi+", 0.9, fd.optimal_pa(0.9)))
    assert r.report_two.fef_numeric > r.report_one.fef_numeric
    assert fd.concurrence(r.after_ab) < fd.concurrence(r.after_b)


@pytest.mark.criterion(12, "`verify` encodes criteria 1-11 and exits 0")
def test_c12_cmd_verify(capsys):
    code = main(["verify"])
    out = capsys.readouterr().out
    assert "g(3/4)" in out and "crossover" in out
    assert code == 0, "\n".join(line for line in out.splitlines() if "FAIL" in line)
