import numpy as np
import pytest

from adcfef import fidelity as fd
from adcfef.channels import QubitSite, damp
from adcfef.qmat import partial_trace
from adcfef.scenarios import (
    BellKind,
    DampingScenario,
    bell,
    printed_matrix_check,
    printed_one_damped,
    run,
)


def test_bell_entries():
    phi = bell("phi+").mat
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 0.5
    assert np.allclose(phi, expected, atol=1e-15)
    psi = bell(BellKind.PSI_MINUS).mat
    assert psi[1, 1] == pytest.approx(0.5) and psi[2, 2] == pytest.approx(0.5)
    assert psi[1, 2] == pytest.approx(-0.5) and psi[2, 1] == pytest.approx(-0.5)
    for kind in BellKind:
        assert fd.fef_numeric(bell(kind)) == pytest.approx(1, abs=1e-12)


@pytest.mark.parametrize("name", ["phi+", "PHI-", "Psi+", " psi- "])
def test_bell_kind_parse(name):
    assert BellKind.parse(name).value == name.strip().lower()


def test_bell_kind_parse_rejects():
    with pytest.raises(ValueError, match="unknown Bell state"):
        BellKind.parse("ghz")


def test_scenario_validates_probabilities():
    with pytest.raises(ValueError):
        DampingScenario("phi+", 1.5)
    with pytest.raises(ValueError):
        DampingScenario("phi+", 0.5, -0.1)


def test_run_one_damped_matches_tabulated():
    r = run(DampingScenario("phi+", 0.5))
    assert np.max(np.abs(r.after_b.mat - printed_one_damped("phi+", 0.5))) <= 1e-12
    assert r.after_ab is None and r.report_two is None and r.improved is None


def test_run_identity_pipeline():
    r = run(DampingScenario("psi+", 0, 0))
    assert np.array_equal(r.after_b.mat, r.initial.mat)
    assert np.array_equal(r.after_ab.mat, r.initial.mat)
    assert r.improved is False


def test_run_optimal_repair():
    r = run(DampingScenario("phi+", 0.9, 0.84375))
    assert r.improved is True
    assert r.report_two.fef_numeric == pytest.approx(0.50625, abs=1e-12)
    assert not r.report_one.is_teleporting and r.report_two.is_teleporting


@pytest.mark.parametrize(
    "s",
    [
        DampingScenario("phi-", 0.3),
        DampingScenario("psi+", 0.3),
        DampingScenario("psi-", 0.4, 0.2),
        DampingScenario("psi+", 1.0, 1.0),
        DampingScenario("phi+", 1.0),
    ],
)
def test_printed_matrix_check(s):
    assert printed_matrix_check(s) <= 1e-12


def test_printed_matrix_check_has_no_phi_two_damped_golden():
    with pytest.raises(ValueError, match="no closed-form"):
        printed_matrix_check(DampingScenario("phi+", 0.4, 0.2))


def test_all_sources_equally_corrupted():
    for pb in np.linspace(0, 1, 21):
        fs = [run(DampingScenario(k, pb)).report_one.fef_numeric for k in BellKind]
        assert max(fs) - min(fs) <= 1e-12


def test_reduced_states():
    for kind in BellKind:
        rho = bell(kind)
        assert np.allclose(partial_trace(rho, "A"), np.eye(2) / 2, atol=1e-15)
        assert np.allclose(partial_trace(rho, "B"), np.eye(2) / 2, atol=1e-15)
        for p in (0.2, 0.7, 1.0):
            damped = damp(rho, p, QubitSite.B)
            assert np.allclose(partial_trace(damped, "A"), np.eye(2) / 2, atol=1e-15)


def test_order_of_damping_is_unobservable():
    for kind in BellKind:
        r = run(DampingScenario(kind, 0.63, 0.41))
        other = damp(damp(bell(kind), 0.41, QubitSite.A), 0.63, QubitSite.B)
        assert np.max(np.abs(r.after_ab.mat - other.mat)) <= 1e-12


@pytest.mark.parametrize("kind", [BellKind.PHI_PLUS, BellKind.PHI_MINUS])
def test_phi_improvement_region_grid(kind):
    # improved exactly when p_b > 3/4 and 0 < p_a < improvement_limit(p_b)
    grid = np.linspace(0, 1, 41)
    for pb in grid:
        limit = fd.improvement_limit(pb)
        for pa in grid:
            r = run(DampingScenario(kind, pb, pa))
            expected = limit is not None and 0 < pa < limit
            if limit is not None and abs(pa - limit) < 1e-6:
                continue
            assert r.improved == expected, (pb, pa)


def test_phi_improvement_region_agrees_with_g_below_saturation():
    for pb in np.linspace(0.76, 0.86, 11):
        g = fd.improvement_bound_g(pb)
        assert fd.improvement_limit(pb) == pytest.approx(g)
        assert run(DampingScenario("phi+", pb, 0.9 * g)).improved
        assert not run(DampingScenario("phi+", pb, min(1.0, 1.05 * g))).improved


@pytest.mark.parametrize("kind", [BellKind.PSI_PLUS, BellKind.PSI_MINUS])
def test_psi_never_becomes_teleporting(kind):
    grid = np.linspace(0, 1, 51)
    for pb in grid:
        for pa in grid:
            r = run(DampingScenario(kind, pb, pa))
            if not r.report_one.is_teleporting:
                assert not r.report_two.is_teleporting
