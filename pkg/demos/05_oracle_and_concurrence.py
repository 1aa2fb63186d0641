"""
Cross-checking the FEF and watching entanglement fall
=====================================================

The magic-basis FEF is checked against brute-force sampling of maximally
entangled states. Then the repair of a Phi state is shown to raise the
FEF while the concurrence drops: the second damping destroys
entanglement, yet teleportation improves.
"""

from adcfef import DampingScenario, concurrence, fef_numeric, fef_oracle, optimal_pa, run

for pb, pa in ((0.3, None), (0.7, 0.2), (0.95, 0.5)):
    r = run(DampingScenario("phi-", pb, pa))
    state = r.after_b if pa is None else r.after_ab
    print(
        f"p_b={pb} p_a={pa}: magic basis {fef_numeric(state):.6f}, "
        f"sampled {fef_oracle(state, 200_000, seed=1):.6f}"
    )

###############################################################################
# FEF and concurrence before and after the optimal second damping.

pb = 0.9
r = run(DampingScenario("phi+", pb, optimal_pa(pb)))
print(f"one-damped: f={r.report_one.fef_numeric:.5f}  C={concurrence(r.after_b):.5f}")
print(f"two-damped: f={r.report_two.fef_numeric:.5f}  C={concurrence(r.after_ab):.5f}")
