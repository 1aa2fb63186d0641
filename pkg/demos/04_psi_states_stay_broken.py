"""
Psi sources cannot be repaired
==============================

For the Psi Bell states the doubly damped state has fully entangled
fraction max(f1, f2) with f1 = (p_a + p_b)/4 <= 1/2 and f2 never above the
one-damped value. A state that lost its usefulness stays useless.
"""

import numpy as np

from adcfef import DampingScenario, run
from adcfef.fidelity import psi_candidates

grid = np.linspace(0, 1, 101)
flips = 0
gains = 0
for pb in grid:
    parent = run(DampingScenario("psi+", pb))
    for pa in grid[1:]:
        r = run(DampingScenario("psi+", pb, pa))
        gains += r.improved
        flips += r.report_two.is_teleporting and not parent.report_one.is_teleporting

print(f"grid points where a second damping raises f: {gains}")
print(f"grid points where it restores teleportation: {flips}")

###############################################################################
# Gains do happen (when f1 wins, e.g. at high equal damping) but stay below 1/2.

for p in (0.85, 0.9, 0.95):
    f1, f2 = psi_candidates(p, p)
    print(f"p_a=p_b={p}: f1={f1:.4f} f2={f2:.4f}")
