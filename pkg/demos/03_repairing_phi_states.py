"""
Repairing a Phi state by damping the other qubit
================================================

For p_b > 3/4 a second damping of strength p_a on Alice's qubit raises the
fully entangled fraction. The closed-form bound g(p_b) gives the edge of the
improving region while it rises to 1 at p_b = sqrt(3)/2; beyond that point
every p_a in (0, 1] improves, even though g(p_b) falls again.
"""

import tempfile
from pathlib import Path

import numpy as np

from adcfef import (
    fef_max_after_repair,
    fef_one_damped,
    fef_two_damped_phi,
    improvement_bound_g,
    improvement_limit,
    optimal_pa,
)
from adcfef.fidelity import BOUND_SATURATES

###############################################################################
# Where the bound and the true region agree, and where they part ways.

print(" p_b     g(p_b)   sup improving p_a   optimal p_a   f_one     f_max")
for pb in (0.76, 0.8, 0.85, BOUND_SATURATES, 0.9, 0.95, 0.99):
    g = improvement_bound_g(pb)
    print(
        f"{pb:.4f}  {g:8.5f}  {improvement_limit(pb):10.5f}        {optimal_pa(pb):8.5f}"
        f"   {fef_one_damped(pb):.5f}   {fef_max_after_repair(pb):.5f}"
    )

###############################################################################
# At p_b = 0.9 the bound says 0.956, but even p_a = 1 helps.

pb = 0.9
for pa in (0.5, improvement_bound_g(pb), 1.0):
    gain = fef_two_damped_phi(pa, pb) - fef_one_damped(pb)
    print(f"p_a={pa:.4f}  gain {gain:+.5f}")

###############################################################################
# Map the improving region on a grid and draw it if matplotlib is present.

pbs = np.linspace(0.5, 1, 201)
pas = np.linspace(0, 1, 201)
gain = np.array([[fef_two_damped_phi(a, b) - fef_one_damped(b) for b in pbs] for a in pas])

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    ax.contourf(pbs, pas, gain > 0, levels=[0.5, 1.5], colors=["#9cd"])
    gs = [improvement_bound_g(b) for b in pbs if b > 0.75]
    ax.plot([b for b in pbs if b > 0.75], gs, "k--", label="g(p_b)")
    ax.plot([b for b in pbs if b >= 0.75], [optimal_pa(b) for b in pbs if b >= 0.75], "r", label="optimal p_a")
    ax.set_xlabel("p_b")
    ax.set_ylabel("p_a")
    ax.set_ylim(0, 1)
    ax.legend()
    target = Path(tempfile.mkdtemp()) / "improvement_region.png"
    fig.savefig(target)
    print(f"figure written to {target}")
