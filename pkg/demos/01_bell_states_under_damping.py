"""
Bell states sent through an amplitude damping channel
=====================================================

Alice prepares a Bell state and sends one qubit to Bob through an
amplitude damping channel. All four Bell states end up with the same fully
entangled fraction, and the state stops being useful for teleportation once
the damping reaches 2*sqrt(2) - 2.
"""

import numpy as np

from adcfef import BellKind, DampingScenario, bell, fef_one_damped, run
from adcfef.cli import format_matrix
from adcfef.qmat import partial_trace

###############################################################################
# The four sources, before any noise.

for kind in BellKind:
    print(kind.value)
    print(format_matrix(bell(kind).mat))

###############################################################################
# Damp Bob's qubit with p = 0.5. The Phi states keep their |00><11| coherence,
# scaled by sqrt(1 - p); population leaks from |11> into |10>.

res = run(DampingScenario("phi+", 0.5))
print(format_matrix(res.after_b.mat))

###############################################################################
# Alice's reduced state never notices what happened to Bob's qubit.

print(partial_trace(res.after_b, "A").real)

###############################################################################
# The fully entangled fraction does not depend on which Bell state was sent.

for p in (0.1, 0.5, 0.9):
    fs = [run(DampingScenario(k, p)).report_one.fef_numeric for k in BellKind]
    print(f"p={p:.1f}  " + "  ".join(f"{f:.6f}" for f in fs) + f"   closed form {fef_one_damped(p):.6f}")

###############################################################################
# Teleportation beats the classical 2/3 only while f > 1/2.

threshold = 2 * np.sqrt(2) - 2
for p in (threshold - 1e-3, threshold + 1e-3):
    rep = run(DampingScenario("psi-", p)).report_one
    print(f"p={p:.6f}  f={rep.fef_numeric:.6f}  F={rep.teleport_fidelity:.6f}  {rep.classification}")
