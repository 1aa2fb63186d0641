"""
Damping both qubits equally
===========================

Once Bob's qubit has been damped, damping Alice's qubit by the same amount
helps Phi sources beyond a crossover near p = 0.806, and never turns a
Psi source back into a useful one.

This script writes a sweep CSV and, if matplotlib is installed, plots it.
"""

import csv
import tempfile
from pathlib import Path

import numpy as np

from adcfef import crossover_equal_damping, fef_two_damped_phi_equal, fef_two_damped_psi_equal
from adcfef.cli import main

r = crossover_equal_damping()
print(f"crossover p = {r:.8f}")

###############################################################################
# A one-qubit sweep from the command line (equivalent to
# ``adcfef sweep --source phi+ --pb-range 0:1:0.01 --out pb.csv``).

out = Path(tempfile.mkdtemp()) / "pb.csv"
main(["sweep", "--source", "phi+", "--pb-range", "0:1:0.01", "--out", str(out)])
with open(out, newline="") as fh:
    rows = list(csv.DictReader(fh))
p = np.array([float(row["p_b"]) for row in rows])
f_one = np.array([float(row["f_one"]) for row in rows])

f_phi = np.array([fef_two_damped_phi_equal(x) for x in p])
f_psi = np.array([fef_two_damped_psi_equal(x) for x in p])

for x, a, b, c in zip(p[::10], f_one[::10], f_phi[::10], f_psi[::10]):
    print(f"p={x:.1f}  one-damped {a:.4f}  both (phi) {b:.4f}  both (psi) {c:.4f}")

###############################################################################
# Plot the three curves against the teleportation threshold.

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    ax.plot(p, f_one, label="one qubit damped")
    ax.plot(p, f_phi, label="both damped, Phi source")
    ax.plot(p, f_psi, label="both damped, Psi source")
    ax.axhline(0.5, color="k", lw=0.5)
    ax.axvline(r, color="gray", ls=":")
    ax.set_xlabel("p")
    ax.set_ylabel("fully entangled fraction")
    ax.legend()
    fig.savefig(out.with_suffix(".png"))
    print(f"figure written to {out.with_suffix('.png')}")
