"""Entanglement entropy dynamics after switching on the loss.

Starting from the half-filled product of momentum modes, the normalized
non-unitary evolution drives every mode toward its slowest-decaying
eigenvector and the bipartite entanglement entropy saturates.  At weak
loss the steady value still grows with the subsystem size (log law);
at strong loss the curves for different subsystem sizes collapse onto
one area-law plateau.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

import lkc

L = 400
SUBSYSTEMS = (25, 50, 100)
TIMES = [0.0] + [float(t) for t in np.geomspace(0.5, 2000.0, 40)]
CASES = [(0.8, 0.1, "weak loss"), (0.8, 0.9, "strong loss")]


def main():
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.6), sharey=True)
    for ax, (u, v, label) in zip(axes, CASES):
        spec = lkc.nearest_neighbor(u, v)
        for l in SUBSYSTEMS:
            series = lkc.ee_time_series(spec, L, l, TIMES)
            ax.plot(series.times[1:], series.values[1:], label=f"l = {l}")
        ax.set_xscale("log")
        ax.set_xlabel("t")
        ax.set_title(f"u = {u}, v = {v} ({label})")
    axes[0].set_ylabel("S(t)")
    axes[0].legend()
    fig.tight_layout()
    out = "ee_dynamics.png"
    fig.savefig(out, dpi=160)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
