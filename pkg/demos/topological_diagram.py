"""Winding-number phase diagram of the lossy nearest-neighbor chain.

The winding number w of the Bloch field (h_y, h_z) distinguishes the
topological phase (w = 1, Majorana edge modes under open boundaries)
from the trivial one (w = 0).  With loss the transition line becomes
the circle u^2 + v^2 = 1 at J = Delta = 1; cells where the complex gap
closes within tolerance are left unclassified.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

import lkc
from lkc.topology import compute_topo_cell

U_GRID = np.round(np.arange(-2.0, 2.0001, 0.05), 10)
V_GRID = np.round(np.arange(0.05, 1.5001, 0.05), 10)


def main():
    spec = lkc.nearest_neighbor(0.8, 0.1)
    w = np.full((len(V_GRID), len(U_GRID)), np.nan)
    for i, u in enumerate(U_GRID):
        for j, v in enumerate(V_GRID):
            cell = compute_topo_cell(spec, float(u), float(v), 256, 1e-8)
            if cell.status == "ok":
                w[j, i] = cell.w

    fig, ax = plt.subplots(figsize=(7, 4))
    mesh = ax.pcolormesh(
        U_GRID, V_GRID, w, cmap="viridis", vmin=0, vmax=1, shading="nearest"
    )
    theta = np.linspace(0, np.pi, 200)
    ax.plot(np.cos(theta), np.sin(theta), "w--", lw=1.5, label="$u^2+v^2=1$")
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.set_title("winding number w(u, v)")
    ax.legend(loc="upper right")
    fig.colorbar(mesh, ax=ax, label="w")
    fig.tight_layout()
    out = "topological_diagram.png"
    fig.savefig(out, dpi=160)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
