"""Complex band structure of the lossy nearest-neighbor Kitaev chain.

The loss rate v turns the chemical potential complex, mu = u - iv, and
the two Bloch bands +-E(k) move into the complex plane.  Inside the
circle u^2 + v^2 = 1 (J = Delta = 1) the bands carry a finite imaginary
part at every k except a pair of exceptional points; outside, the
spectrum reconnects and the imaginary part is gapped away from zero.
The plot contrasts one parameter point from each side.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

import lkc

L = 400
CASES = [(0.8, 0.1, "inside the critical circle"), (0.8, 0.9, "outside")]


def main():
    ks = lkc.momentum_grid(L)
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for col, (u, v, label) in enumerate(CASES):
        spec = lkc.nearest_neighbor(u, v)
        E = lkc.band_energy(spec, ks)
        for row, (part, name) in enumerate([(E.real, "Re E"), (E.imag, "Im E")]):
            ax = axes[row, col]
            ax.plot(ks, part, ".", ms=2, color="tab:blue")
            ax.plot(ks, -part, ".", ms=2, color="tab:orange")
            ax.axhline(0.0, color="0.8", lw=0.8, zorder=0)
            ax.set_ylabel(name)
        axes[0, col].set_title(f"u = {u}, v = {v} ({label})")
        axes[1, col].set_xlabel("k")
    fig.tight_layout()
    out = "band_structure.png"
    fig.savefig(out, dpi=160)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
