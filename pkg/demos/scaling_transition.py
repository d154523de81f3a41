"""Entanglement phase transition of the lossy nearest-neighbor chain.

Left: steady-state entropy against the chord length ln sin(pi l / L).
In the topological phase the points fall on a line of slope g (log
law); past the transition the line flattens (area law).  Right: the
fitted g across the loss rate drops to zero at the critical loss
v_c = sqrt(1 - u^2), seen as a kink of g(v).
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

import lkc

L = 400
U = 0.8
V_SCAN = [round(0.05 * i, 10) for i in range(1, 25)]
V_CHORD = (0.1, 0.4, 0.8)


def main():
    spec = lkc.nearest_neighbor(U, 0.1)
    l_values = lkc.default_l_values(L)
    chord = np.log(np.sin(np.pi * np.asarray(l_values) / L))

    fig, (ax_l, ax_r) = plt.subplots(1, 2, figsize=(9, 3.8))
    for v in V_CHORD:
        values, _, _ = lkc.steady_state_profile(spec.with_rates(v=v), L, l_values)
        ax_l.plot(chord, values, "o-", ms=4, label=f"v = {v}")
    ax_l.set_xlabel(r"$\ln \sin(\pi l / L)$")
    ax_l.set_ylabel("steady-state S")
    ax_l.legend()

    scan = lkc.scan_g_vs_loss(spec, U, V_SCAN, L)
    ax_r.plot([p.v for p in scan.points], [p.g for p in scan.points], "o-", ms=4)
    v_c = lkc.nn_critical_loss(1.0, 1.0, U).critical_rates[0]
    ax_r.axvline(v_c, color="0.6", ls="--", label=f"$v_c$ = {v_c:.2f}")
    for kink in scan.kinks:
        ax_r.axvline(kink, color="tab:red", ls=":", label=f"kink at {kink:.2f}")
    ax_r.set_xlabel("v")
    ax_r.set_ylabel("fitted g")
    ax_r.legend()
    fig.suptitle(f"u = {U}, L = {L}")
    fig.tight_layout()
    out = "scaling_transition.png"
    fig.savefig(out, dpi=160)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
