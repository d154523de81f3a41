"""Double entanglement transition of the next-nearest-neighbor chain.

With second-neighbor hopping and pairing (J2 = Delta2 = 1.5 on top of
J1 = Delta1 = 1) the winding number steps down 2 -> 1 -> 0 as the loss
grows, and the log-law coefficient g(v) shows one kink at each
topological transition before collapsing to the area law.  The
analytic critical rates follow from the gap closing at the critical
momenta and are drawn as dashed lines.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

import lkc

L = 400
U = 1.0
V_SCAN = [round(0.1 * i, 10) for i in range(1, 29)]


def main():
    spec = lkc.ChainSpec(
        couplings=(lkc.Coupling(1, 1.0, 1.0), lkc.Coupling(2, 1.5, 1.5)),
        u=U,
        v=0.4,
    )
    scan = lkc.scan_g_vs_loss(spec, U, V_SCAN, L)
    rates = lkc.nnn_boundaries(1.0, 1.5, 1.0, 1.5, U).critical_rates

    fig, ax = plt.subplots(figsize=(6.5, 4))
    ax.plot([p.v for p in scan.points], [p.g for p in scan.points], "o-", ms=4)
    for rate in rates:
        ax.axvline(rate, color="0.6", ls="--")
        ax.text(rate, ax.get_ylim()[1] * 0.9, f" {rate:.3f}", color="0.4")
    for kink in scan.kinks:
        ax.axvline(kink, color="tab:red", ls=":")
    ax.set_xlabel("v")
    ax.set_ylabel("fitted g")
    ax.set_title(f"NNN chain, u = {U}, L = {L}: kinks at {[round(k, 2) for k in scan.kinks]}")
    fig.tight_layout()
    out = "double_transition.png"
    fig.savefig(out, dpi=160)
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
