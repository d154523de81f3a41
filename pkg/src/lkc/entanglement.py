"""Bipartite entanglement entropy from subsystem correlation spectra.

For a Gaussian state the entanglement entropy of a contiguous segment of
l sites is carried by the eigenvalues zeta of the correlator restricted
to the segment (a 2l x 2l principal block, two orbitals per site):

    S = - sum_j [ zeta_j ln zeta_j + (1 - zeta_j) ln(1 - zeta_j) ],

summed over all 2l eigenvalues, so S is bounded by 2l ln 2.  The module
also provides entanglement-entropy time series and converged steady
state values of the lossy dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import Correlator, _generator_stack, _separation_blocks
from .errors import NonHermitianInput
from .model import ChainSpec

_CLAMP = 1e-12


def entanglement_entropy(correlator, l: int) -> float:
    """Entanglement entropy (nats) of sites 0 .. l-1.

    Parameters
    ----------
    correlator : Correlator or (2L, 2L) array
        Two-point correlator of the full chain.
    l : int
        Subsystem length, 1 <= l < L.

    Raises
    ------
    NonHermitianInput
        If the subsystem block deviates from Hermiticity beyond 1e-8.
    """
    if isinstance(correlator, Correlator):
        if not 1 <= l < correlator.L:
            raise ValueError("require 1 <= l < L")
        block = correlator.subsystem(l)
    else:
        C = np.asarray(correlator)
        if not 1 <= 2 * l < C.shape[0]:
            raise ValueError("require 1 <= l < L")
        block = C[: 2 * l, : 2 * l]
    dev = np.abs(block - block.conj().T).max()
    if dev > 1e-8:
        raise NonHermitianInput(f"subsystem block non-Hermitian by {dev:.3e}")
    zeta = np.linalg.eigvalsh((block + block.conj().T) / 2.0)
    zeta = np.clip(zeta, _CLAMP, 1.0 - _CLAMP)
    return float(-np.sum(zeta * np.log(zeta) + (1.0 - zeta) * np.log(1.0 - zeta)))


def _entropy_profile(spec: ChainSpec, L: int, l_values, t: float, initial_state=None) -> np.ndarray:
    """S at one time for several subsystem sizes, sharing one correlator."""
    gen = _generator_stack(spec, L, t, initial_state=initial_state)
    corr = Correlator(L, _separation_blocks(gen))
    return np.array([entanglement_entropy(corr, int(l)) for l in l_values])


@dataclass(frozen=True)
class EETimeSeries:
    """Entanglement entropy samples over time for one subsystem size."""

    times: tuple[float, ...]
    values: tuple[float, ...]
    converged: bool
    final_value: float


def ee_time_series(
    spec: ChainSpec,
    L: int,
    l: int,
    times,
    steady_tol: float = 1e-6,
    initial_state=None,
) -> EETimeSeries:
    """S(t) for the given ascending times (starting at 0).

    The convergence flag compares the final sample with the entropy at
    half the final time; it is informational and does not stop anything.
    Output is reproducible bit for bit for fixed inputs.
    """
    times = [float(t) for t in times]
    if not times or times[0] != 0.0 or any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("times must be ascending and start at 0")
    values = [
        float(_entropy_profile(spec, L, [l], t, initial_state=initial_state)[0])
        for t in times
    ]
    s_half = _entropy_profile(spec, L, [l], times[-1] / 2.0, initial_state=initial_state)[0]
    converged = bool(abs(values[-1] - s_half) < steady_tol)
    return EETimeSeries(
        times=tuple(times),
        values=tuple(values),
        converged=converged,
        final_value=values[-1],
    )


def steady_state_profile(
    spec: ChainSpec,
    L: int,
    l_values,
    T: float = 2000.0,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
    initial_state=None,
) -> tuple[np.ndarray, bool, float]:
    """Steady-state S for several subsystem sizes at once.

    Steadiness compares S(T) against S(T/2).  Modes near the momenta
    where the spectrum turns real relax at rates 1/|Im E| that can exceed
    any fixed horizon on a finite grid, so if the comparison fails the
    horizon is doubled (up to `max_doublings` times); the closed-form
    propagator makes a longer horizon no more expensive.  A Hermitian
    chain (v = 0) never relaxes and exhausts the budget with
    converged = False.

    Returns
    -------
    (values, converged, horizon)
        Entropies at the final horizon, the convergence flag, and the
        horizon actually used.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    horizon = float(T)
    s_half = _entropy_profile(spec, L, l_values, horizon / 2.0, initial_state=initial_state)
    for _ in range(max_doublings + 1):
        s_full = _entropy_profile(spec, L, l_values, horizon, initial_state=initial_state)
        if np.abs(s_full - s_half).max() < steady_tol:
            return s_full, True, horizon
        s_half = s_full
        horizon *= 2.0
    return s_full, False, horizon / 2.0


def steady_state_ee(
    spec: ChainSpec,
    L: int,
    l: int,
    T: float = 2000.0,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
    initial_state=None,
) -> tuple[float, bool]:
    """Converged steady-state entanglement entropy of one subsystem.

    Returns (S, converged); non-convergence is reported, never fatal.
    """
    values, converged, _ = steady_state_profile(
        spec, L, [l], T=T, steady_tol=steady_tol, max_doublings=max_doublings,
        initial_state=initial_state,
    )
    return float(values[0]), converged
