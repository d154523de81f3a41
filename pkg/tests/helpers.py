"""Shared helpers for the test suite."""

import numpy as np

from lkc import ChainSpec, Coupling


def random_spec(rng, lossy=True, max_shells=3):
    """A random chain: 1-3 shells, O(1) couplings, loss in [0.05, 1]."""
    shells = int(rng.integers(1, max_shells + 1))
    couplings = tuple(
        Coupling(r + 1, float(rng.normal()), float(rng.normal())) for r in range(shells)
    )
    v = float(rng.uniform(0.05, 1.0)) if lossy else 0.0
    return ChainSpec(couplings=couplings, u=float(rng.normal()), v=v)


def expm_ss(M):
    """Matrix exponential by scaling and squaring.

    Halve M until its norm is at most 1/2 (so the Taylor series below is
    exact to machine precision and the scaled matrix still survives
    addition to the identity), then square back up.
    """
    A = np.asarray(M, dtype=complex)
    norm = np.linalg.norm(A, np.inf)
    s = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0.5 else 0
    A = A / (2.0**s)
    E = np.eye(A.shape[0], dtype=complex)
    term = np.eye(A.shape[0], dtype=complex)
    for n in range(1, 18):
        term = term @ A / n
        E = E + term
    for _ in range(s):
        E = E @ E
    return E
