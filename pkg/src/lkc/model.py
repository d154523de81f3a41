"""Lattice model of the lossy Kitaev chain.

A chain of spinless fermions with hopping amplitudes J_r and pairing
amplitudes Delta_r over lattice distances r, subject to uniform onsite
particle loss at rate v.  Post-selecting on no loss events replaces the
chemical potential by the complex value mu = u - iv, so the single
particle physics is governed by the non-Hermitian Bloch matrix

    H(k) = h_y(k) sigma_y + h_z(k) sigma_z,
    h_y(k) = sum_r Delta_r sin(kr),
    h_z(k) = mu + sum_r J_r cos(kr),

acting in the two-orbital (Nambu) basis.  This module defines the chain
parameterization, the Bloch fields and complex bands, the equivalent
real-space two-band matrix under periodic or open boundaries, and the
detection of edge-localized zero modes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla


class Coupling(NamedTuple):
    """One coupling shell: lattice distance `r`, hopping `J`, pairing `Delta`."""

    r: int
    J: float
    Delta: float


@dataclass(frozen=True)
class ChainSpec:
    """Full parameterization of a lossy Kitaev chain.

    Parameters
    ----------
    couplings : sequence of (r, J, Delta)
        Coupling shells; distances must be distinct positive integers and
        at least one shell must be present.  J and Delta are real; the
        only non-Hermiticity is the complex chemical potential.
    u : float
        Real part of the chemical potential.
    v : float
        Loss rate, v >= 0.  The chemical potential is mu = u - iv.
    """

    couplings: tuple[Coupling, ...]
    u: float
    v: float

    def __post_init__(self) -> None:
        cps = tuple(Coupling(int(r), float(J), float(D)) for r, J, D in self.couplings)
        if not cps:
            raise ValueError("at least one coupling shell is required")
        ranges = [c.r for c in cps]
        if any(r < 1 for r in ranges):
            raise ValueError("coupling distances must be >= 1")
        if len(set(ranges)) != len(ranges):
            raise ValueError("coupling distances must be distinct")
        if not all(np.isfinite([c.J, c.Delta]).all() for c in cps):
            raise ValueError("couplings must be finite real numbers")
        if not (np.isfinite(self.u) and np.isfinite(self.v)):
            raise ValueError("u and v must be finite")
        if self.v < 0:
            raise ValueError("loss rate v must be nonnegative")
        object.__setattr__(self, "couplings", cps)
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "v", float(self.v))

    @property
    def mu(self) -> complex:
        """Complex chemical potential u - iv."""
        return self.u - 1j * self.v

    @property
    def max_range(self) -> int:
        return max(c.r for c in self.couplings)

    def with_rates(self, u: float | None = None, v: float | None = None) -> "ChainSpec":
        """Copy of this spec with the chemical potential replaced."""
        return ChainSpec(
            couplings=self.couplings,
            u=self.u if u is None else u,
            v=self.v if v is None else v,
        )


def nearest_neighbor(u: float, v: float, J: float = 1.0, Delta: float = 1.0) -> ChainSpec:
    """Chain with a single nearest-neighbor shell."""
    return ChainSpec(couplings=(Coupling(1, J, Delta),), u=u, v=v)


def next_nearest(
    u: float,
    v: float,
    J1: float = 1.0,
    Delta1: float = 1.0,
    J2: float = 1.5,
    Delta2: float = 1.5,
) -> ChainSpec:
    """Chain with nearest and next-nearest shells."""
    return ChainSpec(couplings=(Coupling(1, J1, Delta1), Coupling(2, J2, Delta2)), u=u, v=v)


def momentum_grid(L: int) -> np.ndarray:
    """Quasimomenta k_j = -pi + 2 pi j / L for j = 0 .. L-1.

    L must be even so the half-filled initial state treats the two band
    minima symmetrically.
    """
    if L < 2 or L % 2 != 0:
        raise ValueError("L must be a positive even integer")
    return -np.pi + 2.0 * np.pi * np.arange(L) / L


@dataclass(frozen=True)
class BlochVector:
    """Bloch field components at quasimomentum k.

    h_y is real (a sum of real pairings times sines); all imaginary
    content sits in h_z through mu = u - iv.
    """

    k: np.ndarray
    h_y: np.ndarray
    h_z: np.ndarray


def _fields(spec: ChainSpec, k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Raw (h_y, h_z) arrays; the hot path shared by all consumers."""
    k = np.asarray(k, dtype=float)
    h_y = np.zeros_like(k)
    h_z = np.full(k.shape, spec.mu, dtype=complex)
    for r, J, D in spec.couplings:
        h_y = h_y + D * np.sin(r * k)
        h_z = h_z + J * np.cos(r * k)
    return h_y, h_z


def bloch_field(spec: ChainSpec, k) -> BlochVector:
    """Evaluate h_y(k) = sum_r Delta_r sin(kr) and h_z(k) = mu + sum_r J_r cos(kr)."""
    karr = np.asarray(k, dtype=float)
    h_y, h_z = _fields(spec, karr)
    return BlochVector(k=karr, h_y=h_y, h_z=h_z)


def band_energy(spec: ChainSpec, k):
    """Complex band energy E(k) = sqrt(h_y^2 + h_z^2), principal branch.

    The bands come in pairs +-E(k); every consumer in this package
    (evolution, gap checks, winding) depends on E only through even
    functions or through the pair, so the branch choice is immaterial.
    An exceptional point E = 0 is a legal value.
    """
    h_y, h_z = _fields(spec, np.asarray(k, dtype=float))
    return np.sqrt(h_y * h_y + h_z * h_z)


_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]])


def bloch_matrix(spec: ChainSpec, k: float) -> np.ndarray:
    """The 2x2 Bloch matrix H(k) = h_y sigma_y + h_z sigma_z."""
    h_y, h_z = _fields(spec, np.asarray(float(k)))
    return h_y * _SY + h_z * _SZ


def real_space_matrix(spec: ChainSpec, L: int, boundary: str = "PBC") -> np.ndarray:
    """Two-band single-particle matrix on L sites (2L x 2L).

    Block structure in the two-orbital basis: the onsite block is
    mu sigma_z; the block at separation +r is (J_r sigma_z - i Delta_r sigma_y)/2
    and at separation -r is (J_r sigma_z + i Delta_r sigma_y)/2, so the
    Fourier transform of the separation blocks reproduces H(k).

    Parameters
    ----------
    spec : ChainSpec
    L : int
        Number of sites; must exceed twice the largest coupling distance
        so periodic wrapping is unambiguous.
    boundary : {"PBC", "OBC"}
    """
    if boundary not in ("PBC", "OBC"):
        raise ValueError("boundary must be 'PBC' or 'OBC'")
    if L <= 2 * spec.max_range:
        raise ValueError(f"L must exceed 2*max(r) = {2 * spec.max_range}")
    M = np.zeros((L, 2, L, 2), dtype=complex)
    idx = np.arange(L)
    M[idx, 0, idx, 0] = spec.mu
    M[idx, 1, idx, 1] = -spec.mu
    for r, J, D in spec.couplings:
        plus = (J * _SZ - 1j * D * _SY) / 2.0
        minus = (J * _SZ + 1j * D * _SY) / 2.0
        count = L if boundary == "PBC" else L - r
        for n in range(count):
            m = (n + r) % L
            M[m, :, n, :] += plus
            M[n, :, m, :] += minus
    return M.reshape(2 * L, 2 * L)


@dataclass(frozen=True)
class ComplexSpectrum:
    """Complex eigenvalues of the open or periodic chain.

    Eigenvalues are sorted by modulus (ties by real then imaginary
    part).  edge_weights holds, for every mode, the eigenvector weight
    on the outer tenth of sites at each end; zero_modes lists
    (eigenvalue index, edge weight) for the modes with |E| below the
    zero tolerance whose edge weight exceeds one half.
    """

    boundary: str
    eigenvalues: np.ndarray
    edge_weights: np.ndarray
    zero_modes: tuple[tuple[int, float], ...] = field(default_factory=tuple)


def obc_spectrum(spec: ChainSpec, L: int, zero_tol: float = 1e-4) -> ComplexSpectrum:
    """Complex spectrum of the open chain with Majorana-zero-mode detection.

    Edge splitting of Majorana pairs decays exponentially in L; L >= 50
    is recommended so the splitting sits below `zero_tol`.

    Returns
    -------
    ComplexSpectrum
        All 2L eigenvalues plus the detected edge-localized zero modes.
    """
    M = real_space_matrix(spec, L, "OBC")
    evals, evecs = sla.eig(M)
    order = np.lexsort((evals.imag, evals.real, np.abs(evals)))
    evals = evals[order]
    evecs = evecs[:, order]
    # residual check: warn rather than fail if the solver struggled
    worst = 0.0
    for i in range(min(8, evals.size)):
        res = np.linalg.norm(M @ evecs[:, i] - evals[i] * evecs[:, i])
        worst = max(worst, res / max(np.linalg.norm(evecs[:, i]), 1e-300))
    if worst > 1e-8:
        import warnings

        warnings.warn(f"eigen-solver residual {worst:.2e} exceeds 1e-8", stacklevel=2)
    edge = int(np.ceil(0.1 * L))
    weight_mask = np.zeros(2 * L)
    weight_mask[: 2 * edge] = 1.0
    weight_mask[-2 * edge :] = 1.0
    dens = np.abs(evecs) ** 2
    edge_weights = weight_mask @ dens / dens.sum(axis=0)
    zero = [
        (int(i), float(edge_weights[i]))
        for i in np.where(np.abs(evals) < zero_tol)[0]
        if edge_weights[i] > 0.5
    ]
    return ComplexSpectrum(
        boundary="OBC",
        eigenvalues=evals,
        edge_weights=edge_weights,
        zero_modes=tuple(zero),
    )
