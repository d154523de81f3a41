"""Chain parameterization, Bloch fields, and real-space matrices."""

import numpy as np
import pytest
from helpers import expm_ss, random_spec

import lkc
from lkc import ChainSpec, Coupling


def pure_loss(v=1.0):
    # a single shell with J = Delta = 0 leaves only the onsite -iv term
    return ChainSpec(couplings=(Coupling(1, 0.0, 0.0),), u=0.0, v=v)


# ------------------------------------------------------------- ChainSpec


def test_chain_spec_validation():
    with pytest.raises(ValueError):
        ChainSpec(couplings=(), u=0.0, v=0.1)
    with pytest.raises(ValueError):
        ChainSpec(couplings=(Coupling(0, 1.0, 1.0),), u=0.0, v=0.1)
    with pytest.raises(ValueError):
        ChainSpec(couplings=(Coupling(1, 1.0, 1.0), Coupling(1, 0.5, 0.5)), u=0.0, v=0.1)
    with pytest.raises(ValueError):
        ChainSpec(couplings=(Coupling(1, 1.0, 1.0),), u=0.0, v=-0.1)


def test_chain_spec_mu_and_copies():
    spec = lkc.nearest_neighbor(0.8, 0.1)
    assert spec.mu == 0.8 - 0.1j
    assert spec.max_range == 1
    other = spec.with_rates(v=0.9)
    assert other.v == 0.9 and other.u == 0.8 and other.couplings == spec.couplings


def test_momentum_grid():
    ks = lkc.momentum_grid(8)
    assert ks.shape == (8,)
    assert ks[0] == -np.pi
    assert np.allclose(np.diff(ks), 2 * np.pi / 8)
    assert ks[-1] == pytest.approx(np.pi - 2 * np.pi / 8)
    with pytest.raises(ValueError):
        lkc.momentum_grid(7)
    with pytest.raises(ValueError):
        lkc.momentum_grid(0)


# ------------------------------------------------------------ Bloch data


def test_bloch_field_nn_examples():
    spec = lkc.nearest_neighbor(0.8, 0.1)
    f0 = lkc.bloch_field(spec, 0.0)
    assert f0.h_y == pytest.approx(0.0, abs=1e-12)
    assert f0.h_z == pytest.approx(1.8 - 0.1j, abs=1e-12)
    f1 = lkc.bloch_field(spec, np.pi / 2)
    assert f1.h_y == pytest.approx(1.0, abs=1e-12)
    assert f1.h_z == pytest.approx(0.8 - 0.1j, abs=1e-12)


def test_bloch_field_nnn_example():
    spec = lkc.next_nearest(1.0, 0.1)
    f = lkc.bloch_field(spec, np.pi)
    assert f.h_y == pytest.approx(0.0, abs=1e-12)
    assert f.h_z == pytest.approx(1.5 - 0.1j, abs=1e-12)


def test_bloch_field_reality():
    rng = np.random.default_rng(11)
    for _ in range(5):
        spec = random_spec(rng)
        ks = lkc.momentum_grid(64)
        f = lkc.bloch_field(spec, ks)
        assert np.max(np.abs(np.imag(f.h_y))) == 0.0
        assert np.allclose(np.imag(f.h_z), -spec.v, atol=0)


def test_band_energy_pure_loss():
    spec = pure_loss(1.0)
    for k in (-2.0, 0.0, 1.3):
        assert lkc.band_energy(spec, k) == pytest.approx(1j, abs=1e-15)


def test_band_energy_hermitian_gap():
    spec = lkc.nearest_neighbor(0.8, 0.0)
    E = lkc.band_energy(spec, np.pi)
    assert E == pytest.approx(0.2, abs=1e-12)
    assert abs(np.imag(E)) < 1e-12


def test_band_energy_vanishes_on_ellipse():
    # u^2 + v^2 = 1 puts an exceptional point at cos k = -u; a grid scan
    # brackets it and the closed-form momentum confirms |E| ~ 0 there
    spec = lkc.nearest_neighbor(0.8, 0.6)
    ks = lkc.momentum_grid(4096)
    k_coarse = ks[np.argmin(np.abs(lkc.band_energy(spec, ks)))]
    k_star = np.arccos(-spec.u)
    assert min(abs(abs(k_coarse) - k_star), abs(abs(k_coarse) + k_star - 2 * np.pi)) < 2 * np.pi / 4096
    assert abs(lkc.band_energy(spec, k_star)) < 1e-6


def test_bloch_matrix_matches_field():
    spec = lkc.next_nearest(1.0, 0.4)
    k = 0.7
    f = lkc.bloch_field(spec, k)
    H = lkc.bloch_matrix(spec, k)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]])
    assert np.allclose(H, f.h_y * sy + f.h_z * sz, atol=1e-14)
    evals = np.linalg.eigvals(H)
    E = lkc.band_energy(spec, k)
    assert sorted(evals, key=lambda z: z.real) == pytest.approx(
        sorted([E, -E], key=lambda z: z.real), abs=1e-12
    )


# ------------------------------------------------------ real-space forms


def test_real_space_pure_loss_obc():
    M = lkc.real_space_matrix(pure_loss(1.0), 4, "OBC")
    # no couplings: block diagonal with mu sigma_z = diag(-i, i) per site
    off = M - np.diag(np.diag(M))
    assert np.abs(off).max() == 0.0
    evals = np.sort_complex(np.linalg.eigvals(M))
    expected = np.sort_complex(np.array([-1j] * 4 + [1j] * 4))
    assert np.allclose(evals, expected, atol=1e-12)


def test_real_space_nn_sweet_spot_pbc():
    spec = lkc.nearest_neighbor(0.0, 0.0)
    M = lkc.real_space_matrix(spec, 4, "PBC")
    evals = np.sort(np.linalg.eigvals(M).real)
    assert np.allclose(evals, [-1] * 4 + [1] * 4, atol=1e-10)
    assert np.abs(np.linalg.eigvals(M).imag).max() < 1e-10


def test_real_space_random_specs_match_bands():
    # PBC spectral equivalence: eigenvalues are the multiset {+-E(k)}
    rng = np.random.default_rng(23)
    for _ in range(5):
        spec = random_spec(rng)
        L = 12
        M = lkc.real_space_matrix(spec, L, "PBC")
        evals = np.sort_complex(np.linalg.eigvals(M))
        E = lkc.band_energy(spec, lkc.momentum_grid(L))
        expected = np.sort_complex(np.concatenate([E, -E]))
        assert np.abs(evals - expected).max() < 1e-10


def test_real_space_rejects_wrap_ambiguity():
    spec = lkc.next_nearest(1.0, 0.1)
    with pytest.raises(ValueError):
        lkc.real_space_matrix(spec, 4, "PBC")
    with pytest.raises(ValueError):
        lkc.real_space_matrix(spec, 3, "OBC")
    with pytest.raises(ValueError):
        lkc.real_space_matrix(spec, 8, "torus")


# --------------------------------------------------------- OBC spectrum


def test_obc_zero_modes_nn_topological():
    spec = lkc.nearest_neighbor(0.8, 0.1)
    result = lkc.obc_spectrum(spec, 200)
    assert len(result.zero_modes) == 2
    for index, weight in result.zero_modes:
        assert abs(result.eigenvalues[index]) < 1e-4
        assert weight > 0.5


def test_obc_zero_modes_nn_trivial():
    spec = lkc.nearest_neighbor(0.8, 0.9)
    result = lkc.obc_spectrum(spec, 200)
    assert len(result.zero_modes) == 0


def test_obc_zero_modes_nnn_double():
    spec = lkc.next_nearest(1.0, 0.1)
    result = lkc.obc_spectrum(spec, 200)
    assert len(result.zero_modes) == 4


def test_obc_chiral_pairing():
    # the OBC eigenvalue multiset is symmetric under E -> -E
    rng = np.random.default_rng(5)
    spec = random_spec(rng)
    result = lkc.obc_spectrum(spec, 60)
    evals = np.sort_complex(result.eigenvalues)
    mirrored = np.sort_complex(-result.eigenvalues)
    assert np.abs(evals - mirrored).max() < 1e-8


def test_obc_spectrum_size_and_edge_weights():
    spec = lkc.nearest_neighbor(0.8, 0.1)
    result = lkc.obc_spectrum(spec, 60)
    assert result.eigenvalues.shape == (120,)
    assert result.edge_weights.shape == (120,)
    assert np.all((result.edge_weights >= 0) & (result.edge_weights <= 1 + 1e-12))
