"""Winding numbers, analytic phase boundaries, and topological diagrams."""

import numpy as np
import pytest
from helpers import random_spec

import lkc
from lkc import ChainSpec, Coupling, GaplessError

NNN_RATES = (0.6535475074297998, 1.752961966367866)  # closed form at u=1


# --------------------------------------------------------- winding number


def test_winding_nn_topological():
    res = lkc.winding_number(lkc.nearest_neighbor(0.8, 0.1))
    assert res.w == 1
    assert res.w == (res.n_plus - res.n_minus) / 2
    assert res.min_gap > 1e-8


def test_winding_without_pairing_is_zero():
    spec = ChainSpec(couplings=(Coupling(1, 1.0, 0.0),), u=0.8, v=0.1)
    assert lkc.winding_number(spec).w == 0


def test_winding_nnn_values():
    for v, w in ((0.1, 2), (1.1, 1), (2.5, 0)):
        res = lkc.winding_number(lkc.next_nearest(1.0, v))
        assert res.w == w
        assert res.min_gap > 1e-8


def test_winding_gapless_raises():
    # u = J, v = 0 closes the gap exactly at k = -pi (a grid point)
    with pytest.raises(GaplessError):
        lkc.winding_number(lkc.nearest_neighbor(1.0, 0.0))


def test_winding_rejects_small_initial_grid():
    with pytest.raises(ValueError):
        lkc.winding_number(lkc.nearest_neighbor(0.8, 0.1), initial_grid=64)


def test_winding_quantization_and_doubling_stability():
    rng = np.random.default_rng(3)
    checked = 0
    while checked < 5:
        spec = random_spec(rng)
        try:
            res = lkc.winding_number(spec)
        except GaplessError:
            continue
        assert abs(2 * res.w - round(2 * res.w)) < 1e-3
        again = lkc.winding_number(spec, initial_grid=2 * res.grid_points)
        assert abs(again.w - res.w) < 1e-3
        checked += 1


def test_winding_antisymmetric_in_pairing():
    spec = lkc.next_nearest(1.0, 0.1)
    flipped = ChainSpec(
        couplings=tuple(Coupling(c.r, c.J, -c.Delta) for c in spec.couplings),
        u=spec.u,
        v=spec.v,
    )
    assert lkc.winding_number(flipped).w == -lkc.winding_number(spec).w


# ------------------------------------------------------ analytic boundaries


def test_nn_critical_loss_examples():
    b = lkc.nn_critical_loss(1.0, 1.0, 0.8)
    assert len(b.critical_rates) == 1
    assert b.critical_rates[0] == pytest.approx(0.6, abs=1e-12)
    assert lkc.nn_critical_loss(1.0, 1.0, 1.0).critical_rates == ()
    assert lkc.nn_critical_loss(1.0, 2.0, 0.0).critical_rates[0] == pytest.approx(2.0)
    with pytest.raises(ValueError):
        lkc.nn_critical_loss(0.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        lkc.nn_critical_loss(1.0, 0.0, 0.5)


def test_nnn_boundaries_closed_form():
    b = lkc.nnn_boundaries(1.0, 1.5, 1.0, 1.5, 1.0)
    assert b.critical_rates == pytest.approx(NNN_RATES, abs=1e-12)
    # gap-closing momenta: cos k0 = (-J1 +- sqrt(J1^2 + 8 J2 (J2-u))) / (4 J2)
    assert b.critical_rates[0] == pytest.approx(0.654, abs=2e-3)
    assert b.critical_rates[1] == pytest.approx(1.753, abs=2e-3)


def test_nnn_boundaries_empty_cases():
    assert lkc.nnn_boundaries(1.0, 1.5, 0.0, 0.0, 1.0).critical_rates == ()
    # discriminant < 0: no real critical momentum
    assert lkc.nnn_boundaries(1.0, 1.5, 1.0, 1.5, 5.0).critical_rates == ()
    with pytest.raises(ValueError):
        lkc.nnn_boundaries(1.0, 0.0, 1.0, 1.0, 1.0)


def test_nnn_boundaries_bracketed_by_windings():
    # w steps 2 -> 1 -> 0 across the two analytic rates
    for v_c, above, below in (
        (NNN_RATES[0], 1, 2),
        (NNN_RATES[1], 0, 1),
    ):
        assert lkc.winding_number(lkc.next_nearest(1.0, v_c - 0.05)).w == below
        assert lkc.winding_number(lkc.next_nearest(1.0, v_c + 0.05)).w == above


# ----------------------------------------------------------- phase diagram


def test_diagram_single_cells():
    cells = lkc.topological_phase_diagram(lkc.nearest_neighbor(0.0, 0.1), [0.8], [0.1])
    assert len(cells) == 1 and cells[0].status == "ok" and cells[0].w == 1

    no_pairing = ChainSpec(couplings=(Coupling(1, 1.0, 0.0),), u=0.0, v=0.1)
    cells = lkc.topological_phase_diagram(no_pairing, [0.8], [0.1])
    assert cells[0].w == 0


def test_diagram_row_major_and_antisymmetry():
    spec = lkc.nearest_neighbor(0.0, 0.1)
    us, vs = [0.2, 1.5], [0.1, 0.4]
    cells = lkc.topological_phase_diagram(spec, us, vs)
    assert [(c.u, c.v) for c in cells] == [(u, v) for u in us for v in vs]
    flipped = ChainSpec(
        couplings=(Coupling(1, 1.0, -1.0),), u=spec.u, v=spec.v
    )
    mirrored = lkc.topological_phase_diagram(flipped, us, vs)
    for a, b in zip(cells, mirrored):
        assert b.w == -a.w


def test_diagram_marks_boundary_cells():
    cells = lkc.topological_phase_diagram(
        lkc.nearest_neighbor(0.0, 0.1), [1.0], [1e-9]
    )
    assert cells[0].status == "boundary"
    assert cells[0].w is None


def test_diagram_rejects_nonpositive_v():
    with pytest.raises(ValueError):
        lkc.topological_phase_diagram(lkc.nearest_neighbor(0.0, 0.1), [0.5], [0.0])
