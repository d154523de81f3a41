"""Winding numbers and topological phase boundaries of the lossy chain.

The winding number

    w = (1/2pi) \\int dk d_k phi(k),   phi = arctan(h_y / h_z),

is computed through the factorization phi = (1/2i) ln(q_+/q_-) with
q_pm(k) = h_z(k) +- i h_y(k): w equals half the difference of the two
integer windings of the complex scalars q_pm around the origin.  The
factor windings are integers whenever the spectrum is gapped
(q_+ q_- = E^2 never vanishes), which makes half-integer w structurally
exact and avoids the branch cuts of a direct arctan integration.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import GaplessError, NonConvergence
from .model import ChainSpec, _fields

MAX_GRID = 2**22


@dataclass(frozen=True)
class WindingResult:
    """Winding number with its integer factor windings and grid metadata.

    min_gap is the minimum over the final grid of |q_+ q_-| = |E|^2; the
    winding is well defined only when it stays clear of zero.
    """

    w: float
    n_plus: int
    n_minus: int
    grid_points: int
    min_gap: float


def _factor_winding(q: np.ndarray) -> int | None:
    """Integer winding of a closed discrete loop q(k) around the origin.

    Returns None when some argument increment reaches pi/2, which means
    the loop is undersampled (possible aliasing for long-range shells).
    """
    dphi = np.angle(q[1:] / q[:-1])
    if not np.isfinite(dphi).all() or np.abs(dphi).max() >= np.pi / 2:
        return None
    total = dphi.sum() / (2.0 * np.pi)
    return int(np.rint(total))


def winding_number(
    spec: ChainSpec,
    initial_grid: int = 256,
    gap_tol: float = 1e-8,
) -> WindingResult:
    """Winding number w = (n_+ - n_-)/2 by accumulated-argument unwrapping.

    The closed k loop starts at `initial_grid` points and is doubled until
    the factor windings agree on two successive refinements.

    Raises
    ------
    GaplessError
        If min_k |E(k)|^2 falls below `gap_tol` (a phase boundary).
    NonConvergence
        If the grid would exceed 2**22 points without stabilizing.
    """
    if initial_grid < 256:
        raise ValueError("initial_grid must be at least 256")
    N = int(initial_grid)
    history: list[tuple[int, int]] = []
    min_gap = np.inf
    while N <= MAX_GRID:
        k = np.linspace(-np.pi, np.pi, N + 1)
        h_y, h_z = _fields(spec, k)
        q_plus = h_z + 1j * h_y
        q_minus = h_z - 1j * h_y
        min_gap = float(np.abs(q_plus * q_minus).min())
        if min_gap < gap_tol:
            raise GaplessError(
                f"spectrum gapless within tolerance (min |E|^2 = {min_gap:.3e}); "
                "the system sits on a phase boundary"
            )
        n_plus = _factor_winding(q_plus)
        n_minus = _factor_winding(q_minus)
        if n_plus is not None and n_minus is not None:
            history.append((n_plus, n_minus))
            if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
                return WindingResult(
                    w=(n_plus - n_minus) / 2.0,
                    n_plus=n_plus,
                    n_minus=n_minus,
                    grid_points=N,
                    min_gap=min_gap,
                )
        else:
            history.clear()
        N *= 2
    raise NonConvergence(f"factor windings did not stabilize below {MAX_GRID} grid points")


@dataclass(frozen=True)
class PhaseBoundaries:
    """Critical loss rates at fixed u, sorted ascending; empty if no transition."""

    model_tag: str
    u: float
    critical_rates: tuple[float, ...]

    @property
    def v_min(self) -> float | None:
        return self.critical_rates[0] if self.critical_rates else None

    @property
    def v_max(self) -> float | None:
        return self.critical_rates[-1] if self.critical_rates else None


def nn_critical_loss(J: float, Delta: float, u: float) -> PhaseBoundaries:
    """Critical loss rate of the nearest-neighbor chain.

    The gap closes at E = 0 on the ellipse u^2/J^2 + v^2/Delta^2 = 1, so
    v_c = |Delta| sqrt(1 - u^2/J^2) whenever |u| < |J|, else there is no
    transition at positive v.
    """
    if J == 0 or Delta == 0:
        raise ValueError("the boundary formula requires J != 0 and Delta != 0")
    rates: tuple[float, ...] = ()
    if abs(u) < abs(J):
        rates = (abs(Delta) * np.sqrt(1.0 - (u / J) ** 2),)
    return PhaseBoundaries(model_tag="NN", u=float(u), critical_rates=rates)


def nnn_boundaries(J1: float, J2: float, Delta1: float, Delta2: float, u: float) -> PhaseBoundaries:
    """Critical loss rates of the chain with nearest and next-nearest shells.

    Gap closings occur at the momenta k0 with
    cos k0 = [-J1 +- sqrt(J1^2 + 8 J2 (J2 - u))] / (4 J2); each admissible
    root contributes the rate v = |sin(k0) (Delta1 + 2 Delta2 cos k0)|,
    which is |h_y(k0)|.  Inadmissible roots are discarded.
    """
    if J2 == 0:
        raise ValueError("J2 must be nonzero")
    disc = J1 * J1 + 8.0 * J2 * (J2 - u)
    rates: list[float] = []
    if disc >= 0:
        for sign in (1.0, -1.0):
            c = (-J1 + sign * np.sqrt(disc)) / (4.0 * J2)
            if -1.0 <= c <= 1.0:
                k0 = np.arccos(c)
                vc = abs(np.sin(k0) * (Delta1 + 2.0 * Delta2 * np.cos(k0)))
                if vc > 0:
                    rates.append(float(vc))
    return PhaseBoundaries(model_tag="NNN", u=float(u), critical_rates=tuple(sorted(rates)))


@dataclass(frozen=True)
class TopoCell:
    """One phase-diagram cell: winding w, or a boundary/error marker."""

    u: float
    v: float
    w: float | None
    min_gap: float | None
    status: str  # "ok" | "boundary" | "error"
    detail: str = ""


def topological_phase_diagram(
    spec_template: ChainSpec,
    u_grid,
    v_grid,
    initial_grid: int = 256,
    gap_tol: float = 1e-8,
) -> list[TopoCell]:
    """Winding number over a (u, v) grid.

    Cells where the spectrum is gapless are recorded as boundary markers;
    refinement failures are recorded per cell without aborting the sweep.
    Output order is row-major in (u, v) regardless of evaluation order.
    """
    cells = []
    for u in np.asarray(u_grid, dtype=float):
        for v in np.asarray(v_grid, dtype=float):
            if v <= 0:
                raise ValueError("v grid entries must be positive")
            cells.append(compute_topo_cell(spec_template, float(u), float(v), initial_grid, gap_tol))
    return cells


def compute_topo_cell(
    spec_template: ChainSpec,
    u: float,
    v: float,
    initial_grid: int = 256,
    gap_tol: float = 1e-8,
) -> TopoCell:
    """Evaluate one (u, v) cell of the topological phase diagram."""
    spec = replace(spec_template, u=u, v=v)
    try:
        res = winding_number(spec, initial_grid=initial_grid, gap_tol=gap_tol)
    except GaplessError as exc:
        return TopoCell(u=u, v=v, w=None, min_gap=None, status="boundary", detail=str(exc))
    except NonConvergence as exc:
        return TopoCell(u=u, v=v, w=None, min_gap=None, status="error", detail=str(exc))
    return TopoCell(u=u, v=v, w=res.w, min_gap=res.min_gap, status="ok")
