"""Entanglement scaling analysis and phase classification.

On a periodic chain of L sites the steady-state entanglement entropy of
a segment of l sites either saturates (area law) or grows as

    S(L, l) = g ln[ sin(pi l / L) ] + const,

the chord-length log law.  Fitting g over a range of segment sizes and
tracking it across the loss rate separates the two phases: g vanishes in
the area-law phase and is finite in the log-law phase, with kinks of
g(v) marking the transitions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import steady_state_profile
from .errors import DegenerateAbscissa, InsufficientSamples
from .model import ChainSpec

_L_FRACTIONS = np.arange(1, 11) * 0.05  # l/L from 0.05 to 0.50


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares fit of S against ln sin(pi l / L)."""

    g: float
    intercept: float
    r_squared: float
    l_values: tuple[int, ...]


def default_l_values(L: int) -> list[int]:
    """Segment sizes round(L * f) for f = 0.05, 0.10, ..., 0.50.

    Duplicates after rounding are dropped, as are sizes below 8 where
    lattice effects swamp the chord-length form.
    """
    out: list[int] = []
    for f in _L_FRACTIONS:
        l = int(round(L * f))
        if 8 <= l <= L // 2 and l not in out:
            out.append(l)
    return out


def fit_log_law(samples, L: int) -> ScalingFit:
    """Fit S = g ln[sin(pi l / L)] + c by ordinary least squares.

    Parameters
    ----------
    samples : iterable of (l, S) pairs
        Segment sizes with their entropies; l must lie in [8, L/2].
    L : int
        Chain length.

    Raises
    ------
    InsufficientSamples
        Fewer than 4 usable samples.
    DegenerateAbscissa
        All samples share the same ln sin(pi l / L).
    """
    pairs = [(int(l), float(s)) for l, s in samples]
    for l, _ in pairs:
        if not 8 <= l <= L // 2:
            raise ValueError(f"segment size {l} outside [8, L/2]")
    if len(pairs) < 4:
        raise InsufficientSamples(f"need at least 4 samples, got {len(pairs)}")
    ls = np.array([l for l, _ in pairs], dtype=float)
    ss = np.array([s for _, s in pairs])
    x = np.log(np.sin(np.pi * ls / L))
    if np.ptp(x) == 0.0:
        raise DegenerateAbscissa("all samples share one abscissa")
    g, c = np.polyfit(x, ss, 1)
    resid = ss - (g * x + c)
    total = float(np.sum((ss - ss.mean()) ** 2))
    r2 = 0.0 if total == 0.0 else 1.0 - float(np.sum(resid**2)) / total
    return ScalingFit(
        g=float(g),
        intercept=float(c),
        r_squared=r2,
        l_values=tuple(int(l) for l, _ in pairs),
    )


def classify_entanglement_phase(fit: ScalingFit, g_threshold: float = 0.02) -> str:
    """"AreaLaw" when |g| < g_threshold, else "LogLaw"."""
    if g_threshold <= 0:
        raise ValueError("g_threshold must be positive")
    return "AreaLaw" if abs(fit.g) < g_threshold else "LogLaw"


def detect_kinks(v_values, g_values) -> list[float]:
    """Locate kinks of g(v) from jumps in the discrete derivative.

    The derivative dg/dv is formed by forward differences; a kink is
    flagged wherever the step change of the derivative exceeds 3x the
    median step change.  Adjacent flagged points merge into one kink at
    the largest jump.  Returns the kink locations in ascending order.
    """
    vs = np.asarray(v_values, dtype=float)
    gs = np.asarray(g_values, dtype=float)
    if vs.shape != gs.shape or vs.ndim != 1:
        raise ValueError("v and g must be 1d arrays of equal length")
    if vs.size < 4:
        return []
    dg = np.diff(gs) / np.diff(vs)
    step = np.abs(np.diff(dg))  # lives at interior points vs[1:-1]
    med = float(np.median(step))
    if med <= 0.0:
        med = float(step.max()) if step.size else 0.0
    if med <= 0.0:
        return []
    flagged = step > 3.0 * med
    kinks: list[float] = []
    i = 0
    while i < len(flagged):
        if flagged[i]:
            j = i
            while j + 1 < len(flagged) and flagged[j + 1]:
                j += 1
            run = slice(i, j + 1)
            kinks.append(float(vs[1:-1][run][np.argmax(step[run])]))
            i = j + 1
        else:
            i += 1
    return kinks


@dataclass(frozen=True)
class LossScanPoint:
    """One loss rate of a g(v) scan."""

    v: float
    g: float
    intercept: float
    r_squared: float
    converged: bool


@dataclass(frozen=True)
class LossScan:
    """g(v) along a cut of constant u, with detected kinks."""

    u: float
    points: tuple[LossScanPoint, ...]
    kinks: tuple[float, ...]


def compute_scan_point(
    spec_template: ChainSpec,
    u: float,
    v: float,
    L: int,
    l_values,
    T: float = 2000.0,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
) -> LossScanPoint:
    """Steady-state entropies and log-law fit at one (u, v) point."""
    if v <= 0:
        raise ValueError("loss rates must be positive")
    spec = spec_template.with_rates(u=u, v=v)
    entropies, converged, _ = steady_state_profile(
        spec, L, l_values, T=T, steady_tol=steady_tol, max_doublings=max_doublings
    )
    fit = fit_log_law(zip(l_values, entropies), L)
    return LossScanPoint(
        v=float(v),
        g=fit.g,
        intercept=fit.intercept,
        r_squared=fit.r_squared,
        converged=converged,
    )


def scan_g_vs_loss(
    spec_template: ChainSpec,
    u: float,
    v_values,
    L: int,
    l_values=None,
    T: float = 2000.0,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
) -> LossScan:
    """Sweep the loss rate at fixed u and fit g at each point.

    Every v must be positive: the Hermitian point never reaches a steady
    state.  Points are processed in the given order and the result is
    deterministic for fixed inputs.
    """
    vs = [float(v) for v in v_values]
    if any(v <= 0 for v in vs):
        raise ValueError("loss rates must be positive")
    if l_values is None:
        l_values = default_l_values(L)
    points = [
        compute_scan_point(
            spec_template, u, v, L, l_values,
            T=T, steady_tol=steady_tol, max_doublings=max_doublings,
        )
        for v in vs
    ]
    kinks = detect_kinks(vs, [p.g for p in points])
    return LossScan(u=float(u), points=tuple(points), kinks=tuple(kinks))


@dataclass(frozen=True)
class EntanglementPhaseCell:
    """One (u, v) cell of an entanglement phase diagram."""

    u: float
    v: float
    g: float
    r_squared: float
    phase: str  # "LogLaw" | "AreaLaw" | "Boundary"


def compute_phase_cell(
    spec_template: ChainSpec,
    u: float,
    v: float,
    L: int,
    l_values,
    T: float = 2000.0,
    g_threshold: float = 0.02,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
    critical_rates=(),
    v_step: float = np.inf,
) -> EntanglementPhaseCell:
    """Fit and classify a single (u, v) cell.

    A cell within one v-grid step of any critical rate is labeled
    "Boundary" instead of a phase, since the fit straddles the
    transition there.
    """
    point = compute_scan_point(
        spec_template, u, v, L, l_values,
        T=T, steady_tol=steady_tol, max_doublings=max_doublings,
    )
    if any(abs(v - float(c)) <= v_step for c in critical_rates):
        phase = "Boundary"
    else:
        fit = ScalingFit(point.g, point.intercept, point.r_squared, tuple(l_values))
        phase = classify_entanglement_phase(fit, g_threshold)
    return EntanglementPhaseCell(
        u=float(u), v=float(v), g=point.g, r_squared=point.r_squared, phase=phase
    )


def entanglement_phase_diagram(
    spec_template: ChainSpec,
    u_grid,
    v_grid,
    L: int,
    l_values=None,
    T: float = 2000.0,
    g_threshold: float = 0.02,
    steady_tol: float = 1e-6,
    max_doublings: int = 8,
    boundaries=None,
) -> list[EntanglementPhaseCell]:
    """Classify every (u, v) cell as log law or area law.

    Cells are visited row by row (u outer, v inner).  When `boundaries`
    is given it maps u to the analytic critical loss rates used for the
    "Boundary" labels.
    """
    us = [float(u) for u in u_grid]
    vs = [float(v) for v in v_grid]
    if any(v <= 0 for v in vs):
        raise ValueError("loss rates must be positive")
    if l_values is None:
        l_values = default_l_values(L)
    v_step = float(min(np.diff(vs))) if len(vs) > 1 else np.inf
    cells = []
    for u in us:
        crit = tuple(float(c) for c in boundaries(u)) if boundaries is not None else ()
        for v in vs:
            cells.append(
                compute_phase_cell(
                    spec_template, u, v, L, l_values,
                    T=T, g_threshold=g_threshold, steady_tol=steady_tol,
                    max_doublings=max_doublings,
                    critical_rates=crit, v_step=v_step,
                )
            )
    return cells
