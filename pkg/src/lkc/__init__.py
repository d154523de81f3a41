"""Lossy Kitaev chains: spectra, winding numbers, and entanglement dynamics.

The package simulates a Kitaev chain whose chemical potential carries a
negative imaginary part, mu = u - iv, modeling onsite particle loss in
the no-click limit of continuous monitoring.  It provides

- complex band structures and open-chain spectra (``model``),
- winding numbers and topological phase diagrams (``topology``),
- normalized non-unitary Gaussian-state evolution (``dynamics``),
- subsystem entanglement entropies and steady states (``entanglement``),
- log-law scaling fits and entanglement phase diagrams (``analysis``),

plus a command line front end (``lkc`` / ``lkc.cli``) that persists runs
as CSV + JSON manifests.
"""

from .analysis import (
    EntanglementPhaseCell,
    LossScan,
    LossScanPoint,
    ScalingFit,
    classify_entanglement_phase,
    compute_phase_cell,
    compute_scan_point,
    default_l_values,
    detect_kinks,
    entanglement_phase_diagram,
    fit_log_law,
    scan_g_vs_loss,
)
from .dynamics import (
    CorrelationGenerator,
    Correlator,
    ModeState,
    assemble_correlator,
    correlation_generator,
    default_initial_state,
    evolve_mode,
    real_space_oracle,
)
from .entanglement import (
    EETimeSeries,
    ee_time_series,
    entanglement_entropy,
    steady_state_ee,
    steady_state_profile,
)
from .errors import (
    ConfigError,
    DegenerateAbscissa,
    DegenerateState,
    GaplessError,
    InsufficientSamples,
    IoError,
    LkcError,
    NonConvergence,
    NonHermitianInput,
)
from .model import (
    BlochVector,
    ChainSpec,
    ComplexSpectrum,
    Coupling,
    band_energy,
    bloch_field,
    bloch_matrix,
    momentum_grid,
    nearest_neighbor,
    next_nearest,
    obc_spectrum,
    real_space_matrix,
)
from .topology import (
    PhaseBoundaries,
    TopoCell,
    WindingResult,
    compute_topo_cell,
    nn_critical_loss,
    nnn_boundaries,
    topological_phase_diagram,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "BlochVector",
    "ChainSpec",
    "ComplexSpectrum",
    "ConfigError",
    "CorrelationGenerator",
    "Correlator",
    "Coupling",
    "DegenerateAbscissa",
    "DegenerateState",
    "EETimeSeries",
    "EntanglementPhaseCell",
    "GaplessError",
    "InsufficientSamples",
    "IoError",
    "LkcError",
    "LossScan",
    "LossScanPoint",
    "ModeState",
    "NonConvergence",
    "NonHermitianInput",
    "PhaseBoundaries",
    "ScalingFit",
    "TopoCell",
    "WindingResult",
    "assemble_correlator",
    "band_energy",
    "bloch_field",
    "bloch_matrix",
    "classify_entanglement_phase",
    "compute_phase_cell",
    "compute_scan_point",
    "compute_topo_cell",
    "correlation_generator",
    "default_initial_state",
    "default_l_values",
    "detect_kinks",
    "ee_time_series",
    "entanglement_entropy",
    "entanglement_phase_diagram",
    "evolve_mode",
    "fit_log_law",
    "momentum_grid",
    "nearest_neighbor",
    "next_nearest",
    "nn_critical_loss",
    "nnn_boundaries",
    "obc_spectrum",
    "real_space_matrix",
    "real_space_oracle",
    "scan_g_vs_loss",
    "steady_state_ee",
    "steady_state_profile",
    "topological_phase_diagram",
    "winding_number",
    "__version__",
]
