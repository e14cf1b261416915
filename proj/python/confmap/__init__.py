"""Numerical conformal maps by the dipole simulation method."""

from ._confmap import (
    ArrangementError,
    BackwardMap,
    BoundaryCurve,
    ConfigError,
    Error,
    ExactMapCase,
    ForwardMap,
    GeometryError,
    PointConfig,
    Region,
    RunConfig,
    SingularKernelError,
    SolverError,
    UnsupportedError,
    annulus_case,
    annulus_region,
    build_backward,
    build_forward,
    cassini_case,
    cassini_frame_region,
    cassini_oval,
    cassini_oval_region,
    circle,
    discrete_hs_norm,
    disk_region,
    frame_case,
    hilbert_transform,
    mobius_case,
    parse_config,
    parse_config_text,
    run,
    run_acceptance,
    run_sweep,
    sweep_csv,
)

__version__ = "0.1.0"
