"""Numerical certification of the Poisson-kernel calibration apparatus on
products of hyperbolic planes: exact Euler-class cocycles, Fourier
coefficients of the calibrating form, comass searches and the volume/entropy
the volume/degree bound calculators."""

from ._core import (
    __version__,
    boundary_action,
    boundary_jacobian,
    busemann,
    certify_local_max,
    coboundary,
    cocycle,
    comass_bound,
    curvature_entropy_bound,
    degree_bound,
    entropy_locally_symmetric,
    euler_class,
    euler_marginal,
    euler_trig_triple,
    Frame,
    minvol_bound,
    omega_exact,
    omega_mc,
    phi0,
    poisson_kernel,
    run_suite,
    scan_fourier,
    search,
    standard_frame,
    suitable_permutation_count,
    volume_density_ratio,
)

__all__ = [
    "__version__",
    "boundary_action",
    "boundary_jacobian",
    "busemann",
    "certify_local_max",
    "coboundary",
    "cocycle",
    "comass_bound",
    "curvature_entropy_bound",
    "degree_bound",
    "entropy_locally_symmetric",
    "euler_class",
    "euler_marginal",
    "euler_trig_triple",
    "Frame",
    "minvol_bound",
    "omega_exact",
    "omega_mc",
    "phi0",
    "poisson_kernel",
    "run_suite",
    "scan_fourier",
    "search",
    "standard_frame",
    "suitable_permutation_count",
    "volume_density_ratio",
]
