"""Gabor frames of Gaussian and hyperbolic secant windows."""

from ._core import (
    GaborsechError,
    constant_E,
    dual,
    dual_gauss_series,
    dual_sech_closed,
    frame_bounds,
    limit_distances,
    m_delta,
    run_cli,
    theta,
    theta1_prime0,
    theta_real,
    tight,
    tight_profile,
    verify_identity,
    window,
    zak,
    zak_grid,
)

__all__ = [
    "GaborsechError",
    "constant_E",
    "dual",
    "dual_gauss_series",
    "dual_sech_closed",
    "frame_bounds",
    "limit_distances",
    "m_delta",
    "run_cli",
    "theta",
    "theta1_prime0",
    "theta_real",
    "tight",
    "tight_profile",
    "verify_identity",
    "window",
    "zak",
    "zak_grid",
]
