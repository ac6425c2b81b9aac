"""Lattice Laplacian determinants, tree counts, and their expansions."""

from _latdet import (
    boundary_coeff,
    c_d,
    catalan,
    dedekind_eta_imag,
    det_star,
    epstein_zeta_prime0,
    forest_polynomial,
    forest_prediction,
    glasser_j,
    green,
    log_det_star,
    residual_sweep,
    spectral_sum,
    tau,
    tau_qad_product,
    theorem1_rhs,
    theorem3_rhs,
    theta,
    verify_qad_identity,
    verify_torus_grid_identity,
    watson,
    zeta_prime0_interval,
    zeta_prime0_orthotope,
    zeta_prime0_triangle,
    zeta_prime0_triangle_direct,
)

__all__ = [
    "boundary_coeff",
    "c_d",
    "catalan",
    "dedekind_eta_imag",
    "det_star",
    "epstein_zeta_prime0",
    "forest_polynomial",
    "forest_prediction",
    "glasser_j",
    "green",
    "log_det_star",
    "residual_sweep",
    "spectral_sum",
    "tau",
    "tau_qad_product",
    "theorem1_rhs",
    "theorem3_rhs",
    "theta",
    "verify_qad_identity",
    "verify_torus_grid_identity",
    "watson",
    "zeta_prime0_interval",
    "zeta_prime0_orthotope",
    "zeta_prime0_triangle",
    "zeta_prime0_triangle_direct",
]
