"""Deformed zeta functions on the eigenvalues of p sin(pi x) + x cos(pi x) = 0.

The library evaluates the weighted Dirichlet series and its kernel-partner
zeta function, the sigma kernels they are built from, the generalized Euler
constants and Bernoulli moments, the gammamorphic log-derivatives, and the
completed symmetric combinations on the critical line; a verifier registry
numerically confirms every modular relation the family satisfies.
"""

from .eigen import EigenTable, build_table, lambda1, solve_eigenvalue, weight
from .identities import (
    REGISTRY,
    F_p_real,
    F_p_spectral,
    VerifyReport,
    run_suite,
    run_verifier,
)
from .kernels import inv_sigma_exp, sigma_p, sigma_p_reg, sigma_ratio
from .params import INFINITY, ZERO, ConvergenceError, KoshParam, PoleError
from .quadrature import (
    AutoHorizon,
    FixedHorizon,
    QuadResult,
    QuadSpec,
    integrate_semi_infinite,
    integrate_vertical_line,
)
from .special import (
    capital_phi,
    classical_phi,
    classical_psi,
    euler_const_1,
    euler_const_2,
    gen_bernoulli,
    incomplete_gamma_Q,
    phi_1p,
    phi_2p,
    psi_1p,
    psi_2p,
    tau,
)
from .sums import LambertSum, lambert_sum, lambert_sum_positive, phi_sum
from .zeta import (
    Xi_p,
    ZetaEval,
    classical_Xi,
    classical_zeta,
    eta_p,
    kernel_snu,
    omega_p,
    xi_p,
    zeta_p,
)

__version__ = "0.1.0"

__all__ = [
    "KoshParam", "ZERO", "INFINITY", "PoleError", "ConvergenceError",
    "solve_eigenvalue", "weight", "build_table", "lambda1", "EigenTable",
    "QuadSpec", "QuadResult", "AutoHorizon", "FixedHorizon",
    "integrate_semi_infinite", "integrate_vertical_line",
    "sigma_ratio", "sigma_p", "sigma_p_reg", "inv_sigma_exp",
    "zeta_p", "eta_p", "omega_p", "xi_p", "Xi_p", "kernel_snu",
    "classical_zeta", "classical_Xi", "ZetaEval",
    "euler_const_1", "euler_const_2", "gen_bernoulli", "incomplete_gamma_Q",
    "psi_1p", "psi_2p", "phi_1p", "phi_2p", "capital_phi", "tau",
    "classical_psi", "classical_phi",
    "lambert_sum", "lambert_sum_positive", "phi_sum", "LambertSum",
    "F_p_real", "F_p_spectral", "run_verifier", "run_suite",
    "VerifyReport", "REGISTRY",
]
