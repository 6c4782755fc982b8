"""Fractional Jacobi collocation for the transformed delayed VIDE.

Collocating at the mapped Gauss nodes theta_i and substituting
eta = theta_i * xi**(1/lam) turns each weakly singular integral into a
fixed-interval integral whose basis factor is a polynomial in xi, so an
(N+1)-point Gauss-Jacobi rule with the matching weight evaluates it
exactly. The nodal unknowns (derivative values u*, solution values u and
delayed values v) satisfy

    u* = (P + C + D) u + Q v + G,   u = u0 + E u*,   v = u0 + H u*,

which collapses to one (N+1) x (N+1) solve for u*.
"""

from dataclasses import dataclass

import numpy as np

from .fracbasis import basis_matrix, build_basis, interpolate
from .problem import kernel_samples
from .specfun import frac_gauss_jacobi


class SolverError(RuntimeError):
    """Linear solve failed or produced an unacceptable residual."""


def singular_ratio(xi, lam, mu):
    """((1 - xi**(1/lam)) / (1 - xi))**(-mu) for xi in (0, 1).

    Computed via log1p to avoid cancellation near xi = 1; identically 1
    when lam = 1. The limit as xi -> 1 is lam**mu.
    """
    xi = np.asarray(xi, dtype=float)
    if np.any((xi <= 0.0) | (xi >= 1.0)):
        raise ValueError("singular ratio is defined for xi in the open interval (0, 1)")
    if lam == 1.0:
        return np.ones_like(xi)
    return np.exp(-mu * (np.log1p(-(xi ** (1.0 / lam))) - np.log1p(-xi)))


def transform_kernel(kbar, lam, mu):
    """Kernel of the fixed-interval form of a singular integral.

    Given kbar(theta, eta), returns ktil(theta_i, xi)
    = (1/lam) * singular_ratio(xi) * kbar(theta_i, theta_i * xi**(1/lam)).
    """
    def ktil(theta_i, xi):
        return singular_ratio(xi, lam, mu) / lam * kbar(theta_i, theta_i * np.asarray(xi) ** (1.0 / lam))

    return ktil


@dataclass(frozen=True, eq=False)
class CollocationSystem:
    """Assembled matrices for one (problem, N, lam) discretization.

    P and Q hold the diagonals of the coefficient matrices; C and D carry
    the two kernel integrals, E and H the antiderivative couplings. Row
    sums satisfy sum_j E[i, j] = theta_i and sum_j H[i, j] = eps * theta_i.
    """

    tp: object
    n: int
    lam: float
    alpha_c: float
    beta_c: float
    basis: object
    P: np.ndarray
    Q: np.ndarray
    G: np.ndarray
    U0: np.ndarray
    C: np.ndarray
    D: np.ndarray
    E: np.ndarray
    H: np.ndarray
    kernel_rule: object
    anti_rule: object


def assemble(tp, n, lam, alpha_c=-0.5, beta_c=-0.5, quad_points=None):
    """Assemble the collocation system for the transformed problem tp.

    quad_points overrides the (N+1)-point kernel/antiderivative rules for
    oversampling diagnostics; the basis and collocation nodes are unchanged.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"lam must lie in (0, 1], got {lam}")
    mu, gam, eps = tp.mu, tp.gamma, tp.eps
    m = (n + 1) if quad_points is None else int(quad_points)

    basis = build_basis(n, alpha_c, beta_c, lam)
    theta = basis.nodes
    # rules in the xi variable: weights (1-xi)^a xi^b with the scheme exponents
    kernel_rule = frac_gauss_jacobi(m, -mu, (mu + gam) / lam - 1.0, 1.0)
    anti_rule = frac_gauss_jacobi(m, 0.0, 1.0 / lam - 1.0, 1.0)

    xi, w = kernel_rule.nodes, kernel_rule.weights
    xih, wh = anti_rule.nodes, anti_rule.weights
    s = xi ** (1.0 / lam) if lam != 1.0 else xi            # eta_i(xi) = theta_i * s
    sh = xih ** (1.0 / lam) if lam != 1.0 else xih
    ratio = singular_ratio(xi, lam, mu)

    size = n + 1
    C = np.empty((size, size))
    D = np.empty((size, size))
    E = np.empty((size, size))
    H = np.empty((size, size))
    for i, ti in enumerate(theta):
        eta = ti * s
        k1 = kernel_samples(tp.kbar1, ti, eta) * ratio / lam
        k2 = kernel_samples(tp.kbar2, ti, eps * eta) * ratio / lam
        C[i] = (w * k1) @ basis_matrix(basis, eta)
        D[i] = (w * k2) @ basis_matrix(basis, eps * eta)
        eta_h = ti * sh
        E[i] = (ti / lam) * (wh @ basis_matrix(basis, eta_h))
        H[i] = (eps * ti / lam) * (wh @ basis_matrix(basis, eps * eta_h))

    P = np.array([tp.p1(t) for t in theta], dtype=float)
    Q = np.array([tp.q1(t) for t in theta], dtype=float)
    G = np.array([tp.g1(t) for t in theta], dtype=float)
    U0 = np.full(size, float(tp.y0))
    return CollocationSystem(tp=tp, n=n, lam=float(lam), alpha_c=float(alpha_c),
                             beta_c=float(beta_c), basis=basis, P=P, Q=Q, G=G, U0=U0,
                             C=C, D=D, E=E, H=H,
                             kernel_rule=kernel_rule, anti_rule=anti_rule)


@dataclass(frozen=True, eq=False)
class SolutionApprox:
    """Nodal solution of one collocation system.

    u_star approximates phi'(theta_i); u and v are the reconstructed
    solution and delayed-solution values, u = U0 + E u*, v = U0 + H u*.
    Note the interpolant of u_star is not the derivative of the
    interpolant of u; both are first-class approximations.
    """

    system: CollocationSystem
    u_star: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def evaluate(self, theta):
        """phi_N(theta) = sum_j u_j F_j(theta)."""
        return interpolate(self.system.basis, self.u, theta)

    def evaluate_derivative(self, theta):
        """phi*_N(theta) = sum_j u*_j F_j(theta)."""
        return interpolate(self.system.basis, self.u_star, theta)

    def to_physical(self, t):
        """y_N(t) = phi_N(t / T) for t in [0, T]."""
        T = self.system.tp.T
        tt = np.asarray(t, dtype=float)
        if np.any((tt < 0.0) | (tt > T)):
            raise ValueError(f"t must lie in [0, {T}]")
        return self.evaluate(tt / T)


def solve(system):
    """Eliminate u and v and solve the dense system for u* by LU.

    Raises SolverError when the matrix is numerically singular or the
    solve residual exceeds 1e-12 * (max|rhs| + 1).
    """
    size = system.n + 1
    M = system.C + system.D
    A = np.eye(size) - (system.P[:, None] * system.E + M @ system.E) \
        - system.Q[:, None] * system.H
    rhs = system.U0 * (system.P + system.Q + M @ np.ones(size)) + system.G
    try:
        u_star = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError as err:
        raise SolverError(f"singular collocation matrix (n={system.n}, lam={system.lam}): {err}") from None
    residual = float(np.max(np.abs(A @ u_star - rhs)))
    if not np.isfinite(residual) or residual > 1e-12 * (float(np.max(np.abs(rhs))) + 1.0):
        raise SolverError(
            f"solve residual {residual:.3e} too large (n={system.n}, lam={system.lam})")
    u = system.U0 + system.E @ u_star
    v = system.U0 + system.H @ u_star
    return SolutionApprox(system=system, u_star=u_star, u=u, v=v)


def solve_block(system):
    """Debug path: solve the full 3(N+1) block system without elimination."""
    size = system.n + 1
    I = np.eye(size)
    Z = np.zeros((size, size))
    M = system.C + system.D
    top = np.hstack([I, -(np.diag(system.P) + M), -np.diag(system.Q)])
    mid = np.hstack([-system.E, I, Z])
    bot = np.hstack([-system.H, Z, I])
    A = np.vstack([top, mid, bot])
    rhs = np.concatenate([system.G, system.U0, system.U0])
    try:
        sol = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError as err:
        raise SolverError(f"singular block system (n={system.n}, lam={system.lam}): {err}") from None
    return SolutionApprox(system=system, u_star=sol[:size], u=sol[size:2 * size], v=sol[2 * size:])
