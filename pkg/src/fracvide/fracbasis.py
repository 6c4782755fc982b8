"""Generalized Lagrange basis on fractional Jacobi-Gauss nodes.

The basis functions F_j are polynomials in z = theta**lam that satisfy
F_j(theta_i) = delta_ij on the mapped Gauss nodes theta_j. Evaluation uses
the second barycentric form in the z variable: O(N) per point, stable, and
exact at the nodes. Also provides the weighted L2 and grid sup norms used
as error metrics.
"""

from dataclasses import dataclass

import numpy as np

from .specfun import frac_gauss_jacobi

# relative threshold on |z - z_j| for snapping to the Kronecker value
_NODE_HIT_RTOL = 1e-15


@dataclass(frozen=True, eq=False)
class FractionalBasis:
    """Nodes and barycentric data for the generalized Lagrange basis."""

    lam: float
    alpha: float
    beta: float
    nodes: np.ndarray        # collocation points theta_j, ascending in (0, 1)
    z_nodes: np.ndarray      # theta_j**lam
    bary_weights: np.ndarray

    @property
    def n(self):
        """Polynomial degree N (there are N+1 nodes)."""
        return len(self.nodes) - 1


def build_basis(n, alpha, beta, lam):
    """Basis of degree n on the zeros of the fractional Jacobi polynomial
    of degree n+1 with parameters (alpha, beta, lam)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    rule = frac_gauss_jacobi(n + 1, alpha, beta, lam)
    z = rule.nodes ** lam if lam != 1.0 else rule.nodes.copy()
    # scale differences by the inverse capacity of [0, 1] so the products
    # stay O(1) for large n (the second form is invariant to uniform scaling)
    diff = 4.0 * (z[:, None] - z[None, :])
    np.fill_diagonal(diff, 1.0)
    w = 1.0 / np.prod(diff, axis=1)
    return FractionalBasis(lam=float(lam), alpha=float(alpha), beta=float(beta),
                           nodes=rule.nodes, z_nodes=z, bary_weights=w)


def basis_matrix(basis, thetas):
    """Evaluate all basis functions at the given points.

    Returns an array of shape (len(thetas), n+1) whose rows sum to 1.
    """
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    z = thetas ** basis.lam if basis.lam != 1.0 else thetas
    diff = z[:, None] - basis.z_nodes[None, :]
    hit = np.abs(diff) <= _NODE_HIT_RTOL * np.maximum(1.0, np.abs(basis.z_nodes))[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = basis.bary_weights[None, :] / diff
        out = terms / np.sum(terms, axis=1, keepdims=True)
    rows = np.nonzero(np.any(hit, axis=1))[0]
    for i in rows:
        out[i] = 0.0
        out[i, np.argmax(hit[i])] = 1.0
    return out


def eval_basis(basis, j, theta):
    """Value of the j-th basis function at theta (Kronecker on the nodes)."""
    if not 0 <= j <= basis.n:
        raise IndexError(f"basis index {j} out of range 0..{basis.n}")
    return float(basis_matrix(basis, theta)[0, j])


def interpolate(basis, values, theta):
    """Evaluate sum_j values[j] * F_j(theta); scalar in, scalar out."""
    values = np.asarray(values, dtype=float)
    if values.shape != (basis.n + 1,):
        raise ValueError(f"expected {basis.n + 1} nodal values, got shape {values.shape}")
    out = basis_matrix(basis, theta) @ values
    return float(out[0]) if np.isscalar(theta) or np.ndim(theta) == 0 else out


def lebesgue_constant(basis, grid_size):
    """max over a uniform grid of sum_j |F_j(theta)|."""
    if grid_size < 10 * (basis.n + 1):
        raise ValueError("grid_size must be at least 10*(n+1)")
    grid = np.linspace(0.0, 1.0, grid_size)
    return float(np.max(np.sum(np.abs(basis_matrix(basis, grid)), axis=1)))


def sample_values(f, pts):
    """Evaluate a scalar function on an array of points, vectorizing when the
    callable supports it."""
    pts = np.asarray(pts, dtype=float)
    try:
        out = np.asarray(f(pts), dtype=float)
        if out.shape == pts.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(f(p)) for p in pts])


def weighted_l2_norm(f, alpha, beta, lam, m_points=200):
    """Weighted L2 norm of f on [0, 1] by an m_points fractional Gauss rule."""
    if m_points < 1:
        raise ValueError("m_points must be >= 1")
    rule = frac_gauss_jacobi(m_points, alpha, beta, lam)
    vals = sample_values(f, rule.nodes)
    return float(np.sqrt(np.sum(rule.weights * vals * vals)))


def sup_norm(f, grid=None):
    """max |f| over a finite grid (default: 1000 uniform points on [0, 1]).

    A grid approximation of the true sup; callers that know special points
    (e.g. collocation nodes) should include them in the grid.
    """
    if grid is None:
        grid = np.linspace(0.0, 1.0, 1000)
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("evaluation grid must be nonempty")
    return float(np.max(np.abs(sample_values(f, grid))))


def default_error_grid(basis, m=1000):
    """Uniform grid on [0, 1] joined with the collocation nodes."""
    return np.union1d(np.linspace(0.0, 1.0, m), basis.nodes)
