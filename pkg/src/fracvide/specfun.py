"""Special functions and Gauss-Jacobi quadrature.

Provides log-gamma and Beta helpers, Jacobi polynomial evaluation by the
three-term recurrence, classical Gauss-Jacobi rules on [-1, 1] via the
Golub-Welsch algorithm, and their fractional mapping to rules on [0, 1]
for the weight

    w(theta) = lam * (1 - theta**lam)**alpha * theta**((beta+1)*lam - 1),

which reduces to (1-theta)**alpha * theta**beta when lam = 1.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal


def ln_gamma(x):
    """Natural log of the Gamma function for x > 0."""
    if x <= 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def beta(a, b):
    """Beta function B(a, b) = Gamma(a)*Gamma(b)/Gamma(a+b) for a, b > 0."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"beta requires positive arguments, got ({a}, {b})")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def jacobi_eval(n, alpha, beta, x):
    """Evaluate the Jacobi polynomial J_n^(alpha,beta) and its derivative at x.

    Uses the three-term recurrence (stable for all n in scope); the
    derivative comes from d/dx J_n^(a,b) = (n+a+b+1)/2 * J_{n-1}^(a+1,b+1).

    Returns (value, derivative).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if alpha <= -1.0 or beta <= -1.0:
        raise ValueError("Jacobi parameters must exceed -1")
    value = _jacobi_value(n, alpha, beta, x)
    if n == 0:
        deriv = 0.0 * value
    else:
        deriv = 0.5 * (n + alpha + beta + 1) * _jacobi_value(n - 1, alpha + 1, beta + 1, x)
    return value, deriv


def _jacobi_value(n, alpha, beta, x):
    x = np.asarray(x, dtype=float)
    pkm1 = np.ones_like(x)
    if n == 0:
        return pkm1 if pkm1.ndim else float(pkm1)
    pk = 0.5 * (alpha + beta + 2) * x + 0.5 * (alpha - beta)
    for k in range(2, n + 1):
        s = 2 * k + alpha + beta
        a1 = 2 * k * (k + alpha + beta) * (s - 2)
        a2 = (s - 1) * (alpha * alpha - beta * beta)
        a3 = (s - 1) * s * (s - 2)
        a4 = 2 * (k + alpha - 1) * (k + beta - 1) * s
        pk, pkm1 = ((a2 + a3 * x) * pk - a4 * pkm1) / a1, pk
    return pk if pk.ndim else float(pk)


def _jacobi_recurrence(n, alpha, beta):
    """Diagonal and off-diagonal of the n x n Jacobi matrix (monic recurrence)."""
    ab = alpha + beta
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    if n > 1:
        i = np.arange(1, n, dtype=float)
        diag[1:] = (beta * beta - alpha * alpha) / ((2 * i + ab) * (2 * i + ab + 2))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        # b_1 written with the (1+ab) factor cancelled: the raw formula is
        # 0/0 at ab = -1 (e.g. alpha = beta = -1/2).
        off[0] = math.sqrt(4 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab)))
    if n > 2:
        i = np.arange(2, n, dtype=float)
        s = 2 * i + ab
        off[1:] = np.sqrt(4 * i * (i + alpha) * (i + beta) * (i + ab) / (s * s * (s * s - 1)))
    return diag, off


def gauss_jacobi(n_points, alpha, beta):
    """n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^alpha (1+x)^beta.

    Golub-Welsch: the nodes are the eigenvalues of the symmetric tridiagonal
    matrix of recurrence coefficients (equivalently the zeros of
    J_n^(alpha,beta)); the weights come from the first components of the
    eigenvectors scaled by the zeroth moment. Exact for polynomials of degree
    <= 2*n_points - 1.

    Returns (nodes, weights) as ascending float arrays.
    """
    if n_points < 1:
        raise ValueError("n_points must be >= 1")
    if alpha <= -1.0 or beta <= -1.0:
        raise ValueError("Jacobi parameters must exceed -1")
    mu0 = math.exp((alpha + beta + 1) * math.log(2.0) + math.lgamma(alpha + 1)
                   + math.lgamma(beta + 1) - math.lgamma(alpha + beta + 2))
    diag, off = _jacobi_recurrence(n_points, alpha, beta)
    if n_points == 1:
        return diag.copy(), np.array([mu0])
    nodes, vecs = eigh_tridiagonal(diag, off)
    weights = mu0 * vecs[0, :] ** 2
    return nodes, weights


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Quadrature rule on [0, 1] for the fractional Jacobi weight.

    nodes are strictly increasing in (0, 1); weights are positive and sum to
    B(alpha+1, beta+1). The rule integrates theta**(k*lam) exactly against
    the weight for all k <= 2*n_points - 1.
    """

    alpha: float
    beta: float
    lam: float
    n_points: int
    nodes: np.ndarray
    weights: np.ndarray


def frac_gauss_jacobi(n_points, alpha, beta, lam):
    """Gauss rule on [0, 1] for lam*(1-theta^lam)^alpha * theta^((beta+1)*lam-1).

    Obtained from the classical rule by theta_j = ((t_j+1)/2)**(1/lam) and
    w_j -> 2**-(alpha+beta+1) * w_j; lam = 1 gives the affinely mapped
    classical rule for (1-theta)^alpha * theta^beta.
    """
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"lam must lie in (0, 1], got {lam}")
    t, w = gauss_jacobi(n_points, alpha, beta)
    z = 0.5 * (t + 1.0)
    nodes = z if lam == 1.0 else z ** (1.0 / lam)
    weights = w * 2.0 ** -(alpha + beta + 1)
    return QuadratureRule(alpha=float(alpha), beta=float(beta), lam=float(lam),
                          n_points=int(n_points), nodes=nodes, weights=weights)
