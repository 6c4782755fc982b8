"""Fractional Gauss-Jacobi rules and their moment exactness.

The weight lam*(1-theta^lam)^alpha * theta^((beta+1)*lam-1) on [0, 1] has
moments of theta^(k*lam) equal to Beta(alpha+1, beta+k+1). An n-point rule
must reproduce them exactly for k up to 2n-1; this script shows the rule
construction and the moment errors, including the lam = 1 reduction to the
classical mapped rule.
"""

import numpy as np

from fracvide import beta, frac_gauss_jacobi, gauss_jacobi

print("classical 5-point rule on [-1, 1] for (1-x)^(-1/2) (1+x)^(-1/2):")
nodes, weights = gauss_jacobi(5, -0.5, -0.5)
for x, w in zip(nodes, weights):
    print(f"  x = {x:+.15f}   w = {w:.15f}")
print(f"  weight sum = {weights.sum():.15f}   (pi = {np.pi:.15f})")

print()
print("fractional rule, alpha=-1/2, beta=3, lam=1/2, 8 points:")
rule = frac_gauss_jacobi(8, -0.5, 3.0, 0.5)
print("  nodes  ", np.array2string(rule.nodes, precision=6))
print("  weights", np.array2string(rule.weights, precision=6))
print(f"  weight sum = {rule.weights.sum():.15e}")
print(f"  Beta(1/2,4) = {beta(0.5, 4.0):.15e}")

print()
print("moment check: integral of theta^(k*lam) against the weight")
print(f"  {'k':>3} {'quadrature':>24} {'Beta(a+1, b+k+1)':>24} {'rel err':>10}")
z = rule.nodes ** rule.lam
for k in range(0, 16, 3):
    approx = float(np.sum(rule.weights * z ** k))
    exact = beta(rule.alpha + 1, rule.beta + k + 1)
    print(f"  {k:>3} {approx:>24.16e} {exact:>24.16e} {abs(approx - exact) / exact:>10.2e}")

print()
print("the lam = 1 rule is the affinely mapped classical rule:")
affine = frac_gauss_jacobi(5, -0.5, -0.5, 1.0)
print("  mapped nodes:", np.array2string(affine.nodes, precision=12))
print("  (t+1)/2     :", np.array2string(0.5 * (nodes + 1.0), precision=12))
