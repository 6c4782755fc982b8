"""Interpolating functions with an algebraic singularity at the origin.

A function like f(theta) = theta^(3/2) e^-theta is smooth in the variable
z = sqrt(theta) but has unbounded second derivative at theta = 0, so plain
polynomial interpolation converges slowly while the lam = 1/2 basis
converges spectrally. The Lebesgue constant of the basis grows only
logarithmically for the default collocation exponents.
"""

import math

import numpy as np

from fracvide import basis_matrix, build_basis, lebesgue_constant

f = lambda theta: theta ** 1.5 * np.exp(-theta)
grid = np.linspace(0.0, 1.0, 3000)

print("sup interpolation error of theta^(3/2) e^-theta on [0, 1]")
print(f"  {'N':>3} {'lam=1':>12} {'lam=1/2':>12}")
for n in (4, 8, 16, 32):
    errs = []
    for lam in (1.0, 0.5):
        b = build_basis(n, -0.5, -0.5, lam)
        vals = f(b.nodes)
        err = np.max(np.abs(basis_matrix(b, grid) @ vals - f(grid)))
        errs.append(err)
    print(f"  {n:>3} {errs[0]:>12.3e} {errs[1]:>12.3e}")

print()
print("Lebesgue constant for alpha = beta = -1/2 (log growth)")
print(f"  {'N':>3} {'Lambda_N':>10} {'Lambda_N / ln N':>16}")
for n in (4, 8, 16, 32, 64):
    lam_n = lebesgue_constant(build_basis(n, -0.5, -0.5, 1.0), max(2000, 10 * (n + 1)))
    print(f"  {n:>3} {lam_n:>10.4f} {lam_n / math.log(n):>16.4f}")

print()
print("positive exponents lose the log bound (algebraic growth instead):")
for n in (8, 16, 32):
    good = lebesgue_constant(build_basis(n, -0.5, -0.5, 1.0), 2000)
    bad = lebesgue_constant(build_basis(n, 0.5, 0.5, 1.0), 2000)
    print(f"  N = {n:>2}: alpha=beta=-1/2 -> {good:7.3f}   alpha=beta=+1/2 -> {bad:8.3f}")
