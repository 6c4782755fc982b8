"""Convergence dichotomy on a benchmark with a known solution.

The first built-in problem has exact solution y(t) = t e^(-sqrt(t)), which
is analytic in sqrt(t) but not in t. Matching the basis exponent to the
singularity (lam = 1/2) gives exponential decay of the error; the plain
polynomial basis (lam = 1) is stuck at an algebraic rate. Both the
solution error e and the derivative error e* are reported, in the weighted
L2 norm and the grid sup norm.
"""

from fracvide import builtin, emit_table, sweep

spec = builtin("ex1")

for lam, grid in ((0.5, [4, 6, 8, 10, 12]), (1.0, list(range(4, 21, 2)))):
    result = sweep(spec, lam, grid)
    print(f"lambda = {lam:g}")
    print(emit_table(result, "text"))
    rate = f"{result.fitted_rate:.3f}" if result.rate_class != "inconclusive" else "n/a"
    kind = "log(err) ~ rate * N" if result.rate_class == "exponential" else "log(err) ~ rate * log N"
    print(f"classification: {result.rate_class}   fitted {kind} with rate {rate}")
    print()

print("CSV form of the fractional sweep (plot-ready):")
print(emit_table(sweep(spec, 0.5, [4, 6, 8, 10, 12]), "csv"))
