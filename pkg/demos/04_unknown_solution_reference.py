"""Self-reference convergence study for a problem with no closed form.

The fourth and fifth built-in problems have unknown solutions, so a
high-resolution solve (lam = 1/2, N = 18) stands in for the exact one.
The reference must stay well above every compared degree (enforced gap of
3); its stability is checked here by comparing against an N = 20 solve.
The fifth problem has an irrational singularity exponent that no lam fully
resolves, yet the fractional basis still converges much faster than the
polynomial one.
"""

import numpy as np

from fracvide import builtin, emit_table, self_reference, sweep

for name in ("ex4", "ex5"):
    spec = builtin(name)
    ref = self_reference(spec, 0.5, 18)
    ref20 = self_reference(spec, 0.5, 20)
    grid = np.linspace(0.0, 1.0, 400)
    drift = float(np.max(np.abs(ref.phi(grid) - ref20.phi(grid))))
    print(f"{name}: reference drift between N=18 and N=20 is {drift:.2e}")

    for lam, ns in ((0.5, [5, 8, 10, 13, 15]), (1.0, [5, 7, 9, 11, 13, 15])):
        result = sweep(spec, lam, ns, reference=ref)
        print(f"{name}, lambda = {lam:g}: {result.rate_class}")
        print(emit_table(result, "text"))
    print()
