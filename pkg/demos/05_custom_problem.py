"""Defining a problem in the expression language and solving it.

The config format is flat key = expression text. Here the exact solution
y(t) = t^(5/4) e^(-t) is prescribed and the forcing term is manufactured
automatically, so the solver's error is directly measurable. The
singularity exponent 5/4 suggests lam = 1/4; compare against lam = 1.
"""

import os
import tempfile

from fracvide import error_report, load_problem, solve, assemble, transform

CONFIG = """
# quarter-power singular benchmark
mu = 1/4
gamma = 1
eps = 0.75
T = 1
y0 = 0
p = cos(t)*t^2
q = t^2
K1 = exp(-t*s)
K2 = 1 + tau^2
exact = t^(5/4)*exp(-t)
exact_prime = exp(-t)*(5/4*t^(1/4) - t^(5/4))
"""

tmpdir = tempfile.mkdtemp()
path = os.path.join(tmpdir, "quarter_power.cfg")
with open(path, "w") as fh:
    fh.write(CONFIG)

spec = load_problem(path)
print(f"loaded problem {spec.name!r}: mu={spec.mu}, gamma={spec.gamma}, "
      f"eps={spec.eps}, T={spec.T}")
print(f"manufactured forcing at t=0.5: g(0.5) = {spec.g(0.5):.12e}")
print()

tp = transform(spec)
print(f"{'N':>3}  {'lam=1/4 Linf_e':>15}  {'lam=1 Linf_e':>15}")
for n in (4, 8, 12, 16):
    errs = []
    for lam in (0.25, 1.0):
        sol = solve(assemble(tp, n, lam))
        rep = error_report(sol, tp.phi, tp.phi_prime)
        errs.append(rep.linf_e)
    print(f"{n:>3}  {errs[0]:>15.3e}  {errs[1]:>15.3e}")
