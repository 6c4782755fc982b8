"""Error measurement, convergence sweeps, and decay-rate classification.

Errors are reported in the grid sup norm and the weighted L2 norm with the
collocation weight (exponents alpha_c, beta_c, plain variable), for both
the solution interpolant and the separate derivative interpolant. A sweep
solves over an ascending N grid and labels the decay exponential or
algebraic by comparing linear fits of log(err) against N and against
log N; the better fit wins provided its R^2 is within 0.02 of a perfect
fit, otherwise the result is inconclusive.
"""

import math
from dataclasses import dataclass

import numpy as np

from .collocate import assemble, solve
from .fracbasis import default_error_grid, sup_norm, weighted_l2_norm
from .problem import transform

R2_MARGIN = 0.02   # winning fit must have R^2 >= 1 - R2_MARGIN
MIN_FIT_POINTS = 4
NOISE_FLOOR = 1e-11
REFERENCE_GAP = 3  # a reference must exceed every compared N by at least this


@dataclass(frozen=True)
class ErrorReport:
    n: int
    lam: float
    l2_e: float
    linf_e: float
    l2_estar: float
    linf_estar: float


@dataclass(frozen=True)
class SweepResult:
    problem: str
    lam: float
    rows: tuple          # ErrorReport, ascending in n
    rate_class: str      # "exponential" | "algebraic" | "inconclusive"
    fitted_rate: float
    failures: tuple = () # (n, message) for degrees that failed to solve


def error_report(sol, exact_phi, exact_phi_prime, alpha_c=None, beta_c=None, quad_points=200):
    """Norms of e = phi - phi_N and e* = phi' - phi*_N for one solution."""
    system = sol.system
    alpha_c = system.alpha_c if alpha_c is None else alpha_c
    beta_c = system.beta_c if beta_c is None else beta_c
    grid = default_error_grid(system.basis)
    e = lambda th: exact_phi(th) - sol.evaluate(th)
    estar = lambda th: exact_phi_prime(th) - sol.evaluate_derivative(th)
    return ErrorReport(
        n=system.n, lam=system.lam,
        l2_e=weighted_l2_norm(e, alpha_c, beta_c, 1.0, quad_points),
        linf_e=sup_norm(e, grid),
        l2_estar=weighted_l2_norm(estar, alpha_c, beta_c, 1.0, quad_points),
        linf_estar=sup_norm(estar, grid),
    )


@dataclass(frozen=True)
class ReferenceSolution:
    """High-resolution solve standing in for an unknown exact solution."""

    phi: callable
    phi_prime: callable
    lam: float
    n_ref: int

    def check_comparable(self, n):
        if n > self.n_ref - REFERENCE_GAP:
            raise ValueError(
                f"reference at n_ref={self.n_ref} is too close to n={n} "
                f"(need n <= n_ref - {REFERENCE_GAP})")


def self_reference(spec, lambda_ref, n_ref, alpha_c=-0.5, beta_c=-0.5):
    """Solve once at (lambda_ref, n_ref) and wrap the result as a surrogate
    exact solution for problems without a closed form."""
    sol = solve(assemble(transform(spec), n_ref, lambda_ref, alpha_c, beta_c))
    return ReferenceSolution(phi=sol.evaluate, phi_prime=sol.evaluate_derivative,
                             lam=lambda_ref, n_ref=n_ref)


def classify_decay(ns, errs):
    """Label an error sequence exponential/algebraic/inconclusive.

    Fits log(err) linearly against N and against log N. The higher-R^2 fit
    wins provided it is nearly perfect (R^2 >= 1 - R2_MARGIN); anything
    less, too few points, or errors at the rounding floor is inconclusive.
    Returns (label, slope-of-winning-fit).
    """
    ns = np.asarray(ns, dtype=float)
    errs = np.asarray(errs, dtype=float)
    keep = errs > 0.0
    ns, errs = ns[keep], errs[keep]
    if len(ns) < MIN_FIT_POINTS or float(np.max(errs)) <= NOISE_FLOOR:
        return "inconclusive", math.nan
    log_err = np.log(errs)

    def fit(x):
        slope, intercept = np.polyfit(x, log_err, 1)
        resid = log_err - (slope * x + intercept)
        total = float(np.sum((log_err - log_err.mean()) ** 2))
        if total == 0.0:
            return 1.0, slope
        return 1.0 - float(np.sum(resid ** 2)) / total, slope

    r2_exp, slope_exp = fit(ns)
    r2_alg, slope_alg = fit(np.log(ns))
    winner_r2 = max(r2_exp, r2_alg)
    if winner_r2 < 1.0 - R2_MARGIN:
        return "inconclusive", math.nan
    if r2_exp > r2_alg:
        return "exponential", slope_exp
    return "algebraic", slope_alg


def sweep(spec, lam, n_values, alpha_c=-0.5, beta_c=-0.5, reference=None, quad_points=200):
    """Solve over an ascending N grid and classify the L2 error decay.

    Uses spec.exact (transformed) as truth, or the supplied
    ReferenceSolution; one failing degree is recorded and skipped.
    """
    n_values = list(n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("n_values must be strictly ascending")
    tp = transform(spec)
    if reference is not None:
        for n in n_values:
            reference.check_comparable(n)
        phi, phi_prime = reference.phi, reference.phi_prime
    elif tp.phi is not None and tp.phi_prime is not None:
        phi, phi_prime = tp.phi, tp.phi_prime
    else:
        raise ValueError(f"problem {spec.name!r} has no exact solution; supply a reference")

    rows, failures = [], []
    for n in n_values:
        try:
            sol = solve(assemble(tp, n, lam, alpha_c, beta_c))
            rows.append(error_report(sol, phi, phi_prime, alpha_c, beta_c, quad_points))
        except (ValueError, RuntimeError) as err:
            failures.append((n, str(err)))
    label, rate = classify_decay([r.n for r in rows], [r.l2_e for r in rows])
    return SweepResult(problem=spec.name, lam=float(lam), rows=tuple(rows),
                       rate_class=label, fitted_rate=rate, failures=tuple(failures))


CSV_HEADER = "N,L2_e,Linf_e,L2_estar,Linf_estar"
_FIELDS = ("l2_e", "linf_e", "l2_estar", "linf_estar")
_TEXT_LABELS = ("L2_e", "Linf_e", "L2_estar", "Linf_estar")


def emit_table(result, fmt="csv"):
    """Render a SweepResult as CSV or as an aligned text table.

    CSV has one row per N with 6-significant-digit scientific notation;
    the text layout mirrors the usual convergence-table convention of one
    row per norm with N across the columns.
    """
    if not fmt:
        raise ValueError("empty format")
    if not result.rows:
        raise ValueError("empty sweep result")
    if fmt == "csv":
        lines = [CSV_HEADER]
        for row in result.rows:
            lines.append(",".join([str(row.n)] + [f"{getattr(row, f):.5e}" for f in _FIELDS]))
        return "\n".join(lines) + "\n"
    if fmt in ("text", "aligned-text"):
        width = 13
        header = "N".ljust(10) + "".join(str(r.n).rjust(width) for r in result.rows)
        lines = [header]
        for label, field in zip(_TEXT_LABELS, _FIELDS):
            lines.append(label.ljust(10)
                         + "".join(f"{getattr(r, field):.5e}".rjust(width) for r in result.rows))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r} (use csv or text)")


def sweep_filename(result):
    """Canonical CSV file name for a sweep."""
    return f"{result.problem}_{result.lam:g}_sweep.csv"
