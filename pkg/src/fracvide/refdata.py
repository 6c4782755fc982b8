"""Published benchmark error values for the built-in problems.

Each entry records the lambda used, the N grids of the solution-error and
derivative-error tables, and the benchmark L2/sup norms, so the reproduce
command can report the ratio of computed to benchmark error cell by cell.
ex4 and ex5 have no closed-form solution; their benchmark compares against
a self-reference solve at (lambda=1/2, N=18).
"""

BENCHMARKS = {
    "ex1": {
        "lam": 0.5,
        "e": {
            "n": (4, 6, 8, 10, 12),
            "l2": (1.24718e-02, 1.35898e-04, 7.46163e-07, 2.38088e-09, 4.91123e-12),
            "linf": (1.47322e-02, 1.78065e-04, 1.29258e-06, 4.27947e-09, 8.15620e-12),
        },
        "estar": {
            "n": (4, 6, 8, 10, 12),
            "l2": (4.57408e-02, 4.69971e-04, 2.78318e-06, 9.84189e-09, 2.52306e-11),
            "linf": (5.32377e-02, 5.07685e-04, 4.82471e-06, 1.95348e-08, 5.39264e-11),
        },
    },
    "ex2": {
        "lam": 1.0 / 3.0,
        "e": {
            "n": (2, 5, 10, 11, 13),
            "l2": (4.53443e-02, 4.71548e-03, 1.95915e-05, 5.88895e-06, 2.91639e-08),
            "linf": (1.29846e-01, 1.97082e-02, 8.32625e-05, 2.49951e-05, 1.21192e-07),
        },
        "estar": {
            "n": (2, 5, 10, 11, 13),
            "l2": (7.38681e-02, 4.23023e-03, 6.97779e-06, 6.91387e-07, 5.57349e-08),
            "linf": (2.06450e-01, 1.77134e-02, 2.79917e-05, 2.26236e-06, 2.37082e-07),
        },
    },
    "ex3": {
        "lam": 0.5,
        "e": {
            "n": (7, 9, 11, 13, 17),
            "l2": (6.66271e-04, 5.84874e-05, 3.37130e-06, 8.07408e-08, 1.64438e-08),
            "linf": (1.66020e-03, 1.44999e-04, 8.30929e-06, 1.19880e-07, 2.21299e-08),
        },
        "estar": {
            "n": (7, 10, 13, 15, 17),
            "l2": (1.68075e-03, 1.31019e-04, 2.62447e-06, 2.19824e-06, 1.53059e-07),
            "linf": (4.14564e-03, 3.20731e-04, 6.49866e-06, 5.46109e-06, 3.78046e-07),
        },
    },
    "ex4": {
        "lam": 0.5,
        "reference": {"lam": 0.5, "n": 18},
        "e": {
            "n": (5, 7, 10, 12, 14),
            "l2": (2.70464e-03, 4.13840e-04, 2.10939e-05, 4.67595e-06, 1.20788e-07),
            "linf": (6.56633e-03, 1.02585e-03, 5.19343e-05, 1.14426e-05, 2.87010e-07),
        },
        "estar": {
            "n": (5, 7, 10, 13, 15),
            "l2": (4.04976e-03, 3.63609e-04, 9.97540e-05, 2.26774e-06, 5.10405e-09),
            "linf": (9.62480e-03, 9.06380e-04, 2.45406e-04, 5.56027e-06, 1.10183e-08),
        },
    },
    "ex5": {
        "lam": 0.5,
        "reference": {"lam": 0.5, "n": 18},
        "e": {
            "n": (5, 8, 10, 13, 15),
            "l2": (6.09366e-03, 3.59672e-04, 4.62133e-05, 2.63270e-06, 1.70753e-07),
            "linf": (1.07296e-02, 6.61803e-04, 8.38297e-05, 4.80641e-06, 2.50450e-07),
        },
        "estar": {
            "n": (5, 8, 10, 13, 15),
            "l2": (1.65675e-02, 1.76491e-04, 8.17439e-05, 3.69433e-05, 1.31322e-05),
            "linf": (2.95843e-02, 3.01460e-04, 1.40496e-04, 6.86499e-05, 2.44657e-05),
        },
    },
}
