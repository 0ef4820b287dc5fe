#!/usr/bin/env python3
"""Arbitrary-precision IRLS on the fixed 6-point logistic fixture.

Produces the reference coefficients asserted in test_logistic.cpp.
Run:  python3 tests/oracles/irls_fixture.py
"""
from mpmath import mp, mpf, exp, matrix, lu_solve, norm

mp.dps = 60

# fixture: 2 features + intercept, labels chosen so the classes overlap
# (finite MLE exists)
X = [(0.5, 1.2), (1.0, -0.4), (-0.3, 0.8), (-1.2, -0.5), (0.2, -1.0), (-0.7, 0.3)]
y = [1, 0, 1, 0, 1, 0]


def fit(include_intercept=True):
    n = len(X)
    p = 2 + (1 if include_intercept else 0)
    Z = matrix(n, p)
    for i, row in enumerate(X):
        c = 0
        if include_intercept:
            Z[i, 0] = mpf(1)
            c = 1
        Z[i, c] = mpf(row[0])
        Z[i, c + 1] = mpf(row[1])
    beta = matrix(p, 1)
    for it in range(200):
        eta = Z * beta
        pi = matrix([1 / (1 + exp(-eta[i])) for i in range(n)])
        g = Z.T * matrix([mpf(y[i]) - pi[i] for i in range(n)])
        if max(abs(g[i]) for i in range(p)) < mpf("1e-40"):
            break
        W = matrix(p, p)
        for i in range(n):
            w = pi[i] * (1 - pi[i])
            for a in range(p):
                for b in range(p):
                    W[a, b] += Z[i, a] * w * Z[i, b]
        beta = beta + lu_solve(W, g)
    return beta, it


beta, iters = fit()
print("iterations:", iters)
print("beta (intercept, x1, x2):")
for i in range(3):
    print(f"  {mp.nstr(beta[i], 20)}")
