#!/usr/bin/env python3
"""High-precision standard-normal quantiles for the grid frozen in
test_normal.cpp.  Run:  python3 tests/oracles/normal_quantile_grid.py
"""
from mpmath import mp, mpf, sqrt, erfinv

mp.dps = 40

qs = ["1e-8", "1e-6", "1e-4", "0.001", "0.025", "0.1", "0.25", "0.5",
      "0.6", "0.75", "0.9", "0.975", "0.999", "1-1e-6", "1-1e-8"]

for s in qs:
    q = mpf(1) - mpf(s[2:]) if s.startswith("1-") else mpf(s)
    z = sqrt(2) * erfinv(2 * q - 1)
    print(f'    {{{s.replace("1-", "1.0 - ") if s.startswith("1-") else s}, {mp.nstr(z, 18)}}},')
