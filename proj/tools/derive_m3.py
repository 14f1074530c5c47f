#!/usr/bin/env python3
"""Derive M3 = max_{|v| <= 1/3} |phi'''(v)| for phi(w) = (1+2w)^(7/2) - 2(1+w)^(7/2) + 1.

phi'''(w) = (105/8) (8 sqrt(1+2w) - 2 sqrt(1+w)). The script refines a dense
grid in high precision, confirms that phi'''' > 0 on the whole interval (so the
maximum of |phi'''| sits at an endpoint), and prints the constant that
core/src/smoothing.cpp stores as kPhiThirdDerivativeMax.
"""
from mpmath import mp, mpf, sqrt, pi, linspace

mp.dps = 70


def d3(w):
    return mpf(105) / 8 * (8 * sqrt(1 + 2 * w) - 2 * sqrt(1 + w))


def d4(w):
    return mpf(105) / 8 * (8 / sqrt(1 + 2 * w) - 1 / sqrt(1 + w))


lo, hi = -mpf(1) / 3, mpf(1) / 3
best_v, best = lo, abs(d3(lo))
points = 4097
for rounds in range(12):
    grid = linspace(lo, hi, points)
    assert all(d4(v) > 0 for v in grid), "phi'''' changes sign"
    for v in grid:
        if abs(d3(v)) > best:
            best_v, best = v, abs(d3(v))
    width = (hi - lo) / (points - 1)
    lo, hi = max(-mpf(1) / 3, best_v - width), min(mpf(1) / 3, best_v + width)

endpoint = abs(d3(mpf(1) / 3))
assert best <= endpoint
print("argmax  =", mp.nstr(best_v, 60))
print("M3      =", mp.nstr(endpoint, 60))
print("8pi/315 M3 =", mp.nstr(8 * pi / 315 * endpoint, 30))
