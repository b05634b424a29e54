"""
Timing the two algorithms
=========================

Random pairs of a given degree and multiplicity at the origin, both curves
with integer coefficients in [-10, 10].  Every trial runs in its own process
with a wall-clock limit; a trial over the limit is reported as DNF.

Set ``IMULT_BENCH_TIMEOUT_MS`` to shorten the limit for a quick look.
"""

# %%
import os

import numpy as np

from imult.harness import BenchRow, bench
from imult.parse import parse_poly

timeout_ms = int(os.environ.get("IMULT_BENCH_TIMEOUT_MS", "10000"))
trials = int(os.environ.get("IMULT_BENCH_TRIALS", "10"))
GRID = [(3, 1), (5, 1), (5, 3), (15, 4), (20, 4)]

# %%
print(BenchRow.header())
rows = []
for deg, mult in GRID:
    row = bench(deg, mult, trials=trials, timeout_ms=timeout_ms, seed=0)
    rows.append(row)
    print(row.format())

# %% [markdown]
# Pairs sharing the tangent cone x^2 + y^2 force a degree-2 extension at the
# first blowup.

# %%
cone = parse_poly("x^2+y^2")
row = bench(5, 2, trials=trials, timeout_ms=timeout_ms, seed=0, tangent_cone=cone)
print(row.format())

# %%
ratio = np.array([r.median_ms("axioms") / r.median_ms("blowup") for r in rows])
for (deg, mult), q in zip(GRID, ratio):
    print(f"deg {deg:>2}, m {mult}: axioms / blowup median time ratio {q:8.1f}")
