"""
Cross-checking against the axioms
=================================

The blowup value is compared with an independent reduction that only uses
the defining properties of the intersection number, then with a battery of
seeded property checks.
"""

# %%
import collections

import numpy as np

from imult import fulton_im, intersection_multiplicity, resultant_order_diagnostic
from imult.properties import PROPERTIES, finite_pair, run_suite

rng = np.random.default_rng(42)
pairs = [finite_pair(rng, max_deg=5, max_mult=3) for _ in range(100)]

# %%
values = collections.Counter()
depths = collections.Counter()
mismatch = 0
for f, g in pairs:
    rep = intersection_multiplicity(f, g)
    values[rep.value] += 1
    depths[rep.stats.max_depth] += 1
    mismatch += fulton_im(f, g, budget=10**7) != rep.value
print("disagreements:", mismatch)
print("values:", sorted(values.items()))
print("deepest chains:", sorted(depths.items()))

# %% [markdown]
# The order of x = 0 in the resultant with respect to y is a second witness,
# valid when the origin is the only common point on the line x = 0 and no
# intersection escapes to infinity along it.

# %%
usable = agree = 0
for f, g in pairs:
    if f.degree_y and g.degree_y:
        order, ok = resultant_order_diagnostic(f, g)
        if ok:
            usable += 1
            agree += order == intersection_multiplicity(f, g).value
print(f"resultant check usable on {usable} pairs, agrees on {agree}")

# %%
for name in PROPERTIES:
    print(run_suite(name, 50, seed=1))
