"""
Worked examples: blowing up until the curves separate
======================================================

Three classical pairs of singular curves, one pair whose shared tangents are
only defined over Q(i), and one pair with a common component.
"""

# %%
from imult import intersection_multiplicity, parse_poly

PAIRS = {
    "ellipse / circle": ("5x^2+6xy+5y^2-10y", "x^2+(y-1)^2-1"),
    "tacnode / ramphoid cusp": ("2x^4-3x^2y+y^2-2y^3+y^4", "x^4+x^2y^2-2x^2y-xy^2+y^2"),
    "lemniscate / four-leaved rose": ("(x^2+y^2)^2-(x^2-y^2)", "(x^2+y^2)^3-(x^2-y^2)^2"),
}

# %% [markdown]
# Each line of a trace is one shared infinitely near point: the chart it was
# found in, its coordinate on the exceptional line, the product of the two
# multiplicities there and the running subtotal of its subtree.

# %%
for name, (f, g) in PAIRS.items():
    rep = intersection_multiplicity(parse_poly(f), parse_poly(g))
    print(f"{name}: I = {rep.value}")
    print(rep.tree.render())
    print()

# %% [markdown]
# The ramphoid cusp written with x replaced by x/2 is a different curve.  Its
# second order point sits at y = 1/4 instead of y = 1, so the chain stops one
# step earlier.

# %%
scaled = parse_poly("(x/2)^4 + (x/2)^2*y^2 - 2*(x/2)^2*y - (x/2)*y^2 + y^2")
rep = intersection_multiplicity(parse_poly(PAIRS["tacnode / ramphoid cusp"][0]), scaled)
print("scaled ramphoid:", rep.value)
print(rep.tree.render())

# %% [markdown]
# Tangent cone x^2 + y^2: the two tangent directions are conjugate over Q.
# One symbolic root is adjoined and its subtree counted twice.

# %%
rep = intersection_multiplicity(parse_poly("x^2+y^2+x^3"), parse_poly("x^2+y^2+y^3"))
print(rep.value, rep.stats)
print(rep.tree.render())

# %% [markdown]
# When the shared factor at x = 0 is reducible but has no rational root, the
# whole factor is adjoined and the tower splits only when the two halves
# start to behave differently.

# %%
f = parse_poly("(y^2+x^2)(y^2+2x^2)+x^5")
g = f + parse_poly("(y^2+x^2)x^4")
rep = intersection_multiplicity(f, g)
print(rep.value)
print(rep.tree.render())

# %%
rep = intersection_multiplicity(parse_poly("x(y-x^2)"), parse_poly("x(y+x^2)"))
print("shared component through the origin:", rep.to_dict()["value"])
