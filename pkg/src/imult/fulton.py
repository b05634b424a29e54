"""Independent checks for the blowup computation, and random test curves.

:func:`fulton_im` evaluates the intersection number straight from its
axioms: it never blows anything up, it only rewrites the pair ``(f, g)``
by moves under which the intersection number is known not to change.
Polynomials are kept as integer dictionaries with their content removed,
since scaling by a nonzero constant does not change the value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .arith import QQ
from .blowup import INFINITY, has_common_component_through
from .errors import MathError
from .poly import BiPoly, UniPoly, resultant_y, translate, uni_gcd

__all__ = [
    "BudgetExhausted",
    "fulton_im",
    "common_component_through",
    "resultant_order_diagnostic",
    "RandomCurveSpec",
    "random_curve",
    "random_form",
]

DEFAULT_BUDGET = 1_000_000


class BudgetExhausted(Exception):
    """The axioms oracle used up its step budget without an answer."""

    def __init__(self, steps: int):
        super().__init__(f"step budget of {steps} exhausted")
        self.steps = steps


def _to_integer_terms(f: BiPoly) -> dict:
    den = 1
    for c in f.terms.values():
        den = lcm(den, Fraction(c).denominator)
    return _primitive({e: int(c * den) for e, c in f.terms.items()})


def _primitive(p: dict) -> dict:
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            return p
    if g in (0, 1):
        return p
    return {e: c // g for e, c in p.items()}


def _x_axis(p: dict) -> dict:
    return {i: c for (i, j), c in p.items() if j == 0}


def _order(a: dict) -> int:
    return min(a)


def _divide_by_y(p: dict) -> dict:
    return {(i, j - 1): c for (i, j), c in p.items()}


def fulton_im(f: BiPoly, g: BiPoly, point=(0, 0), budget: int = DEFAULT_BUDGET) -> int:
    """Intersection number at a rational point, reduced from the axioms alone.

    The caller must exclude a common component through ``point``.  Raises
    :class:`BudgetExhausted` after ``budget`` rewriting steps.
    """
    if f.is_constant() or g.is_constant():
        raise MathError("not a curve: constant polynomial")
    P = tuple(Fraction(c) for c in point)
    F = _to_integer_terms(translate(f, P))
    G = _to_integer_terms(translate(g, P))
    total = 0
    steps = 0
    while True:
        steps += 1
        if steps > budget:
            raise BudgetExhausted(budget)
        if F.get((0, 0)) or G.get((0, 0)):
            return total
        a, b = _x_axis(F), _x_axis(G)
        if not a and not b:
            return INFINITY
        if not a:
            # F = y q and I(y, G) = ord_x G(x, 0)
            total += _order(b)
            F = _divide_by_y(F)
            continue
        if not b:
            total += _order(a)
            G = _divide_by_y(G)
            continue
        r, s = max(a), max(b)
        if r > s:
            F, G, a, b, r, s = G, F, b, a, s, r
        # G <- lc(a) G - lc(b) x^(s - r) F lowers deg G(x, 0)
        la, lb = a[r], b[s]
        new = {e: la * c for e, c in G.items()}
        k = s - r
        for (i, j), c in F.items():
            e = (i + k, j)
            v = new.get(e, 0) - lb * c
            if v:
                new[e] = v
            else:
                new.pop(e, None)
        G = _primitive(new)


def common_component_through(f: BiPoly, g: BiPoly, point=(0, 0)) -> bool:
    """True iff ``f`` and ``g`` share a component passing through ``point``."""
    return has_common_component_through(f, g, point)


def resultant_order_diagnostic(f: BiPoly, g: BiPoly) -> tuple[int, bool]:
    """Order of ``x = 0`` in ``Res_y(f, g)`` and whether it equals I at the origin.

    The order sums the intersection numbers over all common points on the
    line ``x = 0`` (none escape to infinity when both leading y-coefficients
    are constants), so it equals the value at the origin exactly when the
    origin is the only common point on that line.
    """
    res = resultant_y(f, g)
    if res.is_zero():
        order = INFINITY
    else:
        order = next(i for i, c in enumerate(res.coeffs) if c)
    lead_f = [e for e in f.terms if e[1] == f.degree_y]
    lead_g = [e for e in g.terms if e[1] == g.degree_y]
    applicable = lead_f == [(0, f.degree_y)] and lead_g == [(0, g.degree_y)]
    a, b = _at_x0(f), _at_x0(g)
    if applicable and not (a.is_zero() and b.is_zero()):
        applicable = all(not c for c in uni_gcd(a, b).coeffs[:-1])
    else:
        applicable = False
    return order, applicable


def _at_x0(f: BiPoly) -> UniPoly:
    coeffs = [Fraction(0)] * (f.degree_y + 1)
    for (i, j), c in f.terms.items():
        if i == 0:
            coeffs[j] = c
    return UniPoly(QQ, tuple(coeffs))


# ---------------------------------------------------------------------------
# random curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomCurveSpec:
    """Parameters of one random test curve through the origin."""

    degree: int
    multiplicity_at_origin: int
    coefficient_bound: int = 10
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.multiplicity_at_origin <= self.degree:
            raise MathError("need 1 <= multiplicity <= degree")
        if self.coefficient_bound < 1:
            raise MathError("coefficient bound must be positive")


def random_form(rng: np.random.Generator, d: int, bound: int, nonzero: bool = True) -> BiPoly:
    """Homogeneous form of degree ``d`` with integer coefficients in [-bound, bound]."""
    while True:
        coeffs = rng.integers(-bound, bound, size=d + 1, endpoint=True)
        form = BiPoly.from_dict({(d - k, k): int(c) for k, c in enumerate(coeffs)})
        if not nonzero or not form.is_zero():
            return form


def random_curve(spec: RandomCurveSpec, tangent_cone: BiPoly | None = None) -> BiPoly:
    """Random curve of exact degree and multiplicity at the origin.

    If ``tangent_cone`` (a form of degree at most the multiplicity) is given,
    the lowest form is that cone times a random form, so pairs generated with
    the same cone share tangents at the origin.
    """
    rng = np.random.default_rng(spec.seed)
    m, n, b = spec.multiplicity_at_origin, spec.degree, spec.coefficient_bound
    f = BiPoly(QQ)
    for d in range(m, n + 1):
        if d == m and tangent_cone is not None:
            c = tangent_cone.total_degree
            if c > m or tangent_cone.homogeneous_part(c) != tangent_cone:
                raise MathError("tangent cone must be a form of degree <= multiplicity")
            form = tangent_cone * random_form(rng, m - c, b)
        else:
            form = random_form(rng, d, b, nonzero=d in (m, n))
        f = f + form
    return f
