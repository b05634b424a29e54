"""Seeded property checks of the intersection number (axioms as invariants).

Every check draws a random instance from a :class:`numpy.random.Generator`,
evaluates :func:`~imult.blowup.intersection_multiplicity` on it and returns a
:class:`CheckResult`.  Each evaluation also verifies the depth bound
``max_depth <= deg f * deg g``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .arith import QQ
from .blowup import IMReport, intersection_multiplicity, multiplicity_at
from .errors import InvariantViolation
from .fulton import BudgetExhausted, RandomCurveSpec, fulton_im, random_curve, random_form
from .poly import BiPoly, bivar_gcd_q, lowest_form, substitute, translate

__all__ = ["CheckResult", "SuiteResult", "PROPERTIES", "random_pair", "finite_pair", "run_suite",
           "checked_im"]

X, Y = BiPoly.x(), BiPoly.y()


@dataclass
class CheckResult:
    ok: bool
    detail: str = ""
    skipped: bool = False


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    def __str__(self):
        s = f"{self.name}: {self.passed} pass, {self.failed} fail"
        return s + (f", {self.skipped} skipped" if self.skipped else "")


def checked_im(f: BiPoly, g: BiPoly, point=(0, 0)) -> IMReport:
    """Blowup value with the depth bound asserted."""
    rep = intersection_multiplicity(f, g, point)
    bound = f.total_degree * g.total_degree
    if rep.stats.max_depth > bound:
        raise InvariantViolation(f"depth {rep.stats.max_depth} exceeds {bound}")
    return rep


def _seed(rng) -> int:
    return int(rng.integers(0, 2**63))


def random_cone(rng, degree: int) -> BiPoly | None:
    """A random tangent cone of degree <= ``degree`` shared by a pair, or None."""
    kind = int(rng.integers(0, 4))
    if kind == 0 or degree < 1:
        return None
    lin = random_form(rng, 1, 3)
    if kind == 1 or degree < 2:
        return lin
    if kind == 2:
        return lin * random_form(rng, 1, 3)
    return X * X + Y * Y


def random_pair(rng, max_deg: int = 5, max_mult: int = 3, bound: int = 10,
                shared: bool = True) -> tuple[BiPoly, BiPoly]:
    """Two random curves through the origin.

    About half of the pairs share tangents; a further quarter osculate, with
    ``g`` a high-order perturbation of ``f``, to reach deep blowup chains.
    """
    if shared and rng.integers(0, 4) == 0:
        d = int(rng.integers(1, max_deg + 1))
        m = int(rng.integers(1, min(max_mult, d) + 1))
        f = random_curve(RandomCurveSpec(d, m, bound, _seed(rng)))
        k = int(rng.integers(m + 1, max_deg + 2))
        return f, f + random_form(rng, k, bound)
    df, dg = (int(rng.integers(1, max_deg + 1)) for _ in range(2))
    mf = int(rng.integers(1, min(max_mult, df) + 1))
    mg = int(rng.integers(1, min(max_mult, dg) + 1))
    cone = random_cone(rng, min(mf, mg)) if shared else None
    f = random_curve(RandomCurveSpec(df, mf, bound, _seed(rng)), cone)
    g = random_curve(RandomCurveSpec(dg, mg, bound, _seed(rng)), cone)
    return f, g


def finite_pair(rng, **kw) -> tuple[BiPoly, BiPoly]:
    while True:
        f, g = random_pair(rng, **kw)
        if bivar_gcd_q(f, g).is_constant():
            return f, g


def check_symmetry(rng) -> CheckResult:
    f, g = random_pair(rng)
    a, b = checked_im(f, g).value, checked_im(g, f).value
    return CheckResult(a == b, f"I(f,g)={a} I(g,f)={b} f={f} g={g}")


def check_zero_law(rng) -> CheckResult:
    f, g = random_pair(rng, max_deg=4)
    P = tuple(Fraction(int(rng.integers(-3, 4))) for _ in range(2))
    shift = (-P[0], -P[1])
    f, g = translate(f, shift), translate(g, shift)
    if rng.integers(0, 2):
        f = f + int(rng.integers(1, 5))
    if rng.integers(0, 2):
        g = g - int(rng.integers(1, 5))
    off = not f(*P).is_zero() or not g(*P).is_zero()
    v = checked_im(f, g, P).value
    return CheckResult((v == 0) == off, f"value={v} off_curve={off} P={P}")


def check_lower_bound(rng) -> CheckResult:
    f, g = finite_pair(rng)
    v = checked_im(f, g).value
    mm = multiplicity_at(f) * multiplicity_at(g)
    return CheckResult(v >= mm, f"value={v} < {mm}")


def check_transversality(rng) -> CheckResult:
    """Equality in the lower bound exactly when the tangent cones are coprime."""
    f, g = finite_pair(rng)
    rep = checked_im(f, g)
    mm = multiplicity_at(f) * multiplicity_at(g)
    cones_coprime = bivar_gcd_q(lowest_form(f).form, lowest_form(g).form).is_constant()
    idle = not rep.tree.children
    ok = (rep.value == mm) == cones_coprime == idle
    return CheckResult(ok, f"value={rep.value} mm={mm} coprime_cones={cones_coprime} idle={idle}")


def random_affine(rng, bound: int = 3):
    while True:
        a, b, c, d = (int(v) for v in rng.integers(-bound, bound + 1, size=4))
        if a * d - b * c:
            shift = tuple(int(v) for v in rng.integers(-bound, bound + 1, size=2))
            return (a, b, c, d), shift


def apply_affine(f: BiPoly, matrix, shift) -> BiPoly:
    """``f o phi^-1`` for ``phi(v) = M v + shift``."""
    a, b, c, d = matrix
    det = Fraction(a * d - b * c)
    u = X - shift[0]
    w = Y - shift[1]
    Xi = u.scale(d / det) + w.scale(-b / det)
    Yi = u.scale(-c / det) + w.scale(a / det)
    return substitute(f, Xi, Yi)


def check_affine_invariance(rng) -> CheckResult:
    f, g = random_pair(rng, max_deg=4)
    M, s = random_affine(rng)
    v0 = checked_im(f, g).value
    v1 = checked_im(apply_affine(f, M, s), apply_affine(g, M, s), s).value
    return CheckResult(v0 == v1, f"{v0} != {v1} under M={M} b={s}")


def check_product_additivity(rng) -> CheckResult:
    while True:
        u, g = random_pair(rng, max_deg=3)
        v, _ = random_pair(rng, max_deg=3)
        if bivar_gcd_q(u * v, g).is_constant():
            break
    a = checked_im(u * v, g).value
    b, c = checked_im(u, g).value, checked_im(v, g).value
    return CheckResult(a == b + c, f"I(uv,g)={a} I(u,g)={b} I(v,g)={c}")


def check_combination_invariance(rng) -> CheckResult:
    f, g = finite_pair(rng, max_deg=4)
    dh = int(rng.integers(0, 4))
    h = BiPoly(QQ)
    for d in range(dh + 1):
        h = h + random_form(rng, d, 5, nonzero=False)
    a, b = checked_im(f, g).value, checked_im(f, g + h * f).value
    return CheckResult(a == b, f"I(f,g)={a} I(f,g+hf)={b} h={h}")


def check_oracle_agreement(rng, budget: int = 200_000) -> CheckResult:
    f, g = finite_pair(rng, max_deg=4)
    v = checked_im(f, g).value
    try:
        w = fulton_im(f, g, budget=budget)
    except BudgetExhausted:
        return CheckResult(True, "oracle exhausted", skipped=True)
    return CheckResult(v == w, f"blowup={v} axioms={w}")


PROPERTIES: dict[str, Callable] = {
    "symmetry": check_symmetry,
    "zero_law": check_zero_law,
    "lower_bound": check_lower_bound,
    "transversality": check_transversality,
    "affine_invariance": check_affine_invariance,
    "product_additivity": check_product_additivity,
    "combination_invariance": check_combination_invariance,
}


def run_suite(name: str, trials: int, seed: int = 0) -> SuiteResult:
    """Run one named property on ``trials`` seeded instances."""
    check = PROPERTIES.get(name) or {"oracle_agreement": check_oracle_agreement}[name]
    rng = np.random.default_rng([seed, sorted(PROPERTIES).index(name) if name in PROPERTIES else 99])
    out = SuiteResult(name)
    for _ in range(trials):
        res = check(rng)
        if res.skipped:
            out.skipped += 1
        elif res.ok:
            out.passed += 1
        else:
            out.failed += 1
            out.failures.append(res.detail)
    return out
