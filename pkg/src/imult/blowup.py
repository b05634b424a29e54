"""Local intersection multiplicity by repeated blowup.

At the origin the value is ``m(f) m(g)`` plus the values at every infinitely
near point shared by the strict transforms.  Shared points in the first chart
are the roots of ``gcd(f1(0, y), g1(0, y))``; the origin of the second chart
is visited only when ``x`` divides both lowest forms, since every other point
of that chart is already covered by the first one.

Irrational shared points are never enumerated one by one.  A squarefree
factor of degree ``d`` is adjoined as a single symbolic root and its subtree
is counted ``d`` times; if that quotient ring later turns out not to be a
field the branch is split and recomputed per factor.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple

from .arith import QQ, ExtensionContext, FieldElement, SplitRequired, adjoin_root
from .errors import DepthGuardExceeded, InvariantViolation, MathError
from .poly import (
    BiPoly,
    UniPoly,
    bivar_gcd_q,
    certified_nonzero,
    chart1_strict_transform,
    chart2_strict_transform,
    eval_x0,
    lowest_form,
    rational_roots,
    shift_y,
    squarefree_part,
    translate,
    uni_gcd,
)

__all__ = [
    "INFINITY",
    "ConfigNode",
    "Stats",
    "IMReport",
    "Direction",
    "multiplicity_at",
    "shared_directions",
    "im_origin",
    "intersection_multiplicity",
    "has_common_component_through",
]

INFINITY = math.inf


@dataclass
class ConfigNode:
    """One shared infinitely near point together with its local data.

    ``root`` is the y-coordinate in the chart the point was found in (None at
    the root of the tree).  When the coordinate was adjoined symbolically,
    ``minimal_polynomial`` holds the squarefree polynomial it is a root of and
    ``conjugate_count`` is its degree.
    """

    depth: int
    chart: int
    m_f: int
    m_g: int
    conjugate_count: int = 1
    root: FieldElement | None = None
    minimal_polynomial: UniPoly | None = None
    children: list["ConfigNode"] = field(default_factory=list)

    @property
    def local_product(self) -> int:
        return self.m_f * self.m_g

    def subtree_value(self) -> int:
        return self.conjugate_count * (
            self.local_product + sum(c.subtree_value() for c in self.children))

    def walk(self) -> Iterator["ConfigNode"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def max_depth(self) -> int:
        return max(n.depth for n in self.walk())

    def describe_point(self) -> str:
        if self.root is None:
            return "P"
        if self.minimal_polynomial is not None:
            return f"root of {self.minimal_polynomial}, {self.conjugate_count} conjugates"
        return str(self.root)

    def to_dict(self) -> dict:
        d = {
            "depth": self.depth,
            "chart": self.chart,
            "point": self.describe_point(),
            "conjugate_count": self.conjugate_count,
            "m_f": self.m_f,
            "m_g": self.m_g,
            "local_product": self.local_product,
            "subtotal": self.subtree_value(),
            "children": [c.to_dict() for c in self.children],
        }
        if self.minimal_polynomial is not None:
            d["minimal_polynomial"] = str(self.minimal_polynomial)
        return d

    def render(self, indent: str = "  ") -> str:
        lines = []
        for node in self.walk():
            where = "origin" if node.depth == 0 else f"chart {node.chart}, y = {node.describe_point()}"
            if node.chart == 2:
                where = "chart 2, origin"
            lines.append(
                f"{indent * node.depth}[depth {node.depth}] {where}: "
                f"{node.m_f}*{node.m_g} = {node.local_product}, subtotal {node.subtree_value()}")
        return "\n".join(lines)


@dataclass
class Stats:
    blowups: int = 0
    max_depth: int = 0
    extensions: int = 0
    micros: int = 0


@dataclass
class IMReport:
    """Result of :func:`intersection_multiplicity`."""

    value: int | float
    tree: ConfigNode | None = None
    stats: Stats = field(default_factory=Stats)

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def to_dict(self) -> dict:
        return {
            "value": "infinity" if self.is_infinite else int(self.value),
            "tree": self.tree.to_dict() if self.tree else None,
            "stats": {
                "blowups": self.stats.blowups,
                "max_depth": self.stats.max_depth,
                "extensions": self.stats.extensions,
                "micros": self.stats.micros,
            },
        }


class Direction(NamedTuple):
    """A shared first order infinitely near point in chart 1."""

    ctx: ExtensionContext
    root: FieldElement
    conjugate_count: int
    minimal_polynomial: UniPoly | None = None


def multiplicity_at(f: BiPoly, point=(0, 0)) -> int:
    """Multiplicity of the curve ``f = 0`` at ``point``; 0 off the curve."""
    if f.is_zero():
        raise MathError("zero polynomial")
    return lowest_form(translate(f, point)).order


def _directions_for(ctx: ExtensionContext, h: UniPoly) -> list[Direction]:
    """Roots of the monic squarefree ``h``: explicit when possible, else adjoined."""
    if h.degree < 1:
        return []
    if h.degree == 1:
        return [Direction(ctx, FieldElement(ctx, ctx.field.neg(h.coeffs[0])), 1)]
    new, root, count = adjoin_root(ctx, h)
    return [Direction(new, root, count, h)]


def shared_directions(f1: BiPoly, g1: BiPoly) -> list[Direction]:
    """Shared points of two strict transforms on the exceptional line ``x = 0``.

    Over Q the rational roots are split off; whatever squarefree cofactor
    remains is adjoined as one symbolic root.  Over an extension the whole
    squarefree gcd is adjoined at once.  The conjugate counts add up to the
    degree of the squarefree gcd.  May raise :class:`SplitRequired`.
    """
    ctx = f1.ctx
    h = uni_gcd(eval_x0(f1), eval_x0(g1))
    if h.degree < 1:
        return []
    h = squarefree_part(h)
    if ctx.depth:
        return _directions_for(ctx, h)
    out = []
    for r in rational_roots(h):
        out.append(Direction(ctx, ctx.rational(r), 1))
        h = h // UniPoly.from_rationals([-r, 1])
    return out + _directions_for(ctx, h)


def _x_divides(form: BiPoly) -> bool:
    m = form.total_degree
    return not certified_nonzero(form.ctx.field, form.terms.get((0, m)))


def im_origin(f: BiPoly, g: BiPoly, depth: int = 0, guard: int | None = None,
              stats: Stats | None = None, *, chart: int = 1,
              direction: Direction | None = None) -> tuple[int, ConfigNode]:
    """Intersection multiplicity at the origin of two curves through it.

    Returns the value (not yet weighted by the conjugate count of
    ``direction``) and the configuration subtree rooted at this point.
    """
    if guard is not None and depth > guard:
        raise DepthGuardExceeded(f"blowup depth {depth} exceeds the bound {guard}")
    if stats is None:
        stats = Stats()
    stats.blowups += 1
    stats.max_depth = max(stats.max_depth, depth)
    ctx = f.ctx

    mf, f1 = chart1_strict_transform(f)
    mg, g1 = chart1_strict_transform(g)
    if mf < 1 or mg < 1:
        raise InvariantViolation("im_origin called at a point off one of the curves")
    node = ConfigNode(depth, chart, mf, mg)
    if direction is not None:
        node.root = direction.root
        node.conjugate_count = direction.conjugate_count
        node.minimal_polynomial = direction.minimal_polynomial
    total = mf * mg

    pending = shared_directions(f1, g1)
    while pending:
        d = pending.pop(0)
        try:
            sub, child = im_origin(
                shift_y(f1.lift(d.ctx), d.root), shift_y(g1.lift(d.ctx), d.root),
                depth + 1, guard, stats, chart=1, direction=d)
        except SplitRequired as exc:
            if d.minimal_polynomial is None or exc.index != ctx.depth:
                raise
            pending[0:0] = [
                q for fac in exc.factors
                for q in _directions_for(ctx, UniPoly(ctx, fac))]
            continue
        if d.minimal_polynomial is not None:
            stats.extensions += 1
        total += d.conjugate_count * sub
        node.children.append(child)

    if _x_divides(lowest_form(f).form) and _x_divides(lowest_form(g).form):
        _, f2 = chart2_strict_transform(f)
        _, g2 = chart2_strict_transform(g)
        origin = Direction(ctx, FieldElement(ctx, ctx.field.zero), 1)
        sub, child = im_origin(f2, g2, depth + 1, guard, stats, chart=2, direction=origin)
        total += sub
        node.children.append(child)
    return total, node


def _as_point(point) -> tuple[Fraction, Fraction]:
    try:
        px, py = point
        return Fraction(px), Fraction(py)
    except (TypeError, ValueError) as exc:
        raise MathError(f"not a rational point: {point!r}") from exc


def has_common_component_through(f: BiPoly, g: BiPoly, point=(0, 0)) -> bool:
    """True iff f and g share a non-constant factor vanishing at ``point``."""
    h = bivar_gcd_q(f, g)
    if h.is_constant():
        return False
    return h(*_as_point(point)).is_zero()


def intersection_multiplicity(f: BiPoly, g: BiPoly, point=(0, 0)) -> IMReport:
    """Intersection multiplicity of the curves ``f = 0`` and ``g = 0`` at a rational point.

    Returns an :class:`IMReport` whose value is an ``int`` or :data:`INFINITY`
    when a common component passes through the point.
    """
    start = time.perf_counter()
    for h in (f, g):
        if h.ctx != QQ:
            raise MathError("input curves must have rational coefficients")
        if h.is_constant():
            raise MathError("not a curve: constant polynomial")
    P = _as_point(point)
    stats = Stats()
    report = IMReport(0, None, stats)
    if has_common_component_through(f, g, P):
        report.value = INFINITY
    else:
        f0, g0 = translate(f, P), translate(g, P)
        if f0.terms.get((0, 0)) or g0.terms.get((0, 0)):
            report.value = 0
        else:
            guard = f.total_degree * g.total_degree
            report.value, report.tree = im_origin(f0, g0, 0, guard, stats)
            if report.tree.subtree_value() != report.value:
                raise InvariantViolation("configuration tree does not add up to the value")
    stats.micros = max(1, int((time.perf_counter() - start) * 1e6))
    return report
