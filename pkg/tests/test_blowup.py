from fractions import Fraction as F

import numpy as np
import pytest

from imult.arith import QQ
from imult.blowup import (
    INFINITY,
    im_origin,
    intersection_multiplicity,
    multiplicity_at,
    shared_directions,
)
from imult.errors import DepthGuardExceeded, MathError
from imult.fulton import fulton_im
from imult.parse import parse_poly as P
from imult.poly import BiPoly, chart1_strict_transform, eval_x0, squarefree_part, uni_gcd
from imult.properties import PROPERTIES, random_pair, run_suite

ELLIPSE = P("5x^2+6xy+5y^2-10y")
CIRCLE = P("x^2+(y-1)^2-1")
TACNODE = P("2x^4-3x^2y+y^2-2y^3+y^4")
RAMPHOID = P("x^4+x^2y^2-2x^2y-xy^2+y^2")
LEMNISCATE = P("(x^2+y^2)^2-(x^2-y^2)")
ROSE = P("(x^2+y^2)^3-(x^2-y^2)^2")


def chain(node):
    out = []
    while node is not None:
        out.append(node.local_product)
        node = node.children[0] if node.children else None
    return out


@pytest.mark.parametrize("f, point, m", [
    (ELLIPSE, (0, 0), 1),
    (TACNODE, (0, 0), 2),
    (P("x^2+y^2-2y"), (5, 5), 0),
    (P("x^2+y^2-2y"), (1, 1), 1),
])
def test_multiplicity_at(f, point, m):
    assert multiplicity_at(f, point) == m


def test_multiplicity_of_zero():
    with pytest.raises(MathError):
        multiplicity_at(BiPoly(QQ))


def test_shared_directions_rational():
    (d,) = shared_directions(P("5x+6xy+5xy^2-10y"), P("x+xy^2-2y"))
    assert d.ctx == QQ and d.root == 0 and d.conjugate_count == 1


def test_shared_directions_half():
    (d,) = shared_directions(P("5+6xy+5x^2y^2-10y"), P("1+x^2y^2-2y"))
    assert d.root == F(1, 2) and d.conjugate_count == 1


def test_shared_directions_extension():
    (d,) = shared_directions(P("1+y^2+x"), P("1+y^2+xy^3"))
    assert d.conjugate_count == 2 and d.ctx.absolute_degree == 2
    assert d.root * d.root == -1


def test_shared_directions_none():
    assert shared_directions(P("y-1+x"), P("y+1+x")) == []


def test_ellipse_circle():
    rep = intersection_multiplicity(ELLIPSE, CIRCLE)
    assert rep.value == 3
    assert chain(rep.tree) == [1, 1, 1]
    assert str(rep.tree.children[0].children[0].root) == "1/2"


def test_tacnode_ramphoid():
    rep = intersection_multiplicity(TACNODE, RAMPHOID)
    assert rep.value == 9
    assert chain(rep.tree) == [4, 4, 1]
    assert rep.tree.children[0].children[0].root == 1


def test_printed_scaled_ramphoid_is_regression_value():
    g = P("(x/2)^4 + (x/2)^2y^2 - 2(x/2)^2y - (x/2)y^2 + y^2")
    assert intersection_multiplicity(TACNODE, g).value == 8 == fulton_im(TACNODE, g)


def test_lemniscate_rose():
    rep = intersection_multiplicity(LEMNISCATE, ROSE)
    assert rep.value == 12
    assert rep.tree.local_product == 8
    kids = sorted(rep.tree.children, key=lambda n: n.root.as_rational())
    assert [k.root.as_rational() for k in kids] == [-1, 1]
    assert [k.subtree_value() for k in kids] == [2, 2]
    assert all(k.conjugate_count == 1 for k in kids)


def test_second_chart():
    rep = intersection_multiplicity(P("x"), P("x-y^2"))
    assert rep.value == 2
    (child,) = rep.tree.children
    assert child.chart == 2 and child.local_product == 1


def test_common_tangent_cone_extension():
    rep = intersection_multiplicity(P("x^2+y^2+x^3"), P("x^2+y^2+y^3"))
    assert rep.value == 6
    (child,) = rep.tree.children
    assert child.conjugate_count == 2 and str(child.minimal_polynomial) == "y^2 + 1"
    assert rep.stats.extensions == 1


def test_split_on_demand():
    # the shared quartic (y^2+1)(y^2+2) is adjoined whole and split one level down
    f = P("(y^2+x^2)(y^2+2x^2)+x^5")
    g = f + P("(y^2+x^2)x^4")
    rep = intersection_multiplicity(f, g)
    assert rep.value == 26 == fulton_im(f, g)
    polys = sorted(str(c.minimal_polynomial) for c in rep.tree.children)
    assert polys == ["y^2 + 1", "y^2 + 2"]
    assert [c.subtree_value() for c in rep.tree.children] in ([6, 4], [4, 6])


def test_common_component_is_infinite():
    rep = intersection_multiplicity(P("x(y-x^2)"), P("x(y+x^2)"))
    assert rep.value == INFINITY and rep.is_infinite and rep.tree is None
    assert rep.to_dict()["value"] == "infinity"


def test_common_component_elsewhere_is_finite():
    f, g = P("(x-1)(y-x^2)"), P("(x-1)(y+x^2)")
    assert intersection_multiplicity(f, g).value == 2
    assert intersection_multiplicity(f, g, (1, 5)).is_infinite


def test_off_curve_is_zero():
    rep = intersection_multiplicity(ELLIPSE, CIRCLE, (1, 1))
    assert rep.value == 0 and rep.tree is None


def test_rational_point_translation():
    # circle and its tangent line at (1, 0)
    assert intersection_multiplicity(P("x^2+y^2-1"), P("x-1"), (1, 0)).value == 2
    assert intersection_multiplicity(P("x^2+y^2-1"), P("x-1"), (F(1, 2), 0)).value == 0


def test_constant_input_rejected():
    with pytest.raises(MathError):
        intersection_multiplicity(P("3"), P("x"))
    with pytest.raises(MathError):
        intersection_multiplicity(P("x"), BiPoly(QQ))


def test_depth_guard_fires_when_too_small():
    with pytest.raises(DepthGuardExceeded):
        im_origin(ELLIPSE, CIRCLE, 0, guard=1)


def test_report_schema():
    d = intersection_multiplicity(ELLIPSE, CIRCLE).to_dict()
    assert set(d) == {"value", "tree", "stats"}
    assert set(d["stats"]) == {"blowups", "max_depth", "extensions", "micros"}
    assert d["tree"]["subtotal"] == 3 and d["stats"]["micros"] > 0


def test_trace_lines():
    text = intersection_multiplicity(ELLIPSE, CIRCLE).tree.render()
    assert text.splitlines() == [
        "[depth 0] origin: 1*1 = 1, subtotal 3",
        "  [depth 1] chart 1, y = 0: 1*1 = 1, subtotal 2",
        "    [depth 2] chart 1, y = 1/2: 1*1 = 1, subtotal 1",
    ]


def test_conjugate_bookkeeping_and_tree_sum():
    rng = np.random.default_rng(11)
    for _ in range(150):
        f, g = random_pair(rng)
        rep = intersection_multiplicity(f, g)
        if rep.tree is None:
            continue
        assert rep.tree.subtree_value() == rep.value
        assert rep.stats.max_depth <= f.total_degree * g.total_degree
        for node in rep.tree.walk():
            for c in node.children:
                assert c.depth == node.depth + 1
                if c.minimal_polynomial is None:
                    assert c.conjugate_count == 1
                else:
                    assert c.conjugate_count == c.minimal_polynomial.degree


def test_first_level_counts_match_squarefree_gcd():
    rng = np.random.default_rng(12)
    for _ in range(150):
        f, g = random_pair(rng)
        _, f1 = chart1_strict_transform(f)
        _, g1 = chart1_strict_transform(g)
        a, b = eval_x0(f1), eval_x0(g1)
        if a.is_zero() and b.is_zero():
            continue
        h = uni_gcd(a, b)
        expected = squarefree_part(h).degree if h.degree > 0 else 0
        assert sum(d.conjugate_count for d in shared_directions(f1, g1)) == expected


@pytest.mark.parametrize("name", sorted(PROPERTIES) + ["oracle_agreement"])
def test_property_suites(name):
    res = run_suite(name, 100, seed=3)
    assert res.failed == 0, res.failures[:3]
