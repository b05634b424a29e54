from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from imult.arith import QQ
from imult.errors import MathError
from imult.parse import parse_poly as P
from imult.poly import (
    BiPoly,
    UniPoly,
    bivar_gcd_q,
    chart1_strict_transform,
    chart2_strict_transform,
    eval_x0,
    lowest_form,
    rational_roots,
    resultant_y,
    shift_y,
    squarefree_part,
    substitute,
    translate,
    uni_gcd,
    uni_gcd_split,
)

X, Y = BiPoly.x(), BiPoly.y()
U = UniPoly.from_rationals


def UX(coeffs):
    return UniPoly.from_rationals(coeffs, QQ, "x")


monomials = st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(lambda e: sum(e) <= 6)
bipolys = st.dictionaries(monomials, st.integers(-10, 10), max_size=8).map(BiPoly.from_dict)
small_bipolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda e: sum(e) <= 3),
    st.integers(-5, 5), max_size=4).map(BiPoly.from_dict)
unipolys = st.lists(st.integers(-6, 6), max_size=6).map(U)


# -- arithmetic -------------------------------------------------------------

def test_difference_of_squares():
    assert (X + Y) * (X - Y) == X * X - Y * Y


def test_additive_identity():
    f = P("5x^2+6xy+5y^2-10y")
    assert f + BiPoly(QQ) == f


def test_tacnode_cone_product():
    assert (Y - X) * (Y - 2 * X) == P("2x^2-3xy+y^2")


# -- lowest forms ------------------------------------------------------------

@pytest.mark.parametrize("text, order, form", [
    ("5x^2+6xy+5y^2-10y", 1, "-10y"),
    ("2x^4-3x^2y+y^2-2y^3+y^4", 2, "y^2"),
    ("(x^2+y^2)^2-(x^2-y^2)", 2, "y^2-x^2"),
])
def test_lowest_form(text, order, form):
    lf = lowest_form(P(text))
    assert lf.order == order and lf.form == P(form)


def test_lowest_form_of_zero():
    with pytest.raises(MathError):
        lowest_form(BiPoly(QQ))


@settings(max_examples=300, deadline=None)
@given(bipolys, bipolys)
def test_lowest_forms_multiply(u, v):
    assume(not u.is_zero() and not v.is_zero())
    lu, lv, luv = lowest_form(u), lowest_form(v), lowest_form(u * v)
    assert luv.order == lu.order + lv.order
    assert luv.form == lu.form * lv.form


# -- chart transforms --------------------------------------------------------

@pytest.mark.parametrize("text, m, expected", [
    ("5x^2+6xy+5y^2-10y", 1, "5x+6xy+5xy^2-10y"),
    ("5x+6xy+5xy^2-10y", 1, "5+6xy+5x^2y^2-10y"),
    ("x^2+(y-1)^2-1", 1, "x+xy^2-2y"),
])
def test_chart1_examples(text, m, expected):
    assert chart1_strict_transform(P(text)) == (m, P(expected))


@pytest.mark.parametrize("text, m, expected", [("x", 1, "x"), ("x-y^2", 1, "x-y"), ("y", 1, "1")])
def test_chart2_examples(text, m, expected):
    assert chart2_strict_transform(P(text)) == (m, P(expected))


@settings(max_examples=300, deadline=None)
@given(bipolys)
def test_strict_transform_identity(f):
    f = f - f.coeff(0, 0).value
    assume(not f.is_zero())
    m1, f1 = chart1_strict_transform(f)
    m2, f2 = chart2_strict_transform(f)
    assert X ** m1 * f1 == substitute(f, X, X * Y)
    assert Y ** m2 * f2 == substitute(f, X * Y, Y)


# -- shifts and restriction to x = 0 ------------------------------------------

def test_shift_y_example():
    got = shift_y(P("5+6xy+5x^2y^2-10y"), F(1, 2))
    assert got == P("5x^2y^2+5x^2y+5/4x^2+6xy+3x-10y")


def test_shift_by_zero_and_translate_origin():
    f = P("x^2+y^2")
    assert shift_y(f, 0) == f
    assert translate(f, (0, 0)) == f


def test_translate_moves_point_to_origin():
    f = P("(x-2)^2+(y+1)^2-1")
    g = translate(f, (2, -1))
    assert g == P("x^2+y^2-1")


@pytest.mark.parametrize("text, expected", [
    ("5x+6xy+5xy^2-10y", [0, -10]),
    ("5+6xy+5x^2y^2-10y", [5, -10]),
    ("x^2-y^3", [0, 0, 0, -1]),
])
def test_eval_x0(text, expected):
    assert eval_x0(P(text)) == U(expected)


# -- univariate gcd and squarefree part -------------------------------------

@pytest.mark.parametrize("p, q, g", [
    ([0, -10], [0, -2], [0, 1]),
    ([2, -3, 1], [1, -2, 1], [-1, 1]),
    ([-1, 0, 1], [-1, 0, 2, 0, -1], [-1, 0, 1]),
])
def test_uni_gcd_examples(p, q, g):
    branches = uni_gcd_split(U(p), U(q))
    assert len(branches) == 1
    ctx, h = branches[0]
    assert ctx == QQ and h == U(g)


def test_gcd_of_zeros():
    with pytest.raises(MathError):
        uni_gcd(U([]), U([]))


def test_gcd_split_over_reducible_modulus():
    ctx = QQ.extend((F(0), F(-1), F(1)))  # t^2 - t
    t = ctx.generator()
    p = UniPoly(ctx, (t.value, ctx.field.one))  # y + t
    q = UniPoly(ctx, (ctx.field.zero, ctx.field.one))  # y
    branches = uni_gcd_split(p, q)
    degrees = sorted(h.degree for _, h in branches)
    assert degrees == [0, 1]
    assert sum(c.absolute_degree for c, _ in branches) == 2


@pytest.mark.parametrize("p, expected", [
    ([1, -2, 1], [-1, 1]),
    ([-1, 0, 1], [-1, 0, 1]),
    ([0, 0, -1, 1], [0, -1, 1]),
])
def test_squarefree_examples(p, expected):
    assert squarefree_part(U(p)) == U(expected)


@settings(max_examples=300, deadline=None)
@given(unipolys, unipolys, unipolys)
def test_gcd_contract(a, b, c):
    assume(not c.is_zero())
    p, q = a * c, b * c
    assume(not p.is_zero() or not q.is_zero())
    g = uni_gcd(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()
    assert (g % c.monic()).is_zero() or p.is_zero() or q.is_zero()
    if not p.is_zero() and not q.is_zero():
        assert uni_gcd(p // g, q // g).degree == 0


@settings(max_examples=300, deadline=None)
@given(unipolys, st.integers(1, 3))
def test_squarefree_contract(a, k):
    assume(a.degree >= 1)
    power = a
    for _ in range(k - 1):
        power = power * a
    s = squarefree_part(power)
    assert uni_gcd(s, s.derivative()).degree == 0
    assert s == squarefree_part(a)
    assert (power % s).is_zero()


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=4,
                unique=True), unipolys)
def test_rational_roots_found(roots, cof):
    assume(not cof.is_zero())
    p = cof
    for r in roots:
        p = p * U([-r, 1])
    found = set(rational_roots(squarefree_part(p)))
    assert set(map(F, roots)) <= found
    assert all(p(r).is_zero() for r in found)


# -- bivariate gcd and resultants ---------------------------------------------

def test_bivariate_gcd_examples():
    assert bivar_gcd_q(P("x(y-x^2)"), P("x(y+x^2)")) == X
    assert bivar_gcd_q(P("x+y"), P("x-y")).is_constant()
    f = P("-2x^2y+4")
    assert bivar_gcd_q(f, f) == P("x^2y-2")


@settings(max_examples=150, deadline=None)
@given(bipolys, bipolys, bipolys)
def test_bivariate_gcd_recovers_common_factor(a, b, c):
    assume(not a.is_zero() and not b.is_zero() and not c.is_zero())
    assume(bivar_gcd_q(a, b).is_constant())
    assert bivar_gcd_q(a * c, b * c) == bivar_gcd_q(c, c)


def test_resultant_examples():
    assert resultant_y(P("y-x"), P("y+x")) == UX([0, 2])
    assert resultant_y(P("y"), P("y-1")) == UX([-1])
    f = P("y^2-x^3+xy")
    assert resultant_y(f, f).is_zero()
    assert resultant_y(P("y-x^2"), P("y")) == UX([0, 0, 1])


def test_resultant_needs_y():
    with pytest.raises(MathError):
        resultant_y(P("x"), P("y"))


@settings(max_examples=100, deadline=None)
@given(small_bipolys, small_bipolys, small_bipolys)
def test_resultant_vanishes_on_shared_y_factor(a, b, c):
    assume(c.degree_y >= 1 and not a.is_zero() and not b.is_zero())
    assert resultant_y(a * c, b * c).is_zero()


@settings(max_examples=100, deadline=None)
@given(bipolys, bipolys)
def test_resultant_nonzero_when_coprime(a, b):
    assume(a.degree_y >= 1 and b.degree_y >= 1)
    shared = bivar_gcd_q(a, b)
    assert resultant_y(a, b).is_zero() == (shared.degree_y >= 1)


# -- rendering ---------------------------------------------------------------

def test_render_parses_back():
    g = P("(x/2)^4 + (x/2)^2*y^2 - 2*(x/2)^2*y - (x/2)*y^2 + y^2")
    assert g == P("1/16x^4 + 1/4x^2y^2 - 1/2x^2y - 1/2xy^2 + y^2")
    assert P(str(g)) == g
