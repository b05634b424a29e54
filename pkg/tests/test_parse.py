from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from imult.errors import UsageError
from imult.parse import MAX_EXPONENT, ParseError, parse_poly
from imult.poly import BiPoly


def test_ellipse():
    f = parse_poly("5x^2+6xy+5y^2-10y")
    assert f == BiPoly.from_dict({(2, 0): 5, (1, 1): 6, (0, 2): 5, (0, 1): -10})


def test_scaled_ramphoid_expansion():
    g = parse_poly("(x/2)^4 + (x/2)^2*y^2 - 2*(x/2)^2*y - (x/2)*y^2 + y^2")
    assert g == BiPoly.from_dict({(4, 0): F(1, 16), (2, 2): F(1, 4), (2, 1): F(-1, 2),
                                  (1, 2): F(-1, 2), (0, 2): 1})


@pytest.mark.parametrize("text, expected", [
    ("x y", {(1, 1): 1}),
    ("2(x+1)", {(1, 0): 2, (0, 0): 2}),
    ("-x^2 + +y", {(2, 0): -1, (0, 1): 1}),
    ("(x)(y)^2", {(1, 2): 1}),
    ("x/2/3", {(1, 0): F(1, 6)}),
    ("x/(2-4)", {(1, 0): F(-1, 2)}),
    ("3^2x", {(1, 0): 9}),
    ("  x^0 ", {(0, 0): 1}),
])
def test_grammar(text, expected):
    assert parse_poly(text) == BiPoly.from_dict(expected)


@pytest.mark.parametrize("text, offset", [
    ("x/y", 2),
    ("x/0", 2),
    ("x/(y-y)", 2),
    ("x^", 2),
    ("x)", 1),
    ("(x", 2),
    ("", 0),
    ("x + z", 4),
    ("x^-1", 2),
    ("é+x", 0),
    ("xé", 1),
    ("x^5000", 2),
])
def test_errors_with_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.offset == offset
    assert isinstance(info.value, UsageError)
    assert f"byte offset {offset}" in str(info.value)


def test_byte_offsets_count_utf8():
    with pytest.raises(ParseError) as info:
        parse_poly("é é")
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse_poly("x+ é")
    assert info.value.offset == 3


def test_exponent_limit():
    parse_poly(f"x^{MAX_EXPONENT}")
    with pytest.raises(ParseError):
        parse_poly(f"x^{MAX_EXPONENT + 1}")


def random_poly(rng) -> BiPoly:
    terms = {}
    for _ in range(int(rng.integers(0, 8))):
        e = (int(rng.integers(0, 7)), int(rng.integers(0, 7)))
        terms[e] = F(int(rng.integers(-50, 51)), int(rng.integers(1, 12)))
    return BiPoly.from_dict(terms)


def test_round_trip_1000():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        f = random_poly(rng)
        text = str(f)
        assert parse_poly(text) == f, text


@settings(max_examples=300, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)),
                       st.fractions(max_denominator=50), max_size=6))
def test_round_trip_property(terms):
    f = BiPoly.from_dict(terms)
    assert parse_poly(str(f)) == f
