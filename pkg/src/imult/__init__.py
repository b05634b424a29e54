"""Exact local intersection multiplicity of affine plane curves over Q.

The main entry point is :func:`intersection_multiplicity`, which blows up the
point repeatedly and adds up the products of multiplicities of the strict
transforms at every shared infinitely near point.  :func:`fulton_im` is an
independent oracle that works directly from the axioms.

>>> from imult import parse_poly, intersection_multiplicity
>>> f = parse_poly("5x^2+6xy+5y^2-10y")
>>> g = parse_poly("x^2+(y-1)^2-1")
>>> intersection_multiplicity(f, g).value
3
"""
from .arith import QQ, ExtensionContext, FieldElement, Split, SplitRequired, adjoin_root, invert_or_split
from .blowup import INFINITY, ConfigNode, IMReport, intersection_multiplicity, multiplicity_at
from .errors import (
    ContextMismatch,
    DepthGuardExceeded,
    IMultError,
    InvariantViolation,
    MathError,
    UsageError,
)
from .fulton import BudgetExhausted, RandomCurveSpec, fulton_im, random_curve, resultant_order_diagnostic
from .parse import ParseError, parse_poly
from .poly import BiPoly, UniPoly, bivar_gcd_q, resultant_y, uni_gcd

__version__ = "0.1.0"

__all__ = [
    "QQ", "ExtensionContext", "FieldElement", "Split", "SplitRequired", "adjoin_root",
    "invert_or_split", "INFINITY", "ConfigNode", "IMReport", "intersection_multiplicity",
    "multiplicity_at", "ContextMismatch", "DepthGuardExceeded", "IMultError",
    "InvariantViolation", "MathError", "UsageError", "BudgetExhausted", "RandomCurveSpec",
    "fulton_im", "random_curve", "resultant_order_diagnostic", "ParseError", "parse_poly",
    "BiPoly", "UniPoly", "bivar_gcd_q", "resultant_y", "uni_gcd",
]
