"""Exact scalars: the rationals and towers of quotient rings over them.

A tower ``Q[t0]/(m0)[t1]/(m1)...`` is described by an :class:`ExtensionContext`.
Every modulus is monic and squarefree over the ring below it, so the tower is
a product of number fields.  We never factor a modulus.  Instead, whenever an
inversion meets a zero divisor the offending modulus is split into two coprime
monic factors and :class:`SplitRequired` is raised so that the caller can
redo its computation in each branch (dynamic evaluation).

Raw values are plain Python objects so that the hot loops stay cheap:

* level 0 values are :class:`fractions.Fraction`;
* level ``k`` values are tuples of level ``k - 1`` values, the coefficients of
  a polynomial in ``t_{k-1}`` of degree below ``deg(m_{k-1})`` with no
  trailing zeros.

Zero is falsy at every level (``Fraction(0)`` and ``()``), which the helpers
below rely on.  :class:`FieldElement` wraps a raw value together with its
context for the public, operator-based interface.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple, Sequence

from .errors import ContextMismatch, InvariantViolation

__all__ = [
    "SplitRequired",
    "RationalField",
    "QuotientRing",
    "ExtensionContext",
    "FieldElement",
    "Split",
    "QQ",
    "invert_or_split",
    "adjoin_root",
]


class SplitRequired(ArithmeticError):
    """Raised when a nonzero element turns out to be a zero divisor.

    Attributes
    ----------
    index : int
        Position of the generator whose modulus must be split.
    factors : tuple
        Two coprime monic factors of that modulus (coefficient tuples over the
        ring below the generator), whose product is the modulus.
    """

    def __init__(self, index: int, factors: tuple):
        super().__init__(f"modulus of generator {index} splits")
        self.index = index
        self.factors = factors


# ---------------------------------------------------------------------------
# dense polynomial helpers over a coefficient ring K (lists, low degree first)
# ---------------------------------------------------------------------------

def ptrim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def padd(K, a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = K.add(out[i], c)
    return ptrim(out)


def pneg(K, a: Sequence) -> list:
    return [K.neg(c) for c in a]


def psub(K, a: Sequence, b: Sequence) -> list:
    out = list(a) + [K.zero] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = K.sub(out[i], c)
    return ptrim(out)


def pmul(K, a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            if d:
                out[i + j] = K.add(out[i + j], K.mul(c, d))
    return ptrim(out)


def pscale(K, a: Sequence, c) -> list:
    if not c:
        return []
    return ptrim([K.mul(x, c) for x in a])


def prem_monic(K, p: Sequence, m: Sequence) -> list:
    """Remainder of ``p`` modulo the monic polynomial ``m`` (no inversions)."""
    d = len(m) - 1
    out = list(p)
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if not c:
            continue
        out[i] = K.zero
        for j in range(d):
            if m[j]:
                out[i - d + j] = K.sub(out[i - d + j], K.mul(c, m[j]))
    del out[d:]
    return ptrim(out)


def pdivmod(K, a: Sequence, b: Sequence) -> tuple[list, list]:
    """Euclidean division; inverts the leading coefficient of ``b`` in K."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lc = K.inv(b[-1])
    out = list(a)
    db = len(b) - 1
    if len(out) <= db:
        return [], ptrim(out)
    q = [K.zero] * (len(out) - db)
    for i in range(len(out) - 1, db - 1, -1):
        c = out[i]
        if not c:
            continue
        c = K.mul(c, inv_lc)
        q[i - db] = c
        out[i] = K.zero
        for j in range(db):
            if b[j]:
                out[i - db + j] = K.sub(out[i - db + j], K.mul(c, b[j]))
    del out[db:]
    return ptrim(q), ptrim(out)


def pmonic(K, a: Sequence) -> list:
    if not a:
        return []
    return pscale(K, a, K.inv(a[-1]))


def pgcd(K, a: Sequence, b: Sequence) -> list:
    """Monic gcd by the Euclidean algorithm; may raise :class:`SplitRequired`."""
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pdivmod(K, a, b)[1]
    return pmonic(K, a)


def pderiv(K, a: Sequence) -> list:
    return ptrim([K.mul(c, K.from_int(i)) for i, c in enumerate(a)][1:])


def peval(K, a: Sequence, x):
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------
# coefficient rings
# ---------------------------------------------------------------------------

class RationalField:
    """The base field Q, values are :class:`Fraction`."""

    level = 0
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    @staticmethod
    def from_int(n: int):
        return Fraction(n)

    @staticmethod
    def from_rational(q):
        return Fraction(q)

    def reduce(self, value):
        return value

    def format(self, value, names) -> str:
        return str(value)


class QuotientRing:
    """``K[t]/(m)`` for a monic squarefree ``m`` over the ring ``K``."""

    def __init__(self, base, modulus: tuple, index: int):
        self.base = base
        self.modulus = modulus
        self.index = index
        self.level = base.level + 1
        self.degree = len(modulus) - 1
        self.zero = ()
        self.one = (base.one,)

    def add(self, a, b):
        return tuple(padd(self.base, a, b))

    def sub(self, a, b):
        return tuple(psub(self.base, a, b))

    def neg(self, a):
        return tuple(pneg(self.base, a))

    def mul(self, a, b):
        if not a or not b:
            return ()
        if len(a) == 1 and len(b) == 1:
            c = self.base.mul(a[0], b[0])
            return (c,) if c else ()
        return self.reduce(pmul(self.base, a, b))

    def reduce(self, coeffs) -> tuple:
        return tuple(prem_monic(self.base, coeffs, self.modulus))

    def from_int(self, n: int):
        c = self.base.from_int(n)
        return (c,) if c else ()

    def from_rational(self, q):
        c = self.base.from_rational(q)
        return (c,) if c else ()

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in quotient ring")
        K = self.base
        if len(a) == 1:
            return (K.inv(a[0]),)
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [], [K.one]
        while r1:
            q, r = pdivmod(K, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, psub(K, s0, pmul(K, q, s1))
        if len(r0) == 1:
            return self.reduce(pscale(K, s0, K.inv(r0[0])))
        g = pmonic(K, r0)
        cofactor, rem = pdivmod(K, self.modulus, g)
        if rem:
            raise InvariantViolation("gcd does not divide the modulus")
        raise SplitRequired(self.index, (tuple(g), tuple(cofactor)))

    def format(self, value, names) -> str:
        if not value:
            return "0"
        name = names[self.index]
        parts = []
        for i, c in enumerate(value):
            if not c:
                continue
            cs = self.base.format(c, names)
            if i == 0:
                parts.append(cs)
                continue
            mono = name if i == 1 else f"{name}^{i}"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif " " in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


QQ_FIELD = RationalField()


# ---------------------------------------------------------------------------
# contexts and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionContext:
    """An immutable tower of quotient extensions of Q.

    ``moduli[i]`` is a monic coefficient tuple whose entries are raw values at
    level ``i`` (i.e. over generators ``0 .. i-1``).  The empty tower is Q.
    """

    moduli: tuple = ()
    names: tuple = ()
    _levels: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.names) != len(self.moduli):
            object.__setattr__(self, "names", tuple(f"t{i}" for i in range(len(self.moduli))))
        levels: list[Any] = [QQ_FIELD]
        for i, m in enumerate(self.moduli):
            if len(m) < 2 or m[-1] != levels[-1].one:
                raise InvariantViolation(f"modulus {i} is not monic of positive degree")
            levels.append(QuotientRing(levels[-1], tuple(m), i))
        object.__setattr__(self, "_levels", levels)

    @property
    def field(self):
        """Arithmetic object for raw values at the top of the tower."""
        return self._levels[-1]

    @property
    def depth(self) -> int:
        return len(self.moduli)

    @property
    def absolute_degree(self) -> int:
        d = 1
        for m in self.moduli:
            d *= len(m) - 1
        return d

    def level(self, k: int):
        return self._levels[k]

    def extend(self, modulus: Sequence, name: str | None = None) -> "ExtensionContext":
        """New context with a generator whose modulus has coefficients in ``self``."""
        name = name or f"t{self.depth}"
        return ExtensionContext(self.moduli + (tuple(modulus),), self.names + (name,))

    def is_prefix_of(self, other: "ExtensionContext") -> bool:
        n = self.depth
        return other.moduli[:n] == self.moduli

    def lift(self, value, source: "ExtensionContext"):
        """Embed a raw value of the prefix context ``source`` into ``self``."""
        for _ in range(self.depth - source.depth):
            value = (value,) if value else ()
        return value

    def split(self, index: int, factors: Sequence) -> list["ExtensionContext"]:
        """Branch contexts obtained by replacing modulus ``index`` by each factor."""
        out = []
        for fac in factors:
            head = ExtensionContext(self.moduli[:index] + (tuple(fac),), self.names[: index + 1])
            moduli = list(head.moduli)
            for j in range(index + 1, self.depth):
                partial = ExtensionContext(tuple(moduli), self.names[:j])
                moduli.append(tuple(partial.project(c, j) for c in self.moduli[j]))
            out.append(ExtensionContext(tuple(moduli), self.names))
        return out

    def project(self, value, level: int | None = None):
        """Reduce a raw value (given over a refinement source tower) into ``self``.

        ``self`` must be obtained from the source by replacing moduli with
        factors of them, so plain remaindering is the canonical projection.
        """
        if level is None:
            level = self.depth
        if level == 0:
            return value
        ring = self._levels[level]
        return ring.reduce([self.project(c, level - 1) for c in value])

    # convenience constructors ------------------------------------------------
    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def rational(self, q) -> "FieldElement":
        return FieldElement(self, self.field.from_rational(q))

    def generator(self, i: int | None = None) -> "FieldElement":
        """The class of generator ``i`` (default: the last one)."""
        if i is None:
            i = self.depth - 1
        ring = self._levels[i + 1]
        value = (ring.base.zero, ring.base.one) if ring.degree > 1 else tuple(
            pneg(ring.base, ring.modulus[:1]))
        value = ring.reduce(list(value))
        for _ in range(self.depth - i - 1):
            value = (value,) if value else ()
        return FieldElement(self, value)

    def format_value(self, value) -> str:
        return self.field.format(value, self.names)

    def describe(self) -> str:
        if not self.moduli:
            return "Q"
        parts = []
        for i, m in enumerate(self.moduli):
            sub = ExtensionContext(self.moduli[:i], self.names[:i])
            terms = []
            for k in range(len(m) - 1, -1, -1):
                if not m[k]:
                    continue
                cs = sub.format_value(m[k])
                mono = "" if k == 0 else (self.names[i] if k == 1 else f"{self.names[i]}^{k}")
                if not mono:
                    terms.append(cs)
                elif cs == "1":
                    terms.append(mono)
                else:
                    terms.append(f"({cs})*{mono}")
            parts.append(" + ".join(terms).replace("+ -", "- "))
        return "Q[" + ",".join(self.names) + "]/(" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.describe()


QQ = ExtensionContext()


@dataclass(frozen=True)
class FieldElement:
    """An element of an :class:`ExtensionContext`, in fully reduced form."""

    ctx: ExtensionContext
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("elements belong to different contexts")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.ctx.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.ctx.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.ctx.field.sub(self.value, v))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.field.neg(self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.ctx, self.ctx.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * FieldElement(self.ctx, self.ctx.field.inv(v))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.value == self.ctx.field.from_rational(other)
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __bool__(self):
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    def inverse(self) -> "FieldElement":
        """Exact inverse; raises :class:`SplitRequired` on a zero divisor."""
        return FieldElement(self.ctx, self.ctx.field.inv(self.value))

    def project(self, ctx: ExtensionContext) -> "FieldElement":
        return FieldElement(ctx, ctx.project(self.value))

    def reduced(self) -> "FieldElement":
        return self.project(self.ctx)

    def as_rational(self) -> Fraction:
        v = self.value
        for _ in range(self.ctx.depth):
            if len(v) > 1:
                raise ValueError("element is not rational")
            v = v[0] if v else Fraction(0)
        return Fraction(v)

    def __str__(self):
        return self.ctx.format_value(self.value)

    def __repr__(self):
        return f"FieldElement({self}, {self.ctx})"


class Split(NamedTuple):
    """Outcome of :func:`invert_or_split` when a zero divisor was found."""

    branches: list  # (ExtensionContext, FieldElement projection)


def invert_or_split(a: FieldElement) -> FieldElement | Split:
    """Return ``a**-1``, or the branch contexts in which ``a`` becomes decidable.

    Division by an element that is zero in every branch raises
    :class:`ZeroDivisionError`.
    """
    try:
        return a.inverse()
    except SplitRequired as exc:
        return Split([(c, a.project(c)) for c in a.ctx.split(exc.index, exc.factors)])


def adjoin_root(ctx: ExtensionContext, p) -> tuple[ExtensionContext, FieldElement, int]:
    """Adjoin a symbolic root of the monic squarefree polynomial ``p``.

    ``p`` may be a :class:`~imult.poly.UniPoly` or a coefficient sequence of
    raw values over ``ctx``.  Linear polynomials need no extension.
    """
    coeffs = list(getattr(p, "coeffs", p))
    K = ctx.field
    if not coeffs or len(coeffs) < 2:
        raise InvariantViolation("cannot adjoin a root of a constant")
    if coeffs[-1] != K.one:
        raise InvariantViolation("polynomial must be monic")
    if len(coeffs) == 2:
        return ctx, FieldElement(ctx, K.neg(coeffs[0])), 1
    if len(pgcd(K, coeffs, pderiv(K, coeffs))) > 1:
        raise InvariantViolation("polynomial must be squarefree")
    new = ctx.extend(coeffs)
    return new, new.generator(), len(coeffs) - 1
