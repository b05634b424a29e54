"""Exact univariate and bivariate polynomials over an :class:`ExtensionContext`.

Besides the ring operations this module holds the few pieces of polynomial
algebra the blowup recursion needs: lowest forms, the two chart substitutions
that produce strict transforms, shifts, gcds (splitting the context when a
zero divisor shows up), squarefree parts, rational roots over Q, the bivariate
gcd over Q used for the common-component test, and the Sylvester resultant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd as igcd, lcm as ilcm
from typing import Iterable, Mapping

from .arith import (
    QQ,
    QQ_FIELD,
    ExtensionContext,
    FieldElement,
    SplitRequired,
    padd,
    pderiv,
    pdivmod,
    peval,
    pgcd,
    pmonic,
    pmul,
    pneg,
    pscale,
    psub,
    ptrim,
)
from .errors import ContextMismatch, MathError

__all__ = [
    "UniPoly",
    "BiPoly",
    "LowestForm",
    "lowest_form",
    "chart1_strict_transform",
    "chart2_strict_transform",
    "shift_y",
    "translate",
    "substitute",
    "eval_x0",
    "uni_gcd",
    "uni_gcd_split",
    "squarefree_part",
    "rational_roots",
    "bivar_gcd_q",
    "resultant_y",
    "certified_nonzero",
]


def _coerce_scalar(ctx: ExtensionContext, c):
    if isinstance(c, FieldElement):
        if c.ctx != ctx:
            raise ContextMismatch("scalar from a different context")
        return c.value
    if isinstance(c, (int, Fraction)):
        return ctx.field.from_rational(c)
    return c


def certified_nonzero(K, c) -> bool:
    """Zero test valid in every branch: False for 0, True for a unit.

    A zero divisor raises :class:`SplitRequired` from ``K.inv``.
    """
    if not c:
        return False
    if K.level:
        K.inv(c)
    return True


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    ctx: ExtensionContext
    coeffs: tuple
    var: str = "y"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(ptrim(list(self.coeffs))))

    @classmethod
    def from_rationals(cls, coeffs: Iterable, ctx: ExtensionContext = QQ, var: str = "y"):
        return cls(ctx, tuple(ctx.field.from_rational(c) for c in coeffs), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> FieldElement:
        return FieldElement(self.ctx, self.coeffs[-1] if self.coeffs else self.ctx.field.zero)

    def _check(self, other: "UniPoly"):
        if other.ctx != self.ctx:
            raise ContextMismatch("polynomials belong to different contexts")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        return UniPoly(self.ctx, tuple(padd(self.ctx.field, self.coeffs, other.coeffs)), self.var)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        return UniPoly(self.ctx, tuple(psub(self.ctx.field, self.coeffs, other.coeffs)), self.var)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.ctx, tuple(pneg(self.ctx.field, self.coeffs)), self.var)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check(other)
            return UniPoly(self.ctx, tuple(pmul(self.ctx.field, self.coeffs, other.coeffs)), self.var)
        c = _coerce_scalar(self.ctx, other)
        return UniPoly(self.ctx, tuple(pscale(self.ctx.field, self.coeffs, c)), self.var)

    __rmul__ = __mul__

    def __divmod__(self, other: "UniPoly"):
        self._check(other)
        q, r = pdivmod(self.ctx.field, self.coeffs, other.coeffs)
        return UniPoly(self.ctx, tuple(q), self.var), UniPoly(self.ctx, tuple(r), self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        v = peval(self.ctx.field, self.coeffs, _coerce_scalar(self.ctx, x))
        return FieldElement(self.ctx, v)

    def derivative(self) -> "UniPoly":
        return UniPoly(self.ctx, tuple(pderiv(self.ctx.field, self.coeffs)), self.var)

    def monic(self) -> "UniPoly":
        return UniPoly(self.ctx, tuple(pmonic(self.ctx.field, self.coeffs)), self.var)

    def project(self, ctx: ExtensionContext) -> "UniPoly":
        return UniPoly(ctx, tuple(ctx.project(c) for c in self.coeffs), self.var)

    def lift(self, ctx: ExtensionContext) -> "UniPoly":
        return UniPoly(ctx, tuple(ctx.lift(c, self.ctx) for c in self.coeffs), self.var)

    def __str__(self) -> str:
        terms = {(0, i) if self.var == "y" else (i, 0): c for i, c in enumerate(self.coeffs) if c}
        return _render(self.ctx, terms)


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; in an extension context may raise :class:`SplitRequired`."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        raise MathError("gcd of two zero polynomials")
    return UniPoly(p.ctx, tuple(pgcd(p.ctx.field, p.coeffs, q.coeffs)), p.var)


def uni_gcd_split(p: UniPoly, q: UniPoly) -> list[tuple[ExtensionContext, UniPoly]]:
    """Monic gcd in every branch of the dynamic-evaluation split of ``p.ctx``."""
    out = []
    pending = [(p.ctx, p, q)]
    while pending:
        ctx, a, b = pending.pop(0)
        try:
            out.append((ctx, uni_gcd(a, b)))
        except SplitRequired as exc:
            branches = ctx.split(exc.index, exc.factors)
            pending[0:0] = [(c, a.project(c), b.project(c)) for c in branches]
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic ``p / gcd(p, p')``: same roots, all simple (characteristic 0)."""
    if p.is_zero():
        raise MathError("squarefree part of the zero polynomial")
    g = uni_gcd(p, p.derivative())
    return (p // g).monic()


def _primes():
    n = 3
    while True:
        if all(n % k for k in range(3, int(n ** 0.5) + 1, 2)):
            yield n
        n += 2


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots of a squarefree polynomial over Q, sorted.

    Works on the monic integer polynomial ``H(z) = c^(n-1) P(z/c)`` whose
    integer roots are found by p-adic (Hensel) lifting of its simple roots
    modulo a small prime, then confirmed exactly.  No integer factoring.
    """
    if p.ctx.depth:
        raise MathError("rational roots are only defined over Q")
    coeffs = list(p.coeffs)
    if len(coeffs) < 2:
        return []
    roots: list[Fraction] = []
    if not coeffs[0]:
        roots.append(Fraction(0))
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
        if len(coeffs) < 2:
            return roots
    den = 1
    for c in coeffs:
        den = ilcm(den, Fraction(c).denominator)
    P = [int(c * den) for c in coeffs]
    g = 0
    for c in P:
        g = igcd(g, c)
    P = [c // g for c in P]
    n = len(P) - 1
    c = P[-1]
    H = [P[i] * c ** (n - 1 - i) for i in range(n)] + [1]
    dH = [i * H[i] for i in range(1, n + 1)]
    bound = 1 + max(abs(h) for h in H[:-1])

    def ev(poly, x, mod=None):
        acc = 0
        for coef in reversed(poly):
            acc = acc * x + coef
            if mod:
                acc %= mod
        return acc

    for prime in _primes():
        residues = [a for a in range(prime) if ev(H, a, prime) == 0]
        if any(ev(dH, a, prime) == 0 for a in residues):
            continue
        break
    modulus = prime
    lifted = residues
    while modulus <= 2 * bound:
        modulus = modulus * modulus
        lifted = [(a - ev(H, a, modulus) * pow(ev(dH, a, modulus), -1, modulus)) % modulus
                  for a in lifted]
    for a in lifted:
        z = a if a <= modulus // 2 else a - modulus
        if ev(H, z) == 0:
            roots.append(Fraction(z, c))
    return sorted(roots)


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

def _render(ctx: ExtensionContext, terms: Mapping) -> str:
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda e: (-(e[0] + e[1]), -e[0]))
    out = []
    for i, j in keys:
        c = terms[(i, j)]
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e)
        if ctx.depth == 0:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            cs = "" if (a == 1 and mono) else str(a)
        else:
            sign = "+"
            cs = ctx.format_value(c)
            if cs == "1" and mono:
                cs = ""
            elif " " in cs or "*" in cs and mono:
                cs = f"({cs})"
        body = f"{cs}*{mono}" if cs and mono else (cs or mono)
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


class BiPoly:
    """Sparse bivariate polynomial: ``{(i, j): coefficient of x^i y^j}``."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: ExtensionContext, terms: Mapping | None = None):
        self.ctx = ctx
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ctx, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def from_dict(cls, terms: Mapping, ctx: ExtensionContext = QQ) -> "BiPoly":
        """Build from ``{(i, j): int | Fraction | FieldElement}``."""
        return cls(ctx, {e: _coerce_scalar(ctx, c) for e, c in terms.items()})

    @classmethod
    def x(cls, ctx: ExtensionContext = QQ) -> "BiPoly":
        return cls(ctx, {(1, 0): ctx.field.one})

    @classmethod
    def y(cls, ctx: ExtensionContext = QQ) -> "BiPoly":
        return cls(ctx, {(0, 1): ctx.field.one})

    @classmethod
    def constant(cls, c, ctx: ExtensionContext = QQ) -> "BiPoly":
        return cls(ctx, {(0, 0): _coerce_scalar(ctx, c)})

    # structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, self.terms.get((i, j), self.ctx.field.zero))

    def __len__(self):
        return len(self.terms)

    # arithmetic -----------------------------------------------------------
    def _other(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("polynomials belong to different contexts")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return BiPoly.constant(other, self.ctx)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        K = self.ctx.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = K.add(out[e], c) if e in out else c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return BiPoly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        K = self.ctx.field
        return BiPoly._raw(self.ctx, {e: K.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        K = self.ctx.field
        out: dict = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                e = (i + k, j + l)
                p = K.mul(c, d)
                out[e] = K.add(out[e], p) if e in out else p
        return BiPoly._raw(self.ctx, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise MathError("negative power of a polynomial")
        result = BiPoly.constant(1, self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "BiPoly":
        return self * BiPoly.constant(c, self.ctx)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other, self.ctx)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __call__(self, px, py) -> FieldElement:
        K = self.ctx.field
        px = _coerce_scalar(self.ctx, px)
        py = _coerce_scalar(self.ctx, py)
        acc = K.zero
        for (i, j), c in self.terms.items():
            t = c
            for _ in range(i):
                t = K.mul(t, px)
            for _ in range(j):
                t = K.mul(t, py)
            acc = K.add(acc, t)
        return FieldElement(self.ctx, acc)

    def lift(self, ctx: ExtensionContext) -> "BiPoly":
        """Embed into an extension of ``self.ctx``."""
        if ctx == self.ctx:
            return self
        return BiPoly._raw(ctx, {e: ctx.lift(c, self.ctx) for e, c in self.terms.items()})

    def project(self, ctx: ExtensionContext) -> "BiPoly":
        return BiPoly(ctx, {e: ctx.project(c) for e, c in self.terms.items()})

    def homogeneous_part(self, d: int) -> "BiPoly":
        return BiPoly._raw(self.ctx, {e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def __str__(self):
        return _render(self.ctx, self.terms)

    def __repr__(self):
        return f"BiPoly({self}, {self.ctx})"


@dataclass(frozen=True)
class LowestForm:
    """The homogeneous part of least total degree of a nonzero polynomial."""

    order: int
    form: BiPoly


def lowest_form(f: BiPoly) -> LowestForm:
    """Order and lowest form of ``f``.

    In an extension context one coefficient of the form is certified to be a
    unit, so the order is the same in every branch; a zero divisor raises
    :class:`SplitRequired`.
    """
    if f.is_zero():
        raise MathError("zero polynomial")
    m = min(i + j for i, j in f.terms)
    form = f.homogeneous_part(m)
    if f.ctx.depth:
        first = min(form.terms)
        certified_nonzero(f.ctx.field, form.terms[first])
    return LowestForm(m, form)


def chart1_strict_transform(f: BiPoly) -> tuple[int, BiPoly]:
    """``(m, f1)`` with ``x^m f1(x, y) = f(x, x y)`` and ``m`` the order of ``f``."""
    m = lowest_form(f).order
    return m, BiPoly._raw(f.ctx, {(i + j - m, j): c for (i, j), c in f.terms.items()})


def chart2_strict_transform(f: BiPoly) -> tuple[int, BiPoly]:
    """``(m, f1)`` with ``y^m f1(x, y) = f(x y, y)``."""
    m = lowest_form(f).order
    return m, BiPoly._raw(f.ctx, {(i, i + j - m): c for (i, j), c in f.terms.items()})


def _shift(f: BiPoly, r, axis: int) -> BiPoly:
    K = f.ctx.field
    if not r:
        return f
    top = max((e[axis] for e in f.terms), default=0)
    powers = [K.one]
    for _ in range(top):
        powers.append(K.mul(powers[-1], r))
    out: dict = {}
    for e, c in f.terms.items():
        n = e[axis]
        for k in range(n + 1):
            coef = K.mul(c, powers[n - k])
            b = comb(n, k)
            if b != 1:
                coef = K.mul(coef, K.from_int(b))
            key = (k, e[1]) if axis == 0 else (e[0], k)
            out[key] = K.add(out[key], coef) if key in out else coef
    return BiPoly._raw(f.ctx, {e: c for e, c in out.items() if c})


def shift_y(f: BiPoly, r) -> BiPoly:
    """Substitute ``y -> y + r``."""
    return _shift(f, _coerce_scalar(f.ctx, r), 1)


def translate(f: BiPoly, p) -> BiPoly:
    """Substitute ``x -> x + p[0]``, ``y -> y + p[1]`` (moves ``p`` to the origin)."""
    px, py = (_coerce_scalar(f.ctx, c) for c in p)
    return _shift(_shift(f, px, 0), py, 1)


def substitute(f: BiPoly, X: BiPoly, Y: BiPoly) -> BiPoly:
    """Composition ``f(X(x, y), Y(x, y))``."""
    xs = [BiPoly.constant(1, f.ctx)]
    ys = [BiPoly.constant(1, f.ctx)]
    for _ in range(max(f.degree_x, 0)):
        xs.append(xs[-1] * X)
    for _ in range(max(f.degree_y, 0)):
        ys.append(ys[-1] * Y)
    out = BiPoly(f.ctx)
    for (i, j), c in f.terms.items():
        out = out + (xs[i] * ys[j]).scale(FieldElement(f.ctx, c))
    return out


def eval_x0(f: BiPoly) -> UniPoly:
    """The univariate polynomial ``f(0, y)``."""
    coeffs = [f.ctx.field.zero] * (max((j for i, j in f.terms if i == 0), default=-1) + 1)
    for (i, j), c in f.terms.items():
        if i == 0:
            coeffs[j] = c
    return UniPoly(f.ctx, tuple(coeffs))


# ---------------------------------------------------------------------------
# gcd over Q[x][y] and the resultant in y
# ---------------------------------------------------------------------------

def _y_coeffs(f: BiPoly) -> list[list]:
    """``f`` as a list indexed by y-degree of dense x-polynomials over Q."""
    rows: list[list] = [[] for _ in range(f.degree_y + 1)]
    for (i, j), c in f.terms.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c
    return [ptrim(r) for r in rows]


def _from_y_coeffs(rows: list[list]) -> BiPoly:
    return BiPoly(QQ, {(i, j): c for j, r in enumerate(rows) for i, c in enumerate(r) if c})


def _content(rows: list[list]) -> list:
    g: list = []
    for r in rows:
        g = pgcd(QQ_FIELD, g, r)
        if len(g) == 1:
            break
    return g


def _exact_div(a: list, b: list) -> list:
    q, r = pdivmod(QQ_FIELD, a, b)
    if r:
        raise MathError("inexact polynomial division")
    return q


def _primitive(rows: list[list]) -> list[list]:
    c = _content(rows)
    return [_exact_div(r, c) if r else [] for r in rows]


def _coprime_by_specialization(A: list[list], B: list[list], tries: int = 3) -> bool:
    """Sufficient test that A, B share no factor of positive y-degree.

    Such a factor h would survive ``x -> a`` with positive degree whenever
    the leading y-coefficients do not vanish at ``a``, since lc(h) divides them.
    """
    if len(A) < 2 or len(B) < 2:
        return True
    a = 0
    for _ in range(tries):
        while not peval(QQ_FIELD, A[-1], a) or not peval(QQ_FIELD, B[-1], a):
            a += 1
        fa = [peval(QQ_FIELD, r, a) for r in A]
        ga = [peval(QQ_FIELD, r, a) for r in B]
        if len(pgcd(QQ_FIELD, fa, ga)) == 1:
            return True
        a += 1
    return False


def bivar_gcd_q(f: BiPoly, g: BiPoly) -> BiPoly:
    """Gcd in Q[x, y] by the primitive PRS over Q[x].

    Normalized so that the leading coefficient in graded order (total degree,
    then x-degree) is 1.
    """
    if f.ctx.depth or g.ctx.depth:
        raise MathError("bivariate gcd is only implemented over Q")
    if f.is_zero() or g.is_zero():
        raise MathError("zero polynomial")
    A, B = _y_coeffs(f), _y_coeffs(g)
    content = pgcd(QQ_FIELD, _content(A), _content(B))
    if len(content) == 1 and _coprime_by_specialization(A, B):
        return BiPoly.constant(1)
    A, B = _primitive(A), _primitive(B)
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        lcB = B[-1]
        R = [list(r) for r in A]
        while len(R) >= len(B):
            lcR = R[-1]
            shift = len(R) - len(B)
            R = [pmul(QQ_FIELD, r, lcB) for r in R]
            for k, b in enumerate(B):
                R[k + shift] = psub(QQ_FIELD, R[k + shift], pmul(QQ_FIELD, lcR, b))
            while R and not R[-1]:
                R.pop()
        A, B = B, (_primitive(R) if R else [])
    G = A if not B else [[Fraction(1)]]
    out = _from_y_coeffs([pmul(QQ_FIELD, r, content) for r in G])
    lead = max(out.terms, key=lambda e: (e[0] + e[1], e[0]))
    return out.scale(1 / out.terms[lead])


def resultant_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """Sylvester resultant with respect to y, a polynomial in x over Q.

    The determinant is evaluated with fraction-free Bareiss elimination whose
    entries are polynomials in x.
    """
    if f.ctx.depth or g.ctx.depth:
        raise MathError("resultant is only implemented over Q")
    n, m = f.degree_y, g.degree_y
    if n < 1 or m < 1:
        raise MathError("resultant needs positive degree in y")
    F, G = _y_coeffs(f), _y_coeffs(g)
    N = n + m
    M: list[list[list]] = [[[] for _ in range(N)] for _ in range(N)]
    for r in range(m):
        for k in range(n + 1):
            M[r][r + k] = list(F[n - k])
    for r in range(n):
        for k in range(m + 1):
            M[m + r][r + k] = list(G[m - k])
    sign = 1
    prev: list = [Fraction(1)]
    for k in range(N - 1):
        if not M[k][k]:
            for r in range(k + 1, N):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return UniPoly(QQ, (), "x")
        piv = M[k][k]
        for i in range(k + 1, N):
            for j in range(k + 1, N):
                num = psub(QQ_FIELD, pmul(QQ_FIELD, M[i][j], piv), pmul(QQ_FIELD, M[i][k], M[k][j]))
                M[i][j] = _exact_div(num, prev) if num else []
            M[i][k] = []
        prev = piv
    det = M[N - 1][N - 1]
    if sign < 0:
        det = pneg(QQ_FIELD, det)
    return UniPoly(QQ, tuple(det), "x")
