"""Polynomials, rational maps of the projective line, and Mobius maps.

Coefficients are exact field elements: ``Fraction`` (plain ints are
promoted), :class:`~cubicmaps.exactfield.QuadExtElem` or
:class:`~cubicmaps.exactfield.PrimeFieldElem`.  Points of P^1 are
:class:`ProjPoint` values, so infinity never appears as a scalar.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import sympy

from .exactfield import (
    INF,
    PrimeFieldElem,
    QuadExtElem,
    RadicandMismatch,
    sort_key,
    sqrt_rational,
)


class UnresolvableFactor(ArithmeticError):
    """A polynomial has roots outside Q and a single quadratic extension."""


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a field element")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, QuadExtElem) and c.b == 0:
        return c.a
    if isinstance(c, (Fraction, QuadExtElem, PrimeFieldElem)):
        return c
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _one_like(c):
    return c / c


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``z**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def z(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if not isinstance(other, RatFunc):
            try:
                return self.coeffs == Poly([other]).coeffs
            except TypeError:
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def __iter__(self):
        return iter(self.coeffs)

    def _lift(self, other):
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly([a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        nd = other.degree
        if self.degree < nd:
            return Poly(), self
        quot = [0] * (self.degree - nd + 1)
        inv = 1 / other.lc if isinstance(other.lc, Fraction) else _one_like(other.lc) / other.lc
        for k in range(self.degree - nd, -1, -1):
            q = rem[k + nd] * inv
            quot[k] = q
            if q != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * b
        return Poly(quot), Poly(rem[:nd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def homogeneous(self, x, y, deg: int):
        """Value of ``y**deg * self(x/y)`` computed without dividing."""
        acc = 0
        ypow = 1
        # sum c_i x^i y^(deg-i), built from the top coefficient down
        for i in range(deg, -1, -1):
            acc = acc + self[i] * x ** i * ypow
            ypow = ypow * y
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = _one_like(self.lc) / self.lc
        return self * inv

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def radicands(self) -> set:
        return {c.d for c in self.coeffs if isinstance(c, QuadExtElem)}

    def conjugate(self) -> "Poly":
        return Poly([c.conjugate() if isinstance(c, QuadExtElem) else c for c in self.coeffs])


def derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def resultant(p: Poly, q: Poly):
    """Sylvester resultant ``lc(p)**deg(q) * prod q(alpha)`` over roots of ``p``.

    Computed by the Euclidean recursion
    ``res(p, q) = (-1)**(m*n) * lc(q)**(m - deg r) * res(q, r)`` with
    ``r = p mod q``.  With this convention ``res(z**2 + 2z, 2z + 3) == -3``.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    sign_scale = 1
    while True:
        m, n = p.degree, q.degree
        if n == 0:
            return sign_scale * q.lc ** m
        if m == 0:
            return sign_scale * p.lc ** n
        r = p % q
        if r.is_zero():
            return 0 * sign_scale * p.lc
        if (m * n) % 2:
            sign_scale = -sign_scale
        sign_scale = sign_scale * q.lc ** (m - r.degree)
        p, q = q, r


# --------------------------------------------------------------------------
# root extraction over Q and one quadratic extension
# --------------------------------------------------------------------------

def _factor_over_Q(p: Poly):
    z = sympy.Symbol("z")
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)]
    sp = sympy.Poly(coeffs, z, domain=sympy.QQ)
    _, factors = sp.factor_list()
    out = []
    for g, e in factors:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        out.append((Poly(cs), e))
    return out


def _quadratic_roots(g: Poly):
    c, b, a = g.coeffs
    s = sqrt_rational(b * b - 4 * a * c)
    return [(-b - s) / (2 * a), (-b + s) / (2 * a)]


def _multiplicity(p: Poly, r) -> int:
    lin = Poly([-r, 1])
    m = 0
    while p.degree >= 1:
        q, rem = divmod(p, lin)
        if not rem.is_zero():
            break
        p, m = q, m + 1
    return m


def roots(p: Poly) -> list:
    """All roots of ``p`` with multiplicity, as ``[(root, mult), ...]``.

    Coefficients may be rational or lie in one field ``Q(sqrt d)``.  Roots
    are returned in Q or in a single quadratic field; anything else raises
    :class:`UnresolvableFactor`.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    if p.degree == 0:
        return []
    rads = p.radicands()
    if len(rads) > 1:
        raise UnresolvableFactor(f"coefficients span several radicands {sorted(rads)}")
    if not rads:
        if not all(isinstance(c, Fraction) for c in p.coeffs):
            raise NotImplementedError("root finding needs coefficients in Q or Q(sqrt d)")
        found = []
        for g, e in _factor_over_Q(p):
            if g.degree == 1:
                found.append((-g[0] / g[1], e))
            elif g.degree == 2:
                found.extend((r, e) for r in _quadratic_roots(g))
            else:
                raise UnresolvableFactor(f"irreducible factor of degree {g.degree}: {g}")
        fields = {r.d for r, _ in found if isinstance(r, QuadExtElem)}
        if len(fields) > 1:
            raise UnresolvableFactor(f"roots in several quadratic fields {sorted(fields)}")
        return sorted(found, key=lambda t: sort_key(t[0]))
    (d,) = rads
    norm = p * p.conjugate()
    norm = Poly([c.a if isinstance(c, QuadExtElem) else c for c in norm.coeffs])
    found, total = [], 0
    for g, _ in _factor_over_Q(norm):
        if g.degree == 1:
            cands = [-g[0] / g[1]]
        elif g.degree == 2:
            cands = _quadratic_roots(g)
            if cands[0].d != d:
                continue
        else:
            continue
        for r in cands:
            m = _multiplicity(p, r)
            if m:
                found.append((r, m))
                total += m
    if total != p.degree:
        raise UnresolvableFactor(f"not split over Q(sqrt({d})): {p}")
    return sorted(found, key=lambda t: sort_key(t[0]))


# --------------------------------------------------------------------------
# points of P^1
# --------------------------------------------------------------------------

class ProjPoint:
    """Point ``[x : y]`` of P^1, stored canonically as ``[x : 1]`` or ``[1 : 0]``."""

    __slots__ = ("x", "y")

    def __init__(self, x, y=1):
        x, y = _coerce(x), _coerce(y)
        if y == 0:
            if x == 0:
                raise ValueError("[0 : 0] is not a point")
            self.x, self.y = _one_like(x), y * 0
        else:
            self.x, self.y = _coerce(x / y), _one_like(y)

    @classmethod
    def of(cls, v) -> "ProjPoint":
        if isinstance(v, ProjPoint):
            return v
        if v is None or v == INF or (isinstance(v, str) and v.strip().lower() in ("inf", "oo", "infinity")):
            return INFINITY
        return cls(v)

    @property
    def is_inf(self) -> bool:
        return self.y == 0

    @property
    def value(self):
        return INF if self.is_inf else self.x

    def key(self):
        return (1, ()) if self.is_inf else (0, sort_key(self.x))

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.is_inf or other.is_inf:
            return self.is_inf and other.is_inf
        return self.x == other.x

    def __hash__(self):
        return hash("inf") if self.is_inf else hash(self.x)

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"ProjPoint({self})"

    def __str__(self):
        return "inf" if self.is_inf else str(self.x)


INFINITY = ProjPoint(1, 0)
ZERO = ProjPoint(0)
ONE = ProjPoint(1)


# --------------------------------------------------------------------------
# Mobius maps
# --------------------------------------------------------------------------

class Mobius:
    """``z -> (a z + b) / (c z + d)``, scaled so that ``c == 1`` or (``c == 0`` and ``d == 1``)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (_coerce(t) for t in (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("singular fractional linear map")
        s = c if c != 0 else d
        self.a, self.b, self.c, self.d = (_coerce(t / s) for t in (a, b, c, d))

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, P):
        P = ProjPoint.of(P)
        return ProjPoint(self.a * P.x + self.b * P.y, self.c * P.x + self.d * P.y)

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "Mobius") -> "Mobius":
        """``self o other``."""
        return Mobius(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def __matmul__(self, other):
        if isinstance(other, Mobius):
            return self.compose(other)
        if isinstance(other, RatFunc):
            return compose_post(self, other)
        return NotImplemented

    def as_ratfunc(self) -> "RatFunc":
        return RatFunc(Poly([self.b, self.a]), Poly([self.d, self.c]))

    def coefficients(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, Mobius):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(self.coefficients())

    def __repr__(self):
        return f"Mobius({format_mobius(self)!r})"

    def __str__(self):
        return format_mobius(self)


def mobius_inverse(sigma: Mobius) -> Mobius:
    return sigma.inverse()


def mobius_compose(sigma: Mobius, tau: Mobius) -> Mobius:
    return sigma.compose(tau)


def _to_standard(P1: ProjPoint, P2: ProjPoint, P3: ProjPoint) -> Mobius:
    # L_i vanishes at P_i; send P1 -> 0, P3 -> inf and scale so that P2 -> 1
    def L(Pi, Q):
        return Pi.y * Q.x - Pi.x * Q.y
    s, t = L(P3, P2), L(P1, P2)
    return Mobius(P1.y * s, -P1.x * s, P3.y * t, -P3.x * t)


def mobius_from_three_points(P, Q) -> Mobius:
    """The unique Mobius map sending ``P[i]`` to ``Q[i]`` for ``i = 0, 1, 2``."""
    P = [ProjPoint.of(p) for p in P]
    Q = [ProjPoint.of(q) for q in Q]
    if len(P) != 3 or len(Q) != 3:
        raise ValueError("need exactly three source and three target points")
    if len(set(P)) < 3 or len(set(Q)) < 3:
        raise ValueError("points must be pairwise distinct")
    return _to_standard(*Q).inverse().compose(_to_standard(*P))


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------

class RatFunc:
    """Reduced quotient ``num / den`` with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, Poly) else Poly([num])
        den = den if isinstance(den, Poly) else Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([_one_like(den.lc)])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = _one_like(den.lc) / den.lc
        self.num, self.den = num * inv, den * inv

    @classmethod
    def z(cls) -> "RatFunc":
        return cls(Poly.z())

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_constant(self) -> bool:
        return self.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        return format_ratfunc(self)

    def __call__(self, P):
        return evaluate(self, P)

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFunc):
            return other
        return RatFunc(other if isinstance(other, Poly) else Poly([other]))

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def is_rational(self) -> bool:
        return self.num.is_rational() and self.den.is_rational()

    def radicands(self) -> set:
        return self.num.radicands() | self.den.radicands()

    def reduce_mod_p(self, p: int) -> "RatFunc":
        """Reduce a map over Q modulo ``p``.

        Both polynomials are scaled by one rational so that their joint
        integer content is 1, reduced coefficientwise, and any common factor
        appearing mod ``p`` is cancelled.
        """
        if not self.is_rational():
            raise ValueError("only maps over Q can be reduced mod p")
        cs = self.num.coeffs + self.den.coeffs
        m = lcm(*(c.denominator for c in cs))
        ints = [int(c * m) for c in cs]
        g = gcd(*ints)
        num = Poly([PrimeFieldElem(p, int(c * m) // g) for c in self.num.coeffs])
        den = Poly([PrimeFieldElem(p, int(c * m) // g) for c in self.den.coeffs])
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes mod {p}")
        return RatFunc(num, den)


def evaluate(f: RatFunc, P) -> ProjPoint:
    """``f(P)`` on P^1 via homogenisation; poles go to infinity."""
    P = ProjPoint.of(P)
    d = f.degree
    return ProjPoint(f.num.homogeneous(P.x, P.y, d), f.den.homogeneous(P.x, P.y, d))


def wronskian(f, den: Poly | None = None) -> Poly:
    """``num' * den - num * den'``.

    Accepts a :class:`RatFunc` (its reduced, monic-denominator pair is used)
    or an explicit ``(num, den)`` polynomial pair, in which case nothing is
    rescaled.
    """
    if den is None:
        num, den = f.num, f.den
    else:
        num = f
    return num.derivative() * den - num * den.derivative()


def critical_points(f: RatFunc) -> list:
    """Critical points of ``f`` with multiplicity, sorted with infinity last.

    Finite critical points are the roots of the Wronskian; infinity carries
    whatever is left of the total ``2*deg(f) - 2``.
    """
    d = f.degree
    if d < 1:
        raise ValueError("constant map has no critical points")
    W = wronskian(f)
    pts = [(ProjPoint(r), m) for r, m in roots(W)]
    at_inf = 2 * d - 2 - W.degree
    if at_inf > 0:
        pts.append((INFINITY, at_inf))
    return pts


def critical_multiset(f: RatFunc) -> dict:
    return dict(critical_points(f))


def compose_post(sigma: Mobius, f: RatFunc) -> RatFunc:
    """``sigma o f``."""
    return RatFunc(f.num * sigma.a + f.den * sigma.b, f.num * sigma.c + f.den * sigma.d)


def compose_pre(f: RatFunc, tau: Mobius) -> RatFunc:
    """``f o tau``."""
    d = f.degree
    L, M = Poly([tau.b, tau.a]), Poly([tau.d, tau.c])
    Lp = [Poly([1])]
    Mp = [Poly([1])]
    for _ in range(d):
        Lp.append(Lp[-1] * L)
        Mp.append(Mp[-1] * M)

    def sub(p):
        acc = Poly()
        for i in range(d + 1):
            if p[i] != 0:
                acc = acc + Lp[i] * Mp[d - i] * p[i]
        return acc

    return RatFunc(sub(f.num), sub(f.den))


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------

def _fmt_coeff(c) -> str:
    if isinstance(c, QuadExtElem):
        return f"({c})"
    return str(c)


def format_poly(p: Poly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        neg = isinstance(c, Fraction) and c < 0
        mag = -c if neg else c
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def format_ratfunc(f: RatFunc, var: str = "z") -> str:
    if f.den == Poly([1]):
        return format_poly(f.num, var)
    return f"({format_poly(f.num, var)}) / ({format_poly(f.den, var)})"


def format_mobius(m: Mobius, var: str = "z") -> str:
    return format_ratfunc(m.as_ratfunc(), var)


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    toks, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("num", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word in ("z", "x"):
                toks.append(("var", word))
            elif word == "sqrt":
                toks.append(("sqrt", word))
            else:
                raise ParseError(f"unknown name {word!r}")
            i = j
        elif text.startswith("**", i):
            toks.append(("op", "^"))
            i += 2
        elif ch in "+-*/^()":
            toks.append(("op", ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}")
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.var = None

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ParseError(f"expected {val or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> RatFunc:
        if not self.toks:
            raise ParseError("empty expression")
        e = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at {self.peek()[1]!r}")
        return e

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def starts_atom(self):
        kind, val = self.peek()
        return kind in ("num", "var", "sqrt") or (kind, val) == ("op", "(")

    def term(self):
        acc = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                acc = acc * self.unary()
            elif (kind, val) == ("op", "/"):
                self.take()
                acc = acc / self.unary()
            elif self.starts_atom():
                acc = acc * self.power()
            else:
                return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.unary()
            if not e.is_constant() or not e.is_rational() or e.num[0] != int(e.num[0]):
                raise ParseError("exponent must be an integer")
            base = base ** int(e.num[0])
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return RatFunc(Poly([val]))
        if kind == "var":
            self.take()
            if self.var is not None and val != self.var:
                raise ParseError("mixed variable names")
            self.var = val
            return RatFunc.z()
        if kind == "sqrt":
            self.take()
            self.take("op", "(")
            arg = self.expr()
            self.take("op", ")")
            if not arg.is_constant() or not arg.is_rational():
                raise ParseError("sqrt() needs a rational constant")
            return RatFunc(Poly([sqrt_rational(arg.num[0])]))
        if (kind, val) == ("op", "("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        if val is None:
            raise ParseError("unexpected end of input")
        raise ParseError(f"unexpected token {val!r}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse e.g. ``"z^2*(z+1) / (5z-3)"``; ``x`` is accepted in place of ``z``."""
    try:
        return _Parser(text).parse()
    except (ZeroDivisionError, RadicandMismatch) as exc:
        raise ParseError(str(exc)) from exc


def parse_scalar(text: str):
    """A constant in the same syntax (``"-3/5"``, ``"1 + sqrt(2)"``)."""
    f = parse_ratfunc(text)
    if not f.is_constant():
        raise ParseError(f"{text!r} is not a constant")
    return f.num[0] if not f.num.is_zero() else Fraction(0)


def parse_point(text: str) -> ProjPoint:
    if text.strip().lower() in ("inf", "oo", "infinity"):
        return INFINITY
    return ProjPoint(parse_scalar(text))
