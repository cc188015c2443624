"""Exact scalars: rationals, one quadratic extension of Q, prime fields, and
Q embedded in Q_p together with valuation and square-class tests.

Rationals are plain :class:`fractions.Fraction` objects throughout; the
other element types interoperate with ``int`` and ``Fraction`` operands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime

INF = math.inf


class RadicandMismatch(ValueError):
    """Arithmetic between elements of two different quadratic fields."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def require_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, k)`` with ``n == s * k**2`` and ``s`` squarefree (sign kept in ``s``)."""
    if n == 0:
        raise ValueError("0 has no squarefree kernel")
    s, k = (-1 if n < 0 else 1), 1
    for q, e in factorint(abs(n)).items():
        k *= q ** (e // 2)
        if e % 2:
            s *= q
    return s, k


# --------------------------------------------------------------------------
# Q(sqrt d)
# --------------------------------------------------------------------------

class QuadExtElem:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and squarefree ``d``.

    The radicand is reduced on construction: ``QuadExtElem(0, 1, 12)`` is
    stored as ``2*sqrt(3)``.  Constructing with a perfect-square radicand is
    an error; use :func:`sqrt_rational` when the result may be rational.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a, b = as_fraction(a), as_fraction(b)
        if not isinstance(d, int):
            raise TypeError("radicand must be an integer")
        s, k = squarefree_decomposition(d)
        if s == 1:
            raise ValueError(f"radicand {d} is a perfect square")
        self.a = a
        self.b = b * k
        self.d = s

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadExtElem":
        obj = object.__new__(cls)
        obj.a, obj.b, obj.d = a, b, d
        return obj

    def _pair(self, other):
        """Bring both operands into one field; ``None`` for foreign types."""
        if isinstance(other, (int, Fraction)):
            return self, QuadExtElem._raw(Fraction(other), Fraction(0), self.d)
        if not isinstance(other, QuadExtElem):
            return None
        if other.d == self.d:
            return self, other
        if other.b == 0:
            return self, QuadExtElem._raw(other.a, Fraction(0), self.d)
        if self.b == 0:
            return QuadExtElem._raw(self.a, Fraction(0), other.d), other
        raise RadicandMismatch(f"sqrt({self.d}) vs sqrt({other.d})")

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return QuadExtElem._raw(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return QuadExtElem._raw(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return QuadExtElem._raw(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtElem":
        return QuadExtElem._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadExtElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExtElem._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        x, y = pr
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExtElem._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExtElem):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_real(self) -> bool:
        return self.b == 0 or self.d > 0

    def __repr__(self):
        return f"QuadExtElem({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        tail = root if abs(self.b) == 1 else f"{abs(self.b)}*{root}"
        if self.a == 0:
            return f"-{tail}" if self.b < 0 else tail
        return f"{self.a}{' - ' if self.b < 0 else ' + '}{tail}"


def sqrt_rational(q):
    """Return a square root of the rational ``q``: a Fraction when ``q`` is a
    rational square, otherwise ``sqrt(num*den)/den`` as a :class:`QuadExtElem`.
    """
    q = as_fraction(q)
    if q == 0:
        return Fraction(0)
    m = q.numerator * q.denominator
    s, k = squarefree_decomposition(m)
    if s == 1:
        return Fraction(k, q.denominator)
    return QuadExtElem._raw(Fraction(0), Fraction(k, q.denominator), s)


def sqrt_in_field(x):
    """Square root of ``x`` inside the field ``x`` already lives in, or ``None``.

    Rational inputs use :func:`sqrt_rational` (which may leave Q); elements
    of ``Q(sqrt d)`` are square-rooted inside ``Q(sqrt d)`` only.
    """
    if not isinstance(x, QuadExtElem):
        return sqrt_rational(x)
    d = x.d
    if x.b == 0:
        r = sqrt_rational(x.a)
        if isinstance(r, Fraction):
            return QuadExtElem._raw(r, Fraction(0), d)
        if r.d == d:
            return r
        # sqrt(a) = t*sqrt(d) with t rational iff a/d is a rational square
        t = sqrt_rational(x.a / d)
        if isinstance(t, Fraction):
            return QuadExtElem._raw(Fraction(0), t, d)
        return None
    # (s + t sqrt d)^2 = a + b sqrt d  =>  s^2 = (a +- sqrt(N)) / 2, N = norm
    n_root = sqrt_rational(x.norm())
    if not isinstance(n_root, Fraction):
        return None
    for sign in (1, -1):
        s2 = (x.a + sign * n_root) / 2
        s = sqrt_rational(s2)
        if isinstance(s, Fraction) and s != 0:
            cand = QuadExtElem._raw(s, x.b / (2 * s), d)
            if cand * cand == x:
                return cand
    return None


def sort_key(x) -> tuple:
    """Total order on rationals and quadratic elements: by ``(a, b)``."""
    if isinstance(x, QuadExtElem):
        return (x.a, x.b)
    if isinstance(x, PrimeFieldElem):
        return (Fraction(x.residue), Fraction(0))
    return (Fraction(x), Fraction(0))


# --------------------------------------------------------------------------
# F_p
# --------------------------------------------------------------------------

class PrimeFieldElem:
    __slots__ = ("p", "residue")

    def __init__(self, p: int, residue: int):
        self.p = p
        self.residue = residue % p

    def _val(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError("elements of different prime fields")
            return other.residue
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.residue + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.residue - o)

    def __rsub__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.p, o - self.residue)

    def __neg__(self):
        return PrimeFieldElem(self.p, -self.residue)

    def __mul__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.p, self.residue * o)

    __rmul__ = __mul__

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElem(self.p, pow(self.residue, -1, self.p))

    def __truediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElem(self.p, o).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElem(self.p, pow(self.residue, n, self.p))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return (self.residue - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.residue))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"PrimeFieldElem({self.p}, {self.residue})"

    def __str__(self):
        return str(self.residue)


def reduce_mod_p(q, p: int) -> PrimeFieldElem:
    q = as_fraction(q)
    if q.denominator % p == 0:
        raise ZeroDivisionError(f"{q} is not p-integral for p={p}")
    return PrimeFieldElem(p, q.numerator * pow(q.denominator, -1, p))


# --------------------------------------------------------------------------
# valuations and squares
# --------------------------------------------------------------------------

def _int_ord(p: int, n: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(p: int, q):
    """p-adic valuation of a rational; ``INF`` for zero."""
    q = as_fraction(q)
    if q == 0:
        return INF
    return _int_ord(p, q.numerator) - _int_ord(p, q.denominator)


def unit_part(p: int, q) -> Fraction:
    q = as_fraction(q)
    v = ord_p(p, q)
    return q / Fraction(p) ** v


def legendre_symbol(a: int, p: int) -> int:
    if p == 2:
        raise ValueError("legendre_symbol needs an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _tonelli_shanks(a: int, p: int) -> int:
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_p(a: int, p: int):
    """Smallest ``r`` in ``[0, p)`` with ``r*r % p == a % p``, or ``None``."""
    a %= p
    if a == 0 or p == 2:
        return a
    if legendre_symbol(a, p) != 1:
        return None
    r = _tonelli_shanks(a, p)
    return min(r, p - r)


def is_square_in_Qp(p: int, q) -> bool:
    q = as_fraction(q)
    if q == 0:
        return True
    v = ord_p(p, q)
    if v % 2:
        return False
    u = unit_part(p, q)
    if p == 2:
        return u.numerator * u.denominator % 8 == 1
    return legendre_symbol(u.numerator * u.denominator, p) == 1


@dataclass(frozen=True)
class PAdicExpansion:
    """A truncated p-adic number ``p**valuation * sum(digits[i] * p**i)``."""
    p: int
    valuation: object  # int, or INF for zero
    digits: tuple

    @property
    def precision(self) -> int:
        return len(self.digits)

    def unit_residue(self) -> int:
        return sum(dg * self.p ** i for i, dg in enumerate(self.digits))


def _digits(r: int, p: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        r, dg = divmod(r, p)
        out.append(dg)
    return tuple(out)


def hensel_sqrt(p: int, q, precision: int):
    """Lift a square root of ``q`` in Q_p to ``precision`` digits.

    The unit part ``u = q / p**ord_p(q)`` gets a root ``r`` with
    ``r*r == u (mod p**precision)``; the root of ``q`` itself is
    ``p**(ord_p(q)//2) * r``.  Returns ``None`` when ``q`` is not a square.
    Odd valuations raise ``ValueError``; decide those with
    :func:`is_square_in_Qp` first.
    """
    if precision < 1:
        raise ValueError("precision must be positive")
    q = as_fraction(q)
    if q == 0:
        return PAdicExpansion(p, INF, (0,) * precision)
    v = ord_p(p, q)
    if v % 2:
        raise ValueError(f"odd valuation {v}: not a square in Q_{p}")
    if not is_square_in_Qp(p, q):
        return None
    u = unit_part(p, q)
    mod = p ** precision
    if p == 2:
        # work one bit past the target; the last bit of r is then free
        mod2 = 2 ** (precision + 1)
        target = u.numerator * pow(u.denominator, -1, mod2) % mod2
        r, k = 1, 3
        while k < precision + 1:
            if (r * r - target) % 2 ** (k + 1):
                r += 2 ** (k - 1)
            k += 1
        r %= mod
    else:
        target = u.numerator * pow(u.denominator, -1, mod) % mod
        r = sqrt_mod_p(target % p, p)
        k = 1
        while k < precision:
            k = min(2 * k, precision)
            m = p ** k
            r = (r - (r * r - target) * pow(2 * r, -1, m)) % m
    assert (r * r - u.numerator * pow(u.denominator, -1, mod)) % mod == 0
    return PAdicExpansion(p, v // 2, _digits(r, p, precision))


@dataclass(frozen=True)
class PAdicRational:
    """A rational number viewed inside Q_p."""
    p: int
    value: Fraction

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "value", as_fraction(self.value))

    @property
    def valuation(self):
        return ord_p(self.p, self.value)

    def abs_p(self) -> Fraction:
        """|x|_p as an exact rational (0 for zero)."""
        if self.value == 0:
            return Fraction(0)
        return Fraction(1, self.p) ** self.valuation

    def unit(self) -> Fraction:
        return unit_part(self.p, self.value)

    def is_integral(self) -> bool:
        return self.valuation >= 0

    def is_square(self) -> bool:
        return is_square_in_Qp(self.p, self.value)

    def sqrt(self, precision: int = 10):
        return hensel_sqrt(self.p, self.value, precision)

    def digits(self, precision: int = 10) -> tuple:
        """Digits of the unit part, least significant first."""
        if self.value == 0:
            return (0,) * precision
        u = self.unit()
        mod = self.p ** precision
        return _digits(u.numerator * pow(u.denominator, -1, mod) % mod, self.p, precision)
