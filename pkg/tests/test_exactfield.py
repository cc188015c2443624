from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicmaps.exactfield import (
    INF,
    PAdicRational,
    PrimeFieldElem,
    QuadExtElem,
    RadicandMismatch,
    hensel_sqrt,
    is_square_in_Qp,
    legendre_symbol,
    ord_p,
    sqrt_in_field,
    sqrt_mod_p,
    sqrt_rational,
    squarefree_decomposition,
)

from .conftest import rationals

PRIMES = st.sampled_from([2, 3, 5, 7])


def brute_is_square(p, q, k=6):
    """Square class by enumerating all residues mod p**k."""
    if q == 0:
        return True
    v = sympy.multiplicity(p, q.numerator) - sympy.multiplicity(p, q.denominator)
    if v % 2:
        return False
    u = q / F(p) ** v
    m = p ** k
    target = u.numerator * pow(u.denominator, -1, m) % m
    return any(r * r % m == target for r in range(m))


class TestOrd:
    def test_examples(self):
        assert ord_p(3, F(28, 9)) == -2
        assert ord_p(5, 1) == 0
        assert ord_p(2, 0) == INF

    @given(PRIMES, rationals(nonzero=True), rationals(nonzero=True))
    def test_additive(self, p, q, r):
        assert ord_p(p, q * r) == ord_p(p, q) + ord_p(p, r)

    @given(PRIMES, rationals(10 ** 6, nonzero=True))
    def test_matches_sympy_multiplicity(self, p, q):
        expect = sympy.multiplicity(p, abs(q.numerator)) - sympy.multiplicity(p, q.denominator)
        assert ord_p(p, q) == expect


class TestResidues:
    def test_legendre_examples(self):
        assert legendre_symbol(1, 3) == 1
        assert legendre_symbol(2, 3) == -1
        assert legendre_symbol(6, 3) == 0

    def test_legendre_rejects_two(self):
        with pytest.raises(ValueError):
            legendre_symbol(1, 2)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 97, 101])
    def test_legendre_against_enumeration(self, p):
        squares = {r * r % p for r in range(1, p)}
        for a in range(-2 * p, 2 * p):
            expect = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre_symbol(a, p) == expect

    def test_sqrt_mod_p_examples(self):
        assert sqrt_mod_p(4, 5) == 2
        assert sqrt_mod_p(0, 7) == 0
        assert sqrt_mod_p(2, 5) is None

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 13, 17, 41, 73, 97, 113])
    def test_sqrt_mod_p_smallest(self, p):
        for a in range(p):
            roots = [r for r in range(p) if r * r % p == a]
            assert sqrt_mod_p(a, p) == (roots[0] if roots else None)


class TestQpSquares:
    def test_examples(self):
        assert is_square_in_Qp(2, 3) is False
        assert is_square_in_Qp(3, F(28, 9)) is True
        assert is_square_in_Qp(5, 5) is False
        assert is_square_in_Qp(7, 0) is True

    @settings(max_examples=500)
    @given(PRIMES, rationals(nonzero=True))
    def test_squares_are_squares(self, p, q):
        assert is_square_in_Qp(p, q * q)

    @given(PRIMES, rationals(200, nonzero=True))
    def test_agrees_with_enumeration_on_rationals(self, p, q):
        assert is_square_in_Qp(p, q) == brute_is_square(p, q, 4 if p == 2 else 3)

    def test_padic_rational_wrapper(self):
        x = PAdicRational(3, F(28, 9))
        assert x.valuation == -2
        assert x.abs_p() == 9
        assert x.unit() == 28
        assert x.is_square() and not x.is_integral()
        assert x.digits(4) == (1, 0, 0, 1)  # 28 = 1 + 27


class TestHensel:
    def test_exact_square(self):
        e = hensel_sqrt(3, 4, 5)
        r = e.unit_residue()
        assert r in (2, 3 ** 5 - 2)
        assert e.valuation == 0

    def test_seven_mod_27(self):
        e = hensel_sqrt(3, 7, 3)
        brute = [r for r in range(27) if r * r % 27 == 7]
        assert brute and e.unit_residue() in brute

    def test_two_adic_non_square(self):
        assert hensel_sqrt(2, 3, 4) is None

    def test_odd_valuation_rejected(self):
        with pytest.raises(ValueError):
            hensel_sqrt(5, 5, 4)

    def test_zero(self):
        assert hensel_sqrt(7, 0, 3).digits == (0, 0, 0)

    @settings(max_examples=300)
    @given(PRIMES, rationals(nonzero=True), st.integers(1, 20))
    def test_lift_is_root(self, p, q, n):
        if ord_p(p, q) % 2:
            return
        e = hensel_sqrt(p, q, n)
        assert (e is not None) == is_square_in_Qp(p, q)
        if e is None:
            return
        u = q / F(p) ** ord_p(p, q)
        m = p ** n
        r = e.unit_residue()
        assert (r * r - u.numerator * pow(u.denominator, -1, m)) % m == 0
        assert all(0 <= dg < p for dg in e.digits)


class TestQuadExt:
    def test_radicand_reduced(self):
        x = QuadExtElem(1, 1, 12)
        assert (x.d, x.b) == (3, 2)
        assert QuadExtElem(0, 1, -8).d == -2

    def test_square_radicand_rejected(self):
        with pytest.raises(ValueError):
            QuadExtElem(1, 1, 9)

    def test_mixed_radicands(self):
        with pytest.raises(RadicandMismatch):
            QuadExtElem(0, 1, 2) + QuadExtElem(0, 1, 3)
        assert QuadExtElem(0, 1, 2) != QuadExtElem(0, 1, 3)

    @settings(max_examples=100)
    @given(rationals(), rationals(), st.sampled_from([-7, -3, -1, 2, 3, 5, 6, 10, 31]))
    def test_norm_identity(self, a, b, d):
        x = QuadExtElem(a, b, d)
        assert x * x.conjugate() == a * a - d * b * b

    @given(rationals(), rationals(nonzero=True), rationals(), rationals(nonzero=True))
    def test_field_laws(self, a, b, c, e):
        x, y = QuadExtElem(a, b, 5), QuadExtElem(c, e, 5)
        assert (x * y) / y == x
        assert x - y + y == x
        assert x * (y + 1) == x * y + x
        assert F(3) / x * x == 3

    @given(rationals(nonzero=True))
    def test_sqrt_rational(self, q):
        s = sqrt_rational(q)
        assert s * s == q

    @given(rationals(), rationals(nonzero=True))
    def test_sqrt_in_field_of_square(self, a, b):
        x = QuadExtElem(a, b, 7)
        s = sqrt_in_field(x * x)
        assert s is not None and s * s == x * x

    def test_sqrt_in_field_absent(self):
        assert sqrt_in_field(QuadExtElem(0, 1, 2)) is None
        assert sqrt_in_field(QuadExtElem(3, 0, 2)) is None
        s = sqrt_in_field(QuadExtElem(6, 0, 3))   # sqrt(6) is not in Q(sqrt 3)
        assert s is None
        s = sqrt_in_field(QuadExtElem(12, 0, 3))  # 12 = (2 sqrt 3)^2
        assert s * s == 12

    def test_squarefree(self):
        assert squarefree_decomposition(-72) == (-2, 6)
        assert squarefree_decomposition(1) == (1, 1)


class TestPrimeField:
    def test_arithmetic(self):
        a, b = PrimeFieldElem(7, 3), PrimeFieldElem(7, 5)
        assert a + b == 1
        assert a * b == 1
        assert a / b == PrimeFieldElem(7, 2)
        assert -a == 4
        assert a ** 6 == 1
        assert F(1, 2) * PrimeFieldElem(7, 2) == 1
        with pytest.raises(ZeroDivisionError):
            a / PrimeFieldElem(7, 0)
