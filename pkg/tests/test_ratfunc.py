from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cubicmaps.exactfield import PrimeFieldElem, QuadExtElem
from cubicmaps.ratfunc import (
    INFINITY,
    Mobius,
    ParseError,
    Poly,
    ProjPoint,
    RatFunc,
    UnresolvableFactor,
    compose_post,
    compose_pre,
    critical_points,
    derivative,
    evaluate,
    format_ratfunc,
    mobius_compose,
    mobius_from_three_points,
    mobius_inverse,
    parse_ratfunc,
    poly_gcd,
    resultant,
    roots,
    wronskian,
)

from .conftest import mobius_maps, rationals, ratfuncs

z = RatFunc.z()
Z = Poly.z()
F0 = parse_ratfunc("z^3 / (3z - 2)")
F1 = parse_ratfunc("z^2 (z + 1) / (5z - 3)")


def sylvester_det(p, q):
    """Resultant as the determinant of the Sylvester matrix (Gaussian elimination)."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(p.coeffs)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(q.coeffs)) + [0] * (size - n - 1 - i))
    M = [[F(x) for x in r] for r in rows]
    det = F(1)
    for c in range(size):
        piv = next((r for r in range(c, size) if M[r][c] != 0), None)
        if piv is None:
            return F(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, size):
            t = M[r][c] / M[c][c]
            M[r] = [a - t * b for a, b in zip(M[r], M[c])]
    return det


small_polys = st.lists(st.integers(-4, 4), min_size=2, max_size=4).map(Poly).filter(
    lambda p: p.degree >= 1)


class TestPoly:
    def test_derivative_examples(self):
        u = F(7, 3)
        assert derivative(Poly([0, 0, u, 1])) == Poly([0, 2 * u, 3])
        assert derivative(Poly([5])) == Poly()
        assert derivative(Poly([0, 2, 1])) == Poly([2, 2])

    @given(small_polys, small_polys)
    def test_divmod(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_homogeneous(self):
        p = Poly([1, 2, 3])
        assert p.homogeneous(F(2), F(1), 2) == p(2)
        assert p.homogeneous(F(1), F(0), 2) == 3
        assert p.homogeneous(F(1), F(0), 3) == 0

    def test_roots_rational_and_quadratic(self):
        p = (Z - 1) ** 2 * (Z * Z - 2) * (3 * Z + 2)
        rs = dict(roots(p))
        assert rs[F(1)] == 2 and rs[F(-2, 3)] == 1
        assert rs[QuadExtElem(0, 1, 2)] == 1 and rs[QuadExtElem(0, -1, 2)] == 1

    def test_roots_unresolvable(self):
        with pytest.raises(UnresolvableFactor):
            roots(Z ** 3 - 2)
        with pytest.raises(UnresolvableFactor):
            roots((Z * Z - 2) * (Z * Z - 3))

    def test_roots_over_quadratic_field(self):
        s = QuadExtElem(0, 1, 5)
        p = (Z - s) ** 2 * (Z - 3) * (Z - (1 + s))
        assert dict(roots(p)) == {s: 2, F(3): 1, 1 + s: 1}
        with pytest.raises(UnresolvableFactor):
            roots((Z - s) * (Z * Z - 2))


class TestResultant:
    def test_examples(self):
        assert resultant(Poly([0, 2, 1]), Poly([3, 2])) == -3
        assert resultant(Z, Z) == 0
        assert resultant(Z - 1, Z + 1) == 2

    @settings(max_examples=200)
    @given(small_polys, small_polys)
    def test_matches_sylvester(self, p, q):
        assert resultant(p, q) == sylvester_det(p, q)

    @settings(max_examples=200)
    @given(small_polys, small_polys)
    def test_zero_iff_common_factor(self, p, q):
        assert (resultant(p, q) == 0) == (poly_gcd(p, q).degree >= 1)


class TestEvaluate:
    def test_examples(self):
        assert evaluate(F1, INFINITY) == INFINITY
        assert evaluate(F0, 0) == ProjPoint(0)
        assert evaluate(F0, F(2, 3)) == INFINITY

    def test_finite_value_at_infinity(self):
        f = parse_ratfunc("(2z^2 + 1) / (z^2 - 7)")
        assert evaluate(f, INFINITY) == ProjPoint(2)

    def test_over_prime_field(self):
        f = F1.reduce_mod_p(7)
        P = ProjPoint(PrimeFieldElem(7, 2))
        # z^2 (z+1) / (5z - 3) at z = 2: 12 / 7 -> pole mod 7
        assert evaluate(f, P) == ProjPoint(PrimeFieldElem(7, 1), PrimeFieldElem(7, 0))


class TestWronskian:
    @pytest.mark.parametrize("u,v", [(F(1), F(5)), (F(7), F(-2)), (F(-3, 4), F(2, 9)), (F(0), F(3))])
    def test_general_normal_shape(self, u, v):
        num, den = Poly([0, 0, u, 1]), Poly([u - v + 1, v])
        expect = Z * Poly([2 * u * (u - v + 1), u * v + 3 * (u - v + 1), 2 * v])
        assert wronskian(num, den) == expect

    def test_raw_pair(self):
        assert wronskian(Poly([0, 0, 0, 1]), Poly([-2, 3])) == Poly([0, 0, -6, 6])

    def test_reduced_is_proportional(self):
        W = wronskian(F0)
        assert W * 9 == Poly([0, 0, -6, 6])

    def test_quadratic(self):
        a = F(5, 2)
        assert wronskian(RatFunc(Poly([0, 0, a]))) == Poly([0, 2 * a])


class TestCriticalPoints:
    def test_examples(self):
        assert critical_points(F0) == [(ProjPoint(0), 2), (ProjPoint(1), 1), (INFINITY, 1)]
        assert dict(critical_points(F1)) == {ProjPoint(0): 1, ProjPoint(1): 1, INFINITY: 1,
                                            ProjPoint(F(-3, 5)): 1}
        assert critical_points(RatFunc(Poly([0, 0, 7]))) == [(ProjPoint(0), 1), (INFINITY, 1)]

    @settings(max_examples=200, deadline=None)
    @given(ratfuncs())
    def test_riemann_hurwitz(self, f):
        try:
            pts = critical_points(f)
        except UnresolvableFactor:
            assume(False)
        assert sum(m for _, m in pts) == 2 * f.degree - 2

    @settings(max_examples=100, deadline=None)
    @given(mobius_maps(), ratfuncs())
    def test_post_composition_invariance(self, sigma, f):
        try:
            crit = dict(critical_points(f))
        except UnresolvableFactor:
            assume(False)
        assert dict(critical_points(compose_post(sigma, f))) == crit

    @settings(max_examples=100, deadline=None)
    @given(mobius_maps(), ratfuncs())
    def test_pre_composition_equivariance(self, tau, f):
        try:
            crit = dict(critical_points(f))
        except UnresolvableFactor:
            assume(False)
        inv = tau.inverse()
        moved = Counter()
        for P, m in crit.items():
            moved[inv(P)] += m
        assert dict(critical_points(compose_pre(f, tau))) == dict(moved)


class TestComposition:
    def test_post_examples(self):
        assert compose_post(Mobius.identity(), F0) == F0
        assert compose_post(Mobius(0, 1, 1, 0), F0) == parse_ratfunc("(3z - 2) / z^3")
        assert compose_post(Mobius(1, 1, 0, 1), F0) == parse_ratfunc("(z^3 + 3z - 2) / (3z - 2)")

    def test_pre_examples(self):
        c = F(4, 7)
        assert compose_pre(F0, Mobius.identity()) == F0
        assert compose_pre(z ** 2, Mobius(1, c, 0, 1)) == (z + c) ** 2
        g = compose_pre(F0, Mobius(0, 1, 1, 0))
        assert dict(critical_points(g)) == {INFINITY: 2, ProjPoint(1): 1, ProjPoint(0): 1}

    @settings(max_examples=100, deadline=None)
    @given(mobius_maps(), mobius_maps(), ratfuncs())
    def test_post_associative(self, s, t, f):
        assert compose_post(s.compose(t), f) == compose_post(s, compose_post(t, f))

    @given(mobius_maps(), ratfuncs())
    def test_pre_matches_direct_substitution(self, t, f):
        sub = t.as_ratfunc()
        direct = sum((sub ** i * c for i, c in enumerate(f.num.coeffs)), RatFunc(Poly())) / \
            sum((sub ** i * c for i, c in enumerate(f.den.coeffs)), RatFunc(Poly()))
        assert compose_pre(f, t) == direct


class TestMobius:
    def test_examples(self):
        assert mobius_inverse(Mobius(1, 1, 0, 1)) == Mobius(1, -1, 0, 1)
        assert mobius_compose(Mobius(2, 0, 0, 1), Mobius(1, 1, 0, 1)) == Mobius(2, 2, 0, 1)
        assert mobius_inverse(Mobius.identity()) == Mobius.identity()

    def test_three_point_examples(self):
        std = [ProjPoint(0), ProjPoint(1), INFINITY]
        assert mobius_from_three_points(std, std) == Mobius.identity()
        assert mobius_from_three_points(std, [ProjPoint(1), ProjPoint(0), INFINITY]) == Mobius(-1, 1, 0, 1)
        s = mobius_from_three_points([2, 3, 5], std)
        assert [s(P) for P in (2, 3, 5)] == std

    def test_coincident_points_rejected(self):
        with pytest.raises(ValueError):
            mobius_from_three_points([0, 0, 1], [0, 1, 2])

    @given(st.lists(rationals(50), min_size=6, max_size=6), st.booleans(), st.booleans())
    def test_three_point_round_trip(self, vals, inf_p, inf_q):
        P = [ProjPoint(v) for v in vals[:3]]
        Q = [ProjPoint(v) for v in vals[3:]]
        if inf_p:
            P[1] = INFINITY
        if inf_q:
            Q[2] = INFINITY
        assume(len(set(P)) == 3 and len(set(Q)) == 3)
        s = mobius_from_three_points(P, Q)
        assert [s(p) for p in P] == Q

    @given(mobius_maps(), rationals())
    def test_group_law(self, s, x):
        assert s.compose(s.inverse()) == Mobius.identity()
        assert s.inverse()(s(x)) == ProjPoint(x)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            Mobius(1, 2, 2, 4)


class TestTextFormat:
    @pytest.mark.parametrize("text", [
        "z^3 / (3z - 2)", "z^2*(z+1)/(5*z-3)", "-7/3*x^3", "(z - 1/2)^-2", "2", "0",
        "(1 + sqrt(5))*z^2 + z / (z - sqrt(5))",
    ])
    def test_round_trip_examples(self, text):
        f = parse_ratfunc(text)
        assert parse_ratfunc(format_ratfunc(f)) == f

    @settings(max_examples=200)
    @given(ratfuncs(degrees=(1, 2, 3, 4), bound=50))
    def test_round_trip(self, f):
        assert parse_ratfunc(str(f)) == f

    def test_implicit_multiplication_and_precedence(self):
        assert parse_ratfunc("3/5z^2") == RatFunc(Poly([0, 0, F(3, 5)]))
        assert parse_ratfunc("-z^2") == RatFunc(Poly([0, 0, -1]))
        assert parse_ratfunc("2(z+1)") == RatFunc(Poly([2, 2]))

    @pytest.mark.parametrize("bad", ["", "z +", "y^2", "z^(1/2)", "(z", "z / 0", "sqrt(z)"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse_ratfunc(bad)


class TestReduction:
    def test_phi_mod_3_degenerates(self):
        phi = parse_ratfunc("-(z^2 + 2z) / (2z + 3)")
        assert phi.reduce_mod_p(3).degree == 1
        assert phi.reduce_mod_p(5).degree == 2
        assert phi.reduce_mod_p(2) == RatFunc(Poly([0, 0, PrimeFieldElem(2, 1)]), Poly([PrimeFieldElem(2, 1)]))
