import random
from fractions import Fraction

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from cubicmaps.ratfunc import Mobius, Poly, RatFunc


def rationals(bound=1000, nonzero=False):
    num = st.integers(-bound, bound)
    if nonzero:
        num = num.filter(lambda n: n != 0)
    return st.builds(Fraction, num, st.integers(1, bound))


def mobius_maps(bound=20):
    q = rationals(bound)
    return st.tuples(q, q, q, q).filter(lambda t: t[0] * t[3] != t[1] * t[2]).map(
        lambda t: Mobius(*t))


@st.composite
def ratfuncs(draw, degrees=(2, 3), bound=9):
    deg = draw(st.sampled_from(degrees))
    top = draw(st.booleans())
    nd = deg if top else draw(st.integers(0, deg))
    dd = draw(st.integers(0, deg)) if top else deg
    num = draw(st.lists(st.integers(-bound, bound), min_size=nd, max_size=nd))
    den = draw(st.lists(st.integers(-bound, bound), min_size=dd, max_size=dd))
    num.append(draw(st.integers(1, bound)))
    den.append(draw(st.integers(1, bound)))
    f = RatFunc(Poly(num), Poly(den))
    assume(f.degree == deg)
    return f


normal_params = rationals(1000).filter(lambda u: u not in (-1, -2))


def random_rational(rng, bound=1000):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


@pytest.fixture
def rng():
    return random.Random(20261014)
