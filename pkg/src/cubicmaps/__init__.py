"""Exact normal forms for cubic rational maps and phi-perfectness of fields."""
from .exactfield import (
    INF,
    PAdicRational,
    PrimeFieldElem,
    QuadExtElem,
    hensel_sqrt,
    is_square_in_Qp,
    legendre_symbol,
    ord_p,
    sqrt_mod_p,
)
from .ratfunc import (
    INFINITY,
    Mobius,
    Poly,
    ProjPoint,
    RatFunc,
    UnresolvableFactor,
    compose_post,
    compose_pre,
    critical_points,
    derivative,
    evaluate,
    mobius_compose,
    mobius_from_three_points,
    mobius_inverse,
    parse_ratfunc,
    resultant,
    wronskian,
)
from .cubicnf import (
    CriticalQuad,
    Generic,
    NormalFormParam,
    TwoPoint,
    build_f_u,
    critical_quad_of,
    cubics_with_critical_quad,
    equivalent,
    normalize,
    phi,
    quadratic_with_critical_points,
    recover_u,
    solve_phi,
    two_point_class,
)
from .perfectness import (
    SolvabilityVerdict,
    catalan_bound,
    discriminant,
    fp_scan,
    qp_perfect,
    qp_solvable,
    real_perfect,
    real_solvable,
    verify_witness,
)

__version__ = "0.1.0"
