"""Cubic rational maps in normal form.

Every cubic critical at 0, 1 and infinity is equivalent (by a change of
coordinate on the target) to exactly one

    f_u(z) = z^2 (z + u) / ((2u + 3) z - (u + 2)),     u != -1, -2,

which fixes 0, 1, infinity and has its fourth critical point at
``phi(u) = -(u^2 + 2u) / (2u + 3)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exactfield import QuadExtElem, sqrt_in_field
from .ratfunc import (
    INFINITY,
    ONE,
    ZERO,
    Mobius,
    Poly,
    ProjPoint,
    RatFunc,
    UnresolvableFactor,
    compose_post,
    compose_pre,
    critical_points,
    evaluate,
    mobius_from_three_points,
    wronskian,
)


class DegenerateParameter(ValueError):
    """``u`` in {-1, -2}: numerator and denominator of f_u share a root."""


class NotInNormalForm(ValueError):
    pass


class TooFewCriticalPoints(ValueError):
    """Cubic with two critical points; see :func:`two_point_class`."""


class InvalidCriticalData(ValueError):
    pass


def _scalar(u):
    if isinstance(u, bool):
        raise TypeError("bool is not a field element")
    if isinstance(u, int):
        return Fraction(u)
    if isinstance(u, QuadExtElem) and u.b == 0:
        return u.a
    return u


def field_of_definition(x) -> str:
    if isinstance(x, QuadExtElem) and x.b != 0:
        return f"Q(sqrt({x.d}))"
    return "Q"


@dataclass(frozen=True)
class NormalFormParam:
    u: object
    v: object = field(init=False)

    def __post_init__(self):
        u = _scalar(self.u)
        if u == -1 or u == -2:
            raise DegenerateParameter(f"u = {u} collapses f_u to a quadratic")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", 2 * u + 3)

    @property
    def field(self) -> str:
        return field_of_definition(self.u)

    def is_real(self) -> bool:
        return not isinstance(self.u, QuadExtElem) or self.u.is_real()


def build_f_u(u) -> RatFunc:
    u = NormalFormParam(u).u
    return RatFunc(Poly([0, 0, u, 1]), Poly([-(u + 2), 2 * u + 3]))


PHI = RatFunc(Poly([0, -2, -1]), Poly([3, 2]))


def phi(u) -> ProjPoint:
    """Fourth critical point of ``f_u``; total on P^1 (``-3/2`` and ``inf`` go to ``inf``)."""
    return evaluate(PHI, ProjPoint.of(_scalar(u) if not isinstance(u, ProjPoint) else u))


# --------------------------------------------------------------------------
# critical data
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalQuad:
    """Critical points of a cubic: ``((point, multiplicity), ...)`` sorted, total 4."""
    points: tuple

    @classmethod
    def from_points(cls, pts) -> "CriticalQuad":
        counts = Counter(ProjPoint.of(p) for p in pts)
        return cls.from_multiset(counts)

    @classmethod
    def from_multiset(cls, mult) -> "CriticalQuad":
        items = dict(mult)
        if sum(items.values()) != 4:
            raise InvalidCriticalData(f"total multiplicity {sum(items.values())}, a cubic has 4")
        if any(m < 1 or m > 2 for m in items.values()):
            raise InvalidCriticalData("a cubic has critical multiplicities 1 or 2 only")
        return cls(tuple(sorted(items.items(), key=lambda t: t[0].key())))

    def as_dict(self) -> dict:
        return dict(self.points)

    def distinct(self) -> list:
        return [p for p, _ in self.points]

    def __len__(self):
        return len(self.points)


def critical_quad_of(u) -> CriticalQuad:
    NormalFormParam(u)
    return CriticalQuad.from_points([ZERO, ONE, INFINITY, phi(u)])


def choose_frame(mult: dict):
    """Pick three critical points to send to 0, 1, inf and name the leftover.

    If 0, 1 and inf are all critical they are kept in place.  Otherwise the
    distinct points are ordered by multiplicity (descending), then by value
    with infinity last, and the first three are used.  Returns
    ``(frame, rest)`` where ``rest`` is the fourth point of the multiset.
    """
    if all(p in mult for p in (ZERO, ONE, INFINITY)):
        frame = [ZERO, ONE, INFINITY]
    else:
        ordered = sorted(mult, key=lambda p: (-mult[p], p.key()))
        frame = ordered[:3]
    rest = Counter(mult)
    rest.subtract(frame)
    (fourth,) = [p for p, m in rest.items() if m > 0]
    return frame, fourth


def _mobius_radicands(m: Mobius) -> set:
    return {c.d for c in m.coefficients() if isinstance(c, QuadExtElem)}


# --------------------------------------------------------------------------
# recognition and normalisation
# --------------------------------------------------------------------------

def recover_u(f: RatFunc) -> NormalFormParam:
    """The parameter ``u`` with ``f == f_u``; checks every hypothesis."""
    if f.degree != 3:
        raise NotInNormalForm(f"degree {f.degree}, expected 3")
    for P in (ZERO, ONE, INFINITY):
        if evaluate(f, P) != P:
            raise NotInNormalForm(f"{f} does not fix {P}")
    W = wronskian(f)
    if W(0) != 0 or W(1) != 0 or W.degree > 3:
        raise NotInNormalForm(f"{f} is not critical at 0, 1 and inf")
    num = f.num.monic()
    try:
        param = NormalFormParam(num[2])
    except DegenerateParameter as exc:
        raise NotInNormalForm(str(exc)) from exc
    if build_f_u(param.u) != f:
        raise NotInNormalForm(f"{f} fixes and is critical at 0, 1, inf but is not f_u")
    return param


@dataclass(frozen=True)
class Normalization:
    """``sigma o f o tau == f_u``."""
    tau: Mobius
    sigma: Mobius
    param: NormalFormParam

    @property
    def u(self):
        return self.param.u

    @property
    def field(self) -> str:
        return self.param.field

    def __iter__(self):
        return iter((self.tau, self.sigma, self.param))


def normalize(f: RatFunc) -> Normalization:
    """Move three critical points of the cubic ``f`` to 0, 1, inf (source)
    and their images to 0, 1, inf (target), then read off ``u``."""
    if f.degree != 3:
        raise ValueError(f"normalize needs a cubic, got degree {f.degree}")
    mult = dict(critical_points(f))
    if len(mult) <= 2:
        raise TooFewCriticalPoints(f"{f} has critical points {sorted(mult)} only")
    frame, _ = choose_frame(mult)
    # crit(f o tau) = tau^-1(crit f), so tau carries 0, 1, inf onto the frame
    tau = mobius_from_three_points([ZERO, ONE, INFINITY], frame)
    g = compose_pre(f, tau)
    values = [evaluate(g, P) for P in (ZERO, ONE, INFINITY)]
    sigma = mobius_from_three_points(values, [ZERO, ONE, INFINITY])
    h = compose_post(sigma, g)
    return Normalization(tau, sigma, recover_u(h))


# --------------------------------------------------------------------------
# equivalence classes
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoPoint:
    """Cubics totally ramified over two points ``c1``, ``c2`` (infinity second)."""
    c1: ProjPoint
    c2: ProjPoint

    kind = "TwoPoint"

    def representative(self) -> RatFunc:
        z = RatFunc.z()
        if self.c2.is_inf:
            return (z - self.c1.x) ** 3
        return ((z - self.c1.x) / (z - self.c2.x)) ** 3

    @property
    def field(self) -> str:
        fs = {field_of_definition(c.x) for c in (self.c1, self.c2) if not c.is_inf} - {"Q"}
        return fs.pop() if fs else "Q"


@dataclass(frozen=True)
class Generic:
    """The class of ``f_u o tau^-1``: critical at ``tau(0), tau(1), tau(inf)``."""
    param: NormalFormParam
    tau: Mobius

    kind = "Generic"

    @property
    def u(self):
        return self.param.u

    @property
    def field(self) -> str:
        return self.param.field

    def is_real(self) -> bool:
        return self.param.is_real()

    def representative(self) -> RatFunc:
        return compose_pre(build_f_u(self.u), self.tau.inverse())


def two_point_class(f: RatFunc) -> TwoPoint:
    if f.degree != 3:
        raise ValueError(f"two_point_class needs a cubic, got degree {f.degree}")
    pts = critical_points(f)
    if len(pts) != 2:
        raise ValueError(f"{f} has {len(pts)} distinct critical points, not 2")
    (c1, _), (c2, _) = sorted(pts, key=lambda t: t[0].key())
    return TwoPoint(c1, c2)


def _fiber_coeffs(y):
    # z^2 + 2(1+y) z + 3y = 0
    return 2 * (1 + y), 3 * y


def solve_phi(y) -> list:
    """All ``u`` with ``phi(u) == y``.

    ``y = inf`` gives ``[-3/2]``.  Otherwise both roots of
    ``z^2 + 2(1+y) z + 3y``, rational when the discriminant ``4(y^2-y+1)``
    is a rational square and in ``Q(sqrt d)`` otherwise.  For ``y`` already
    in ``Q(sqrt d)`` the roots must stay in that field.
    """
    P = ProjPoint.of(y)
    if P.is_inf:
        return [Fraction(-3, 2)]
    y = P.x
    b, c = _fiber_coeffs(y)
    s = sqrt_in_field(b * b - 4 * c)
    if s is None:
        raise UnresolvableFactor(f"fiber of phi over {y} needs a second quadratic extension")
    r1, r2 = (-b - s) / 2, (-b + s) / 2
    r1, r2 = _scalar(r1), _scalar(r2)
    if r1 == r2:
        return [r1]
    return sorted([r1, r2], key=lambda r: ProjPoint(r).key())


def cubics_with_critical_quad(points) -> list:
    """Equivalence classes of cubics with the given critical multiset.

    ``points`` is either four points (repeats allowed) or a mapping
    ``{point: multiplicity}``.  At most two classes come back.
    """
    crit = (CriticalQuad.from_multiset(points) if isinstance(points, dict)
            else CriticalQuad.from_points(points))
    mult = crit.as_dict()
    if len(mult) == 2:
        (c1, _), (c2, _) = crit.points
        return [TwoPoint(c1, c2)]
    frame, fourth = choose_frame(mult)
    tau = mobius_from_three_points([ZERO, ONE, INFINITY], frame)
    y = tau.inverse()(fourth)
    classes = []
    for u in solve_phi(y):
        if u == -1 or u == -2:
            continue
        classes.append(Generic(NormalFormParam(u), tau))
    return classes


def quadratic_with_critical_points(c1, c2) -> RatFunc:
    c1, c2 = ProjPoint.of(c1), ProjPoint.of(c2)
    if c1 == c2:
        raise ValueError("critical points must be distinct")
    if c1.is_inf:
        c1, c2 = c2, c1
    z = RatFunc.z()
    if c2.is_inf:
        return (z - c1.x) ** 2
    return ((z - c1.x) / (z - c2.x)) ** 2


def equivalent(f: RatFunc, g: RatFunc):
    """A Mobius ``sigma`` with ``f == sigma o g``, or ``None``."""
    if f.degree != g.degree or f.degree < 1:
        return None
    probes, seen = [], set()
    z = 0
    while len(probes) < 3 and z < 4 * g.degree + 8:
        gz = evaluate(g, z)
        if not gz.is_inf and gz not in seen:
            probes.append(z)
            seen.add(gz)
        z += 1
    if len(probes) < 3:
        return None
    src = [evaluate(g, z) for z in probes]
    dst = [evaluate(f, z) for z in probes]
    if len(set(dst)) < 3:
        return None
    sigma = mobius_from_three_points(src, dst)
    return sigma if compose_post(sigma, g) == f else None
