"""
Cubic normal forms
==================

Every cubic with at least three critical points can be moved, by changes
of coordinate on source and target, to a single map

    f_u(z) = z^2 (z + u) / ((2u + 3) z - (u + 2))

which fixes 0, 1 and infinity, is critical there, and has its fourth
critical point at phi(u).
"""
from fractions import Fraction as F

from cubicmaps import build_f_u, critical_points, normalize, parse_ratfunc, phi
from cubicmaps.ratfunc import Mobius, compose_post, compose_pre, format_mobius

# the map for u = 1 and its critical points (point, multiplicity)
f1 = build_f_u(1)
print("f_1 =", f1)
for P, m in critical_points(f1):
    print("  critical", P, "mult", m)
print("phi(1) =", phi(1))

# scramble it on both sides, then normalise back
sigma = Mobius(2, -1, 1, 3)
tau = Mobius(1, F(1, 2), 0, 1)
g = compose_post(sigma, compose_pre(f1, tau))
print("\ng =", g)
nf = normalize(g)
print("tau   =", format_mobius(nf.tau))
print("sigma =", format_mobius(nf.sigma))
print("u     =", nf.u)
assert compose_post(nf.sigma, compose_pre(g, nf.tau)) == build_f_u(nf.u)

# critical points can be irrational: z^3 - 6z is critical at +-sqrt(2)
h = parse_ratfunc("z^3 - 6z")
nf = normalize(h)
print("\nz^3 - 6z  ->  u =", nf.u, "with tau =", format_mobius(nf.tau))
