"""
Cubics with prescribed critical points
======================================

Four distinct points in P^1(Q) are the critical set of at most two
classes of cubics up to post-composition.  They come from the two roots
of z^2 + 2(1 + y) z + 3y, where y is the fourth point once the first
three have been moved to 0, 1, infinity.
"""
from fractions import Fraction as F

from cubicmaps import catalan_bound, cubics_with_critical_quad, solve_phi
from cubicmaps.ratfunc import INFINITY, ProjPoint, critical_points

pts = [ProjPoint(x) for x in (-1, 0, 2, 5)]
classes = cubics_with_critical_quad(pts)
print("classes:", len(classes), "(bound", catalan_bound(3), ")")
for c in classes:
    f = c.representative()
    print(f"  u = {c.u}   field {c.field}")
    print("    representative", f)
    print("    critical", [str(P) for P, _ in critical_points(f)])

# the fiber over y = 1/3 needs sqrt(7)
print("\nsolve_phi(1/3):", [str(u) for u in solve_phi(F(1, 3))])

# a double critical point: the two classes may merge
pts = [ProjPoint(0), ProjPoint(0), ProjPoint(1), INFINITY]
for c in cubics_with_critical_quad(pts):
    print("double at 0 -> u =", c.u, "f =", c.representative())
