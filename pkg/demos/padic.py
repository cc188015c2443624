"""
Surjectivity of phi over R and Q_p
==================================

phi(z) = -(z^2 + 2z) / (2z + 3) hits y exactly when the discriminant
Delta(y) = 4(y^2 - y + 1) = (2y - 1)^2 + 3 of z^2 + 2(1 + y) z + 3y is a
square.  Over R it always is.  Over Q_p it never covers everything, and
that includes p = 3.
"""
from fractions import Fraction as F

from cubicmaps import (cubics_with_critical_quad, discriminant, ord_p, qp_perfect,
                       qp_solvable, real_perfect, solve_phi)
from cubicmaps.perfectness import verify_witness
from cubicmaps.ratfunc import INFINITY, ProjPoint

print(real_perfect().as_record())

for p in (2, 3, 5, 7, 11, 13):
    v = qp_perfect(p)
    print(f"p={p:2d}  perfect={v.perfect}  witness={v.witness}  "
          f"{v.certificate.kind}  verified={verify_witness(p, v.witness)}")

# Q_3: the values 2 + 3t are missed since Delta = 3 (3k^2 + 1) has odd valuation
y = F(2)
print("\nDelta(2) =", discriminant(y), " ord_3 =", ord_p(3, discriminant(y)))
print("phi(z) = 2 needs z in", [str(u) for u in solve_phi(y)])
print("qp_solvable(3, y) for y = 2, 5, -1, 1/2, 1/3, 7/9:",
      [qp_solvable(3, q) for q in (2, 5, -1, F(1, 2), F(1, 3), F(7, 9))])

# so the critical set {0, 1, inf, 2} carries no cubic defined over Q_3
classes = cubics_with_critical_quad([ProjPoint(0), ProjPoint(1), INFINITY, ProjPoint(2)])
print("classes for {0, 1, inf, 2}:", [str(c.u) for c in classes])
