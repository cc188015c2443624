"""
phi modulo p
============

For p > 3 the reduction of phi is still a quadratic map on P^1(F_p), so
it cannot be onto.  At p = 3 the numerator and denominator share a
factor mod 3 and the map drops to degree 1, which is why the resultant
of phi is 3 up to sign.
"""
from cubicmaps import Poly, fp_scan, resultant

print("res(z^2 + 2z, 2z + 3) =", resultant(Poly([0, 2, 1]), Poly([3, 2])))

for p in (3, 5, 7, 11, 13, 17, 19, 23):
    s = fp_scan(p)
    print(f"p={p:2d}  degree={s.reduced_degree}  |image|={len(s.image):2d}/{p + 1}  "
          f"missing={s.missing_residues()}")
