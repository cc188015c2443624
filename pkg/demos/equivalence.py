"""
Equivalence of rational maps
============================

Two maps f, g are equivalent when f = sigma o g for a Mobius sigma.
Equivalent maps share their critical points, and two normal forms f_u,
f_v are equivalent only when u = v.
"""
from cubicmaps import Mobius, build_f_u, compose_post, critical_points, equivalent
from cubicmaps.ratfunc import format_mobius

f1 = build_f_u(1)
s = Mobius(1, 2, 1, -1)          # z -> (z + 2) / (z - 1)
g = compose_post(s, f1)
print("g = sigma o f_1 =", g)
print("same critical points:", critical_points(g) == critical_points(f1))

found = equivalent(g, f1)
print("recovered sigma:", format_mobius(found))
assert found == s

for v in (0, 2, -3):
    print(f"f_1 ~ f_{v}?", equivalent(build_f_u(1), build_f_u(v)) is not None)
