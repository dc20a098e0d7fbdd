from fractions import Fraction

from ffs_polyselect.gf import *
from ffs_polyselect.bivariate import *
from ffs_polyselect.laurent import *

F2 = make_field(2)
P2 = lambda s: parse_bipoly(F2, s)

# Newton polygon examples
f7 = P2("x^7+(t^3)x^6+(t^5)x^5+(t^6+1)x^4+(t^6)x^3+(t^5+t+1)x^2+(t^3)x+1")
np7 = newton_polygon(f7)
print("7-edge polygon:", np7.edges)
assert len(np7.edges) == 7 and all(l == 1 for _, l in np7.edges)

fk = P2("x+(t^5)")
print("x+t^5 polygon:", newton_polygon(fk).edges)  # slope 5, length 1

# f(x + t^4) should have no length-1 edges
from ffs_polyselect.laurent import LaurentBi

h = LaurentBi.from_bipoly(f7).shift_x_by(1, 4)
# convert back to BiPoly (all shifts >= 0 expected)
coeffs = []
for i in range(h.degx + 1):
    c = h.coeff(i)
    coeffs.append(c.poly.shift(c.shift) if not c.is_zero() else F2.zero_poly())
f7s = BiPoly(F2, coeffs)
np7s = newton_polygon(f7s)
print("shifted polygon lengths:", [l for _, l in np7s.edges])
assert not any(l == 1 for _, l in np7s.edges)

# the running example f = x^3 + t^2 x + 1
f = P2("x^3+(t^2)x+1")
roots = laurent_roots(f, 12)
for r in roots:
    for node in r.iter_nodes():
        print("node:", node.render(), "m=", node.m, "gap=", node.gap,
              "levels=", node.levels, "inf=", node.infinite)

# alpha_infinity examples
g = P2("x+(t^9+1)")  # linear, monic lead, deg g0 = 9
v = alpha_infinity(g, 9, exact=True)
print("alpha_inf(linear, s=deg g0):", v, "expect", Fraction(-2, 3))

f6 = P2("x^6+(t^3)x^5+(t^5)x^4+(t^6)x^3+(t^6)x^2+(t^5)x+(t^3)")
print("f6 polygon:", newton_polygon(f6).edges)
v = alpha_infinity(f6, 0, exact=True)
print("alpha_inf(f6, 0):", v, float(v), "expect -1.75")

# C_ab-style polynomial: no Laurent roots
cab = P2("x^2+(t^3+t+1)")  # slopes 3/2: fractional
print("cab slopes:", fractional_slope_diagnostics(cab))
print("cab roots:", laurent_roots(cab, 10))
print("alpha_inf(cab, s):", [alpha_infinity(cab, s) for s in (-2, 0, 2)])

# f0/f1 from the tables: alpha_inf must be 0 (slope 10/4, 17/4 fractional)
t2 = F2.t_poly()
lam0 = parse_upoly(F2, "t^9+t^7+t^6+t^3+t+1")
f0 = BiPoly(F2, [lam0 * t2, F2.zero_poly(), F2.zero_poly(), F2.zero_poly(), F2.one_poly()])
print("alpha_inf(f0, 7):", alpha_infinity(f0, 7))

# x^5+x+t^2+1: polygon?
f2jl = P2("x^5+x+(t^2+1)")
print("f2 polygon:", newton_polygon(f2jl).edges)
print("alpha_inf(f2, 1):", alpha_infinity(f2jl, 1))
