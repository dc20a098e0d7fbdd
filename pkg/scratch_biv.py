import random

from ffs_polyselect.gf import *
from ffs_polyselect.bivariate import *

F2 = make_field(2)
F3 = make_field(3)
P = lambda s: parse_bipoly(F2, s)

f = P("x^2+t")
g = P("x+1")
print("Res(x^2+t, x+1):", resultant_x(f, g))  # expect t+1

f = P("x^3+(t^2)x+1")
print("norm at (t,1):", norm_eval(f, parse_upoly(F2, "t"), F2.one_poly()))  # expect 1

gbig = P("x+(t^104+t^14+t^13+t^11+t^10+t^8+t^7+t^5+t^4+t^3+t+1)")
print("F(1,0) =", norm_eval(gbig, F2.one_poly(), F2.zero_poly()))  # lead coeff = 1

print("disc(x^2+x+t):", discriminant_x(P("x^2+x+t")))  # expect 1
try:
    discriminant_x(P("x^2+t"))
except ValueError as e:
    print("disc(x^2+t) error ok")
print("disc(x^3+(t^2)x+1):", discriminant_x(P("x^3+(t^2)x+1")))

fh, d = separability_decompose(parse_bipoly(F3, "x^6+t"))
print("decompose x^6+t /F3:", render_bipoly(fh), d)

tlam = parse_upoly(F2, "t^9+t^7+t^6+t^3+t+1") * F2.t_poly()
f0 = BiPoly(F2, [tlam, F2.zero_poly(), F2.zero_poly(), F2.zero_poly(), F2.one_poly()])
fh, d = separability_decompose(f0)
print("decompose x^4+t*lam0:", render_bipoly(fh), d)

f2p = P("x^5+x+(t^2+1)")
fh, d = separability_decompose(f2p)
print("x^5+x+t^2+1 separable:", d == 1 and fh == f2p)

random.seed(1)
count = 0
for trial in range(60):
    ctx = random.choice([F2, F3])

    def rpoly(dx, dt):
        rows = []
        for i in range(dx + 1):
            rows.append(UPoly(ctx, [random.randrange(ctx.q) for _ in range(random.randint(0, dt) + 1)]))
        return BiPoly(ctx, rows)

    a = rpoly(random.randint(1, 4), 3)
    b = rpoly(random.randint(1, 4), 3)
    if a.is_zero() or b.is_zero() or a.degx < 1 or b.degx < 1:
        continue
    r1 = resultant_x(a, b)
    r2 = sylvester_resultant_x(a, b)
    assert r1 == r2, (trial, render_bipoly(a), render_bipoly(b), r1, r2)
    count += 1
print(f"PRS == Sylvester on {count} random cases")

# paper pair f2, g2 for n = 607
f2 = P("x^5+x+(t^2+1)")
g2 = BiPoly(F2, [F2.one_poly(), parse_upoly(F2, "t^121+t^8+t^7+t^5+t^4+1")])
import time

s = time.time()
r = resultant_x(f2, g2)
print("deg Res(f2,g2):", r.degree, "expect", 5 * (607 // 5 + 1))
rep = validate_ffs_pair(f2, g2, 607)
print("validate (f2,g2,607):", rep.valid, f"{time.time()-s:.2f}s")

# small invalid example: (x^2+t, x+t, 2): Res = t^2+t -> no degree-2 factor
rep = validate_ffs_pair(P("x^2+t"), P("x+t"), 2)
print("(x^2+t, x+t, 2):", rep.valid, [(render_upoly(e), m) for e, m in rep.small_factors])

# Table 3 rows
ft = P("x^6+tx^5+(t+1)x^4+(t^2+t+1)x^3")
gt = P("x+(t^104)+(t^14+t^13+t^11+t^10+t^8)")


def with_consts(fc, gc):
    f = ft + BiPoly(F2, [parse_upoly(F2, fc)])
    g = gt + BiPoly(F2, [parse_upoly(F2, gc)])
    return f, g


for fc, gc, expect in [("0x12", "0xae", "t*(t+1)"), ("0x12", "0xbb", "t,(t+1),(t^3+t^2+1)"), ("0x19", "0xb2", "-")]:
    f, g = with_consts(fc, gc)
    sf = resultant_small_factors(f, g, 6)
    print(fc, gc, "->", [(render_upoly(e, "pretty"), m) for e, m in sf], "expect", expect)
