import time
from fractions import Fraction

from ffs_polyselect.gf import *
from ffs_polyselect.bivariate import *
from ffs_polyselect.roots import *
from ffs_polyselect.roots import alpha_ell_fraction

F2 = make_field(2)
F3 = make_field(3)
P2 = lambda s: parse_bipoly(F2, s)
t2 = F2.t_poly()

# --- alpha_ell spot values ---
lin = P2("x+(t^3+1)")
print("alpha_ell(linear, t) =", alpha_ell(lin, t2, 24), "expect", 1 / 3)
f2roots = P2("x^2+x+(t^64+t)")  # x(x-1)-(t^64-t) in char 2
aff, proj = roots_mod(f2roots, t2)
print("roots mod t of x(x-1)-(t^64-t):", [(render_upoly(r), s) for r, s in aff], "proj:", proj)
print("alpha_ell =", alpha_ell(f2roots, t2, 24), "expect", -1 / 3)

# n_ell = 0 case
f_null = P2("x^2+x+1")  # no roots mod t: x^2+x+1 at x=0,1 -> 1
print("alpha_ell(x^2+x+1, t) =", alpha_ell(f_null, t2, 24), "expect", 1.0)

# f0 = x^4 + t*lam0
lam0 = parse_upoly(F2, "t^9+t^7+t^6+t^3+t+1")
tlam = lam0 * t2
f0 = BiPoly(F2, [tlam, F2.zero_poly(), F2.zero_poly(), F2.zero_poly(), F2.one_poly()])
print("alpha_t(f0) =", alpha_ell(f0, t2, 60), "expect", 2 / 3)
tp1 = parse_upoly(F2, "0x3")
print("alpha_t+1(f0) =", alpha_ell(f0, tp1, 60), "expect", 1 / 3)

# --- Theorem 1 via full alpha ---
s = time.time()
a = alpha(lin, 20)
print(f"alpha(linear, 20) = {a.value:.6f} expect 1.0  ({time.time()-s:.2f}s)")

# --- aggregate vs per-ell direct sum at small b0 (validation of aggregation) ---
def alpha_direct(f, b0, k_max_deg):
    tot = Fraction(0)
    for ell in irreducibles_stream(f.ctx, max_degree=b0):
        tot += alpha_ell_fraction(f, ell, k_max_deg)
    return tot

for name, f in [
    ("f0", f0),
    ("x^5+x+t^2+1", P2("x^5+x+(t^2+1)")),
    ("generic6", P2("x^6+(t^2+t+1)x^5+(t^2+t)x+(t^12+t^10+t^8+t^5+t^3+t)")),
]:
    b0s = 7
    km = 3 * b0s
    d = alpha_direct(f, b0s, km)
    g = alpha(f, b0s, km)
    ok = abs(float(d) - g.value) < 1e-12
    print(f"aggregate vs direct b0={b0s} {name}: {float(d):.6f} vs {g.value:.6f} ok={ok}")

# --- the big table values ---
for name, f, expect in [
    ("f0", f0, 1.27),
    ("f1", BiPoly(F2, [parse_upoly(F2, "t^16+t^12+t^11+t^7+t^4+1") * t2,
                        F2.zero_poly(), F2.zero_poly(), F2.zero_poly(), F2.one_poly()]), -1.05),
    ("f2", P2("x^5+x+(t^2+1)"), 2.15),
    ("f3", parse_bipoly(F2, "(t^2+t)x^5+(t^2+t+1)x^4+(t+1)x^3+(t^2)x^2+(t^2)x+(t^2)"), -0.24),
    ("f4", parse_bipoly(F2, "(t^2+t+1)x^5+(t^2+t+1)x^4+x^3+(t^2+t+1)x^2+(t^2+t+1)x+(t^2+t)"), -0.10),
]:
    s = time.time()
    a = alpha(f, 20)
    print(f"alpha({name}, 20) = {a.value:.4f} expect {expect}  heur={a.heuristic} ({time.time()-s:.1f}s)")

# --- F3 inseparable ---
s = time.time()
fi = parse_bipoly(F3, "x^6+t")
a = alpha(fi, 13)
print(f"alpha(x^6+t /F3, 13) = {a.value:.4f} expect 1.33  ({time.time()-s:.1f}s)")

# --- tail bound ---
for mode in ("calibrated", "proven"):
    v15 = alpha_tail_bound(b0=15, genus=19, q=2, mode=mode)
    v20 = alpha_tail_bound(b0=20, genus=19, q=2, mode=mode)
    print(f"tail {mode}: b0=15 -> {v15:.4f} (0.567), b0=20 -> {v20:.4f} (0.097)")

# --- oracle ---
s = time.time()
for name, f in [("linear", lin), ("2roots", f2roots), ("f0", f0)]:
    for ells in ["0x2", "0x3", "0x7"]:
        ell = parse_upoly(F2, ells)
        nb = 8 * int(ell.degree)
        ah = valuation_average_oracle(f, ell, nb)
        k = int(ell.degree)
        N = 2 ** k
        pred = float(Fraction(k, N - 1) - k * Fraction(0))
        a_ell = alpha_ell(f, ell, 24)
        recon = k / (N - 1) - k * ah
        print(f"oracle {name} ell={ells}: alpha_ell={a_ell:.4f} oracle-recon={recon:.4f} diff={abs(a_ell-recon):.4f}")
print(f"oracle time {time.time()-s:.1f}s")
