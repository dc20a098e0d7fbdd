import mpmath as mp

mp.mp.dps = 25
# rho'(v) = -rho(v-1)/v depends only on PAST values: marching is pure
# quadrature.  Use Simpson steps on a half-grid.
K = 4096  # half-steps per unit of u
h2 = mp.mpf(1) / K
H = 2 * h2
UMAX = 20
vals = [None] * (UMAX * K + 2)
for i in range(2 * K + 1):
    u = i * h2
    vals[i] = mp.mpf(1) if u <= 1 else 1 - mp.log(u)


def d(i):
    return -vals[i - K] / (i * h2)


i = 2 * K
while i + 2 <= UMAX * K:
    y = vals[i]
    a, m, b = d(i), None, None
    # derivative values at i, i+1, i+2 need vals[i+1-K], vals[i+2-K]: past, available
    m = -vals[i + 1 - K] / ((i + 1) * h2)
    b = -vals[i + 2 - K] / ((i + 2) * h2)
    vals[i + 2] = y + H * (a + 4 * m + b) / 6  # Simpson
    vals[i + 1] = y + (H / 2) * (5 * a + 8 * m - b) / 12  # exact for cubics
    i += 2

for u in (3, 5, 10, 15, 20):
    print(u, mp.nstr(vals[u * K], 13))
