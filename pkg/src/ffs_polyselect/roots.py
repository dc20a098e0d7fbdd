"""Root property: modular roots, lifting, alpha_ell and alpha.

alpha_ell(f) is deg(ell) * (1/(N-1) - N/(N+1) * sum_{(r,k)} N^-k) over the
set of affine and projective roots r mod ell^k.  Per-ell computation tracks
roots of the separable part fhat exactly (Hensel chains for simple roots,
explicit frontier otherwise) and converts them to root counts of
f = fhat(x^D) via D-th-power counting in F_q[t]/ell^k (D a power of the
characteristic, so the D-th power map is a ring endomorphism there).

alpha(f, b0) sums alpha_ell over all monic irreducible ell of degree <= b0.
Only finitely many ell behave non-generically: the divisors of

    W = Disc(fhat) * lead(fhat)            (separable part's bad primes)
      * const(fhat) * Res(fhat, dfhat/dt)  (when D > 1: lifting obstructions)

Every other ell contributes a closed form in its root count n_ell, so the
sum aggregates per degree from bulk root counts (vectorized for q = 2,
closed-form for quadratic fhat in odd characteristic, per-ell otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bivariate import BiPoly, resultant_x, separability_decompose
from .gf import (
    UPoly,
    count_irreducibles,
    factor_low_degree,
    gcd,
    irreducibles_stream,
    pow_mod,
    upoly_from_code,
)
from .stdfield import GF2k, quadratic_pair_counts

FRONTIER_CAP = 1 << 16


def default_b0(q):
    """Degree cutoff matching roughly 2^20 residues at the last degree
    (the fixed work budget used throughout); 20 for the binary field."""
    if q == 2:
        return 20
    b0 = 1
    while q ** b0 < (1 << 20):
        b0 += 1
    return b0


def default_k_max_deg(b0):
    return 3 * b0


# ---------------------------------------------------------------------------
# residue-field roots of the separable part


def _residue_roots(fh, ell):
    """Roots of fh mod ell in the residue field, as (residue, simple) pairs."""
    ctx = fh.ctx
    k = int(ell.degree)
    N = ctx.q ** k
    cs = [c % ell for c in fh.coeffs]
    while cs and cs[-1].is_zero():
        cs.pop()
    if not cs:
        raise ValueError("polynomial vanishes mod ell; extract content first")
    if len(cs) == 1:
        return []
    dcs = []
    for i in range(1, len(cs)):
        dcs.append((cs[i] * (i % ctx.p)) % ell)
    while dcs and dcs[-1].is_zero():
        dcs.pop()

    def horner(coeffs, r):
        acc = ctx.zero_poly()
        for c in reversed(coeffs):
            acc = (acc * r + c) % ell
        return acc

    out = []
    if N <= 4096:
        for code in range(N):
            r = upoly_from_code(ctx, code)
            if horner(cs, r).is_zero():
                simple = not horner(dcs, r).is_zero() if dcs else False
                out.append((r, simple))
        return out
    # large residue field: split gcd(f, x^N - x) into linear factors
    fbar = [c for c in cs]
    inv_lead = _res_inv(fbar[-1], ell)
    fbar = [(c * inv_lead) % ell for c in fbar]
    xq = _x_powmod_frobenius(fbar, ell, N)
    while len(xq) < 2:
        xq.append(ctx.zero_poly())
    xq[1] = (xq[1] - ctx.one_poly()) % ell
    while len(xq) > 1 and xq[-1].is_zero():
        xq.pop()
    g = _x_gcd(fbar, xq, ell)
    for r in _linear_split(g, ell, N):
        simple = not horner(dcs, r).is_zero() if dcs else False
        out.append((r, simple))
    out.sort(key=lambda rs: rs[0].code())
    return out


def _res_inv(a, ell):
    from .gf import xgcd

    g, u, _ = xgcd(a % ell, ell)
    if not g.is_one():
        raise ZeroDivisionError("non-unit in residue field")
    return u % ell


def _x_mulmod(A, B, M, ell):
    """Product of x-polynomials (lists of residues) modulo monic M, mod ell."""
    ctx = ell.ctx
    z = ctx.zero_poly()
    out = [z] * (len(A) + len(B) - 1)
    for i, a in enumerate(A):
        if not a.is_zero():
            for j, b in enumerate(B):
                if not b.is_zero():
                    out[i + j] = (out[i + j] + a * b) % ell
    dm = len(M) - 1
    for i in range(len(out) - 1, dm - 1, -1):
        c = out[i]
        if not c.is_zero():
            out[i] = z
            for j in range(dm):
                out[i - dm + j] = (out[i - dm + j] - c * M[j]) % ell
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _x_powmod_frobenius(M, ell, N):
    """x^N mod M over the residue field, N = size of that field."""
    ctx = ell.ctx
    z = ctx.zero_poly()
    one = ctx.one_poly()
    acc = [one]
    base = [z, one]  # x
    e = N
    while e:
        if e & 1:
            acc = _x_mulmod(acc, base, M, ell)
        base = _x_mulmod(base, base, M, ell)
        e >>= 1
    return acc


def _x_deg(P):
    for i in range(len(P) - 1, -1, -1):
        if not P[i].is_zero():
            return i
    return -1


def _x_mod(A, B, ell):
    """A mod B over the residue field (B nonzero)."""
    A = list(A)
    dB = _x_deg(B)
    invl = _res_inv(B[dB], ell)
    dA = _x_deg(A)
    while dA >= dB:
        c = (A[dA] * invl) % ell
        if not c.is_zero():
            for j in range(dB + 1):
                A[dA - dB + j] = (A[dA - dB + j] - c * B[j]) % ell
        dA -= 1
        while dA >= 0 and A[dA].is_zero():
            dA -= 1
    return A[: dA + 1] if dA >= 0 else []


def _x_gcd(A, B, ell):
    """Monic gcd of x-polynomials over the residue field."""
    A, B = list(A), list(B)
    while _x_deg(B) >= 0:
        A, B = B, _x_mod(A, B, ell)
    d = _x_deg(A)
    if d < 0:
        return []
    invl = _res_inv(A[d], ell)
    return [(c * invl) % ell for c in A[: d + 1]]


def _linear_split(g, ell, N):
    """Roots of g = prod (x - r_i) over the residue field (deterministic:
    splitting elements come from a fixed LCG sequence)."""
    ctx = ell.ctx
    z = ctx.zero_poly()
    roots = []
    state = 0xD1B54A32D192ED03
    stack = [list(g)]
    while stack:
        h = stack.pop()
        d = _x_deg(h)
        if d <= 0:
            continue
        if d == 1:
            roots.append((-h[0] * _res_inv(h[1], ell)) % ell)
            continue
        while True:
            state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            a = upoly_from_code(ctx, state % ell.code()) % ell
            if a.is_zero():
                continue
            if ctx.p == 2:
                # trace polynomial of a*x modulo h splits the roots
                k_bits = int(ell.degree) * ctx.m
                cur = [z, a]
                tr = [z, z]
                for _ in range(k_bits):
                    n = max(len(tr), len(cur))
                    tr = [
                        ((tr[i] if i < len(tr) else z) + (cur[i] if i < len(cur) else z)) % ell
                        for i in range(n)
                    ]
                    cur = _x_mulmod(cur, cur, h, ell)
                cand = _x_gcd(h, tr, ell)
            else:
                base = [a, ctx.one_poly()]  # x + a
                e = (N - 1) // 2
                acc = [ctx.one_poly()]
                while e:
                    if e & 1:
                        acc = _x_mulmod(acc, base, h, ell)
                    base = _x_mulmod(base, base, h, ell)
                    e >>= 1
                acc = list(acc) + [z]
                acc[0] = (acc[0] - ctx.one_poly()) % ell
                cand = _x_gcd(h, acc, ell)
            dc = _x_deg(cand)
            if 0 < dc < d:
                stack.append(cand)
                stack.append(_x_divide(h, cand, ell))
                break
    return roots


def _x_divide(A, B, ell):
    """Exact quotient of x-polynomials over the residue field."""
    A = list(A)
    dB = len(B) - 1
    invl = _res_inv(B[dB], ell)
    out = [ell.ctx.zero_poly()] * (len(A) - dB)
    for i in range(len(A) - 1, dB - 1, -1):
        c = (A[i] * invl) % ell
        out[i - dB] = c
        if not c.is_zero():
            for j in range(dB + 1):
                A[i - dB + j] = (A[i - dB + j] - c * B[j]) % ell
    return out


# ---------------------------------------------------------------------------
# D-th power counting in F_q[t]/ell^K  (D = power of the characteristic)


def _dth_root_count(y, K, D, ell, ellpows, N, vmin=0):
    """#{r mod ell^K : r^D = y mod ell^K, v_ell(r) >= vmin}.

    The D-th power map is a ring endomorphism (iterated Frobenius), so the
    count is N^(K - ceil(K/D)) on the image; membership is tested greedily
    digit by digit.  vmin filters the projective side (roots divisible by
    ell)."""
    q = ell.ctx.q
    if D == 1:
        if y.is_zero():
            return 1 if vmin <= K else 0
        return 1 if y.valuation(ell) >= vmin else 0
    ceil = lambda a, b: -(-a // b)
    if y.is_zero():
        j = max(ceil(K, D), vmin)
        if j > K:
            return 0 if vmin > K else 1
        return N ** (K - j)
    v = y.valuation(ell)
    if v % D != 0:
        return 0
    vr = v // D
    if vr < vmin:
        return 0
    J = K - v
    u = y
    for _ in range(v):
        u = u // ell
    u = u % ellpows[J]
    if not _is_dth_power_unit(u, J, D, ell, ellpows):
        return 0
    count_mod_lJ = N ** (J - ceil(J, D))
    return count_mod_lJ * N ** (v - vr)


def _is_dth_power_unit(u, J, D, ell, ellpows):
    """Is the unit u a D-th power mod ell^J?  Greedy Frobenius-digit lift."""
    ctx = ell.ctx
    k = int(ell.degree)
    N = ctx.q ** k
    modJ = ellpows[J]
    # D-th root in the residue field: exponent = D^{-1} mod (N - 1)
    e_root = pow(D, -1, N - 1)
    z = pow_mod(u % ell, e_root, ell)
    while True:
        err = (u - pow_mod(z, D, modJ)) % modJ
        if err.is_zero():
            return True
        v = err.valuation(ell)
        if v >= J:
            return True
        if v % D != 0:
            return False
        digit = (err // ellpows[v]) % ell
        w = pow_mod(digit, e_root, ell)
        z = (z + w * ellpows[v // D]) % modJ


# ---------------------------------------------------------------------------
# per-ell exact alpha


def _bipoly_eval_mod(fh, y, mod):
    """fh(y) mod `mod` for a UPoly residue y."""
    acc = fh.ctx.zero_poly()
    for c in reversed(fh.coeffs):
        acc = (acc * y + c) % mod
    return acc


def _root_mass(fh, D, ell, k0, vmin):
    """sum over levels of (f-root count at level j) * weight_j, with the
    level-k0 entries closed by the geometric tail (assumed to extend)."""
    ctx = fh.ctx
    k = int(ell.degree)
    N = ctx.q ** k
    ellpows = [ctx.one_poly()]
    for _ in range(k0 + 1):
        ellpows.append(ellpows[-1] * ell)
    base_roots = _residue_roots(fh, ell)
    if not base_roots:
        return Fraction(0), 0, 0
    fhp = fh.deriv_x()
    # node: (y, simple, inv_delta or None)
    nodes = []
    for r, simple in base_roots:
        inv_delta = None
        if simple:
            delta = _bipoly_eval_mod(fhp, r, ell)
            inv_delta = _res_inv(delta, ell)
        nodes.append((r, simple, inv_delta))
    mass = Fraction(0)
    level1 = None
    alive_at_cutoff = 0
    for level in range(1, k0 + 1):
        cnt = 0
        for y, _s, _i in nodes:
            cnt += _dth_root_count(y, level, D, ell, ellpows, N, vmin)
        if level == 1:
            level1 = cnt
        if level < k0:
            mass += Fraction(cnt, N ** level)
        else:
            alive_at_cutoff = cnt
            mass += Fraction(cnt, N ** (k0 - 1) * (N - 1))
            break
        # advance to the next level
        new_nodes = []
        modnext = ellpows[level + 1]
        for y, simple, inv_delta in nodes:
            val = _bipoly_eval_mod(fh, y, modnext)
            if simple:
                digit = (val // ellpows[level]) % ell
                w = (-digit * inv_delta) % ell
                new_nodes.append(((y + w * ellpows[level]) % modnext, True, inv_delta))
            else:
                if val.is_zero():
                    if len(new_nodes) + N > FRONTIER_CAP:
                        raise ResourceWarning(
                            "root-lifting frontier exceeded the budget"
                        )
                    for wcode in range(N):
                        w = upoly_from_code(ctx, wcode)
                        new_nodes.append(
                            ((y + w * ellpows[level]) % modnext, False, None)
                        )
        nodes = new_nodes
        if not nodes:
            break
    return mass, level1, alive_at_cutoff


def alpha_ell_fraction(f, ell, k_max_deg=None):
    """Exact alpha_ell as a Fraction."""
    ctx = f.ctx
    k = int(ell.degree)
    N = ctx.q ** k
    if k_max_deg is None:
        k_max_deg = default_k_max_deg(default_b0(ctx.q))
    cont = f.content()
    v_c = 0
    if cont.degree >= 1:
        v_c = cont.valuation(ell)
    work = f
    if v_c:
        div = ell ** v_c
        work = f.map_coeffs(lambda c: c // div)
    fhat, D = separability_decompose(work)
    k0 = max(1, k_max_deg // k)
    mass, _n1, _alive = _root_mass(fhat, D, ell, k0, vmin=0)
    if (work.lead % ell).is_zero():
        revhat, Drev = separability_decompose(work.reversed_x())
        pmass, _p1, _palive = _root_mass(revhat, Drev, ell, k0, vmin=1)
        mass += pmass
    return k * (Fraction(1, N - 1) - Fraction(N, N + 1) * mass) - k * v_c


def alpha_ell(f, ell, k_max_deg=None):
    """alpha_ell as a float (see alpha_ell_fraction for the exact value)."""
    return float(alpha_ell_fraction(f, ell, k_max_deg))


def _level1_counts(f, ell):
    """(affine fhat-root count, had_projective) at level 1, for aggregation."""
    work = f
    cont = f.content()
    if cont.degree >= 1 and cont.valuation(ell):
        div = ell ** cont.valuation(ell)
        work = f.map_coeffs(lambda c: c // div)
    fhat, _D = separability_decompose(work)
    return len(_residue_roots(fhat, ell))


# ---------------------------------------------------------------------------
# public root inspection (spec surface)


@dataclass
class RootEntry:
    residue: UPoly
    level: int
    kind: str  # "affine" | "projective"
    lifts: bool


@dataclass
class RootSet:
    ell: UPoly
    entries: list
    k_max_used: int


def roots_mod(f, ell):
    """(affine roots, projective roots, simple flags) of f modulo ell.

    Projective roots are residues r with ell | r and F(1, r) = 0 mod ell;
    at level one only r = 0 qualifies, present iff ell | lead(f)."""
    affine = _residue_roots(f, ell) if not all((c % ell).is_zero() for c in f.coeffs) else None
    if affine is None:
        raise ValueError("f vanishes mod ell; extract content first")
    projective = []
    if (f.lead % ell).is_zero():
        rev = f.reversed_x()
        zero = f.ctx.zero_poly()
        revp = rev.deriv_x()
        simple = not (_bipoly_eval_mod(revp, zero, ell)).is_zero()
        projective.append((zero, simple))
    return affine, projective


def lift_root_set(f, ell, k_max_deg):
    """All roots (r, k) of f with k*deg(ell) <= k_max_deg, affine and
    projective, with lift markers (True iff the entry has a descendant at
    the cutoff level; simple roots always lift by Hensel)."""
    ctx = f.ctx
    k = int(ell.degree)
    if k_max_deg < k:
        raise ValueError("k_max_deg must be at least deg(ell)")
    k0 = k_max_deg // k
    N = ctx.q ** k
    ellpows = [ctx.one_poly()]
    for _ in range(k0 + 1):
        ellpows.append(ellpows[-1] * ell)
    out = []
    for kind in ("affine", "projective"):
        if kind == "projective" and not (f.lead % ell).is_zero():
            continue
        poly = f if kind == "affine" else f.reversed_x()
        fp = poly.deriv_x()
        base = _residue_roots(poly, ell)
        if kind == "projective":
            base = [(r, s) for r, s in base if r.is_zero()]
        levels = {1: [r for r, _s in base]}
        for level in range(1, k0):
            nxt = []
            modnext = ellpows[level + 1]
            for y in levels[level]:
                val = _bipoly_eval_mod(poly, y, modnext)
                delta = _bipoly_eval_mod(fp, y, ell)
                digit = (val // ellpows[level]) % ell
                if not delta.is_zero():
                    w = (-digit * _res_inv(delta, ell)) % ell
                    nxt.append((y + w * ellpows[level]) % modnext)
                elif digit.is_zero():
                    if len(nxt) + N > FRONTIER_CAP:
                        raise ResourceWarning("root-lifting frontier exceeded")
                    for wcode in range(N):
                        w = upoly_from_code(ctx, wcode)
                        nxt.append((y + w * ellpows[level]) % modnext)
            levels[level + 1] = nxt
        alive = {y.coeffs for y in levels[k0]} if k0 in levels else set()
        for level in range(k0, 0, -1):
            for y in levels[level]:
                out.append(RootEntry(y, level, kind, y.coeffs in alive))
            if level > 1:
                alive = {
                    (UPoly(ctx, cc) % ellpows[level - 1]).coeffs for cc in alive
                }
    out.sort(key=lambda e: (e.level, e.kind, e.residue.code()))
    return RootSet(ell, out, k_max_deg)


# ---------------------------------------------------------------------------
# aggregated alpha over all ell of degree <= b0


@dataclass
class AlphaResult:
    value: float
    b0: int
    k_max: int
    error_bound: float | None = None
    heuristic: bool = False
    exact: Fraction | None = None
    ell_count: int | None = None

    def __float__(self):
        return self.value


def _bad_set_poly(f, fhat, D):
    ctx = f.ctx
    W = fhat.lead
    fhp = fhat.deriv_x()
    if not fhp.is_zero():
        disc = resultant_x(fhat, fhp)
        if not disc.is_zero():
            W = W * disc
    if D > 1:
        c0 = fhat.coeff(0)
        if not c0.is_zero():
            W = W * c0
        # t-derivative resultant: obstruction certificate for deep lifts
        dt = fhat.map_coeffs(lambda c: c.deriv())
        if not dt.is_zero():
            if dt.degx >= 1:
                Wt = resultant_x(fhat, dt)
            else:
                Wt = dt.coeff(0) ** int(fhat.degx)
            if not Wt.is_zero():
                W = W * Wt
    cont = f.content()
    if cont.degree >= 1:
        W = W * cont
    return W


def _aggregate_gf2(f, fhat, W, b0, bad_by_degree):
    """Per-degree (good-ell count, total good root count) for q = 2."""
    ctx = f.ctx
    out = {}
    wbits = 0
    for i, c in enumerate(W.coeffs):
        if c:
            wbits |= 1 << i
    coeff_bits = []
    for c in fhat.coeffs:
        b = 0
        for i, cc in enumerate(c.coeffs):
            if cc:
                b |= 1 << i
        coeff_bits.append(b)
    dh = len(coeff_bits) - 1
    for k in range(1, b0 + 1):
        K = GF2k(k)
        reps = K.orbit_representatives()
        assert len(reps) == count_irreducibles(ctx, k)
        wv = K.eval_upoly_batch(wbits, reps)
        good = reps[wv != 0]
        Gk = int(len(good))
        if Gk == 0:
            out[k] = (0, 0)
            continue
        mat = np.zeros((len(good), dh + 1), dtype=np.int64)
        for i, cb in enumerate(coeff_bits):
            if cb:
                mat[:, i] = K.eval_upoly_batch(cb, good)
        # lead cannot vanish on good reps (lead divides W)
        counts = K.count_roots_batch(mat)
        out[k] = (Gk, int(counts.sum()))
    return out


def _quadratic_shape(fhat):
    """(a, b, c1, c0) when fhat = a x^2 + b x + (c1 t + c0) with a, b
    constants over an odd-characteristic field; None otherwise."""
    if fhat.degx != 2 or fhat.ctx.p == 2:
        return None
    a = fhat.coeff(2)
    b = fhat.coeff(1)
    u = fhat.coeff(0)
    if a.degree != 0 or (not b.is_zero() and b.degree != 0):
        return None
    if u.degree != 1:
        return None
    return (
        a.coeffs[0],
        b.coeffs[0] if b.coeffs else 0,
        u.coeffs[1],
        u.coeffs[0] if u.coeffs else 0,
    )


def _aggregate_quadratic_odd(f, fhat, b0, bad_by_degree):
    """Closed-form per-degree counts for quadratic fhat over odd q.

    Root counts of a x^2 + b x + u(tau) biject with square roots s of the
    discriminant, an affine function of tau; exact-degree filtering happens
    on s^2 through subfield orders."""
    ctx = f.ctx
    out = {}
    for k in range(1, b0 + 1):
        pairs = quadratic_pair_counts(ctx, fhat, k)
        # remove the pairs living on bad ell
        bad_pairs = sum(n1 for (_ell, n1) in bad_by_degree.get(k, []))
        Gk = count_irreducibles(ctx, k) - len(bad_by_degree.get(k, []))
        out[k] = (Gk, pairs - bad_pairs)
    return out


def _aggregate_per_ell(f, fhat, W, b0, bad_by_degree, k_max_deg):
    """Fallback: enumerate ell explicitly (practical for small q^b0 only)."""
    ctx = f.ctx
    from .gf import irreducibles_of_degree

    out = {}
    for k in range(1, b0 + 1):
        Gk = 0
        Sk = 0
        bad_here = {ell.coeffs for (ell, _n) in bad_by_degree.get(k, [])}
        for ell in irreducibles_of_degree(ctx, k):
            if ell.coeffs in bad_here:
                continue
            Gk += 1
            Sk += len(_residue_roots(fhat, ell))
        out[k] = (Gk, Sk)
    return out


def alpha(f, b0=None, k_max_deg=None, max_ell_count=None, tail_mode="calibrated"):
    """alpha(f, b0): sum of alpha_ell over monic irreducibles of degree <= b0
    (or over the first max_ell_count in canonical order)."""
    ctx = f.ctx
    if f.degx < 1:
        raise ValueError("alpha needs a non-constant polynomial in x")
    if b0 is None:
        b0 = default_b0(ctx.q)
    if k_max_deg is None:
        k_max_deg = default_k_max_deg(b0)
    fhat, D = separability_decompose(f)
    heuristic = D > 1

    if max_ell_count is not None:
        # total-count cutoff: plain per-ell accumulation in canonical order
        total = Fraction(0)
        n = 0
        last_deg = 0
        for ell in irreducibles_stream(ctx, max_count=max_ell_count):
            total += alpha_ell_fraction(f, ell, k_max_deg)
            n += 1
            last_deg = int(ell.degree)
        return AlphaResult(
            float(total), last_deg, k_max_deg, None, heuristic, total, n
        )

    if f.degx == 1 and f.content().degree < 1:
        # a primitive linear polynomial has exactly one simple root at every ell
        total = sum(
            Fraction(k * count_irreducibles(ctx, k), ctx.q ** (2 * k) - 1)
            for k in range(1, b0 + 1)
        )
        return AlphaResult(float(total), b0, k_max_deg, None, False, total)

    W = _bad_set_poly(f, fhat, D)
    bad, _cof = factor_low_degree(W, b0)
    total = Fraction(0)
    bad_by_degree = {}
    for ell, _mult in bad:
        total += alpha_ell_fraction(f, ell, k_max_deg)
        n1 = _level1_counts(f, ell)
        bad_by_degree.setdefault(int(ell.degree), []).append((ell, n1))

    if ctx.p == 2:
        agg = _aggregate_gf2(f, fhat, W, b0, bad_by_degree)
    elif _quadratic_shape(fhat) is not None:
        agg = _aggregate_quadratic_odd(f, fhat, b0, bad_by_degree)
    else:
        agg = _aggregate_per_ell(f, fhat, W, b0, bad_by_degree, k_max_deg)

    for k in range(1, b0 + 1):
        Gk, Sk = agg[k]
        N = ctx.q ** k
        if D == 1:
            # simple roots: full geometric mass 1/(N-1) per root
            total += k * (
                Fraction(Gk, N - 1) - Fraction(N * Sk, (N - 1) * (N + 1))
            )
        else:
            # no roots above level 1 away from the bad set
            total += k * (Fraction(Gk, N - 1) - Fraction(Sk, N + 1))

    err = None
    if D == 1:
        try:
            err = alpha_tail_bound(f, b0, mode=tail_mode)
        except ValueError:
            err = None
    return AlphaResult(float(total), b0, k_max_deg, err, heuristic, total)


def alpha_linear(ctx):
    """Exact limit value of alpha for any polynomial of x-degree one."""
    return 1.0 / (ctx.q - 1)


def alpha_linear_fraction(ctx):
    return Fraction(1, ctx.q - 1)


# ---------------------------------------------------------------------------
# truncation tail bound


def curve_genus(f):
    """Arithmetic genus (d0-1)(d0-2)/2 of the plane curve, d0 = total degree."""
    d0 = max(int(i + c.degree) for i, c in enumerate(f.coeffs) if not c.is_zero())
    return (d0 - 1) * (d0 - 2) // 2


def alpha_tail_bound(f=None, b0=None, genus=None, q=None, mode="calibrated"):
    """Bound/estimate for |alpha(f) - alpha(f, b0)| for separable f.

    Per-degree error uses point-count deviations of size O(sqrt(q^k)):
    'calibrated' uses coefficient (2*g0 + 4) (Hasse-Weil main term plus
    subfield corrections, matching the worked reference values);
    'proven' uses the fully rigorous (4*g0 + 12).
    """
    if f is not None:
        q = f.ctx.q
        if genus is None:
            genus = curve_genus(f)
        fhat, D = separability_decompose(f)
        if D > 1:
            raise ValueError("tail bound applies to separable polynomials")
        W = _bad_set_poly(f, fhat, 1)
        _fac, cof = factor_low_degree(W, b0)
        if cof.degree >= 1:
            raise ValueError(
                "b0 too small: Disc(f)*lead(f) has irreducible factors above b0"
            )
    if genus is None or q is None or b0 is None:
        raise ValueError("need either f or explicit (q, genus, b0)")
    coeff = 2 * genus + 4 if mode == "calibrated" else 4 * genus + 12
    total = 0.0
    k = b0 + 1
    while True:
        term = coeff * q ** (1.5 * k) / (q ** (2 * k) - 1)
        total += term
        if term < 1e-14 * max(total, 1e-300):
            break
        k += 1
    return total


# ---------------------------------------------------------------------------
# independent brute-force oracle for alpha_ell


def valuation_average_oracle(f, ell, n_bound, level_cap=None):
    """Average of v_ell(F(a, b)) over pairs with deg a, deg b <= n_bound and
    gcd(a, b) not divisible by ell.

    Computed exactly as sum_k P(v >= k): for k*deg(ell) <= n_bound the box
    probability equals the exhaustive residue-pair count mod ell^k (the box
    covers residues uniformly); levels are truncated at level_cap with a
    geometrically small remainder.  Stays independent of the root-lifting
    machinery."""
    ctx = f.ctx
    k = int(ell.degree)
    if n_bound % k != 0:
        raise ValueError("n_bound must be a multiple of deg(ell)")
    N = ctx.q ** k
    max_level = n_bound // k
    if level_cap is None:
        # keep the residue-pair space around 2^20
        level_cap = max_level
        while level_cap > 1 and (ctx.q ** (2 * k * level_cap)) > (1 << 22):
            level_cap -= 1
    levels = min(max_level, level_cap)
    d = int(f.degx)
    total = Fraction(0)
    for lev in range(1, levels + 1):
        mod = ell ** lev
        M = N ** lev
        if ctx.q == 2:
            cnt = _pair_zero_count_gf2(f, ell, lev)
        else:
            cnt = 0
            for ac in range(M):
                a = upoly_from_code(ctx, ac)
                fa = [(c * a ** i) % mod for i, c in enumerate(f.coeffs)]
                for bc in range(M):
                    b = upoly_from_code(ctx, bc)
                    if (a % ell).is_zero() and (b % ell).is_zero():
                        continue
                    acc = ctx.zero_poly()
                    bp = ctx.one_poly()
                    for i in range(d, -1, -1):
                        acc = (acc + fa[i] * bp) % mod
                        bp = (bp * b) % mod
                    if acc.is_zero():
                        cnt += 1
        # pairs (A, B) mod ell^lev with not both divisible by ell
        coprime_pairs = M * M - (M // N) ** 2
        total += Fraction(cnt, coprime_pairs)
    return float(total)


def _pair_zero_count_gf2(f, ell, lev):
    """#{(A,B) residue pairs mod ell^lev, not both divisible by ell,
    with F(A,B) = 0 mod ell^lev}, vectorized on bit codes."""
    ctx = f.ctx
    k = int(ell.degree)
    nbits = k * lev
    mod = ell ** lev
    modbits = 0
    for i, c in enumerate(mod.coeffs):
        if c:
            modbits |= 1 << i
    ellbits = 0
    for i, c in enumerate(ell.coeffs):
        if c:
            ellbits |= 1 << i
    size = 1 << nbits
    A = np.arange(size, dtype=np.int64)
    B = np.arange(size, dtype=np.int64)
    AA = np.repeat(A, size)
    BB = np.tile(B, size)

    def clmod(X, Y):
        # carry-less product then reduce mod `modbits` (degree nbits)
        acc = np.zeros_like(X)
        for b in range(nbits):
            acc ^= (X << b) * ((Y >> b) & 1)
        for top in range(2 * nbits - 2, nbits - 1, -1):
            acc ^= (modbits << (top - nbits)) * ((acc >> top) & 1)
        return acc

    d = int(f.degx)
    coeff_bits = []
    for c in f.coeffs:
        b = 0
        for i, cc in enumerate(c.coeffs):
            if cc:
                b |= 1 << i
        # reduce coefficient mod ell^lev
        from .gf import _bit_divmod

        b = _bit_divmod(b, modbits)[1]
        coeff_bits.append(b)
    acc = np.zeros_like(AA)
    bpow = np.ones_like(BB)
    apow = [np.ones_like(AA)]
    for _ in range(d):
        apow.append(clmod(apow[-1], AA))
    for i in range(d, -1, -1):
        if coeff_bits[i]:
            term = clmod(apow[i], np.full_like(AA, coeff_bits[i]))
            term = clmod(term, bpow)
            acc ^= term
        bpow = clmod(bpow, BB)
    # exclude pairs with both divisible by ell
    def divisible(X):
        sub = ellbits
        out = X.copy()
        for top in range(nbits - 1, k - 1, -1):
            out ^= (sub << (top - k)) * ((out >> top) & 1)
        return out == 0

    both = divisible(AA) & divisible(BB)
    return int(((acc == 0) & ~both).sum())
