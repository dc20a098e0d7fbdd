"""Residue-field machinery for bulk root counting.

For each degree k we work in one fixed model of F_{q^k} = F_q[t]/(m_k) with
m_k the canonical (lex-least) monic irreducible.  Monic irreducibles of
degree k correspond to Frobenius orbits of size k; counting roots of
f mod ell over all ell of degree k reduces to per-orbit root counts of
f(tau, x), which vectorizes well for q = 2.
"""

from __future__ import annotations

import numpy as np

from .gf import _canonical_fp_irreducible, _factorize, _fp_powmod, count_irreducibles

# ---------------------------------------------------------------------------
# GF(2^k) with bit-coded elements and numpy batch operations


def _np_clmul_mod(A, B, mod, k):
    """Carry-less multiply arrays A*B of k-bit codes, reduced mod `mod`
    (degree-k bit code).  Values fit in int64 for k <= 31."""
    acc = np.zeros_like(A)
    for b in range(k):
        mask = (B >> b) & 1
        acc ^= (A << b) * mask
    for top in range(2 * k - 2, k - 1, -1):
        mask = (acc >> top) & 1
        acc ^= (mod << (top - k)) * mask
    return acc


class GF2k:
    """F_{2^k} with exp/log tables, built via vectorized carry-less products."""

    _cache = {}

    def __new__(cls, k):
        if k in cls._cache:
            return cls._cache[k]
        self = super().__new__(cls)
        self._build(k)
        cls._cache[k] = self
        return self

    def _build(self, k):
        self.k = k
        self.q = 1 << k
        mod_coeffs = _canonical_fp_irreducible(2, k) if k > 1 else (0, 1)
        self.mod_bits = sum(c << i for i, c in enumerate(mod_coeffs)) if k > 1 else 2
        if k == 1:
            self.exp = np.array([1], dtype=np.int64)
            self.log = np.array([0, 0], dtype=np.int64)
            self.sqr = np.array([0, 1], dtype=np.int64)
            self.exp_l = [1]
            self.log_l = [0, 0]
            self.sqr_l = [0, 1]
            return
        # find a multiplicative generator
        fac = _factorize(self.q - 1)
        gen = None
        for cand in range(2, self.q):
            t = tuple((cand >> i) & 1 for i in range(k))
            if all(
                self._enc(_fp_powmod(t, (self.q - 1) // r, mod_coeffs, 2)) != 1
                for r in fac
            ):
                gen = cand
                break
        # exp table in two blocks: low powers sequentially, then outer products
        h = (k + 1) // 2
        lo_n = 1 << h
        lo = [1] * lo_n
        cur = 1
        for i in range(1, lo_n):
            cur = self._scalar_mul_raw(cur, gen, mod_coeffs)
            lo[i] = cur
        G = self._scalar_mul_raw(lo[lo_n - 1], gen, mod_coeffs)  # gen^lo_n
        hi_n = (self.q - 2) // lo_n + 2
        hi = [1] * hi_n
        cur = 1
        for i in range(1, hi_n):
            cur = self._scalar_mul_raw(cur, G, mod_coeffs)
            hi[i] = cur
        lo_a = np.array(lo, dtype=np.int64)
        hi_a = np.array(hi, dtype=np.int64)
        prod = _np_clmul_mod(
            np.repeat(hi_a, lo_n), np.tile(lo_a, hi_n), self.mod_bits, k
        ).reshape(-1)[: self.q - 1]
        self.exp = prod
        log = np.zeros(self.q, dtype=np.int64)
        log[prod] = np.arange(self.q - 1, dtype=np.int64)
        self.log = log
        self.sqr = np.zeros(self.q, dtype=np.int64)
        nz = np.arange(1, self.q, dtype=np.int64)
        self.sqr[1:] = self.exp[(2 * log[nz]) % (self.q - 1)]
        self.exp_l = self.exp.tolist()
        self.log_l = self.log.tolist()
        self.sqr_l = self.sqr.tolist()

    @staticmethod
    def _enc(coeffs):
        return sum(c << i for i, c in enumerate(coeffs))

    def _scalar_mul_raw(self, a, b, mod_coeffs):
        # clmul + reduce on scalars (used only during table construction)
        acc = 0
        x = a
        while x:
            low = x & -x
            acc ^= b << (low.bit_length() - 1)
            x ^= low
        for top in range(acc.bit_length() - 1, self.k - 1, -1):
            if (acc >> top) & 1:
                acc ^= self.mod_bits << (top - self.k)
        return acc

    # -- batched ops ---------------------------------------------------------

    def vmul(self, A, B):
        qm1 = self.q - 1
        out = self.exp[(self.log[A] + self.log[B]) % qm1]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A):
        qm1 = self.q - 1
        return self.exp[(qm1 - self.log[A]) % qm1]

    def vsqr(self, A):
        return self.sqr[A]

    # -- scalar ops (python ints, via list tables) ----------------------------

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp_l[(self.log_l[a] + self.log_l[b]) % (self.q - 1)]

    def inv(self, a):
        return self.exp_l[(self.q - 1 - self.log_l[a]) % (self.q - 1)]

    def orbit_representatives(self):
        """Codes of the lex-least member of each exact-degree-k Frobenius
        orbit; their count is the number of monic degree-k irreducibles."""
        k, q = self.k, self.q
        codes = np.arange(q, dtype=np.int64)
        F = codes.copy()
        M = codes.copy()
        in_subfield = np.zeros(q, dtype=bool)
        for j in range(1, k):
            F = self.sqr[F]
            M = np.minimum(M, F)
            if k % j == 0:
                in_subfield |= F == codes
        reps = np.nonzero((M == codes) & ~in_subfield)[0]
        if k == 1:
            reps = codes
        return reps.astype(np.int64)

    # -- batched root counting -------------------------------------------------

    def eval_upoly_batch(self, coeffs_bits, T):
        """Evaluate a GF(2)[t] polynomial (bit code) at an array of field
        elements T, by Horner."""
        acc = np.zeros_like(T)
        nbits = coeffs_bits.bit_length()
        for i in range(nbits - 1, -1, -1):
            acc = self.vmul(acc, T)
            if (coeffs_bits >> i) & 1:
                acc ^= 1
        return acc

    def count_roots_batch(self, coeff_mat):
        """Root counts in F_{2^k} for a batch of monic-izable polynomials.

        coeff_mat: int64 array [n, d+1] of coefficient codes (x-degree d).
        Rows with a vanishing lead coefficient must be excluded beforehand.
        Returns an int array of root counts (distinct roots)."""
        n, w = coeff_mat.shape
        d = w - 1
        if d == 0:
            return np.zeros(n, dtype=np.int64)
        # normalize monic
        lead = coeff_mat[:, d]
        inv = self.vinv(lead)
        C = self.vmul(coeff_mat, inv[:, None])
        if d == 1:
            return np.ones(n, dtype=np.int64)
        if d == 2:
            # x^2 + b x + c: b == 0 -> unique root; else 2 roots iff Tr(c/b^2) = 0
            b, c = C[:, 1], C[:, 0]
            u = self.vmul(c, self.vinv(np.where(b == 0, 1, self.vmul(b, b))))
            tr = np.zeros(n, dtype=np.int64)
            z = u.copy()
            for _ in range(self.k):
                tr ^= z
                z = self.sqr[z]
            out = np.where(b == 0, 1, np.where(tr == 0, 2, 0))
            # double root at 0 when b == 0 and c == 0 still counts once
            return out.astype(np.int64)
        # general: X = x^(2^k) mod f, then per-row gcd(f, X - x)
        S = np.zeros((n, d), dtype=np.int64)
        S[:, 1] = 1
        for _ in range(self.k):
            T = np.zeros((n, 2 * d - 1), dtype=np.int64)
            T[:, 0::2] = self.sqr[S]
            for pos in range(2 * d - 2, d - 1, -1):
                c = T[:, pos].copy()
                if not c.any():
                    continue
                T[:, pos] = 0
                # subtract c * x^(pos-d) * (monic f)
                base = pos - d
                T[:, base : base + d] ^= self.vmul(C[:, :d], c[:, None])
            S = T[:, :d]
        S[:, 1] ^= 1  # X - x
        # per-row gcd degree
        exp_l, log_l, qm1 = self.exp_l, self.log_l, self.q - 1
        C_l = C[:, :d].tolist()
        S_l = S.tolist()
        counts = np.zeros(n, dtype=np.int64)

        def poly_deg(v):
            for i in range(len(v) - 1, -1, -1):
                if v[i]:
                    return i
            return -1

        for row in range(n):
            a = C_l[row] + [1]
            b = S_l[row]
            da, db = d, poly_deg(b)
            while db >= 0:
                inv_lb = exp_l[(qm1 - log_l[b[db]]) % qm1]
                while da >= db:
                    ca = a[da]
                    if ca:
                        f = exp_l[(log_l[ca] + log_l[inv_lb]) % qm1]
                        lf = log_l[f]
                        sh = da - db
                        for j in range(db + 1):
                            cb = b[j]
                            if cb:
                                a[sh + j] ^= exp_l[(lf + log_l[cb]) % qm1]
                    da -= 1
                    while da >= 0 and not a[da]:
                        da -= 1
                a, b = b, a
                da, db = db, da
            counts[row] = da if da > 0 else 0
        return counts


# ---------------------------------------------------------------------------
# exact-degree root-pair counts for quadratics over odd characteristic


def quadratic_pair_counts(ctx, fhat, k):
    """For fhat = x^2 + (c1*t + c0) with c1 != 0 over odd-char F_q: the number
    of pairs (ell, root) with deg ell = k exactly, f roots counted mod ell,
    summed over all monic irreducibles of degree k -- in closed form.

    Uses the parameterization xi -> tau = -(xi^2 + c0)/c1, which is a
    bijection between root pairs and xi in F_{q^k}; exact-degree filtering
    happens on xi^2 via subfield orders.  Returns sum over ell of n_ell
    (including any 'bad' ell; callers subtract those separately)."""
    q = ctx.q
    if ctx.p == 2:
        raise ValueError("odd characteristic only")
    # pairs = #{xi in F_{q^k} : tau(xi) has exact degree k};
    # tau affine in xi^2 with F_q coefficients => deg tau = deg(xi^2)
    def count_sq_in_subfield(j):
        # xi with xi^2 in F_{q^j}: 0 plus elements of order dividing 2(q^j-1)
        from math import gcd as igcd
        return igcd(2 * (q ** j - 1), q ** k - 1) + 1
    from .gf import moebius
    pairs = 0
    for j in range(1, k + 1):
        if k % j == 0:
            pairs += moebius(k // j) * count_sq_in_subfield(j)
    assert pairs % k == 0
    return pairs // k
