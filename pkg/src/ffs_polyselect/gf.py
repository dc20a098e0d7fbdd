"""Exact arithmetic for F_q and F_q[t].

Field elements are plain ints in [0, q) encoding sum(c_i * p^i) where the
c_i are the coefficients of the residue polynomial over F_p.  Univariate
polynomials over F_q are immutable UPoly objects (coefficient tuples in
canonical form, no trailing zeros).
"""

from __future__ import annotations

NEG_INF = float("-inf")  # degree of the zero polynomial


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _factorize(n):
    """Prime factorization by trial division (arguments stay small here)."""
    fac = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def moebius(n):
    if n == 1:
        return 1
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


# ---------------------------------------------------------------------------
# base-p polynomial helpers used to bootstrap extension fields


def _fp_mulmod(a, b, mod, p):
    """Multiply coefficient tuples over F_p modulo the monic tuple `mod`."""
    m = len(mod) - 1
    if not a or not b:
        return (0,)
    res = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    res[i + j] = (res[i + j] + ca * cb) % p
    for i in range(len(res) - 1, m - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(m):
                res[i - m + j] = (res[i - m + j] - c * mod[j]) % p
    res = res[:m] if len(res) > m else res
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return tuple(res)


def _fp_powmod(a, e, mod, p):
    acc = (1,)
    base = tuple(a)
    while e:
        if e & 1:
            acc = _fp_mulmod(acc, base, mod, p)
        base = _fp_mulmod(base, base, mod, p)
        e >>= 1
    return acc


def _fp_deg(v):
    d = len(v) - 1
    while d >= 0 and v[d] == 0:
        d -= 1
    return d


def _fp_gcd_deg(a, b, p):
    """Degree of gcd of two coefficient lists over F_p."""
    a, b = list(a), list(b)
    while _fp_deg(b) >= 0:
        da, db = _fp_deg(a), _fp_deg(b)
        if da < 0:
            break
        inv = pow(b[db], p - 2, p)
        while da >= db:
            c = (a[da] * inv) % p
            if c:
                for i in range(db + 1):
                    a[da - db + i] = (a[da - db + i] - c * b[i]) % p
            da = _fp_deg(a)
            if da < 0:
                break
        a, b = b, a
    return _fp_deg(a)


def _fp_is_irreducible(coeffs, p):
    """Deterministic Rabin test for a monic coefficient tuple over F_p."""
    n = _fp_deg(coeffs)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (0, 1)
    h = _fp_powmod(x, p ** n, coeffs, p)
    if _fp_deg(h) != 1 or h[0] != 0 or h[1] != 1:
        return False
    for r in _factorize(n):
        h = _fp_powmod(x, p ** (n // r), coeffs, p)
        diff = list(h) + [0, 0]
        diff[1] = (diff[1] - 1) % p
        if _fp_gcd_deg(coeffs, diff, p) != 0:
            return False
    return True


def _canonical_fp_irreducible(p, m):
    """Lexicographically least monic irreducible of degree m over F_p
    (order on the integer code sum(c_i p^i) of the non-leading coefficients)."""
    for code in range(p ** m):
        coeffs = []
        c = code
        for _ in range(m):
            coeffs.append(c % p)
            c //= p
        coeffs.append(1)
        if _fp_is_irreducible(tuple(coeffs), p):
            return tuple(coeffs)
    raise RuntimeError("unreachable: no irreducible of requested degree")


# ---------------------------------------------------------------------------


class FieldCtx:
    """Description of F_q, q = p^m, with element arithmetic on int codes."""

    def __init__(self, p, m, modulus=None, _validate=True):
        if _validate and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        if m == 1:
            if modulus is not None:
                raise ValueError("prime field takes no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = _canonical_fp_irreducible(p, m)
            else:
                modulus = tuple(modulus)
                if _fp_deg(modulus) != m:
                    raise ValueError("modulus degree must equal m")
                if modulus[-1] != 1:
                    raise ValueError("modulus must be monic")
                if not _fp_is_irreducible(modulus, p):
                    raise ValueError("modulus is reducible over F_p")
            self.modulus = tuple(modulus)
        self._exp = None
        self._log = None

    def __repr__(self):
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element arithmetic --------------------------------------------------

    def _decode(self, a):
        c, out = a, []
        for _ in range(self.m):
            out.append(c % self.p)
            c //= self.p
        return out

    def _encode(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _ensure_tables(self):
        if self._exp is not None:
            return
        q, p = self.q, self.p
        if q == 2:
            self._exp = [1, 1]
            self._log = [0, 0]
            return
        fac = _factorize(q - 1)
        if self.m == 1:
            gen = next(
                g for g in range(2, q)
                if all(pow(g, (q - 1) // r, q) != 1 for r in fac)
            )
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            cur = 1
            for i in range(q - 1):
                exp[i] = cur
                exp[i + q - 1] = cur
                log[cur] = i
                cur = (cur * gen) % q
        else:
            gen = None
            for cand in range(2, q):
                t = tuple(self._decode(cand))
                if all(
                    self._encode(_fp_powmod(t, (q - 1) // r, self.modulus, p)) != 1
                    for r in fac
                ):
                    gen = tuple(self._decode(cand))
                    break
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            cur = (1,)
            for i in range(q - 1):
                code = self._encode(cur)
                exp[i] = code
                exp[i + q - 1] = code
                log[code] = i
                cur = _fp_mulmod(cur, gen, self.modulus, p)
        self._exp = exp
        self._log = log

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x - y) % self.p for x, y in zip(da, db)])

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        self._ensure_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if a == 1:
            return 1
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        self._ensure_tables()
        return self._exp[(self.q - 1) - self._log[a]]

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self.m == 1:
            return pow(a, e, self.p)
        self._ensure_tables()
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def dlog(self, a):
        """Discrete log w.r.t. the fixed table generator (a nonzero)."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        self._ensure_tables()
        return self._log[a]

    def elements(self):
        return range(self.q)

    # -- polynomial constructors ----------------------------------------------

    def poly(self, coeffs):
        return UPoly(self, coeffs)

    def zero_poly(self):
        return UPoly(self, ())

    def one_poly(self):
        return UPoly(self, (1,))

    def t_poly(self):
        return UPoly(self, (0, 1))


def make_field(p, m=1, modulus=None):
    """Build a field context.  The canonical modulus (when none is supplied)
    is the lexicographically least monic irreducible over F_p."""
    if isinstance(modulus, UPoly):
        if modulus.ctx.q != p:
            raise ValueError("modulus must be defined over F_p")
        modulus = tuple(modulus.coeffs)
    return FieldCtx(p, m, modulus)


# ---------------------------------------------------------------------------


class UPoly:
    """Univariate polynomial over F_q in t; canonical coefficient tuple."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        if isinstance(coeffs, int):
            raise TypeError("coeffs must be an iterable of field elements")
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("UPoly is immutable")

    # -- basics ----------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, UPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.q, self.coeffs))

    def __repr__(self):
        return f"UPoly({render_upoly(self, 'pretty')!r})"

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ValueError("mixed field contexts")

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return UPoly(ctx, out)

    def __sub__(self, other):
        self._check(other)
        ctx = self.ctx
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else 0
            y = other.coeffs[i] if i < len(other.coeffs) else 0
            out.append(ctx.sub(x, y))
        return UPoly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return UPoly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            ctx = self.ctx
            return UPoly(ctx, [ctx.mul(c, other) for c in self.coeffs])
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(ctx, ())
        if ctx.q == 2:
            return UPoly(
                ctx,
                _bits_to_coeffs(_clmul(_coeffs_to_bits(a), _coeffs_to_bits(b))),
            )
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(ca, cb))
        return UPoly(ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        ctx = self.ctx
        if ctx.q == 2:
            q, r = _bit_divmod(
                _coeffs_to_bits(self.coeffs), _coeffs_to_bits(other.coeffs)
            )
            return UPoly(ctx, _bits_to_coeffs(q)), UPoly(ctx, _bits_to_coeffs(r))
        rem = list(self.coeffs)
        dvs = other.coeffs
        db = len(dvs) - 1
        inv_lead = ctx.inv(dvs[-1])
        quot = [0] * max(0, len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = ctx.mul(c, inv_lead)
                quot[i - db] = f
                for j, dc in enumerate(dvs):
                    rem[i - db + j] = ctx.sub(rem[i - db + j], ctx.mul(f, dc))
        return UPoly(ctx, quot), UPoly(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly(self.ctx, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- utilities -----------------------------------------------------------------

    def monic(self):
        if self.is_zero() or self.lead == 1:
            return self
        return self * self.ctx.inv(self.lead)

    def shift(self, k):
        """Multiply by t^k (k < 0 drops the low k coefficients)."""
        if self.is_zero() or k == 0:
            return self
        if k > 0:
            return UPoly(self.ctx, (0,) * k + self.coeffs)
        return UPoly(self.ctx, self.coeffs[-k:])

    def eval(self, x):
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def deriv(self):
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.mul(self.coeffs[i], i % ctx.p))
        return UPoly(ctx, out)

    def valuation(self, ell):
        """Largest k with ell^k dividing self (self nonzero)."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        v, cur = 0, self
        while True:
            q, r = divmod(cur, ell)
            if not r.is_zero():
                return v
            v += 1
            cur = q

    def code(self):
        """Integer code sum(c_i * q^i); lex enumeration order key."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.ctx.q + c
        return v


def upoly_from_code(ctx, code):
    out = []
    while code:
        out.append(code % ctx.q)
        code //= ctx.q
    return UPoly(ctx, out)


def gcd(a, b):
    """Monic gcd in F_q[t]."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a, b):
    """Extended gcd: (g, u, v) with u*a + v*b = g, g monic."""
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = ctx.one_poly(), ctx.zero_poly()
    t0, t1 = ctx.zero_poly(), ctx.one_poly()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = ctx.inv(r0.lead)
    return r0 * c, s0 * c, t0 * c


def pow_mod(a, e, mod):
    """a^e mod `mod` in F_q[t]."""
    result = a.ctx.one_poly() % mod
    base = a % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# GF(2) bit-coded helpers (bit i of the int = coefficient of t^i)


def _coeffs_to_bits(coeffs):
    v = 0
    for i, c in enumerate(coeffs):
        if c:
            v |= 1 << i
    return v


def _bits_to_coeffs(v):
    out = []
    while v:
        out.append(v & 1)
        v >>= 1
    return out


def _clmul(a, b):
    if a == 0 or b == 0:
        return 0
    if bin(a).count("1") > bin(b).count("1"):
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


def _bit_divmod(a, b):
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= db and a:
        sh = da - db
        q |= 1 << sh
        a ^= b << sh
        da = a.bit_length() - 1
    return q, a


def upoly_bits(f):
    """Bit code of a UPoly over GF(2)."""
    if f.ctx.q != 2:
        raise ValueError("bit coding needs GF(2)")
    return _coeffs_to_bits(f.coeffs)


def upoly_from_bits(ctx, v):
    return UPoly(ctx, _bits_to_coeffs(v))


# ---------------------------------------------------------------------------
# irreducibility / enumeration / counting


def is_irreducible(f):
    """Deterministic Rabin irreducibility test."""
    if f.degree < 1:
        raise ValueError("constant polynomial")
    n = int(f.degree)
    if n == 1:
        return True
    ctx = f.ctx
    fm = f.monic()
    q = ctx.q
    t = ctx.t_poly()
    if pow_mod(t, q ** n, fm) != t % fm:
        return False
    for r in _factorize(n):
        h = pow_mod(t, q ** (n // r), fm)
        if gcd(fm, h - t).degree > 0:
            return False
    return True


def _monic_of_degree(ctx, k, code):
    out = []
    c = code
    for _ in range(k):
        out.append(c % ctx.q)
        c //= ctx.q
    out.append(1)
    return UPoly(ctx, out)


def irreducibles_of_degree(ctx, k):
    """Yield every monic irreducible of degree exactly k once, in lex order
    on the coefficient codes (constant coefficient least significant)."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    for code in range(ctx.q ** k):
        f = _monic_of_degree(ctx, k, code)
        if is_irreducible(f):
            yield f


def irreducibles_stream(ctx, max_degree=None, max_count=None):
    """Monic irreducibles in canonical order: degree-major, then lex."""
    count = 0
    k = 1
    while max_degree is None or k <= max_degree:
        for f in irreducibles_of_degree(ctx, k):
            yield f
            count += 1
            if max_count is not None and count >= max_count:
                return
        k += 1


def count_irreducibles(ctx, k):
    """Exact count of monic degree-k irreducibles via the Moebius sum."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    q = ctx.q
    total = sum(moebius(h) * q ** (k // h) for h in range(1, k + 1) if k % h == 0)
    assert total % k == 0
    return total // k


# ---------------------------------------------------------------------------
# small-degree factor extraction (squarefree + DDF + EDF)


def _pth_root(f):
    """p-th root of f when f'(t) = 0 (so f is a p-th power)."""
    ctx = f.ctx
    p = ctx.p
    root = []
    for i in range(0, len(f.coeffs), p):
        root.append(ctx.pow(f.coeffs[i], ctx.q // p))
    return UPoly(ctx, root)


def squarefree_decomposition(f):
    """[(g, mult)] with f = lead * prod g^mult, g monic squarefree coprime."""
    ctx = f.ctx
    f = f.monic()
    if f.degree < 1:
        return []
    fp = f.deriv()
    if fp.is_zero():
        return [(g, m * ctx.p) for g, m in squarefree_decomposition(_pth_root(f))]
    out = []
    c = gcd(f, fp)
    w = f // c
    i = 1
    while w.degree >= 1:
        y = gcd(w, c)
        z = w // y
        if z.degree >= 1:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree >= 1:
        # remaining part is a perfect p-th power
        out.extend((g, m * ctx.p) for g, m in squarefree_decomposition(_pth_root(c)))
    return out


def _ddf(f, bound):
    """Distinct-degree split of squarefree monic f up to `bound`.

    Returns ([(product, k)], cofactor) where each product collects the
    irreducible factors of degree exactly k."""
    ctx = f.ctx
    q = ctx.q
    out = []
    cur = f
    h = ctx.t_poly() % cur if cur.degree >= 1 else ctx.t_poly()
    k = 0
    while cur.degree >= 1 and k < bound:
        if cur.degree < 2 * (k + 1):
            # remainder is irreducible
            if cur.degree <= bound:
                out.append((cur, int(cur.degree)))
                cur = ctx.one_poly()
            break
        k += 1
        h = pow_mod(h, q, cur)
        g = gcd(cur, h - ctx.t_poly())
        if g.degree >= 1:
            out.append((g, k))
            cur = cur // g
            if cur.degree >= 1:
                h = h % cur
    return out, cur


def _edf(f, k):
    """Equal-degree splitting of monic squarefree f (all factors degree k).

    Deterministic: splitting elements come from a fixed LCG sequence."""
    ctx = f.ctx
    q = ctx.q
    if f.degree == k:
        return [f]
    state = 0x9E3779B97F4A7C15
    work = [f]
    done = []
    while work:
        g = work.pop()
        if g.degree == k:
            done.append(g)
            continue
        while True:
            state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            a = upoly_from_code(ctx, state % (q ** int(g.degree)))
            if a.degree < 1:
                continue
            if ctx.p == 2:
                tr = ctx.zero_poly()
                b = a % g
                for _ in range(k * ctx.m):
                    tr = (tr + b) % g
                    b = (b * b) % g
                h = gcd(g, tr)
            else:
                b = pow_mod(a, (q ** k - 1) // 2, g)
                h = gcd(g, b - ctx.one_poly())
            if 0 < h.degree < g.degree:
                work.append(h)
                work.append(g // h)
                break
    return done


def factor_low_degree(f, bound):
    """Monic irreducible factors of f with degree <= bound (with
    multiplicity), plus the remaining monic cofactor."""
    if f.is_zero():
        raise ValueError("factoring zero")
    ctx = f.ctx
    result = {}
    cofactor = ctx.one_poly()
    for g, mult in squarefree_decomposition(f):
        parts, rest = _ddf(g, bound)
        if rest.degree >= 1:
            cofactor = cofactor * rest ** mult
        for prod, k in parts:
            for irr in _edf(prod, k):
                key = irr.coeffs
                prev = result.get(key)
                result[key] = (irr, (prev[1] if prev else 0) + mult)
    items = sorted(result.values(), key=lambda iv: (iv[0].degree, iv[0].code()))
    return items, cofactor


def has_factor_of_exact_degree(f, n):
    """True iff monic f has an irreducible factor of degree exactly n."""
    ctx = f.ctx
    f = f.monic()
    t = ctx.t_poly()
    h = pow_mod(t, ctx.q ** n, f)
    g = gcd(f, h - t)
    if g.degree < n:
        return False
    for d in range(1, n):
        if n % d == 0:
            hd = pow_mod(t, ctx.q ** d, g)
            sub = gcd(g, hd - t)
            while sub.degree >= 1:
                g = g // sub
                sub = gcd(g, sub)
            if g.degree < n:
                return False
    return g.degree >= n


# ---------------------------------------------------------------------------
# text encodings
#
# GF(2): hexadecimal code of sum(c_i 2^i) ("0x...").
# General q: comma-separated coefficient integers "c0,c1,...".
# A sum form like "t^9+t^7+t+1" is accepted everywhere.


def render_upoly(f, style="auto"):
    if style == "auto":
        style = "hex" if f.ctx.q == 2 else "ints"
    if style == "hex":
        if f.ctx.q != 2:
            raise ValueError("hex encoding is for GF(2) only")
        return hex(upoly_bits(f))
    if style == "ints":
        return ",".join(str(c) for c in f.coeffs) if f.coeffs else "0"
    if style == "pretty":
        if f.is_zero():
            return "0"
        parts = []
        for i in range(len(f.coeffs) - 1, -1, -1):
            c = f.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else f"{c}*"
                parts.append(f"{head}t" if i == 1 else f"{head}t^{i}")
        return "+".join(parts)
    raise ValueError(f"unknown style {style!r}")


def parse_upoly(ctx, text):
    s = str(text).strip().replace(" ", "")
    if not s or s == "0":
        return ctx.zero_poly()
    if s.lower().startswith("0x"):
        if ctx.q != 2:
            raise ValueError("hex encoding is for GF(2) only")
        return upoly_from_bits(ctx, int(s, 16))
    if "t" in s:
        coeffs = {}
        for term in s.replace("-", "+-").split("+"):
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "t" not in term:
                c, e = int(term) % ctx.q, 0
            else:
                head, _, tail = term.partition("t")
                c = int(head.rstrip("*")) % ctx.q if head.rstrip("*") else 1
                e = int(tail[1:]) if tail.startswith("^") else 1
            if neg:
                c = ctx.neg(c)
            coeffs[e] = ctx.add(coeffs.get(e, 0), c)
        out = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return UPoly(ctx, out)
    return UPoly(ctx, [int(x) % ctx.q for x in s.split(",")])
