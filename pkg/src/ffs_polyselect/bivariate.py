"""F_q[t][x] polynomials: norms, resultants, discriminants, separability,
and sieve-pair validation."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .gf import (
    NEG_INF,
    UPoly,
    factor_low_degree,
    gcd,
    has_factor_of_exact_degree,
    irreducibles_stream,
    parse_upoly,
    render_upoly,
)


class BiPoly:
    """Element of F_q[t][x]: coefficient sequence f_0..f_d, f_d != 0."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        for u in c:
            if u.ctx != ctx:
                raise ValueError("mixed field contexts in BiPoly")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @property
    def degx(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def tdeg(self):
        if not self.coeffs:
            return NEG_INF
        return max(c.degree for c in self.coeffs)

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero_poly()

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.q, tuple(c.coeffs for c in self.coeffs)))

    def __repr__(self):
        return f"BiPoly({render_bipoly(self)!r})"

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.ctx.zero_poly()
        return BiPoly(
            self.ctx,
            [self.coeff(i) + other.coeff(i) for i in range(n)] or [z],
        )

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return BiPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UPoly):
            return BiPoly(self.ctx, [c * other for c in self.coeffs])
        z = self.ctx.zero_poly()
        if self.is_zero() or other.is_zero():
            return BiPoly(self.ctx, ())
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.ctx, out)

    def deriv_x(self):
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * (i % ctx.p))
        return BiPoly(ctx, out)

    def eval_x(self, a):
        """Evaluate at x = a for a UPoly a."""
        acc = self.ctx.zero_poly()
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def reversed_x(self):
        """x^d * f(1/x): coefficient sequence reversed."""
        return BiPoly(self.ctx, tuple(reversed(self.coeffs)))

    def content(self):
        """Monic gcd of the coefficients."""
        g = self.ctx.zero_poly()
        for c in self.coeffs:
            if not c.is_zero():
                g = gcd(g, c) if not g.is_zero() else c.monic()
            if g.is_one():
                break
        return g

    def map_coeffs(self, fn):
        return BiPoly(self.ctx, [fn(c) for c in self.coeffs])


def bipoly(ctx, *coeff_texts):
    """Convenience constructor from low-to-high coefficient encodings."""
    return BiPoly(ctx, [parse_upoly(ctx, s) if not isinstance(s, UPoly) else s for s in coeff_texts])


# ---------------------------------------------------------------------------


def norm_eval(f, a, b):
    """Homogenized evaluation sum_i f_i a^i b^(d-i) (the norm of a - b*x)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("norm at the zero pair")
    d = int(f.degx)
    ctx = f.ctx
    # running powers: a^i * b^(d-i)
    bpow = [ctx.one_poly()]
    for _ in range(d):
        bpow.append(bpow[-1] * b)
    acc = ctx.zero_poly()
    apow = ctx.one_poly()
    for i in range(d + 1):
        c = f.coeff(i)
        if not c.is_zero():
            acc = acc + c * apow * bpow[d - i]
        if i < d:
            apow = apow * a
    return acc


def resultant_x(f, g):
    """Exact resultant with respect to x (subresultant PRS)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of zero polynomial")
    ctx = f.ctx
    one = ctx.one_poly()
    df, dg = int(f.degx), int(g.degx)
    if df == 0:
        return f.coeff(0) ** dg
    if dg == 0:
        return g.coeff(0) ** df
    if dg == 1:
        # Res(f, g1*x + g0) = (-1)^(deg f) * sum f_i (-g0)^i g1^(d-i)
        r = norm_eval(f, -g.coeff(0), g.coeff(1))
        return -r if (df % 2 == 1 and ctx.p != 2) else r
    if df == 1:
        # signs cancel: Res(f1*x+f0, g) = sum g_i (-f0)^i f1^(d-i)
        return norm_eval(g, -f.coeff(0), f.coeff(1))
    neg_one = -one
    sign = one
    A, B = f, g
    if df < dg:
        A, B = B, A
        if (df * dg) % 2 == 1:
            sign = neg_one
    gg, hh = one, one
    while True:
        dA, dB = int(A.degx), int(B.degx)
        delta = dA - dB
        if (dA % 2) == 1 and (dB % 2) == 1:
            sign = sign * neg_one
        # pseudo remainder with exact power bookkeeping
        R = A
        lcB = B.lead
        steps = 0
        while not R.is_zero() and R.degx >= dB:
            dR = int(R.degx)
            lcR = R.lead
            shift = dR - dB
            newc = [R.coeff(i) * lcB for i in range(dR + 1)]
            for j in range(dB + 1):
                newc[shift + j] = newc[shift + j] - lcR * B.coeff(j)
            R = BiPoly(ctx, newc)
            steps += 1
        # normalize to lc(B)^(delta+1) * A mod B
        for _ in range(delta + 1 - steps):
            R = R * lcB
        A = B
        denom = gg * hh ** delta
        B = R.map_coeffs(lambda c: c // denom)
        gg = A.lead
        if delta >= 1:
            hh = (gg ** delta) // (hh ** (delta - 1))
        else:
            hh = hh ** (1 - delta) * gg ** delta
        if B.is_zero():
            return ctx.zero_poly()
        if B.degx == 0:
            dA = int(A.degx)
            res = (B.coeff(0) ** dA) // (hh ** (dA - 1))
            return sign * res


def sylvester_resultant_x(f, g):
    """Resultant as the Sylvester determinant (Bareiss fraction-free):
    the independent cross-check oracle for the PRS path."""
    ctx = f.ctx
    df, dg = int(f.degx), int(g.degx)
    n = df + dg
    if n == 0:
        return ctx.one_poly()
    z = ctx.zero_poly()
    M = []
    for i in range(dg):
        row = [z] * n
        for j in range(df + 1):
            row[i + j] = f.coeff(df - j)
        M.append(row)
    for i in range(df):
        row = [z] * n
        for j in range(dg + 1):
            row[i + j] = g.coeff(dg - j)
        M.append(row)
    sign = 1
    prev = ctx.one_poly()
    for k in range(n - 1):
        if M[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if piv is None:
                return z
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) // prev
            M[i][k] = z
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def discriminant_x(f):
    """Monic associate of Res_x(f, df/dx)/lc(f); errors when df/dx = 0."""
    fp = f.deriv_x()
    if fp.is_zero():
        raise ValueError("inseparable polynomial: derivative in x is zero")
    r = resultant_x(f, fp)
    if r.is_zero():
        return r
    lead = f.lead
    q, rem = divmod(r, lead)
    return (q if rem.is_zero() else r).monic()


def separability_decompose(f):
    """Write f = fhat(x^dins) with fhat separable in x, dins maximal
    (1 or a power of the characteristic)."""
    if f.degx < 1:
        raise ValueError("constant in x")
    ctx = f.ctx
    p = ctx.p
    dins = 1
    cur = f
    while cur.degx >= 1 and cur.deriv_x().is_zero():
        # all x-exponents are multiples of p
        out = []
        for j in range(0, len(cur.coeffs), p):
            out.append(cur.coeffs[j])
        cur = BiPoly(ctx, out)
        dins *= p
    return cur, dins


@dataclass
class ValidationReport:
    valid: bool
    resultant_degree: int
    target_degree: int
    has_target_factor: bool
    small_factors: list = field(default_factory=list)
    note: str = ""


def validate_ffs_pair(f, g, n, small_factor_bound=6):
    """Check that Res_x(f, g) has an irreducible factor of degree exactly n;
    report the small irreducible factors of the cofactor as well."""
    if g.degx != 1:
        raise ValueError("g must be linear in x")
    r = resultant_x(f, g)
    if r.is_zero():
        return ValidationReport(False, -1, n, False, [], "resultant is zero")
    rd = int(r.degree)
    smalls = resultant_small_factors(f, g, small_factor_bound, _res=r)
    ok = rd >= n and has_factor_of_exact_degree(r, n)
    note = ""
    if not ok and smalls and rd - sum(k.degree * m for k, m in smalls) < n:
        note = "small forced factors leave no room for a degree-n factor"
    return ValidationReport(ok, rd, n, ok, smalls, note)


def resultant_small_factors(f, g, bound, _res=None):
    """Irreducible factors of Res_x(f, g) of degree <= bound, with
    multiplicities, by trial division against the irreducible stream."""
    r = _res if _res is not None else resultant_x(f, g)
    if r.is_zero():
        raise ValueError("zero resultant")
    out = []
    r = r.monic()
    for ell in irreducibles_stream(f.ctx, max_degree=bound):
        mult = 0
        while True:
            q, rem = divmod(r, ell)
            if rem.is_zero():
                r = q
                mult += 1
            else:
                break
        if mult:
            out.append((ell, mult))
        if r.degree < 1:
            break
    return out


# ---------------------------------------------------------------------------
# text form: "f0;f1;...;fd" with UPoly encodings, or a sum form in x like
# "x^6+(t^2+t+1)x^5+(t^2+t)x+0x152a"

_TERM_RE = re.compile(
    r"^(?:\((?P<par>[^()]*)\)|(?P<hex>0[xX][0-9a-fA-F]+)|(?P<plain>[0-9t^*+]*?))"
    r"\*?(?P<xpart>x(?:\^(?P<e>\d+))?)?$"
)


def render_bipoly(f, style="pretty"):
    if style == "semicolon":
        return ";".join(render_upoly(c) for c in f.coeffs)
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        if i == 0:
            parts.append(render_upoly(c, "pretty") if c.degree >= 1 else str(c.coeffs[0]))
            continue
        xs = "x" if i == 1 else f"x^{i}"
        if c.is_one():
            parts.append(xs)
        elif c.degree == 0:
            parts.append(f"{c.coeffs[0]}{xs}")
        else:
            parts.append(f"({render_upoly(c, 'pretty')}){xs}")
    return "+".join(parts)


def parse_bipoly(ctx, text):
    s = str(text).strip().replace(" ", "")
    if ";" in s:
        return BiPoly(ctx, [parse_upoly(ctx, part) for part in s.split(";")])
    if "x" not in s or (s.lower().startswith("0x") and "x" not in s[2:].lower()):
        # pure constant (possibly hex)
        return BiPoly(ctx, [parse_upoly(ctx, s)])
    coeffs = {}
    # split into terms at top level (no parens nesting)
    terms, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and not cur.endswith("^"):
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur:
        terms.append(cur)
    for term in terms:
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        if m.group("par") is not None:
            c = parse_upoly(ctx, m.group("par"))
        elif m.group("hex") is not None:
            c = parse_upoly(ctx, m.group("hex"))
        elif m.group("plain"):
            c = parse_upoly(ctx, m.group("plain"))
        else:
            c = ctx.one_poly()
        e = 0
        if m.group("xpart"):
            e = int(m.group("e")) if m.group("e") else 1
        if neg:
            c = -c
        coeffs[e] = coeffs.get(e, ctx.zero_poly()) + c
    out = [ctx.zero_poly()] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return BiPoly(ctx, out)
