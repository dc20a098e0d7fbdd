"""Cancellation property: Laurent-series roots at the infinite place.

A pair (a, b) loses norm degree exactly when the leading terms of the
series a/b match a Laurent root of f.  Roots grow term by term from
integer slopes of the Newton polygon; the guaranteed degree drop (gap) of
each truncation comes from a certificate search on the shifted polynomial
f(x + r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .gf import UPoly

GAP_SEARCH_DEPTH = 64
NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# Laurent coefficients: poly(t) * t^shift


class LaurentU:
    __slots__ = ("poly", "shift")

    def __init__(self, poly, shift=0):
        if poly.is_zero():
            shift = 0
        else:
            low = 0
            while poly.coeffs[low] == 0:
                low += 1
            if low:
                poly = poly.shift(-low)
                shift += low
        self.poly = poly
        self.shift = shift

    @classmethod
    def monomial(cls, ctx, coeff, exponent):
        return cls(UPoly(ctx, (coeff,)), exponent)

    def is_zero(self):
        return self.poly.is_zero()

    @property
    def degree(self):
        if self.poly.is_zero():
            return NEG_INF
        return int(self.poly.degree) + self.shift

    def coeff_at(self, e):
        i = e - self.shift
        if 0 <= i < len(self.poly.coeffs):
            return self.poly.coeffs[i]
        return 0

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        sh = min(self.shift, other.shift)
        return LaurentU(
            self.poly.shift(self.shift - sh) + other.poly.shift(other.shift - sh), sh
        )

    def __neg__(self):
        return LaurentU(-self.poly, self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return LaurentU(self.poly.ctx.zero_poly(), 0)
        return LaurentU(self.poly * other.poly, self.shift + other.shift)

    def scale(self, c):
        return LaurentU(self.poly * c, self.shift)

    def __repr__(self):
        return f"LaurentU({self.render()})"

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.poly.coeffs) - 1, -1, -1):
            c = self.poly.coeffs[i]
            if not c:
                continue
            e = i + self.shift
            if e == 0:
                parts.append(str(c))
            else:
                cs = "" if c == 1 else f"{c}*"
                parts.append(f"{cs}t^{e}" if e != 1 else f"{cs}t")
        return "+".join(parts)


def _binom_mod_p(n, k, p):
    r = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        num = den = 1
        for i in range(b):
            num = (num * (a - i)) % p
            den = (den * (i + 1)) % p
        r = (r * num * pow(den, p - 2, p)) % p
        n //= p
        k //= p
    return r


class LaurentBi:
    """Polynomial in x with LaurentU coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.ctx = ctx
        self.coeffs = c

    @classmethod
    def from_bipoly(cls, f):
        return cls(f.ctx, [LaurentU(c, 0) for c in f.coeffs])

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return LaurentU(self.ctx.zero_poly(), 0)

    @property
    def degx(self):
        return len(self.coeffs) - 1

    def shift_x_by(self, lam, exponent):
        """h(x) -> h(x + lam * t^exponent)."""
        ctx = self.ctx
        p = ctx.p
        d = self.degx
        mono = LaurentU.monomial(ctx, lam, exponent)
        mpow = [LaurentU.monomial(ctx, 1, 0)]
        for _ in range(d):
            mpow.append(mpow[-1] * mono)
        zero = LaurentU(ctx.zero_poly(), 0)
        out = [zero] * (d + 1)
        for i in range(d + 1):
            ci = self.coeff(i)
            if ci.is_zero():
                continue
            for j in range(i + 1):
                b = _binom_mod_p(i, j, p)
                if b:
                    term = ci * mpow[i - j]
                    if b != 1:
                        term = term.scale(b)
                    out[j] = out[j] + term
        return LaurentBi(ctx, out)


# ---------------------------------------------------------------------------
# Newton polygon (coordinates (d - i, deg f_i); the hull relevant for the
# valuation -deg is the upper one, whose edge slopes are the root degrees)


@dataclass
class NewtonPolygon:
    vertices: list  # upper-hull points (d - i, deg f_i), left to right
    edges: list  # [(slope: Fraction, length: int)]


def newton_polygon(f):
    if f.is_zero():
        raise ValueError("Newton polygon of zero")
    d = int(f.degx)
    pts = []
    for i in range(d, -1, -1):
        c = f.coeff(i)
        if not c.is_zero():
            pts.append((d - i, int(c.degree)))
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x2) <= (pt[1] - y2) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    edges = [
        (Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    ]
    return NewtonPolygon(hull, edges)


def fractional_slope_diagnostics(f):
    """Non-integer polygon slopes (they spawn no Laurent roots)."""
    return [s for s, _l in newton_polygon(f).edges if s.denominator != 1]


# ---------------------------------------------------------------------------
# certificate search: maximal degree of f(x + r) over admissible tails


def _tie_poly(h, s):
    """(T, tie): T = max over extensions y (deg y <= -s) of the term-degree
    bound; tie = {i: coefficient at the top} for the terms reaching T."""
    cand = []
    h0 = h.coeff(0)
    if not h0.is_zero():
        cand.append((h0.degree, 0))
    for i in range(1, h.degx + 1):
        ci = h.coeff(i)
        if not ci.is_zero():
            cand.append((ci.degree - i * s, i))
    if not cand:
        return None, {}
    T = max(v for v, _ in cand)
    tie = {}
    for v, i in cand:
        if v == T:
            if i == 0:
                tie[0] = h0.coeff_at(T)
            else:
                tie[i] = h.coeff(i).coeff_at(T + i * s)
    return T, tie


def _cancelling_lams(ctx, tie):
    """Leading coefficients lam in F_q* that kill the top tie."""
    out = []
    for lam in range(1, ctx.q):
        e = tie.get(0, 0)
        for i, c in tie.items():
            if i:
                e = ctx.add(e, ctx.mul(c, ctx.pow(lam, i)))
        if e == 0:
            out.append(lam)
    return out


def _max_ext_deg(h, s, depth=GAP_SEARCH_DEPTH):
    """(max deg h(y) over Laurent series y with deg y <= -s, resolved)."""
    ctx = h.ctx
    T, tie = _tie_poly(h, s)
    if T is None:
        return NEG_INF, True
    if set(tie) == {0}:
        return h.coeff(0).degree, True
    lams = _cancelling_lams(ctx, tie)
    if len(lams) < ctx.q - 1:
        # some leading coefficient keeps the top: T is attained
        return T, True
    if depth <= 0:
        return T, False
    best, resolved = _max_ext_deg(h, s + 1, depth - 1)  # skip this slot
    for lam in lams:
        child = h.shift_x_by(lam, -s)
        Tc, _tc = _tie_poly(child, s + 1)
        if Tc is None or Tc <= best:
            continue  # branch cannot beat what we already have
        v, r = _max_ext_deg(child, s + 1, depth - 1)
        if v > best:
            best = v
        resolved = resolved and r
    return best, resolved


def _stable_hensel(h, s):
    """x^1 term strictly dominates all x^i (i >= 2) terms at every slot
    >= s: the continuation is unique forever and gaps grow by one per
    precision step (certified infinite root)."""
    c1 = h.coeff(1)
    if c1.is_zero():
        return False
    v1 = c1.degree
    h0 = h.coeff(0)
    if not h0.is_zero() and h0.degree > v1 - s:
        return False  # the constant term would end the chain first
    for i in range(2, h.degx + 1):
        ci = h.coeff(i)
        if not ci.is_zero() and v1 - s <= ci.degree - i * s:
            return False
    return True


# ---------------------------------------------------------------------------
# root chains


@dataclass
class LaurentRoot:
    """One line of a Laurent root tree.

    terms: ((exponent, coeff), ...) of r, highest exponent first.
    levels: [(m, gap, gamma)] for each recorded precision of this line
    (gamma = gap increment over precision m - 1, full gap at a fresh start).
    children: deeper lines extending this one by a nonzero term.
    infinite: certified to extend indefinitely with unit gap increments.
    """

    terms: tuple
    m: int
    gap: int
    levels: list
    infinite: bool
    children: list = field(default_factory=list)
    gap_resolved: bool = True

    @property
    def lead_deg(self):
        return self.terms[0][0]

    @property
    def n_terms(self):
        return self.lead_deg + self.m

    def iter_nodes(self):
        yield self
        for c in self.children:
            yield from c.iter_nodes()

    def render(self):
        parts = []
        for e, c in self.terms:
            cs = "" if c == 1 else f"{c}*"
            if e == 0:
                parts.append(str(c))
            else:
                parts.append(f"{cs}t^{e}" if e != 1 else f"{cs}t")
        return ("+".join(parts) if parts else "0") + f"+O(t^{-(self.m + 1)})"


def _lead_max(f, delta):
    return max(
        int(c.degree) + i * delta for i, c in enumerate(f.coeffs) if not c.is_zero()
    )


def _grow(terms, h, m_start, M, gap_prev, m_max, ctx, depth=GAP_SEARCH_DEPTH):
    """Expand one line starting at precision m_start; returns LaurentRoot."""
    q = ctx.q
    levels = []
    children = []
    resolved_all = True
    m = m_start
    while True:
        if m > m_max:
            node_m = m - 1
            break
        G, res = _max_ext_deg(h, m + 1)
        resolved_all = resolved_all and res
        gap_here = (M - G) if G != NEG_INF else (gap_prev or 0) + 1
        gamma = gap_here - (gap_prev if gap_prev is not None else 0)
        if gamma <= 0 and gap_prev is not None:
            node_m = m - 1
            break
        levels.append((m, gap_here, gamma))
        gap_prev = gap_here
        if _stable_hensel(h, m + 2):
            return LaurentRoot(terms, m, gap_here, levels, True, children, resolved_all)
        # children: continuations with a nonzero coefficient at slot m+1
        s = m + 1
        T, tie = _tie_poly(h, s)
        if T is not None and set(tie) != {0} and depth > 0:
            for lam in _cancelling_lams(ctx, tie):
                child_h = h.shift_x_by(lam, -s)
                child = _grow(
                    terms + ((-s, lam),),
                    child_h,
                    s,
                    M,
                    gap_here,
                    m_max,
                    ctx,
                    depth - 1,
                )
                if child.levels:
                    children.append(child)
        m += 1
    gap_final = levels[-1][1] if levels else (gap_prev or 0)
    return LaurentRoot(terms, node_m, gap_final, levels, False, children, resolved_all)


def laurent_roots(f, m_max=None):
    """Laurent root trees of f, chains recorded to precision m_max."""
    ctx = f.ctx
    q = ctx.q
    if f.is_zero():
        raise ValueError("zero polynomial")
    if m_max is None:
        m_max = default_m_max(f, 0, Fraction(25, 2))
    out = []
    poly = newton_polygon(f)
    for slope, _length in poly.edges:
        if slope.denominator != 1:
            continue
        delta = int(slope)
        M = _lead_max(f, delta)
        tie = {}
        for i, c in enumerate(f.coeffs):
            if not c.is_zero() and int(c.degree) + i * delta == M:
                tie[i] = c.lead
        for lam in range(1, q):
            e = 0
            for i, c in tie.items():
                e = ctx.add(e, ctx.mul(c, ctx.pow(lam, i)))
            if e != 0:
                continue
            start_m = -delta
            if start_m > m_max:
                continue
            h = LaurentBi.from_bipoly(f).shift_x_by(lam, delta)
            root = _grow(((delta, lam),), h, start_m, M, None, m_max, ctx)
            if root.levels:
                out.append(root)
    out.sort(key=lambda r: (-r.lead_deg, r.terms))
    return out


def iter_root_nodes(roots):
    for r in roots:
        yield from r.iter_nodes()


def gap(f, root):
    """Guaranteed norm-degree drop of the root at its recorded precision."""
    if isinstance(root, LaurentRoot):
        return root.gap
    raise TypeError("expected a LaurentRoot")


def match_probability(root, e, s, ctx):
    """Main term of the proportion of sieve-domain pairs whose ratio a/b
    matches the root through its precision."""
    q = ctx.q
    N_r = root.n_terms
    if e < N_r + abs(root.lead_deg):
        raise ValueError("sieve parameter too small for this precision")
    return q ** float(-(N_r + abs(s - root.lead_deg))) / (q + 1)


def default_m_max(f, s, e):
    """Deep enough that sieve-domain pairs cannot match any deeper."""
    d = int(f.degx)
    ee = Fraction(e)
    return int(d * (ee + Fraction(abs(int(s)), 2)) + max(0, int(f.tdeg)))


def alpha_infinity(f, s, m_max=None, exact=False):
    """Expected norm-degree change from cancellations at skewness s (<= 0)."""
    ctx = f.ctx
    q = ctx.q
    if m_max is None:
        edges = newton_polygon(f).edges
        spread = max((abs(int(sl)) for sl, _ in edges if sl.denominator == 1), default=0)
        m_max = abs(int(s)) + spread + max(8, int(30 / max(1, q.bit_length() - 1)))
    roots = laurent_roots(f, m_max)
    total = Fraction(0)
    for node in iter_root_nodes(roots):
        delta = node.lead_deg
        w = abs(int(s) - delta)
        for (m, _gap, gamma) in node.levels:
            if gamma > 0:
                total -= Fraction(gamma, (q + 1) * q ** (delta + m + w))
        if node.infinite:
            m_end = node.levels[-1][0]
            total -= Fraction(
                q, (q + 1) * (q - 1) * q ** (delta + m_end + 1 + w)
            )
    return total if exact else float(total)
