"""Inseparable-polynomial analytics: free relations, factor-base counts,
and the constant-alpha case of power polynomials with linear core."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bivariate import BiPoly, resultant_x, separability_decompose
from .gf import count_irreducibles, gcd, irreducibles_stream, pow_mod
from .roots import (
    AlphaResult,
    _bad_set_poly,
    _residue_roots,
    _root_mass,
    alpha,
    default_b0,
)
from .gf import factor_low_degree


@dataclass
class InsepInfo:
    dins: int
    fhat: BiPoly
    galois_order_heuristic: int
    free_rel_proportion_est: Fraction
    factor_base_factor: int = 2


def insep_info(f):
    fhat, dins = separability_decompose(f)
    order = math.factorial(int(fhat.degx))
    return InsepInfo(dins, fhat, order, Fraction(1, order))


def _splits_completely(fhat, ell):
    """fhat mod ell splits into distinct degree-1 factors over the residue
    field (callers exclude ell | Disc, so distinctness is automatic)."""
    ctx = fhat.ctx
    cs = [c % ell for c in fhat.coeffs]
    while cs and cs[-1].is_zero():
        cs.pop()
    if len(cs) - 1 != int(fhat.degx):
        return False  # degree dropped mod ell
    from .roots import _res_inv, _x_powmod_frobenius, _x_deg, _x_mod

    if len(cs) == 2:
        return True  # linear always splits
    inv = _res_inv(cs[-1], ell)
    cs = [(c * inv) % ell for c in cs]
    N = ctx.q ** int(ell.degree)
    xq = _x_powmod_frobenius(cs, ell, N)
    # splits iff fbar | x^N - x, i.e. x^N mod fbar is x itself
    return (
        _x_deg(xq) == 1
        and xq[1].is_one()
        and xq[0].is_zero()
    )


def is_free_relation(f, ell):
    """ell splits f into degree-1 factors and avoids Disc(fhat) * lead."""
    fhat, _dins = separability_decompose(f)
    fp = fhat.deriv_x()
    disc = resultant_x(fhat, fp)
    w = disc * f.lead
    if (w % ell).is_zero():
        return False
    return _splits_completely(fhat, ell)


def free_relation_census(f, beta):
    """(free count, total irreducibles, proportion, heuristic 1/#Gal)."""
    fhat, _dins = separability_decompose(f)
    info = insep_info(f)
    total = 0
    free = 0
    fp = fhat.deriv_x()
    disc = resultant_x(fhat, fp)
    w = disc * f.lead
    for ell in irreducibles_stream(f.ctx, max_degree=beta):
        total += 1
        if (w % ell).is_zero():
            continue
        if _splits_completely(fhat, ell):
            free += 1
    return free, total, Fraction(free, total), info.free_rel_proportion_est


def coppersmith_alpha(f, b0=None, k_max_deg=None):
    """For f = fhat(x^D) with fhat linear: checks whether any root of f
    modulo ell lifts modulo ell^2 for some ell of degree <= b0.  If none
    does, alpha(f) equals exactly 2/(q-1); otherwise the general alpha is
    returned with the flag down."""
    ctx = f.ctx
    fhat, D = separability_decompose(f)
    if fhat.degx != 1:
        raise ValueError("the separable core must be linear in x")
    if b0 is None:
        b0 = default_b0(ctx.q)
    # only divisors of the obstruction polynomial can carry level-2 roots
    W = _bad_set_poly(f, fhat, D)
    bad, _cof = factor_low_degree(W, b0)
    violated = False
    for ell, _m in bad:
        work = f
        cont = f.content()
        if cont.degree >= 1 and cont.valuation(ell):
            div = ell ** cont.valuation(ell)
            work = f.map_coeffs(lambda c: c // div)
        wh, wd = separability_decompose(work)
        _mass, _n1, alive = _root_mass(wh, wd, ell, 2, vmin=0)
        if alive:  # roots exist modulo ell^2
            violated = True
            break
    if not violated:
        return 2.0 / (ctx.q - 1), True
    return alpha(f, b0, k_max_deg).value, False


def factor_base_accounting(f, beta):
    """(rational side, algebraic side, free relations) for degree <= beta.

    The algebraic side counts pairs (ell, r) with f(r) = 0 mod ell; by the
    root bijection it is computed on the separable core."""
    ctx = f.ctx
    fhat, _dins = separability_decompose(f)
    rational = sum(count_irreducibles(ctx, k) for k in range(1, beta + 1))
    algebraic = 0
    for ell in irreducibles_stream(ctx, max_degree=beta):
        try:
            algebraic += len(_residue_roots(fhat, ell))
        except ValueError:
            pass  # content vanishes: no contribution counted here
    free, _total, _prop, _est = free_relation_census(f, beta)
    return rational, algebraic, free
