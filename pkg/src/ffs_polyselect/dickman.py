"""Dickman rho: smooth-polynomial density heuristic.

rho(u) = 1 on [0, 1] and solves u rho'(u) = -rho(u - 1).  Evaluation uses
per-interval power series centered at k + 1/2, marched exactly from the
closed form on [1, 2] with high-precision coefficients (mpmath), then
frozen to floats and cached on disk.  Relative accuracy is far below the
1e-8 target on [0, 20].
"""

from __future__ import annotations

import json
import math
import os
from pathlib import Path

_N_TERMS = 64
_DEFAULT_UMAX = 32
_HARD_UMAX = 64
_CACHE_ENV = "FFS_POLYSELECT_CACHE"
_CACHE_VERSION = 1

_tables = None  # {interval k: [coefficients]} for k >= 2
_tables_umax = 0


def _cache_path():
    base = os.environ.get(_CACHE_ENV)
    if base:
        return Path(base) / f"rho_table_v{_CACHE_VERSION}.json"
    return Path.home() / ".cache" / "ffs-polyselect" / f"rho_table_v{_CACHE_VERSION}.json"


def _build_tables(umax):
    """Series marching with mpmath; returns {k: [float coeffs]}."""
    import mpmath as mp

    mp.mp.dps = 40
    # interval [1, 2]: rho(u) = 1 - ln u, centered at 1.5
    c = mp.mpf("1.5")
    prev = [1 - mp.log(c)]
    for j in range(1, _N_TERMS):
        # -(d^j/du^j) ln(u) at c over j!: coefficient (-1)^j / (j * c^j)
        prev.append(-((-1) ** (j + 1)) / (j * c ** j))
    tables = {}
    for k in range(2, umax):
        ck = mp.mpf(2 * k + 1) / 2
        # g(x) = 1/(ck + x) as a series
        g = [(-1) ** j / ck ** (j + 1) for j in range(_N_TERMS)]
        # h = prev * g truncated
        h = [mp.mpf(0)] * _N_TERMS
        for i, a in enumerate(prev):
            if i >= _N_TERMS:
                break
            for j, b in enumerate(g):
                if i + j >= _N_TERMS:
                    break
                h[i + j] += a * b
        cur = [mp.mpf(0)] * _N_TERMS
        for j in range(_N_TERMS - 1):
            cur[j + 1] = -h[j] / (j + 1)
        # anchor continuity: value at x = -1/2 equals rho(k) = prev at +1/2
        half = mp.mpf(1) / 2
        rho_k = sum(a * half ** j for j, a in enumerate(prev))
        tail = sum(cur[j] * (-half) ** j for j in range(1, _N_TERMS))
        cur[0] = rho_k - tail
        tables[k] = cur
        prev = cur
    return {k: [float(x) for x in v] for k, v in tables.items()}


def _load_tables(umax=_DEFAULT_UMAX):
    global _tables, _tables_umax
    if _tables is not None and _tables_umax >= umax:
        return
    path = _cache_path()
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("umax", 0) >= umax and data.get("n_terms") == _N_TERMS:
                _tables = {int(k): v for k, v in data["tables"].items()}
                _tables_umax = data["umax"]
                return
        except (ValueError, KeyError):
            pass
    tables = _build_tables(umax)
    _tables = tables
    _tables_umax = umax
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(
            json.dumps({"umax": umax, "n_terms": _N_TERMS, "tables": tables})
        )
        tmp.replace(path)
    except OSError:
        pass


def dickman_rho(u):
    """rho(u); exact 1 on [0, 1], closed form on [1, 2], series beyond."""
    if u < 0:
        raise ValueError("rho is defined for u >= 0")
    if u <= 1:
        return 1.0
    if u <= 2:
        return 1.0 - math.log(u)
    k = int(math.floor(u))
    if u == k and k >= 3:
        k -= 1  # evaluate from the left interval at integer points
    need = k + 1
    if need >= _HARD_UMAX:
        raise ValueError(f"rho table capped at u < {_HARD_UMAX}")
    _load_tables(max(_DEFAULT_UMAX, need + 1))
    coeffs = _tables[k]
    x = u - (k + 0.5)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
