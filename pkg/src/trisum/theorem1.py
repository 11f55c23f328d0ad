"""Constructive witnesses for a(2a-1) + b(2b-1) + c(2c+1) + d(2d+1).

The construction peels off the largest available square-ish chunk (driven
by the biggest c with 2c^2(+2c+1) <= n), represents the small remainder
with a ternary identity, and recombines via the split

    a^2 + 2T(b) = T(a+b) + T(a-b-1)    (a > b).

The recombination needs two strict bound checks; they are expected to
hold for every n > 200 and are verified at runtime anyway, with a swap
repair and a brute-force fallback behind them.
"""

from __future__ import annotations

import logging
from math import isqrt

from .core_arith import Quad1, check_nat, indices_to_quad1
from .ternary import rep_2t_t_t, rep_square_two_tri

logger = logging.getLogger(__name__)

_fallbacks = 0


def fallback_count() -> int:
    """Number of constructive-path bound failures since the last reset."""
    return _fallbacks


def reset_fallback_count() -> None:
    global _fallbacks
    _fallbacks = 0


def _brute(n: int) -> Quad1:
    """Exhaustive first-witness search; total on the checked base range."""
    even_vals = {}
    e = 0
    while e * (2 * e + 1) <= n:
        even_vals[e * (2 * e + 1)] = e
        e += 1
    a = 0
    while a * (2 * a - 1) <= n:
        ra = n - a * (2 * a - 1)
        b = a
        while b * (2 * b - 1) <= ra:
            rb = ra - b * (2 * b - 1)
            c = 0
            while c * (2 * c + 1) <= rb:
                d = even_vals.get(rb - c * (2 * c + 1))
                if d is not None:
                    return Quad1(a, b, c, d)
                c += 1
            b += 1
        a += 1
    raise ValueError(f"no witness for {n}")  # not reachable for any n >= 0


def _note_fallback(n: int) -> None:
    global _fallbacks
    _fallbacks += 1
    logger.warning("bound check failed for n=%d; using brute-force witness", n)


def represent_thm1(n: int) -> Quad1:
    """Return (a, b, c, d) with a(2a-1)+b(2b-1)+c(2c+1)+d(2d+1) = n."""
    check_nat(n)
    if n <= 200:
        return _brute(n)
    if n & 1:
        # biggest c with 2c^2 + 2c + 1 <= n, i.e. (2c+1)^2 <= 2n - 1
        c = (isqrt(2 * n - 1) - 1) // 2
        m = (n - (2 * c * c + 2 * c + 1)) // 2
        rep = rep_2t_t_t(m)
        d = rep.x
        for x, y in ((rep.y, rep.z), (rep.z, rep.y)):
            if c - d > x and c + d + 1 > y:
                return indices_to_quad1(c + d + 1 + y, c + d - y, c - d + x, c - d - x - 1)
    else:
        c = isqrt(n // 2)
        m = (n - 2 * c * c) // 2
        rep = rep_square_two_tri(m)
        p = rep.x
        for x, y in ((rep.y, rep.z), (rep.z, rep.y)):
            if c - p > x and c + p > y:
                return indices_to_quad1(c - p + x, c - p - x - 1, c + p + y, c + p - y - 1)
    _note_fallback(n)
    return _brute(n)
