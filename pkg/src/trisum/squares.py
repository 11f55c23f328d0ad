"""Constructive decomposition of integers into two and three squares.

Legendre's three-square theorem: m is a sum of three squares exactly when
m is not of the form 4^l(8k+7).  Decomposition here is by direct search
with deterministic tie-breaking, which is what makes the higher-level
constructions reproducible; callers only ever pass residues whose
eligibility is guaranteed, so the search never degenerates.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from .core_arith import check_nat


class NotRepresentable(ValueError):
    """Input is of the excluded form 4^l(8k+7)."""


class NoRepresentation(ValueError):
    """Input is not a sum of two squares."""


class ThreeSquares(NamedTuple):
    a: int
    b: int
    c: int


class TwoSquares(NamedTuple):
    p: int
    q: int


# Quadratic residues mod 256; cheap reject filter before isqrt in scans.
_SQ_MOD256 = frozenset((i * i) & 255 for i in range(256))


def is_square(m: int) -> bool:
    """Exact perfect-square test (integer arithmetic only)."""
    if m < 0:
        return False
    if (m & 255) not in _SQ_MOD256:
        return False
    r = isqrt(m)
    return r * r == m


def eligible_three_squares(m: int) -> bool:
    """True iff m is a sum of three squares (m = 0 included)."""
    check_nat(m, "m")
    while m and m % 4 == 0:
        m //= 4
    return m % 8 != 7


def three_squares(m: int) -> ThreeSquares:
    """Decompose m = a^2 + b^2 + c^2 with a <= b <= c, deterministically.

    Scan order: a ascending, then the middle component q ascending from a;
    the remaining component is resolved by an exact square test.  Among
    triples hit by that scan, the first with all components distinct is
    preferred (it exists for every interesting input); otherwise the first
    triple found is returned.
    """
    check_nat(m, "m")
    if not eligible_three_squares(m):
        raise NotRepresentable(f"{m} is of the form 4^l(8k+7)")
    first: ThreeSquares | None = None
    for a in range(isqrt(m // 3) + 1):
        resid = m - a * a
        r4 = resid & 3
        if r4 == 3:
            continue  # two squares never sum to 3 mod 4
        q = a
        step = 1
        if r4 == 0:  # both remaining components even
            if q & 1:
                q += 1
            step = 2
        elif r4 == 2:  # both remaining components odd
            if not q & 1:
                q += 1
            step = 2
        qmax = isqrt(resid >> 1)
        while q <= qmax:
            rem = resid - q * q
            if (rem & 255) in _SQ_MOD256:
                p = isqrt(rem)
                if p * p == rem:
                    if a < q < p:
                        return ThreeSquares(a, q, p)
                    if first is None:
                        first = ThreeSquares(a, q, p)
            q += step
    if first is None:  # pragma: no cover - excluded by eligibility
        raise NotRepresentable(f"no three-square decomposition of {m}")
    return first


def two_squares(m: int) -> TwoSquares:
    """Decompose m = p^2 + q^2 with p >= q, maximizing p.

    The ascending-q scan returns on the first hit, which is exactly the
    representation with the largest p.
    """
    check_nat(m, "m")
    q = 0
    while 2 * q * q <= m:
        rem = m - q * q
        if (rem & 255) in _SQ_MOD256:
            p = isqrt(rem)
            if p * p == rem:
                return TwoSquares(p, q)
        q += 1
    raise NoRepresentation(f"{m} is not a sum of two squares")
