"""Constructive witnesses for 2a(2a-1) + b(2b-1) + 2c(2c+1) + d(2d+1).

Strategy: pick the smallest modulus t in {5, 13, 61} coprime to 4n+3.
Depending on whether 4n+3 is a quadratic residue mod t, peel off A^2 or
2A^2 with A chosen in a residue class mod t^2, hand the remainder to the
mixed ternary representations, and glue the halves back together with
the square-plus-two-triangulars split.  When all three moduli divide
4n+3 the problem is shrunk by a factor of 3965 = 5*13*61 and solved
recursively; the small witness is lifted back up through a four-square
normal form.  Inputs below the size thresholds of the peeling argument
go to the exhaustive search instead.
"""

from __future__ import annotations

import logging
from collections import Counter
from math import isqrt
from typing import Iterator, NamedTuple

from .core_arith import Quad2, check_nat, eval_quad, split_square_plus_double_tri
from .ternary import (
    COMPOSITE_MODULUS,
    MODULI,
    lift_even_odd_pair,
    lift_odd_pair,
    rep_tt4t_mixed,
    rep_ttt_mixed,
)
from .verifier import brute_quad

logger = logging.getLogger(__name__)


class NoOffset(ValueError):
    """No admissible offset A exists below the leading square root."""


class NotCoprime(ValueError):
    """The target shares a factor with the chosen modulus."""


class FourSquareForm(NamedTuple):
    """Witness of 4n+3 = u1^2 + u2^2 + 4a^2 + w^2 in normal form.

    u1 is 3 mod 4 (or the wildcard 1), u2 is 1 mod 4, w is odd with
    w <= 2a + 1.  This is the shape the recursive lifting step preserves.
    """

    u1: int
    u2: int
    a: int
    w: int


# Residue classes mod t^2 from which the offset A may be drawn:
# keyed by (t, doubled); doubled means 8*A0^2 = v instead of 4*A0^2 = v.
_QR_CLASSES: dict[tuple[int, bool], dict[int, frozenset[int]]] = {}


def _build_tables() -> None:
    for t in MODULI:
        mod = t * t
        for doubled in (False, True):
            k = 8 if doubled else 4
            classes: dict[int, set[int]] = {}
            for a0 in range(mod):
                classes.setdefault(k * a0 * a0 % mod, set()).add(a0)
            _QR_CLASSES[t, doubled] = {r: frozenset(s) for r, s in classes.items()}


_build_tables()


def solve_offset_congruence(v: int, t: int, doubled: bool = False) -> frozenset[int]:
    """Classes A0 mod t^2 with 4*A0^2 = v (or 8*A0^2 = v when doubled)."""
    check_nat(v, "v")
    if t not in MODULI:
        raise ValueError(f"modulus must be one of {MODULI}, got {t}")
    if v % t == 0:
        raise NotCoprime(f"{v} is divisible by {t}")
    return _QR_CLASSES[t, doubled].get(v % (t * t), frozenset())


def _offset_candidates(n: int, t: int, doubled: bool) -> Iterator[int]:
    classes = solve_offset_congruence(4 * n + 3, t, doubled)
    start = isqrt(n // 2) if doubled else isqrt(n)
    mod = t * t
    for a in range(start, -1, -1):
        if not doubled and (a ^ n) & 1:
            continue  # n - A^2 must stay even
        if a % mod in classes:
            yield a


def find_offset(n: int, t: int, doubled: bool = False) -> int:
    """Largest admissible offset A, scanning down from the square root."""
    check_nat(n)
    start = isqrt(n // 2) if doubled else isqrt(n)
    for a in _offset_candidates(n, t, doubled):
        if start - a > 2 * t * t:
            logger.info("offset for n=%d sits %d below the square root", n, start - a)
        return a
    raise NoOffset(f"no usable offset for n={n} with t={t}, doubled={doubled}")


def quad2_to_four_squares(n: int, q: Quad2) -> FourSquareForm:
    """Repackage a witness for n as a four-square witness of 4n+3."""
    if eval_quad("thm2", q) != n:
        raise ValueError(f"{tuple(q)} does not represent {n}")
    a, b, c, d = q
    return FourSquareForm(abs(4 * a - 1), 4 * c + 1, b + d, abs(2 * b - 2 * d - 1))


def four_squares_to_quad2(f: FourSquareForm) -> Quad2:
    """Inverse of quad2_to_four_squares; rejects malformed witnesses."""
    u1, u2, a, w = f
    if u1 < 1 or (u1 != 1 and u1 % 4 != 3):
        raise ValueError(f"u1={u1} must be 1 or 3 mod 4")
    if u2 < 1 or u2 % 4 != 1:
        raise ValueError(f"u2={u2} must be positive and 1 mod 4")
    if a < 0 or w < 1 or w % 2 == 0 or w > 2 * a + 1:
        raise ValueError(f"w={w} must be odd and at most 2a+1={2 * a + 1}")
    hi, lo = 2 * a + w, 2 * a - w
    if (hi + 1) % 4 == 0:
        b, d = (hi + 1) // 4, (lo - 1) // 4
    else:
        b, d = (lo + 1) // 4, (hi - 1) // 4
    return Quad2((u1 + 1) // 4 if u1 % 4 == 3 else 0, b, (u2 - 1) // 4, d)


_branches: Counter[str] = Counter()


def branch_counts() -> dict[str, int]:
    """How often each strategy (brute/square/doubled/descent) ran."""
    return dict(_branches)


def reset_branch_counts() -> None:
    _branches.clear()


def _slots(i: int, j: int) -> tuple[int, int]:
    # map a pair of triangular indices, one odd and one even, to (odd slot, even slot)
    if i & 1:
        return (i + 1) // 2, j // 2
    return (j + 1) // 2, i // 2


def _combine_square(a_off: int, rep_x: int, rep_y: int, rep_z: int) -> Quad2:
    b, d = _slots(*split_square_plus_double_tri(a_off, rep_z))
    a, c = _slots(rep_x, rep_y)
    return Quad2(a, b, c, d)


def _combine_doubled(a_off: int, rep_x: int, rep_y: int, rep_z: int) -> Quad2:
    a, c = _slots(*split_square_plus_double_tri(a_off, rep_z))
    b, d = _slots(rep_x, rep_y)
    return Quad2(a, b, c, d)


def represent_thm2(n: int) -> Quad2:
    """Return (a, b, c, d) with 2a(2a-1)+b(2b-1)+2c(2c+1)+d(2d+1) = n."""
    check_nat(n)
    v = 4 * n + 3
    t = next((m for m in MODULI if v % m), None)
    if t is None:
        _branches["descent"] += 1
        return _descend(v)
    doubled = pow(v % t, (t - 1) // 2, t) == t - 1
    t4 = t**4
    if doubled:
        big_enough = n > 12 * t4 and (n - 12 * t4) ** 2 > 128 * t4 * t4
    else:
        big_enough = n > 6 * t4 and (n - 6 * t4) ** 2 > 32 * t4 * t4
    if big_enough:
        if doubled:
            for a_off in _offset_candidates(n, t, True):
                rep = rep_tt4t_mixed(n - 2 * a_off * a_off, t)
                if a_off > rep.z:
                    _branches["doubled"] += 1
                    return _combine_doubled(a_off, rep.x, rep.y, rep.z)
        else:
            for a_off in _offset_candidates(n, t, False):
                rep = rep_ttt_mixed((n - a_off * a_off) // 2, t)
                if a_off > rep.z:
                    _branches["square"] += 1
                    return _combine_square(a_off, rep.x, rep.y, rep.z)
        logger.warning("offset scan exhausted for n=%d (t=%d); falling back", n, t)
    _branches["brute"] += 1
    return Quad2(*brute_quad("thm2", n, budget=None))


def _descend(v: int) -> Quad2:
    inner_n = (v // COMPOSITE_MODULUS - 3) // 4
    inner = represent_thm2(inner_n)
    f = quad2_to_four_squares(inner_n, inner)
    l1, l2 = lift_odd_pair(f.u1, f.u2)
    if l1 % 4 == 1:
        l1, l2 = l2, l1
    even, odd = lift_even_odd_pair(2 * f.a, f.w)
    return four_squares_to_quad2(FourSquareForm(l1, l2, even // 2, odd))
