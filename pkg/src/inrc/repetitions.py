"""Periods, powers and repetition avoidance for finite words.

Exponents are exact ``Fraction`` values. A factor ``u[i:i+L]`` has period ``p``
iff ``u[j] == u[j+p]`` for ``i <= j < i+L-p``, so every search below runs over
periods ``p`` and looks for long enough runs in the boolean vector
``u[:-p] == u[p:]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

import numpy as np

Exponent = Fraction

SQUARE = Fraction(2)
CUBE = Fraction(3)
# 13/5 < phi^2 = (3 + sqrt 5)/2 ~ 2.618 < 21/8
GOLDEN_SQUARE_LOWER = Fraction(13, 5)

MAX_SQUARE_LISTING = 50_000


@dataclass(frozen=True)
class SquareOccurrence:
    position: int
    half_length: int


@dataclass(frozen=True)
class PowerOccurrence:
    """The factor ``u[position:position+length]``, which has period ``period``."""

    position: int
    length: int
    period: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)


@dataclass(frozen=True)
class OverlapOccurrence:
    """``axaxa`` at ``position`` with ``|ax| = period`` (length ``2*period + 1``)."""

    position: int
    period: int

    @property
    def length(self) -> int:
        return 2 * self.period + 1


def exponent(alpha) -> Fraction:
    e = Fraction(alpha)
    if e <= 1:
        raise ValueError(f"exponent must exceed 1, got {e}")
    return e


def at_least_golden_square(r: Fraction) -> bool:
    """Exact test of ``r >= phi**2`` using ``phi**2 = (3 + sqrt 5) / 2``."""
    t = 2 * Fraction(r) - 3
    return t >= 0 and t * t >= 5


def at_most_golden_square(r: Fraction) -> bool:
    t = 2 * Fraction(r) - 3
    return t <= 0 or t * t <= 5


def _array(u: Sequence[int]) -> np.ndarray:
    return np.asarray(tuple(u), dtype=np.int64)


def border_array(u: Sequence[int]) -> list[int]:
    """``b[i]`` is the length of the longest proper border of ``u[:i+1]``."""
    b = [0] * len(u)
    k = 0
    for i in range(1, len(u)):
        while k and u[i] != u[k]:
            k = b[k - 1]
        if u[i] == u[k]:
            k += 1
        b[i] = k
    return b


def shortest_period(u: Sequence[int]) -> int:
    if not u:
        raise ValueError("the empty word has no shortest period")
    return len(u) - border_array(u)[-1]


def _first_run(eq: np.ndarray, need: int) -> int:
    """Smallest ``i`` with ``eq[i:i+need]`` all true, or -1."""
    if need > len(eq):
        return -1
    if need <= 0:
        return 0
    cs = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
    hits = np.flatnonzero(cs[need:] - cs[:-need] == need)
    return int(hits[0]) if len(hits) else -1


def find_power(u: Sequence[int], alpha) -> PowerOccurrence | None:
    """Leftmost, then shortest, factor of ``u`` with exponent ``>= alpha``."""
    alpha = exponent(alpha)
    a = _array(u)
    n = len(a)
    best: tuple[int, int, int] | None = None
    p = 1
    while ceil(alpha * p) <= n:
        length = ceil(alpha * p)
        i = _first_run(a[:-p] == a[p:], length - p)
        if i >= 0 and (best is None or (i, length) < best[:2]):
            best = (i, length, p)
        p += 1
    if best is None:
        return None
    i, length, p = best
    return PowerOccurrence(i, length, shortest_period(u[i:i + length]))


def is_power_free(u: Sequence[int], alpha) -> bool:
    """True iff no factor of ``u`` is a beta-power for any ``beta >= alpha``."""
    return find_power(u, alpha) is None


def is_squarefree(u: Sequence[int]) -> bool:
    return find_power(u, SQUARE) is None


def is_cubefree(u: Sequence[int]) -> bool:
    return find_power(u, CUBE) is None


def find_overlap(u: Sequence[int]) -> OverlapOccurrence | None:
    """Leftmost, then shortest, factor of the form ``axaxa``."""
    a = _array(u)
    n = len(a)
    best = None
    for p in range(1, (n - 1) // 2 + 1):
        i = _first_run(a[:-p] == a[p:], p + 1)
        if i >= 0 and (best is None or i < best[0]):
            best = (i, p)
            if i == 0:
                break
    return None if best is None else OverlapOccurrence(*best)


def is_overlap_free(u: Sequence[int]) -> bool:
    return find_overlap(u) is None


def ends_with_power(p: Sequence[int], alpha=GOLDEN_SQUARE_LOWER) -> bool:
    """True iff some suffix ``s`` of ``p`` has ``|s| / shortest_period(s) >= alpha``."""
    if not p:
        raise ValueError("ends_with_power needs a non-empty word")
    alpha = exponent(alpha)
    rev = list(reversed(p))
    b = border_array(rev)
    return any(Fraction(L, L - b[L - 1]) >= alpha for L in range(1, len(rev) + 1))


def list_squares(u: Sequence[int]) -> list[SquareOccurrence]:
    """Every ``(position, half_length)`` with ``u[i:i+h] == u[i+h:i+2h]``."""
    if len(u) > MAX_SQUARE_LISTING:
        raise ValueError(f"list_squares is quadratic; words longer than {MAX_SQUARE_LISTING} are refused")
    a = _array(u)
    out = []
    for h in range(1, len(a) // 2 + 1):
        eq = a[:-h] == a[h:]
        cs = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
        # square at i iff eq[i:i+h] is all true, with i + 2h <= len(u)
        m = len(a) - 2 * h + 1
        hits = np.flatnonzero(cs[h:h + m] - cs[:m] == h)
        out.extend(SquareOccurrence(int(i), h) for i in hits)
    out.sort(key=lambda s: (s.position, s.half_length))
    return out
