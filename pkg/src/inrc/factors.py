"""Factor counting over infinite words and their prefixes.

``inrc`` reads an infinite word left to right and stops at the first
length-n factor that has already been seen. Positions are bucketed by a
rolling polynomial fingerprint; a bucket hit is only reported as a repeat
after the two factors compare equal letter by letter, so results are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import GenerationBudgetExceeded, Word, WordStream

DEFAULT_CAP = 10_000_000

EXACT = "exact"
AT_CAP = "at_cap"
LOWER_BOUND = "lower_bound"

_MOD = (1 << 61) - 1
_BASE = 1_000_003


@dataclass(frozen=True)
class InrcResult:
    n: int
    value: int
    status: str
    witness: tuple[int, int] | None = None

    @property
    def exact(self) -> bool:
        return self.status == EXACT


@dataclass(frozen=True)
class ProfileRow:
    n: int
    value: int
    status: str


@dataclass
class ComplexityProfile:
    word_label: str
    function: str
    rows: list[ProfileRow] = field(default_factory=list)

    def values(self) -> dict[int, int]:
        return {r.n: r.value for r in self.rows}

    def is_monotone(self) -> bool:
        """Exact rows never decrease in n (only meaningful for inrc)."""
        exact = [r.value for r in sorted(self.rows, key=lambda r: r.n) if r.status == EXACT]
        return all(a <= b for a, b in zip(exact, exact[1:]))


def _materialize(stream: WordStream, length: int) -> tuple[list[int], bool]:
    """Return the stream buffer holding at least ``length`` letters, or the
    longest prefix the stream will give plus a flag saying it was cut short."""
    try:
        return stream.ensure(length), True
    except GenerationBudgetExceeded as exc:
        return stream.ensure(exc.safe_length), False


def inrc(stream: WordStream, n: int, cap: int = DEFAULT_CAP) -> InrcResult:
    """Number of distinct length-``n`` factors read from the start before the first repeat.

    Scans at most ``cap`` positions. If all of them start distinct factors the
    result is ``(cap, at_cap)``, a lower bound only. By pigeonhole the answer
    is exact whenever ``cap >= q**n + 1`` for an alphabet of size q.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if cap < 1:
        raise ValueError("cap must be at least 1")

    block = max(1024, 2 * n)
    buf, ok = _materialize(stream, min(block, cap + n - 1))
    if len(buf) < n:
        return InrcResult(n, 0, AT_CAP)

    top = pow(_BASE, n - 1, _MOD)
    h = 0
    for a in buf[:n]:
        h = (h * _BASE + a + 1) % _MOD

    buckets: dict[int, list[int]] = {}
    j = 0
    while j < cap:
        for i in buckets.get(h, ()):
            if buf[i:i + n] == buf[j:j + n]:
                return InrcResult(n, j, EXACT, (i, j))
        buckets.setdefault(h, []).append(j)
        j += 1
        if j >= cap:
            break
        if j + n > len(buf):
            if not ok:
                return InrcResult(n, j, AT_CAP)
            want = min(max(2 * len(buf), j + n), cap + n - 1)
            buf, ok = _materialize(stream, want)
            if j + n > len(buf):
                return InrcResult(n, j, AT_CAP)
        h = ((h - (buf[j - 1] + 1) * top) * _BASE + buf[j + n - 1] + 1) % _MOD
    return InrcResult(n, cap, AT_CAP)


def inrc_profile(stream: WordStream, ns: Iterable[int], cap: int = DEFAULT_CAP) -> ComplexityProfile:
    profile = ComplexityProfile(stream.label, "inrc")
    for n in ns:
        r = inrc(stream, n, cap)
        profile.rows.append(ProfileRow(n, r.value, r.status))
    return profile


def _check_length(p: Sequence[int], need: int, what: str) -> None:
    if len(p) < need:
        raise ValueError(f"{what}: prefix of length {len(p)} is shorter than {need}")


def _factors(p: Sequence[int], n: int) -> list[tuple]:
    t = tuple(p)
    return [t[i:i + n] for i in range(len(t) - n + 1)]


def nrc_on_prefix(p: Sequence[int], n: int) -> int:
    """Longest run of consecutive positions in ``p`` whose length-n factors are pairwise distinct.

    This is a lower bound for the non-repetitive complexity of any infinite
    word having ``p`` as a prefix.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_length(p, n, "nrc_on_prefix")
    last: dict[tuple, int] = {}
    best = lo = 0
    for j, f in enumerate(_factors(p, n)):
        prev = last.get(f)
        if prev is not None and prev >= lo:
            lo = prev + 1
        last[f] = j
        best = max(best, j - lo + 1)
    return best


def factor_complexity_on_prefix(p: Sequence[int], n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_length(p, n, "factor_complexity_on_prefix")
    return len(set(_factors(p, n)))


def nrc_profile(p: Sequence[int], ns: Iterable[int], label: str = "") -> ComplexityProfile:
    return ComplexityProfile(label, "nrc",
                             [ProfileRow(n, nrc_on_prefix(p, n), LOWER_BOUND) for n in ns])


def factor_profile(p: Sequence[int], ns: Iterable[int], label: str = "") -> ComplexityProfile:
    return ComplexityProfile(label, "factor",
                             [ProfileRow(n, factor_complexity_on_prefix(p, n), LOWER_BOUND) for n in ns])


def grouped_factor_windows(p: Sequence[int], n: int) -> list[int]:
    """Start positions of length-2n factors of ``p`` containing every length-n
    factor of ``p`` exactly once."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_length(p, 2 * n, "grouped_factor_windows")
    facs = _factors(p, n)
    total = len(set(facs))
    # a length-2n window holds n+1 length-n factors
    if total != n + 1:
        return []
    out = []
    for i in range(len(p) - 2 * n + 1):
        if len(set(facs[i:i + n + 1])) == n + 1:
            out.append(i)
    return out


def special_factors(p: Sequence[int], n: int, side: str) -> list[Word]:
    """Length-n factors of ``p`` that occur in ``p`` with two different letters on ``side``.

    ``side="left"``: ``av`` and ``bv`` both occur; ``side="right"``: ``va`` and ``vb``.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if len(p) <= n:
        raise ValueError(f"special_factors: prefix of length {len(p)} must exceed n={n}")
    ext: dict[tuple, set] = {}
    for f in _factors(p, n + 1):
        if side == "left":
            ext.setdefault(f[1:], set()).add(f[0])
        else:
            ext.setdefault(f[:-1], set()).add(f[-1])
    symbols = getattr(p, "symbols", None)
    return [Word(v, symbols) for v in sorted(ext) if len(ext[v]) >= 2]
