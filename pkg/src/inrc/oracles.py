"""Closed-form inrc values and bounds, and a harness checking them against scans."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .factors import DEFAULT_CAP, EXACT, inrc
from .words import WordStream, d_len, fib_number, trib_number

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
NOT_COVERED = "not_covered"


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")


def tm_window(k: int) -> tuple[int, int]:
    """Half-open window ``(2^(k-1), 2^k]`` on which the Thue-Morse value is ``3 * 2^(k-1)``."""
    return 1 << (k - 1), 1 << k


def fib_window(k: int) -> tuple[int, int]:
    """n with ``F_(k-1) <= n+1 < F_k``, written as the half-open ``(F_(k-1) - 2, F_k - 2]``."""
    return fib_number(k - 1) - 2, fib_number(k) - 2


def trib_window(k: int) -> tuple[int, int]:
    """``(|D_(k-1)|, |D_k|]``, i.e. ``((T_k + T_(k-2) - 3)/2, (T_(k+1) + T_(k-1) - 3)/2]``."""
    return d_len(k - 1), d_len(k)


def _find_window(window: Callable[[int], tuple[int, int]], n: int, k: int) -> int:
    while True:
        lo, hi = window(k)
        if lo < n <= hi:
            return k
        if n <= lo:
            raise AssertionError(f"windows skip n={n}")
        k += 1


def oracle_inrc_tm(n: int) -> int:
    _require_positive(n)
    if n == 1:
        return 2
    k = _find_window(tm_window, n, 1)
    return 3 << (k - 1)


def oracle_inrc_fib(n: int) -> int:
    _require_positive(n)
    return fib_number(_find_window(fib_window, n, 2) - 1)


def oracle_inrc_trib(n: int) -> int:
    _require_positive(n)
    return trib_number(_find_window(trib_window, n, 1))


@dataclass(frozen=True)
class Oracle:
    """A prediction for inrc(n): either an exact value or a bound.

    ``check(n, value)`` returns True/False, or None where the claim says
    nothing about ``n``.
    """

    name: str
    describe: Callable[[int], str]
    check: Callable[[int, int], bool | None]


def exact_oracle(name: str, formula: Callable[[int], int]) -> Oracle:
    return Oracle(name, lambda n: str(formula(n)), lambda n, v: v == formula(n))


ORACLES: dict[str, Oracle] = {
    "tm": exact_oracle("tm", oracle_inrc_tm),
    "fib": exact_oracle("fib", oracle_inrc_fib),
    "trib": exact_oracle("trib", oracle_inrc_trib),
    "zimin-bound": Oracle("zimin-bound", lambda n: f"({n},{2 * n}]", lambda n, v: n < v <= 2 * n),
    "y-bound": Oracle(
        "y-bound",
        lambda n: "any" if n == 2 else f"<{3 * n}",
        lambda n, v: None if n == 2 else v < 3 * n,
    ),
    "z-bound": Oracle(
        "z-bound",
        lambda n: f"<{3 * n}" if n > 36 else "any",
        lambda n, v: v < 3 * n if n > 36 else None,
    ),
    "sparse-bound": Oracle("sparse-bound", lambda n: f"<={4 * n}", lambda n, v: v <= 4 * n),
    "quad-bound": Oracle("quad-bound", lambda n: f"<{2 * n}", lambda n, v: v < 2 * n),
}


@dataclass(frozen=True)
class ReportRow:
    n: int
    predicted: str
    computed: int
    status: str
    outcome: str


@dataclass
class OracleReport:
    word_label: str
    oracle: str
    rows: list[ReportRow] = field(default_factory=list)

    def count(self, outcome: str) -> int:
        return sum(r.outcome == outcome for r in self.rows)

    @property
    def passed(self) -> bool:
        """Every covered row passed on an exact value."""
        return bool(self.rows) and all(r.outcome in (PASS, NOT_COVERED) for r in self.rows)

    def summary(self) -> dict[str, int]:
        return {o: self.count(o) for o in (PASS, FAIL, INCONCLUSIVE, NOT_COVERED)}

    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if r.outcome in (FAIL, INCONCLUSIVE)]


def verify(stream: WordStream, oracle: Oracle | str, ns: Iterable[int],
           cap: int = DEFAULT_CAP) -> OracleReport:
    if isinstance(oracle, str):
        try:
            oracle = ORACLES[oracle]
        except KeyError:
            raise ValueError(f"unknown oracle {oracle!r}; expected one of {', '.join(ORACLES)}") from None
    ns = list(ns)
    if not ns:
        raise ValueError("empty n range")
    report = OracleReport(stream.label, oracle.name)
    for n in ns:
        r = inrc(stream, n, cap)
        verdict = oracle.check(n, r.value)
        if verdict is None:
            outcome = NOT_COVERED
        elif r.status != EXACT:
            outcome = INCONCLUSIVE
        else:
            outcome = PASS if verdict else FAIL
        report.rows.append(ReportRow(n, oracle.describe(n), r.value, r.status, outcome))
    return report
