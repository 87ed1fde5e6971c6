"""Finite words, morphisms and lazily generated infinite words.

Letters are non-negative integers. A word may carry a ``symbols`` string used
only for display (``symbols[i]`` renders letter ``i``); comparisons and all
algorithms look at the integer letters alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

DIGITS = "0123456789"
LATIN = "abcdefghijklmnopqrstuvwxyz"


class Word(tuple):
    """Immutable finite word; a tuple of letters plus an optional display alphabet."""

    def __new__(cls, letters: Iterable[int] = (), symbols: str | None = None):
        self = super().__new__(cls, letters)
        self.symbols = symbols
        return self

    @classmethod
    def from_str(cls, text: str, symbols: str | None = None) -> "Word":
        table = symbols or DIGITS
        try:
            return cls((table.index(ch) for ch in text), symbols)
        except ValueError:
            bad = next(ch for ch in text if ch not in table)
            raise ValueError(f"symbol {bad!r} not in alphabet {table!r}") from None

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(tuple.__getitem__(self, key), self.symbols)
        return tuple.__getitem__(self, key)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)), self.symbols)

    def __str__(self) -> str:
        return render(self, self.symbols)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def complement(self) -> "Word":
        """Swap 0 and 1 in a binary word."""
        return Word((1 - a for a in self), self.symbols)

    def is_palindrome(self) -> bool:
        return tuple(self) == tuple(reversed(self))


def render(letters: Sequence[int], symbols: str | None = None) -> str:
    """Printable form; letters past the end of the alphabet are shown as ``[n]``."""
    table = symbols or DIGITS
    return "".join(table[a] if a < len(table) else f"[{a}]" for a in letters)


def word(text: str, symbols: str | None = None) -> Word:
    """Shorthand for ``Word.from_str``; ``symbols`` defaults to decimal digits."""
    return Word.from_str(text, symbols)


class MorphismError(ValueError):
    pass


class GenerationBudgetExceeded(RuntimeError):
    """A stream refused to materialize past ``safe_length`` letters."""

    def __init__(self, message: str, safe_length: int):
        super().__init__(message)
        self.safe_length = safe_length


@dataclass(frozen=True)
class Morphism:
    """A substitution ``letter -> word`` with a distinguished start letter."""

    rules: Mapping[int, tuple]
    start: int
    symbols: str | None = None
    name: str = ""

    def __post_init__(self):
        rules = {int(a): tuple(img) for a, img in self.rules.items()}
        object.__setattr__(self, "rules", rules)
        for a in (self.start, *rules):
            if a < 0:
                raise MorphismError(f"negative letter {a}")
        if self.start not in rules:
            raise MorphismError(f"start letter {render([self.start], self.symbols)} has no rule")
        for a, img in rules.items():
            for b in img:
                if b not in rules:
                    raise MorphismError(
                        f"letter {render([b], self.symbols)} in the image of "
                        f"{render([a], self.symbols)} has no rule"
                    )

    @classmethod
    def from_strings(cls, images: Mapping[str, str], start: str, symbols: str | None = None,
                     name: str = "") -> "Morphism":
        table = symbols or DIGITS
        rules = {table.index(a): tuple(Word.from_str(img, table)) for a, img in images.items()}
        return cls(rules, table.index(start), symbols, name)

    @property
    def alphabet(self) -> list[int]:
        return sorted(self.rules)

    @property
    def prolongable(self) -> bool:
        img = self.rules[self.start]
        return len(img) >= 2 and img[0] == self.start

    @property
    def erasing(self) -> bool:
        return any(len(img) == 0 for img in self.rules.values())

    def adjacency_matrix(self) -> list[list[int]]:
        """Entry ``[i][j]`` counts occurrences of letter ``i`` in the image of ``j``."""
        letters = self.alphabet
        return [[self.rules[b].count(a) for b in letters] for a in letters]

    def image(self, letter: int) -> Word:
        return Word(self.rules[letter], self.symbols)

    def __call__(self, w: Iterable[int]) -> Word:
        return apply_morphism(self, w)


def apply_morphism(m: Morphism, w: Iterable[int]) -> Word:
    out: list[int] = []
    rules = m.rules
    for a in w:
        try:
            out.extend(rules[a])
        except KeyError:
            raise MorphismError(f"letter {render([a], m.symbols)} has no rule") from None
    return Word(out, m.symbols)


# Each morphism gets its own name; no symbol is shared between two morphisms.
THUE_MORSE_MU = Morphism({0: (0, 1), 1: (1, 0)}, 0, name="thue_morse_mu")
FIB_PHI = Morphism({0: (0, 1), 1: (0,)}, 0, name="fib_phi")
TRIB_SIGMA = Morphism({0: (0, 1), 1: (0, 2), 2: (0,)}, 0, name="trib_sigma")
QUAD_PHI = Morphism({0: (0, 0, 1), 1: (1,)}, 0, name="quad_phi")


class WordStream:
    """Deterministic infinite word, materialized on demand.

    Subclasses implement ``_grow(target)``, appending letters to ``self._buf``
    until it holds at least ``target`` letters. Each instance owns its buffer;
    use ``fresh()`` for an independent cursor over the same word.
    """

    symbols: str | None = None

    def __init__(self, label: str):
        self.label = label
        self._buf: list[int] = []

    def _grow(self, target: int) -> None:
        raise NotImplementedError

    def fresh(self) -> "WordStream":
        raise NotImplementedError

    def ensure(self, length: int) -> list[int]:
        """Grow the internal buffer to at least ``length`` letters and return it (read-only)."""
        if len(self._buf) < length:
            self._grow(length)
        return self._buf

    def prefix(self, length: int) -> Word:
        if length < 0:
            raise ValueError("prefix length must be non-negative")
        return Word(self.ensure(length)[:length], self.symbols)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("infinite word has no negative positions")
        return self.ensure(i + 1)[i]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label}>"


class FixedPointStream(WordStream):
    """The fixed point of a prolongable morphism, iterated from its start letter.

    Uses ``x = m(x[0]) m(x[1]) ...``: the buffer always equals the image of
    the first ``j`` letters, so each step reads one known letter and appends
    its image. If ``j`` catches up with the buffer the fixed point is finite.
    """

    def __init__(self, m: Morphism, label: str | None = None):
        if not m.prolongable:
            raise MorphismError(
                f"morphism is not prolongable on {render([m.start], m.symbols)}: "
                f"its image {render(m.rules[m.start], m.symbols)!r} must start with it "
                "and have length at least 2"
            )
        super().__init__(label or m.name or "morphic")
        self.morphism = m
        self.symbols = m.symbols
        self._buf = list(m.rules[m.start])
        self._read = 1

    def _grow(self, target: int) -> None:
        buf, rules = self._buf, self.morphism.rules
        while len(buf) < target:
            if self._read >= len(buf):
                raise MorphismError(
                    f"fixed point stalls at length {len(buf)}: the morphism erases "
                    "every letter after the seed"
                )
            buf.extend(rules[buf[self._read]])
            self._read += 1

    def fresh(self) -> "FixedPointStream":
        return FixedPointStream(self.morphism, self.label)


class PositionalStream(WordStream):
    """Letter ``i`` is ``letter_at(i)``."""

    def __init__(self, label: str, letter_at: Callable[[int], int], symbols: str | None = None):
        super().__init__(label)
        self.letter_at = letter_at
        self.symbols = symbols

    def _grow(self, target: int) -> None:
        f = self.letter_at
        self._buf.extend(f(i) for i in range(len(self._buf), target))

    def fresh(self) -> "PositionalStream":
        return PositionalStream(self.label, self.letter_at, self.symbols)


class ImageStream(WordStream):
    """Letter-by-letter image of another stream under ``image(letter) -> sequence``."""

    def __init__(self, label: str, base: WordStream, image: Callable[[int], Sequence[int]],
                 symbols: str | None = None):
        super().__init__(label)
        self.base = base.fresh()
        self.image = image
        self.symbols = symbols
        self._read = 0

    def _grow(self, target: int) -> None:
        while len(self._buf) < target:
            self._buf.extend(self.image(self.base[self._read]))
            self._read += 1

    def fresh(self) -> "ImageStream":
        return ImageStream(self.label, self.base, self.image, self.symbols)


class PeriodicStream(WordStream):
    """The ultimately periodic word ``u v v v ...``."""

    def __init__(self, head: Sequence[int], period: Sequence[int], label: str | None = None,
                 symbols: str | None = None):
        if not period:
            raise ValueError("period must be non-empty")
        self.head = tuple(head)
        self.period = tuple(period)
        super().__init__(label or f"{render(self.head, symbols)}({render(self.period, symbols)})^w")
        self.symbols = symbols

    def _grow(self, target: int) -> None:
        h, v = self.head, self.period
        self._buf.extend(
            h[i] if i < len(h) else v[(i - len(h)) % len(v)] for i in range(len(self._buf), target)
        )

    def fresh(self) -> "PeriodicStream":
        return PeriodicStream(self.head, self.period, self.label, self.symbols)


def fixed_point_prefix(m: Morphism, length: int) -> Word:
    """First ``length`` letters of the fixed point of ``m`` from ``m.start``."""
    return FixedPointStream(m).prefix(length)


def ruler_letter(i: int) -> int:
    """2-adic valuation of ``i + 1``."""
    j = i + 1
    return (j & -j).bit_length() - 1


def zimin(k: int) -> Word:
    """Z_0 = empty, Z_{k+1} = Z_k k Z_k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    z: list[int] = []
    for i in range(k):
        z = z + [i] + z
    return Word(z)


BUILTINS = ("thue_morse", "fibonacci", "tribonacci", "ruler", "quad_complexity")


def builtin_stream(name: str) -> WordStream:
    if name == "thue_morse":
        return FixedPointStream(THUE_MORSE_MU, "thue_morse")
    if name == "fibonacci":
        return FixedPointStream(FIB_PHI, "fibonacci")
    if name == "tribonacci":
        return FixedPointStream(TRIB_SIGMA, "tribonacci")
    if name == "ruler":
        return PositionalStream("ruler", ruler_letter)
    if name == "quad_complexity":
        return FixedPointStream(QUAD_PHI, "quad_complexity")
    raise ValueError(f"unknown builtin word {name!r}; expected one of {', '.join(BUILTINS)}")


# Number tables. F_0 = 1, F_1 = 2; T_{-1} = 1, T_0 = 1, T_1 = 2, T_2 = 4.

@lru_cache(maxsize=None)
def fib_number(k: int) -> int:
    if k < 0:
        raise ValueError("F_k is defined for k >= 0")
    a, b = 1, 2
    for _ in range(k):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def trib_number(k: int) -> int:
    if k < -1:
        raise ValueError("T_k is defined for k >= -1")
    if k == -1:
        return 1
    a, b, c = 1, 2, 4
    for _ in range(k):
        a, b, c = b, c, a + b + c
    return a


def d_len(k: int) -> int:
    """|D_k| = (T_{k+1} + T_{k-1} - 3) / 2, with |D_0| = 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 0
    return (trib_number(k + 1) + trib_number(k - 1) - 3) // 2


@dataclass(frozen=True)
class NumberTables:
    """Precomputed F_k, T_k and |D_k| for ``0 <= k < size``."""

    size: int = 40
    fib: tuple = field(init=False)
    trib: tuple = field(init=False)
    d: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "fib", tuple(fib_number(k) for k in range(self.size)))
        object.__setattr__(self, "trib", tuple(trib_number(k) for k in range(self.size)))
        object.__setattr__(self, "d", tuple(d_len(k) for k in range(self.size)))
