"""Text syntax naming an infinite word on the command line.

    thue-morse | fibonacci | tribonacci | ruler | quad
    debruijn-limit:<q> | sparse:<q> | word-y | word-z
    morphic:<letter>=<image>,<letter>=<image>...;start=<letter>

Morphic letters are single characters. They are numbered in sorted order, so
``0``/``1`` keep their values and ``a``, ``b``, ... become 0, 1, ...
"""
from __future__ import annotations

from dataclasses import dataclass

from .constructions import word_y_stream, word_z_stream
from .debruijn import maximal_inrc_stream, sparse_word_stream
from .words import FixedPointStream, Morphism, MorphismError, WordStream, builtin_stream

BUILTIN_NAMES = {
    "thue-morse": "thue_morse",
    "fibonacci": "fibonacci",
    "tribonacci": "tribonacci",
    "ruler": "ruler",
    "quad": "quad_complexity",
}
PARAMETRIC = ("debruijn-limit", "sparse")
CONSTRUCTIONS = ("word-y", "word-z")


class WordSpecError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (at byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class WordSpec:
    kind: str  # "builtin", "debruijn-limit", "sparse", "construction", "morphic"
    name: str = ""
    q: int = 0
    rules: tuple[tuple[str, str], ...] = ()
    start: str = ""

    def render(self) -> str:
        if self.kind in ("builtin", "construction"):
            return self.name
        if self.kind in PARAMETRIC:
            return f"{self.kind}:{self.q}"
        body = ",".join(f"{a}={img}" for a, img in self.rules)
        return f"morphic:{body};start={self.start}"

    def morphism(self) -> Morphism:
        if self.kind != "morphic":
            raise ValueError(f"{self.render()} is not a morphic spec")
        chars = sorted({a for a, _ in self.rules} | {c for _, img in self.rules for c in img} | {self.start})
        symbols = "".join(chars)
        rules = {symbols.index(a): tuple(symbols.index(c) for c in img) for a, img in self.rules}
        return Morphism(rules, symbols.index(self.start), symbols, name=self.render())

    def stream(self) -> WordStream:
        if self.kind == "builtin":
            s = builtin_stream(BUILTIN_NAMES[self.name])
            s.label = self.name
            return s
        if self.kind == "debruijn-limit":
            return maximal_inrc_stream(self.q)
        if self.kind == "sparse":
            return sparse_word_stream(self.q)
        if self.kind == "construction":
            return word_y_stream() if self.name == "word-y" else word_z_stream()
        return FixedPointStream(self.morphism(), self.render())


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def parse_word_spec(text: str) -> WordSpec:
    s = text.strip()
    lead = len(text) - len(text.lstrip())

    def fail(msg: str, idx: int):
        raise WordSpecError(msg, _byte_offset(text, lead + idx))

    if s in BUILTIN_NAMES:
        return WordSpec("builtin", s)
    if s in CONSTRUCTIONS:
        return WordSpec("construction", s)
    head, sep, rest = s.partition(":")
    if not sep:
        fail(f"unknown word {s!r}", 0)
    if head in PARAMETRIC:
        if not rest.isdigit():
            fail(f"{head} needs a positive integer alphabet size", len(head) + 1)
        q = int(rest)
        if q < 2:
            fail("alphabet size must be at least 2", len(head) + 1)
        return WordSpec(head, q=q)
    if head != "morphic":
        fail(f"unknown word kind {head!r}", 0)

    pos = len(head) + 1
    body, sep, tail = rest.partition(";")
    if not sep:
        fail("expected ';start=<letter>' after the rules", pos + len(rest))
    rules: list[tuple[str, str]] = []
    seen = set()
    i = pos
    for item in body.split(","):
        letter, eq, img = item.partition("=")
        if not eq or len(letter) != 1:
            fail(f"expected '<letter>=<image>', got {item!r}", i)
        if letter in seen:
            fail(f"letter {letter!r} has two rules", i)
        if any(c in ",;=" for c in img):
            fail(f"bad image {img!r}", i + 2)
        seen.add(letter)
        rules.append((letter, img))
        i += len(item) + 1
    start_at = pos + len(body) + 1
    if not tail.startswith("start=") or len(tail) != len("start=") + 1:
        fail("expected 'start=<letter>' with a single-character letter", start_at)
    spec = WordSpec("morphic", rules=tuple(rules), start=tail[-1])
    try:
        m = spec.morphism()
    except MorphismError as exc:
        raise WordSpecError(f"invalid morphism: {exc}") from None
    if not m.prolongable:
        raise WordSpecError(
            f"invalid morphism: not prolongable on {spec.start!r} "
            "(its image must start with it and have length at least 2)"
        )
    return spec
