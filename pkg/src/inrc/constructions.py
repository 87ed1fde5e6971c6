"""Squarefree words with slowly growing inrc.

``y`` is the image of the ruler word under ``theta(i) = d W_i e W_i`` (W_i the
length-i prefix of the squarefree word ``w``), and ``z`` is the image of
``y`` under Brandenburg's uniform 18-letter morphism onto three letters.
Letters a..e are stored as 0..4.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .repetitions import is_squarefree
from .words import (
    FixedPointStream,
    Morphism,
    MorphismError,
    Word,
    WordStream,
    ImageStream,
    builtin_stream,
)

ABCDE = "abcde"
A, B, C, D, E = range(5)

BASE_W = Morphism({A: (A, B, C), B: (A, C), C: (B,)}, A, symbols="abc", name="base_w")

BRANDENBURG_IMAGES = {
    "a": "abacabcacbabcbacbc",
    "b": "abacabcacbacabacbc",
    "c": "abacabcacbcabcbabc",
    "d": "abacabcbacabacbabc",
    "e": "abacabcbacbcacbabc",
}


def _load_brandenburg() -> dict[int, tuple]:
    images = {}
    for k, v in BRANDENBURG_IMAGES.items():
        img = Word.from_str(v, ABCDE)
        if len(img) != 18 or not v.startswith("abacabc") or not is_squarefree(img):
            raise RuntimeError(f"corrupt Brandenburg image for {k!r}: {v}")
        images[ABCDE.index(k)] = tuple(img)
    return images


BRANDENBURG = Morphism(_load_brandenburg(), A, symbols=ABCDE, name="brandenburg_sigma")

_base = FixedPointStream(BASE_W, "w")


def base_w_prefix(length: int) -> Word:
    if length < 0:
        raise ValueError("length must be non-negative")
    return Word(_base.prefix(length), ABCDE)


@lru_cache(maxsize=None)
def theta(i: int) -> Word:
    """``d W_i e W_i``, of length ``2(i+1)``."""
    if i < 0:
        raise ValueError("theta is defined on non-negative letters")
    w = tuple(base_w_prefix(i))
    return Word((D, *w, E, *w), ABCDE)


def brandenburg_sigma(u: Iterable[int]) -> Word:
    letters = list(u)
    for a in letters:
        if not 0 <= a <= E:
            raise MorphismError(f"letter {a} is outside the alphabet a..e")
    return BRANDENBURG(letters)


class WordY(ImageStream):
    def __init__(self):
        super().__init__("word-y", builtin_stream("ruler"), theta, ABCDE)

    def fresh(self) -> "WordY":
        return WordY()


class WordZ(ImageStream):
    def __init__(self):
        super().__init__("word-z", WordY(), BRANDENBURG.rules.__getitem__, ABCDE)

    def fresh(self) -> "WordZ":
        return WordZ()


def word_y_stream() -> WordStream:
    return WordY()


def word_z_stream() -> WordStream:
    return WordZ()
