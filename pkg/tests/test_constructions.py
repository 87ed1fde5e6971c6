from fractions import Fraction

import pytest

from inrc.constructions import (
    BRANDENBURG_IMAGES,
    base_w_prefix,
    brandenburg_sigma,
    theta,
    word_y_stream,
    word_z_stream,
)
from inrc.factors import EXACT, inrc
from inrc.repetitions import is_squarefree
from inrc.words import MorphismError, Word, builtin_stream, zimin

from naive import has_square, inrc_naive


def test_base_w_examples():
    assert str(base_w_prefix(15)) == "abcacbabcbacabc"
    assert base_w_prefix(0) == Word()
    assert str(base_w_prefix(3)) == "abc"
    assert is_squarefree(base_w_prefix(5000))


def test_theta_examples():
    assert str(theta(0)) == "de"
    assert str(theta(1)) == "daea"
    assert str(theta(2)) == "dabeab"
    for i in range(50):
        assert len(theta(i)) == 2 * (i + 1)


def test_sigma_examples():
    assert str(brandenburg_sigma(Word.from_str("a", "abcde"))) == "abacabcacbabcbacbc"
    assert str(brandenburg_sigma(Word.from_str("e", "abcde"))) == "abacabcbacbcacbabc"
    assert brandenburg_sigma(Word()) == Word()
    with pytest.raises(MorphismError):
        brandenburg_sigma([5])


def test_sigma_images_are_uniform_and_squarefree():
    for v in BRANDENBURG_IMAGES.values():
        assert len(v) == 18 and v.startswith("abacabc") and not has_square(list(v))
    assert len(set(BRANDENBURG_IMAGES.values())) == 5


def test_y_and_z_prefixes():
    assert str(word_y_stream().prefix(6)) == "dedaea"
    assert str(word_z_stream().prefix(18)) == "abacabcbacabacbabc"


def test_z_is_sigma_of_y():
    y = word_y_stream().prefix(500)
    assert word_z_stream().prefix(18 * 500) == brandenburg_sigma(y)


def test_y_exception_at_two():
    r = inrc(word_y_stream(), 2)
    assert r.status == EXACT and r.value >= 6


def test_squarefree_prefixes():
    assert is_squarefree(word_y_stream().prefix(5000))
    assert is_squarefree(word_z_stream().prefix(10000))


def test_squarefree_short_prefixes_brute_force():
    assert not has_square(list(word_y_stream().prefix(300)))
    assert not has_square(list(word_z_stream().prefix(400)))


@pytest.mark.parametrize("k", range(1, 11))
def test_theta_block_length(k):
    z = zimin(k)
    assert sum(len(theta(i)) for i in z) == 2 ** (k + 2) - 2 * k - 4


@pytest.mark.parametrize("make", [lambda: builtin_stream("ruler"), word_y_stream, word_z_stream])
def test_squarefree_floor(make):
    # a squarefree word over at least two letters cannot have inrc(1) = 1 or inrc(2) = 2
    s = make()
    assert inrc(s, 1).value >= 2
    assert inrc(s, 2).value >= 3


def test_ruler_reaches_2n():
    s = builtin_stream("ruler")
    assert [n for n in range(1, 513) if inrc(s, n).value >= 2 * n]


def test_inrc_y_matches_naive():
    s = word_y_stream()
    p = s.prefix(3000)
    for n in range(1, 65):
        assert inrc(s, n).value == inrc_naive(p, n)


def test_inrc_y_below_3n_except_two():
    s = word_y_stream()
    bad = [n for n in range(1, 397) if inrc(s, n).value >= 3 * n]
    assert bad == [2]


def test_inrc_z_small_violations_are_at_most_36():
    s = word_z_stream()
    assert [n for n in range(1, 37) if inrc(s, n).value >= 3 * n] == [6, 28, 35, 36]


def test_inrc_z_known_repeat_at_80():
    # sigma(y[6]) and sigma(y[14]) share a long factor; the first repeat of length 80 is at 247
    s = word_z_stream()
    r = inrc(s, 80)
    assert (r.value, r.witness) == (247, (103, 247))
    assert inrc_naive(s.prefix(400), 80) == 247


def _block(k):
    return 2 ** (k + 2) - 2 * k - 4


@pytest.mark.parametrize("k", range(2, 8))
def test_ratio_at_block_lengths(k):
    # at n = |theta(Z_k)| the first repeat comes just after one full block
    n = _block(k)
    assert inrc(word_y_stream(), n).value == 2 ** (k + 2) - 2
    assert inrc(word_z_stream(), 18 * n).value == 18 * (2 ** (k + 2) - 2)


def test_ratio_records():
    y, z = word_y_stream(), word_z_stream()
    ry = [Fraction(inrc(y, n).value, n) for n in range(1, 397)]
    assert min(ry) <= Fraction(11, 10)
    assert min(ry) > 1
    assert Fraction(inrc(z, 18 * _block(6)).value, 18 * _block(6)) <= Fraction(11, 10)
    # the maxima over a finite range still sit above 2; only the limsup is bounded by 2
    assert 2 < max(ry[99:]) < Fraction(21, 10)
    assert max(ry[2:]) < 3
