import pytest
from hypothesis import given, settings, strategies as st

from inrc.words import (
    FIB_PHI,
    QUAD_PHI,
    THUE_MORSE_MU,
    TRIB_SIGMA,
    FixedPointStream,
    Morphism,
    MorphismError,
    NumberTables,
    PeriodicStream,
    Word,
    apply_morphism,
    builtin_stream,
    d_len,
    fib_number,
    fixed_point_prefix,
    ruler_letter,
    trib_number,
    word,
    zimin,
)


def test_apply_morphism_examples():
    assert str(apply_morphism(THUE_MORSE_MU, word("0"))) == "01"
    assert apply_morphism(FIB_PHI, Word()) == Word()
    assert str(apply_morphism(FIB_PHI, word("010"))) == "01001"


def test_apply_morphism_unmapped_letter_is_named():
    with pytest.raises(MorphismError, match="letter 2"):
        apply_morphism(THUE_MORSE_MU, word("012"))


def test_morphism_rejects_unmapped_image_letter():
    with pytest.raises(MorphismError, match="letter 1"):
        Morphism({0: (0, 1)}, 0)


def test_adjacency_matrix():
    # columns are images: quad_phi(0) = 001, quad_phi(1) = 1
    assert QUAD_PHI.adjacency_matrix() == [[2, 0], [1, 1]]


def test_fixed_point_prefix_examples():
    assert str(fixed_point_prefix(THUE_MORSE_MU, 8)) == "01101001"
    assert str(fixed_point_prefix(TRIB_SIGMA, 20)) == "01020100102010102010"
    for m in (THUE_MORSE_MU, FIB_PHI, TRIB_SIGMA, QUAD_PHI):
        assert list(fixed_point_prefix(m, 1)) == [m.start]


def test_fixed_point_requires_prolongable():
    with pytest.raises(MorphismError, match="prolongable"):
        fixed_point_prefix(Morphism({0: (1,), 1: (0,)}, 0), 4)
    with pytest.raises(MorphismError):
        fixed_point_prefix(Morphism({0: (0,), 1: (1,)}, 0), 4)


def test_erasing_morphism_stall_is_an_error():
    m = Morphism({0: (0, 1), 1: ()}, 0)
    with pytest.raises(MorphismError, match="stalls"):
        fixed_point_prefix(m, 5)


def test_erasing_morphism_that_grows_is_allowed():
    m = Morphism({0: (0, 1, 2), 1: (), 2: (0, 2)}, 0)
    p = fixed_point_prefix(m, 50)
    assert len(p) == 50
    assert apply_morphism(m, p)[:50] == p


def test_builtin_examples():
    assert str(builtin_stream("ruler").prefix(16)) == "0102010301020104"
    assert str(builtin_stream("thue_morse").prefix(4)) == "0110"
    assert str(builtin_stream("quad_complexity").prefix(6)) == "001001"
    with pytest.raises(ValueError, match="unknown builtin"):
        builtin_stream("rudin_shapiro")


def test_zimin_examples():
    assert zimin(0) == Word()
    assert str(zimin(2)) == "010"
    assert str(zimin(3)) == "0102010"


@pytest.mark.parametrize("k", range(0, 12))
def test_zimin_is_ruler_prefix(k):
    z = zimin(k)
    assert len(z) == 2 ** k - 1
    assert z == builtin_stream("ruler").prefix(len(z))


def test_ruler_valuation_matches_zimin_up_to_2_20():
    z = zimin(20)
    assert [ruler_letter(i) for i in range(len(z))] == list(z)


@pytest.mark.parametrize("name", ["thue_morse", "fibonacci", "tribonacci", "ruler", "quad_complexity"])
@settings(max_examples=25, deadline=None)
@given(a=st.integers(0, 3000), b=st.integers(0, 3000))
def test_stream_prefix_consistency(name, a, b):
    n, m = sorted((a, b))
    s = builtin_stream(name)
    long = s.prefix(m)
    assert builtin_stream(name).prefix(n) == long[:n]
    assert s.prefix(n) == long[:n]


def test_streams_do_not_share_state():
    s = builtin_stream("fibonacci")
    t = s.fresh()
    s.prefix(5000)
    assert len(t._buf) < 5000
    assert t.prefix(100) == s.prefix(100)


@pytest.mark.parametrize("k", range(0, 17))
def test_thue_morse_doubling(k):
    a = builtin_stream("thue_morse").prefix(2 ** k)
    assert apply_morphism(THUE_MORSE_MU, a) == a + a.complement()


@pytest.mark.parametrize("k", range(0, 17))
def test_quad_prefix_square(k):
    half = 2 ** (k + 1) - 1
    p = builtin_stream("quad_complexity").prefix(2 * half)
    assert p[:half] == p[half:]


def test_quad_image_lengths_follow_adjacency_powers():
    # |quad_phi^k(0)| = 2^(k+1) - 1
    w = word("0")
    for k in range(12):
        assert len(w) == 2 ** (k + 1) - 1
        w = apply_morphism(QUAD_PHI, w)


def test_number_tables():
    assert [fib_number(k) for k in range(8)] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert [trib_number(k) for k in range(-1, 8)] == [1, 1, 2, 4, 7, 13, 24, 44, 81]
    t = NumberTables(30)
    assert all(a < b for a, b in zip(t.fib, t.fib[1:]))
    assert all(a < b for a, b in zip(t.trib, t.trib[1:]))
    assert t.d[0] == 0 and all(a < b for a, b in zip(t.d, t.d[1:]))


@pytest.mark.parametrize("k", range(0, 20))
def test_morphism_iterate_lengths(k):
    f = t = word("0")
    for _ in range(k):
        f = apply_morphism(FIB_PHI, f)
        t = apply_morphism(TRIB_SIGMA, t)
    assert len(f) == fib_number(k)
    assert len(t) == trib_number(k)


@pytest.mark.parametrize("k", range(1, 25))
def test_d_len_is_sum_of_tribonacci_prefix_lengths(k):
    # D_k = t_(k-1) ... t_0
    assert d_len(k) == sum(trib_number(i) for i in range(k))


def test_word_rendering():
    w = Word.from_str("abcab", "abcde")
    assert list(w) == [0, 1, 2, 0, 1]
    assert str(w) == "abcab"
    assert str(w[1:3]) == "bc"
    assert str(Word([0, 12, 3])) == "0[12]3"
    with pytest.raises(ValueError):
        Word.from_str("abx", "abc")


def test_periodic_stream():
    s = PeriodicStream((2,), (0, 1))
    assert str(s.prefix(7)) == "2010101"


def test_fixed_point_stream_is_fixed():
    s = FixedPointStream(TRIB_SIGMA)
    p = s.prefix(4000)
    assert apply_morphism(TRIB_SIGMA, p)[:4000] == p
