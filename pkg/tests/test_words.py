import pytest
from hypothesis import given, strategies as st

from pisom.words import (
    GEN,
    UNIT_MINUS,
    UNIT_PLUS,
    DomainError,
    Word,
    WordError,
    format_word,
    member,
    parse_word,
    reduce_word,
)

from conftest import oracle_normal_forms, raw_sequences, words_upto

entries_st = st.lists(
    st.integers(-5, 5).filter(lambda x: x != 0), min_size=1, max_size=7
)
words_st = entries_st.map(reduce_word)


# -- construction and literals -------------------------------------------------


def test_word_invariants_enforced():
    with pytest.raises(WordError):
        Word(())
    with pytest.raises(WordError):
        Word((1, 0))
    with pytest.raises(WordError):
        Word((2, 3))
    with pytest.raises(WordError):
        Word((2, -1, 2))


def test_parse_examples():
    assert parse_word("(-2,3,-3,2)") == Word((-2, 3, -3, 2))
    # oracle: every rewrite order of (1,-1,1) ends at (1)
    assert oracle_normal_forms((1, -1, 1)) == frozenset({(1,)})
    assert parse_word("(1,-1,1)") == Word((1,))
    with pytest.raises(WordError):
        parse_word("(0)")
    with pytest.raises(WordError):
        parse_word("(1,02)")
    with pytest.raises(WordError):
        parse_word("1,-1")


def test_format_examples():
    assert format_word(Word((-1, 1))) == "(-1,1)"
    assert format_word(Word((-6, 6))) == "(-6,6)"
    assert " " not in format_word(Word((-4, 2, -2, 4)))


@given(words_st)
def test_parse_format_roundtrip(w):
    assert parse_word(format_word(w)) == w


# -- reduction ------------------------------------------------------------------


def test_reduce_examples():
    assert reduce_word((2, -1, 2, -1)) == Word((3, -1))
    assert reduce_word((1, -1, 1, -1)) == Word((1, -1))
    assert oracle_normal_forms((-3, 3, 2, -2)) == frozenset({(-3, 5, -2)})
    assert reduce_word((-3, 3, 2, -2)) == Word((-3, 5, -2))


def test_confluence_small_weights():
    memo = {}
    for seq in raw_sequences(6):
        forms = oracle_normal_forms(seq, memo)
        assert len(forms) == 1, seq
        assert reduce_word(seq) == Word(next(iter(forms))), seq


@given(entries_st)
def test_reduce_matches_oracle(seq):
    forms = oracle_normal_forms(tuple(seq))
    assert forms == frozenset({tuple(reduce_word(seq))})


# -- multiplication and star -----------------------------------------------------


def test_mul_examples():
    for n in range(2, 6):
        for m in range(2, 6):
            assert Word((-n, n)) * Word((m, -m)) == Word((-n, n + m, -m))
    assert UNIT_PLUS * UNIT_PLUS == UNIT_PLUS
    assert GEN * GEN == Word((2,))


@given(words_st, words_st, words_st)
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words_st, words_st)
def test_length_law(m, n):
    prod = m * n
    if (m[-1] > 0) == (n[0] > 0):
        assert len(prod) == len(m) + len(n) - 1
    else:
        assert len(prod) in (len(m) + len(n), len(m) + len(n) - 2)


def test_star_examples():
    assert GEN.star == Word((-1,))
    assert Word((-2, 3, -3, 2)).star == Word((-2, 3, -3, 2))
    assert Word((-3, 2)).star == Word((-2, 3))


@given(words_st, words_st)
def test_star_antihomomorphism(a, b):
    assert (a * b).star == b.star * a.star
    assert a.star.star == a


# -- invariants -------------------------------------------------------------------


def test_tau_examples():
    assert Word((-2, 3, -3, 2)).tau == 0
    assert GEN.tau == 1
    assert Word((3, -1)).tau == 2


@given(words_st, words_st)
def test_tau_laws(a, b):
    assert (a * b).tau == a.tau + b.tau
    assert a.star.tau == -a.tau


def test_sigma_examples():
    assert Word((-2, 3, -3, 2)).sigma(1) == 1
    assert Word((-5, 5)).sigma(99) == 0
    for r in range(3):
        assert Word((-3, 2, -2, 3)).sigma(r) < 0


def test_tau_plus_examples():
    assert Word((-4, 2, -2, 4)).tau_plus() == 6
    assert UNIT_PLUS.tau_plus() == 1
    with pytest.raises(DomainError):
        Word((-3,)).tau_plus()


def test_membership_examples():
    w = Word((-2, 3, -3, 2))
    assert not member(w, "D0")
    assert member(w, "Aplus0")
    assert member(UNIT_MINUS, "D1")
    assert not member(UNIT_MINUS, "D0")
    assert not member(GEN, "A0")
    with pytest.raises(WordError):
        member(w, "bogus")


def test_selfadjoint_idempotent_examples():
    assert UNIT_PLUS.is_selfadjoint() and UNIT_PLUS.is_idempotent()
    w = Word((-5, 5))
    assert w.is_selfadjoint()
    assert w * w == Word((-5, 5, -5, 5)) and not w.is_idempotent()
    v = Word((1, -2))
    assert not v.is_selfadjoint() and not v.is_idempotent()


def test_idempotent_census_weight_6():
    idems = [w for w in words_upto(6) if w.is_idempotent()]
    assert sorted(idems) == [Word((-1, 1)), Word((1, -1))]


def test_arbitrary_precision_entries():
    big = 10**30
    w = Word((-big, big))
    assert (w * w).weight == 4 * big
    assert w.sigma(0) == -big


def test_value_semantics():
    w = Word((-2, 3))
    assert hash(w) == hash(Word((-2, 3)))
    assert {w: 1}[Word((-2, 3))] == 1
