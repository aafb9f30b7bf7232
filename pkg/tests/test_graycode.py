import random

import pytest
from hypothesis import given, settings, strategies as st

from graypi import (
    GrayWord,
    SignSequence,
    generate,
    moreno_index,
    rank,
    signs_from_word,
    word_at,
    word_from_signs,
)


def test_generate_order_1():
    assert [str(w) for w in generate(1)] == ["0", "1"]


def test_generate_order_2():
    assert [str(w) for w in generate(2)] == ["00", "01", "11", "10"]


def test_generate_order_3():
    assert [str(w) for w in generate(3)] == [
        "000", "001", "011", "010", "110", "111", "101", "100",
    ]


@pytest.mark.parametrize("order", [0, -3, 63])
def test_generate_rejects_bad_order(order):
    with pytest.raises(ValueError):
        generate(order)


def test_adjacent_words_differ_in_one_bit_up_to_order_16():
    for order in range(1, 17):
        code = generate(order)
        assert len(code) == len(set(code)) == 1 << order
        for a, b in zip(code, code[1:]):
            assert sum(x != y for x, y in zip(a.bits, b.bits)) == 1


def test_word_at_examples():
    assert str(word_at(3, 5)) == "110"
    assert str(word_at(3, 1)) == "000"
    assert word_at(4, 16) == generate(4)[-1]
    assert str(word_at(4, 16)) == "1000"


def test_word_at_matches_generate_exhaustively():
    for order in range(1, 13):
        code = generate(order)
        for j, word in enumerate(code, start=1):
            assert word_at(order, j) == word


@pytest.mark.parametrize("order,j", [(3, 0), (3, 9), (2, -1)])
def test_word_at_rejects_bad_rank(order, j):
    with pytest.raises(ValueError):
        word_at(order, j)


def test_rank_examples():
    assert rank(GrayWord("110")) == 5
    assert rank(GrayWord("000")) == 1
    assert rank(GrayWord("100")) == 8
    assert rank(GrayWord("")) == 1


def test_rank_inverts_word_at_exhaustively():
    for order in range(1, 13):
        for j in range(1, (1 << order) + 1):
            assert rank(word_at(order, j)) == j


def test_moreno_index_intro_examples():
    cases = {
        (1, 1, 1): 1,
        (1, 1, -1): 2,
        (1, -1, -1): 3,
        (1, -1, 1): 4,
        (-1, -1, 1): 5,
        (-1, -1, -1): 6,
        (-1, 1, -1): 7,
        (-1, 1, 1): 8,
    }
    for signs, expected in cases.items():
        assert moreno_index(SignSequence(signs)) == expected


def test_moreno_index_equals_rank_exhaustively():
    for k in range(1, 13):
        for j in range(1, (1 << k) + 1):
            word = word_at(k, j)
            assert moreno_index(signs_from_word(word)) == j


def test_sign_word_mapping_examples():
    assert str(word_from_signs(SignSequence((1, 1, -1)))) == "001"
    assert str(word_from_signs(SignSequence((-1, -1, -1)))) == "111"


def test_sign_word_roundtrip_random():
    rng = random.Random(11)
    for _ in range(1000):
        k = rng.randint(1, 40)
        signs = SignSequence(rng.choice((1, -1)) for _ in range(k))
        assert signs_from_word(word_from_signs(signs)) == signs


def test_malformed_inputs_rejected():
    with pytest.raises(ValueError):
        GrayWord("102")
    with pytest.raises(ValueError):
        SignSequence((1, 0, -1))
    with pytest.raises(ValueError):
        moreno_index(SignSequence(()))


@settings(deadline=None, max_examples=300)
@given(st.lists(st.sampled_from([1, -1]), min_size=1, max_size=62))
def test_moreno_matches_rank_property(signs):
    seq = SignSequence(signs)
    assert moreno_index(seq) == rank(word_from_signs(seq))
