from itertools import product

import pytest

from weitz3 import (
    BadIndices,
    LengthMismatch,
    Monomial,
    enumerate_paths,
    is_path_word,
    mu,
    path_counts,
    word_to_monomial,
)


def test_enumerate_small():
    assert enumerate_paths(0) == [""]
    assert enumerate_paths(1) == ["X"]
    assert enumerate_paths(2) == ["XX", "XY", "XZ"]
    assert len(enumerate_paths(3)) == 7


def test_enumeration_is_lexicographic():
    for d in range(6):
        words = enumerate_paths(d)
        assert words == sorted(words)


def test_path_counts_small():
    assert path_counts(0) == {1: 1}
    assert path_counts(2) == {1: 1, 3: 1, 5: 1}
    assert path_counts(3) == {1: 1, 3: 3, 5: 2, 7: 1}


def test_counts_match_enumeration():
    for d in range(9):
        counts = path_counts(d)
        assert len(enumerate_paths(d)) == sum(counts.values())


def test_counts_match_multiplicity_recursion():
    for d in range(41):
        assert path_counts(d) == mu(d)


def test_is_path_word_examples():
    assert is_path_word("XYZX")
    assert not is_path_word("YX")
    assert is_path_word("XXXX")
    assert not is_path_word("XZZ")
    assert is_path_word("")
    assert not is_path_word("XQ")


def test_is_path_word_exhaustive():
    # every valid length-d word is enumerated, and nothing else is valid
    for d in range(9):
        enumerated = set(enumerate_paths(d))
        for letters in product("XYZ", repeat=d):
            word = "".join(letters)
            assert is_path_word(word) == (word in enumerated)


def test_endpoint_abscissa_buckets():
    for d in range(8):
        buckets = {}
        for word in enumerate_paths(d):
            k = 2 * (word.count("X") - word.count("Z")) + 1
            buckets[k] = buckets.get(k, 0) + 1
        assert buckets == path_counts(d)


def test_word_to_monomial():
    assert word_to_monomial("XZ", (1, 2)) == Monomial([(1, 0, 1), (2, 2, 1)])
    assert word_to_monomial("XY", (1, 4)) == Monomial([(1, 0, 1), (4, 1, 1)])
    assert word_to_monomial("X", (7,)) == Monomial([(7, 0, 1)])
    assert word_to_monomial("", ()) == Monomial.one()


def test_word_to_monomial_errors():
    with pytest.raises(LengthMismatch):
        word_to_monomial("XZ", (1, 2, 3))
    with pytest.raises(BadIndices):
        word_to_monomial("XZ", (2, 1))
    with pytest.raises(BadIndices):
        word_to_monomial("XZ", (1, 1))
