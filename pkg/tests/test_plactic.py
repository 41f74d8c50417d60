import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidedplactic.crystal import all_words
from braidedplactic.plactic import (
    PlacticElement,
    is_central,
    is_longest_column_power,
    knuth_class,
    knuth_neighbors,
    longest_column,
    longest_nondec_subword,
    longest_nondec_subword_brute,
    plactic_equal,
)
from braidedplactic.tableau import Tableau, tableau_of_word


def test_knuth_neighbors():
    assert (3, 1, 2) in knuth_neighbors((1, 3, 2))
    assert knuth_neighbors((1, 1, 1)) == set()
    assert knuth_neighbors((2, 1, 2)) == {(2, 2, 1)}


def test_knuth_moves_preserve_content_and_tableau():
    for w in all_words(3, 5):
        for v in knuth_neighbors(w):
            assert sorted(v) == sorted(w)
            assert tableau_of_word(v) == tableau_of_word(w)


def test_plactic_equal_examples():
    assert plactic_equal((1, 3, 2), (3, 1, 2))
    assert plactic_equal((1, 3, 2), (3, 1, 2), oracle=True)
    assert not plactic_equal((1, 2), (2, 1))
    assert not plactic_equal((1, 2), (2, 1), oracle=True)
    assert knuth_class((1, 2)) == {(1, 2)}


def test_bfs_cap():
    with pytest.raises(ValueError):
        knuth_class(tuple(range(1, 10)), cap=8)


def test_plactic_element():
    a = PlacticElement.of_word((3, 2, 6))
    b = PlacticElement.of_word((6, 1, 3, 4))
    assert str(a * b) == "3/266/134"
    assert (a * b).word() == (3, 2, 6, 6, 1, 3, 4)


def test_longest_nondec_examples():
    assert longest_nondec_subword((3, 2, 6, 6, 1, 3, 4)) == 3
    assert longest_nondec_subword(()) == 0
    assert longest_nondec_subword((1, 2, 2, 5)) == 4
    assert longest_nondec_subword_brute(()) == 0


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 5), max_size=9))
def test_schensted(w):
    T = tableau_of_word(w)
    bottom = len(T.rows[-1]) if T.rows else 0
    assert longest_nondec_subword(w) == longest_nondec_subword_brute(w) == bottom


def test_center_examples():
    assert is_central((3, 2, 1), 3)
    assert not is_central((2, 1), 3)
    assert is_central((1,), 1)
    assert longest_column(3) == (3, 2, 1)
    with pytest.raises(ValueError):
        is_central((4,), 3)


def test_center_law():
    for n in (1, 2, 3):
        for w in all_words(n, 4):
            assert is_central(w, n) == is_longest_column_power(tableau_of_word(w), n)
    assert is_longest_column_power(Tableau.parse("33/22/11"), 3)
