import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidedplactic.tableau import (
    EMPTY,
    Tableau,
    content,
    format_word,
    insert_left,
    insert_right,
    insert_word,
    is_subword,
    order_rel,
    parse_word,
    product,
    read,
    row_tableau,
    shape,
    tableau_of_word,
)

SAMPLE = Tableau.parse("3/266/134")
words = st.lists(st.integers(1, 4), max_size=9).map(tuple)


def test_parse_and_format_roundtrip():
    assert str(SAMPLE) == "3/266/134"
    assert Tableau.parse("e") == EMPTY
    assert str(EMPTY) == "e"
    assert parse_word("3 2 6") == parse_word("326") == parse_word("3,2,6") == (3, 2, 6)
    assert parse_word("e") == ()
    assert format_word((10, 2)) == "10 2"


@pytest.mark.parametrize("bad", ["21/1", "3/21", "2/2", "0"])
def test_invalid_tableaux_rejected(bad):
    with pytest.raises(ValueError):
        Tableau.parse(bad)


def test_bad_letters():
    with pytest.raises(ValueError):
        parse_word("a1")
    with pytest.raises(ValueError):
        insert_right(EMPTY, 0)


def test_order_relations():
    assert order_rel("row-strict", (3,), (2, 6, 6))
    assert order_rel("col", (3, 2, 1), (6, 3))
    assert order_rel("row-strict", (), (1, 3, 4))
    assert not order_rel("row-strict", (2, 6, 6), (3,))
    with pytest.raises(ValueError):
        order_rel("row-weak", (2, 1), (1,))
    with pytest.raises(ValueError):
        order_rel("diag", (1,), (1,))


def test_readings():
    assert read(SAMPLE, "rows") == (3, 2, 6, 6, 1, 3, 4)
    assert read(SAMPLE, "cols") == (3, 2, 1, 6, 3, 6, 4)
    assert read(EMPTY) == ()
    assert shape(SAMPLE) == (1, 3, 3)
    assert shape(EMPTY) == ()
    assert SAMPLE.columns == ((3, 2, 1), (6, 3), (6, 4))
    assert Tableau.from_columns(SAMPLE.columns) == SAMPLE


def test_right_insertion():
    assert str(insert_right(SAMPLE, 3)) == "36/246/133"
    assert str(insert_right(EMPTY, 5)) == "5"
    assert str(insert_right(Tableau.parse("12"), 1)) == "2/11"


def test_left_insertion():
    assert str(insert_left(3, SAMPLE)) == "3/266/1334"
    assert str(insert_left(5, EMPTY)) == "5"
    assert insert_left(1, Tableau.parse("2/12")) == tableau_of_word((1, 2, 1, 2))


def test_tableau_of_word():
    assert tableau_of_word((3, 2, 6, 6, 1, 3, 4)) == SAMPLE
    assert tableau_of_word((3, 2, 1, 6, 3, 6, 4)) == SAMPLE
    assert tableau_of_word(()) == EMPTY


def test_product():
    P = product(row_tableau((2, 2, 5, 7, 7, 8)), row_tableau((1, 4, 5, 5, 8, 9)))
    assert str(P) == "2577/12455889"
    assert shape(P) == (4, 8)
    assert product(SAMPLE, EMPTY) == SAMPLE
    assert str(Tableau.parse("2") * Tableau.parse("1")) == "2/1"


def test_content():
    assert content((3, 2, 6, 6, 1, 3, 4), 6) == (1, 1, 2, 1, 0, 2)
    assert SAMPLE.content(6) == (1, 1, 2, 1, 0, 2)
    with pytest.raises(ValueError):
        content((5,), 3)


def test_is_subword():
    assert is_subword((1, 3), (1, 2, 3))
    assert not is_subword((3, 1), (1, 2, 3))


@settings(max_examples=200, deadline=None)
@given(words)
def test_readings_reinsert(w):
    T = tableau_of_word(w)
    assert tableau_of_word(read(T, "rows")) == T
    assert tableau_of_word(read(T, "cols")) == T
    assert sorted(read(T)) == sorted(w)


@settings(max_examples=200, deadline=None)
@given(words, words, words)
def test_product_associative(a, b, c):
    A, B, C = map(tableau_of_word, (a, b, c))
    assert (A * B) * C == A * (B * C)
    assert A * B == tableau_of_word(a + b)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), words)
def test_left_insertion_is_prefix(x, w):
    assert insert_left(x, tableau_of_word(w)) == tableau_of_word((x,) + w)
    assert insert_word(tableau_of_word(w), (x,)) == tableau_of_word(w + (x,))
