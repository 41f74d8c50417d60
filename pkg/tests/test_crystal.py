from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidedplactic.braiding import DecoratedTableau, decorated_domain
from braidedplactic.crystal import (
    check_action_compat,
    match_rounds,
    match_scan,
    s_tableau,
    s_tuple,
    s_tuple_by_columns,
    s_tuple_diagonal,
    s_word,
    s_word_classical,
    verify_crystal,
)
from braidedplactic.tableau import EMPTY, Tableau, shape, tableau_of_word


def W(text):
    return tuple(int(c) for c in text)


def D(text, alpha=0):
    return DecoratedTableau(Tableau.parse(text), alpha)


def test_long_word():
    assert s_word(W("312321232223311"), 1) == W("311321132223311")


def test_small_words():
    assert s_word(W("12"), 1) == W("12")
    assert s_word(W("211"), 1) == W("212")
    assert s_word((), 2) == ()
    assert s_word(W("2"), 1) == W("1")
    with pytest.raises(ValueError):
        s_word(W("1"), 0)


def test_cyclic_pair_matches():
    state = match_rounds(W("12"), 1)
    assert state.pairs == {(1, 0)}
    assert state.unmatched == ()


def test_two_letter_tableau_formula():
    # tableaux over {1,2}: top row n12 twos, bottom row n21 ones then n22 twos
    for n12, n21, n22 in cartesian(range(4), repeat=3):
        if n12 > n21:
            continue
        rows = ((2,) * n12, (1,) * n21 + (2,) * n22)
        T = Tableau(tuple(r for r in rows if r))
        m12, m21, m22 = n12, n22 + n12, n21 - n12
        want = Tableau(tuple(r for r in ((2,) * m12, (1,) * m21 + (2,) * m22) if r))
        assert s_tableau(T, 1) == want


def test_rows_permute_components():
    assert s_tableau(Tableau.parse("11"), 1) == Tableau.parse("22")
    assert s_tableau(Tableau.parse("2/11"), 1) == Tableau.parse("2/12")
    assert s_tableau(EMPTY, 1) == EMPTY


def test_tuples():
    assert s_tuple((D("1"), D("2")), 1) == (D("1"), D("2"))
    assert s_tuple((D("2"), D("1")), 1) == (D("2"), D("1"))
    T = D("2/13")
    assert s_tuple((T,), 1) == (DecoratedTableau(s_tableau(T.tableau, 1), 0),)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=12).map(tuple), st.integers(1, 3))
def test_operator_properties(w, i):
    v = s_word(w, i)
    assert s_word(v, i) == w
    assert sorted(v.count(a) for a in (i, i + 1)) == sorted(w.count(a) for a in (i, i + 1))
    a, b = match_rounds(w, i), match_scan(w, i)
    assert (a.pairs, a.unmatched) == (b.pairs, b.unmatched)
    assert shape(tableau_of_word(v)) == shape(tableau_of_word(w))
    assert s_word_classical(w, i) == v


def test_verify_crystal_small():
    rep = verify_crystal(3, 5, tuple_word_len=2, k=2)
    assert rep.passed, rep.failed()
    assert rep.info["classical_variant_differs"] == 0


def test_far_commutation_four_letters():
    rep = verify_crystal(4, 4, tuple_word_len=1, k=2)
    assert rep.checks["far_commutation"].checked > 0
    assert rep.passed, rep.failed()


def test_column_reading_variant_agrees():
    dom = decorated_domain(3, 2, (0,))
    for t in cartesian(dom, repeat=2):
        assert s_tuple(t, 1) == s_tuple_by_columns(t, 1)


def test_diagonal_extension_detected():
    dom = decorated_domain(2, 1, (0,))
    tuples = list(cartesian(dom, repeat=2))
    chk = check_action_compat("row", tuples, 2, action=s_tuple_diagonal)
    assert not chk.passed
    assert "s_1 b_1 on ((1,0), (2,0))" in chk.counterexamples
    assert check_action_compat("row", tuples, 2).passed
    assert check_action_compat("col", tuples, 2).passed
