from itertools import product as cartesian

import pytest

from braidedplactic.braiding import (
    DECORATED_UNIT,
    DecoratedTableau,
    all_columns,
    all_rows,
    apply_braid_word,
    apply_generator,
    associative_spec,
    column_spec,
    decorated_domain,
    delta_normalize,
    delta_word,
    flip_spec,
    is_normal,
    normal_factors,
    normal_product,
    normalize_by_rewriting,
    reduced_normal_form,
    row_spec,
    sigma_C,
    sigma_R,
    sigma_decorated,
    BraidedSetSpec,
    tableau_of_factors,
    verify_braided_set,
    verify_monoid_compat,
    verify_observations,
)
from braidedplactic.tableau import EMPTY, Tableau, tableau_of_word


def D(text, alpha=0):
    return DecoratedTableau(Tableau.parse(text), alpha)


def test_sigma_R_examples():
    assert sigma_R((2, 2, 5, 7, 7, 8), (1, 4, 5, 5, 8, 9)) == ((2, 5, 7, 7), (1, 2, 4, 5, 5, 8, 8, 9))
    assert sigma_R((), (1, 2)) == ((), (1, 2))
    assert sigma_R((1, 1, 2), (1, 2, 2)) == ((2,), (1, 1, 1, 2, 2))


def test_sigma_R_two_letter_formula():
    # rows over {1,2} as (ones, twos)
    row = lambda k, l: (1,) * k + (2,) * l  # noqa: E731
    for k1, l1, k2, l2 in cartesian(range(4), repeat=4):
        m = min(l1, k2)
        assert sigma_R(row(k1, l1), row(k2, l2)) == (row(0, m), row(k1 + k2, l1 + l2 - m))


def test_sigma_C_examples():
    assert sigma_C((2,), (1,)) == ((2, 1), ())
    assert sigma_C((1,), (2,)) == ((1,), (2,))
    assert sigma_C((1,), (2, 1)) == ((2, 1), (1,))


def test_sigma_rejects_bad_input():
    with pytest.raises(ValueError):
        sigma_C((1, 2), (1,))
    with pytest.raises(ValueError):
        sigma_R((2, 1), (1,))


def test_all_columns_order():
    assert all_columns(2) == [(), (1,), (2,), (2, 1)]
    assert all_columns(1) == [(), (1,)]
    assert len(all_columns(3)) == 8 and (3, 2, 1) in all_columns(3)
    assert all_rows(2, 1) == [(), (1,), (2,)]


def test_braid_words():
    assert apply_braid_word(sigma_C, [1], ((2,), (1,), (2,))) == ((2, 1), (), (2,))
    t = ((2,), (1,), (2,))
    assert apply_braid_word(sigma_C, [], t) == t
    assert delta_word(3) == (1, 2, 1)
    assert apply_braid_word(sigma_C, delta_word(3), t) == ((2, 1), (2,), ())
    with pytest.raises(ValueError):
        apply_generator(sigma_C, 3, t)


def test_normal_forms():
    assert delta_normalize(sigma_C, ((2,), (1,), (2,))) == ((2, 1), (2,), ())
    assert delta_normalize(sigma_C, ((1,),)) == ((1,),)
    assert delta_normalize(sigma_R, ((2, 2, 5, 7, 7, 8), (1, 4, 5, 5, 8, 9))) == (
        (2, 5, 7, 7), (1, 2, 4, 5, 5, 8, 8, 9))
    assert is_normal(sigma_C, ((2, 1), (2,)))
    assert not is_normal(sigma_C, ((1,), (2, 1)))
    assert is_normal(sigma_C, ())
    assert reduced_normal_form("col", [(2,), (1,), (2,)]) == ((2, 1), (2,))
    assert reduced_normal_form("col", [()]) == ()
    assert reduced_normal_form("row", [(3,), (2, 6, 6), (1, 3, 4)]) == ((3,), (2, 6, 6), (1, 3, 4))
    with pytest.raises(ValueError):
        reduced_normal_form("col", [(1, 2)])


def test_rewriting_agrees_with_delta():
    for t in cartesian(all_columns(3), repeat=3):
        assert normalize_by_rewriting(sigma_C, t) == delta_normalize(sigma_C, t)


def test_normal_product_is_tableau_product():
    for u, v in cartesian(["2/1", "3/12", "e", "2/13", "113"], repeat=2):
        U, V = Tableau.parse(u), Tableau.parse(v)
        for kind in ("row", "col"):
            out = normal_product(kind, normal_factors(kind, U), normal_factors(kind, V))
            assert tableau_of_factors(kind, out) == U * V


def test_verify_column_braiding():
    for n in (1, 2, 3):
        assert verify_braided_set(column_spec(n)).passed
        assert verify_observations("col", all_columns(n)).passed


def test_verify_row_braiding():
    assert verify_braided_set(row_spec(2, 3)).passed
    assert verify_observations("row", all_rows(2, 3)).passed


def test_flip_fails_idempotency_only():
    rep = verify_braided_set(flip_spec(["u", "a", "b"], "u"))
    assert rep.checks["ybe"].passed
    assert not rep.checks["idempotent"].passed


def test_swapped_outputs_fail_ybe():
    def swapped(x, y):
        a, b = sigma_C(x, y)
        return b, a
    spec = BraidedSetSpec(swapped, (), tuple(all_columns(2)), "swapped")
    rep = verify_braided_set(spec)
    assert not rep.checks["ybe"].passed
    assert rep.checks["ybe"].counterexamples


def test_associative_spec():
    spec = associative_spec([0, 1, 2], lambda x, y: max(x, y), 0)
    assert verify_braided_set(spec).checks["ybe"].passed


def test_decorated_sigma_examples():
    assert sigma_decorated("row", D("1"), D("2")) == (D("e", 1), D("12"))
    assert sigma_decorated("row", D("225778"), D("145589")) == (D("2577"), D("12455889"))
    T = D("2/13")
    assert sigma_decorated("col", T, DECORATED_UNIT) in {(DECORATED_UNIT, T), (T, DECORATED_UNIT)}
    assert sigma_decorated("col", DECORATED_UNIT, T) in {(DECORATED_UNIT, T), (T, DECORATED_UNIT)}
    with pytest.raises(ValueError):
        DecoratedTableau(EMPTY, -1)


def test_decorated_monoid_axioms():
    els = decorated_domain(2, 2, (0, 1))
    for kind in ("row", "col"):
        rep = verify_monoid_compat(kind, els)
        assert rep.passed, rep.failed()


def test_decorated_domain():
    els = decorated_domain(2, 1, (0, 1))
    assert len(els) == 6
    assert DECORATED_UNIT in els
    assert tableau_of_word((2, 1)) not in [d.tableau for d in els]
