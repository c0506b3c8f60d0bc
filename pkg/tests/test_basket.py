from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from threefold_bounds.basket import (
    Basket,
    BasketPoint,
    BasketSyntaxError,
    basket_contribution,
    cartier_index,
    format_basket,
    local_contribution,
    local_step,
    parse_basket,
)
from threefold_bounds.fixtures import DELTA18_BASKET

from oracles import DELTA18_PAIRS, canonical_pairs, local_term_oracle


@pytest.mark.parametrize(
    "b, r, m, expected",
    [
        (1, 2, 1, Fraction(0)),
        (1, 2, 2, Fraction(1, 4)),
        (4, 9, 2, Fraction(10, 9)),
        (5, 13, 3, Fraction(35, 13)),
        (1, 2, 0, Fraction(0)),
    ],
)
def test_local_contribution_examples(b, r, m, expected):
    assert local_contribution(BasketPoint(b, r), m) == expected


def test_local_contribution_rejects_negative_m():
    with pytest.raises(ValueError):
        local_contribution(BasketPoint(1, 2), -1)


def test_point_canonical_form():
    assert BasketPoint(5, 9) == BasketPoint(4, 9)
    assert BasketPoint(8, 13).b == 5


@pytest.mark.parametrize("b, r", [(0, 5), (5, 5), (2, 4), (1, 1), (3, 2)])
def test_point_rejects_invalid(b, r):
    with pytest.raises(ValueError):
        BasketPoint(b, r)


def test_basket_contribution_examples():
    record = parse_basket(DELTA18_BASKET)
    assert basket_contribution(record, 2) == Fraction(14039, 2340)
    assert basket_contribution(record, 1) == 0
    assert basket_contribution(Basket(), 7) == 0


def test_cartier_index_examples():
    assert cartier_index(parse_basket(DELTA18_BASKET)) == 2340
    assert cartier_index(Basket()) == 1
    assert cartier_index(Basket([(1, 2), (1, 3)])) == 6


def test_basket_multiset_semantics():
    a = Basket([(1, 2), (1, 3), (1, 2)])
    b = Basket({BasketPoint(1, 3): 1, BasketPoint(1, 2): 2})
    assert a == b
    assert hash(a) == hash(b)
    assert len(a) == 3
    assert Basket([(2, 5)]) == Basket([(3, 5)])
    assert a.without((1, 2)) == Basket([(1, 2), (1, 3)])


def test_parse_record_basket():
    basket = parse_basket(DELTA18_BASKET)
    assert sorted((p.b, p.r) for p in basket.points()) == sorted(DELTA18_PAIRS)
    assert parse_basket(format_basket(basket)) == basket


def test_parse_accepts_noncanonical_and_spacing():
    assert parse_basket("2 * ( 5 , 9 )  (1,2)") == Basket([(4, 9), (4, 9), (1, 2)])
    assert parse_basket("") == Basket()
    assert parse_basket("empty") == Basket()


@pytest.mark.parametrize("text, column", [("(4;9)", 1), ("(1,2) (2,4)", 7), ("(1,2) x", 7), ("0*(1,2)", 1)])
def test_parse_errors_report_column(text, column):
    with pytest.raises(BasketSyntaxError) as info:
        parse_basket(text)
    assert info.value.column == column


def test_brute_force_equivalence():
    for b, r in canonical_pairs(12):
        q = BasketPoint(b, r)
        for m in range(0, 31):
            assert local_contribution(q, m) == local_term_oracle(b, r, m)


def test_symmetry_and_difference_periodicity():
    for b, r in canonical_pairs(12):
        for m in range(0, 31):
            assert local_term_oracle(r - b, r, m) == local_contribution(BasketPoint(b, r), m)
        q = BasketPoint(b, r)
        for m in range(1, 31):
            assert local_step(q, m + r) == local_step(q, m)


@given(st.integers(2, 40).flatmap(lambda r: st.tuples(st.integers(1, r - 1), st.just(r))), st.integers(0, 60))
def test_monotone_in_m(br, m):
    b, r = br
    from math import gcd

    if gcd(b, r) != 1:
        return
    q = BasketPoint(b, r)
    assert 0 <= local_contribution(q, m) <= local_contribution(q, m + 1)
