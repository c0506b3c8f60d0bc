from fractions import Fraction

import pytest

from threefold_bounds.basket import Basket, cartier_index
from threefold_bounds.fixtures import delta18
from threefold_bounds.riemann_roch import (
    DataError,
    DeltaSearchError,
    InconsistentPlurigeneraError,
    MissingK3Error,
    NonIntegralPlurigenusError,
    ThreefoldData,
    chi_of_mK,
    delta_index,
    monotonicity_threshold,
    plurigenus,
    plurigenus_table,
    positivity_threshold,
    solve_k3,
)

from oracles import DELTA18_PAIRS, chi_oracle


@pytest.fixture(scope="module")
def record():
    return delta18()


@pytest.fixture(scope="module")
def long_table(record):
    return dict(plurigenus_table(record, 7020))


@pytest.mark.parametrize("m, expected", [(2, 0), (8, 1), (18, 2), (19, 0), (24, 3), (36, 8)])
def test_chi_of_mK_record_values(record, m, expected):
    assert chi_of_mK(record, m) == expected


def test_chi_matches_oracle(record):
    for m in range(2, 80):
        assert chi_of_mK(record, m) == chi_oracle(Fraction(1, 1170), 2, DELTA18_PAIRS, m)


def test_chi_of_mK_errors(record):
    with pytest.raises(ValueError):
        chi_of_mK(record, 1)
    with pytest.raises(MissingK3Error):
        chi_of_mK(ThreefoldData(chi=2, basket=record.basket), 5)


def test_solve_k3_record():
    data = ThreefoldData(chi=2, basket=delta18().basket, known_plurigenera=((2, 0),))
    assert solve_k3(data) == Fraction(1, 1170)


def test_solve_k3_smooth_example():
    data = ThreefoldData(chi=1, known_plurigenera=((2, 4),))
    k3 = solve_k3(data)
    assert k3 == 14
    assert chi_of_mK(data.with_k3(k3), 2) == 4


def test_solve_k3_two_constraints(record):
    data = ThreefoldData(chi=2, basket=record.basket, known_plurigenera=((18, 2), (2, 0)))
    assert solve_k3(data) == Fraction(1, 1170)


def test_solve_k3_inconsistent(record):
    data = ThreefoldData(chi=2, basket=record.basket, known_plurigenera=((2, 0), (18, 3)))
    with pytest.raises(InconsistentPlurigeneraError) as info:
        solve_k3(data)
    assert info.value.violations == [(18, 3, Fraction(2))]
    with pytest.raises(InconsistentPlurigeneraError):
        solve_k3(record.with_k3(Fraction(1, 1169)))


def test_solve_k3_needs_constraints():
    with pytest.raises(MissingK3Error):
        solve_k3(ThreefoldData(chi=2))


def test_linearity_reproduces_constraints(record):
    for m in (3, 18, 24, 36):
        value = int(chi_of_mK(record, m))
        data = ThreefoldData(chi=2, basket=record.basket, known_plurigenera=((m, value),))
        assert solve_k3(data) == Fraction(1, 1170)


def test_table_contains_record_values(record):
    table = dict(plurigenus_table(record, 36))
    assert {m: table[m] for m in (8, 18, 19, 24, 36)} == {8: 1, 18: 2, 19: 0, 24: 3, 36: 8}
    assert plurigenus_table(record, 2) == [(2, 0)]


def test_table_positive_from_20(long_table):
    assert all(long_table[m] > 0 for m in range(20, 201))


def test_integrality_sentinel(long_table):
    # plurigenus_table raises on any non-integral value, so reaching here is the check
    assert len(long_table) == 7019
    assert all(v >= 0 for v in long_table.values())


def test_table_error_paths():
    with pytest.raises(MissingK3Error):
        plurigenus_table(ThreefoldData(chi=2), 10)
    with pytest.raises(NonIntegralPlurigenusError):
        plurigenus_table(ThreefoldData(chi=2, basket=Basket([(1, 2)]), k3=Fraction(1, 7)), 5)


def test_period_of_basket_part(record, long_table):
    r = cartier_index(record.basket)

    def basket_part(m):
        return long_table[m] - Fraction(m * (m - 1) * (2 * m - 1), 12) * record.k3 + (2 * m - 1) * record.chi

    for m in range(2, 200):
        assert basket_part(m + 1 + r) - basket_part(m + r) == basket_part(m + 1) - basket_part(m)


def test_monotone_beyond_threshold(record, long_table):
    start = monotonicity_threshold(record)
    assert start == 97
    assert all(long_table[m + 1] >= long_table[m] for m in range(start, 7019))
    # not monotone from 21 on: P25 < P24
    assert long_table[25] < long_table[24]


def test_positivity_threshold(record):
    assert positivity_threshold(record) == 169


def test_delta_examples(record):
    assert delta_index(record) == 18
    assert delta_index(ThreefoldData(chi=2, basket=record.basket, k3=record.k3, pg=2)) == 1
    toy = ThreefoldData(chi=1, k3=Fraction(14), pg=0)
    assert [plurigenus(toy, m) for m in (1, 2)] == [0, 4]
    assert delta_index(toy) == 2


def test_delta_without_pg(record):
    data = ThreefoldData(chi=2, basket=record.basket, k3=record.k3)
    assert delta_index(data) == 18
    with pytest.raises(DataError):
        delta_index(ThreefoldData(chi=1, k3=Fraction(14)))


def test_delta_consistency(record):
    assert all(plurigenus(record, m) <= 1 for m in range(1, 18))


def test_delta_search_limit(record):
    with pytest.raises(DeltaSearchError):
        delta_index(record, search_limit=17)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(chi=2, k3=Fraction(-1)),
        dict(chi=2, known_plurigenera=((1, 0),)),
        dict(chi=2, known_plurigenera=((2, -1),)),
        dict(chi=2, known_plurigenera=((2, 0), (2, 1))),
        dict(chi=2, q=-1),
    ],
)
def test_data_validation(kwargs):
    with pytest.raises(DataError):
        ThreefoldData(**kwargs)
