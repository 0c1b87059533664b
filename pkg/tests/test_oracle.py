from itertools import combinations

from hypothesis import given, settings

from ramp_fim.dataset import TransactionDatabase, letters
from ramp_fim.oracle import (
    apriori_all,
    closed_filter,
    closed_filter_pairwise,
    direct_support,
    maximal_filter,
    maximal_filter_pairwise,
)

from conftest import random_cases, small_databases


def test_sample_fi(sample_db):
    fi = apriori_all(sample_db, 2)
    assert len(fi) == 13
    assert fi[(0, 1, 3)] == 2 and fi[(0, 1, 2)] == 2
    # {C,E}, {C,I} and {E,I} share only transaction 4
    for pair in ((2, 4), (2, 8), (4, 8)):
        assert direct_support(sample_db, pair) == 1 and pair not in fi


def test_sample_filters(sample_db):
    fi = apriori_all(sample_db, 2)
    assert {letters(k) for k in maximal_filter(fi)} == {"ABC", "ABD", "E", "I"}
    assert {letters(k) for k in closed_filter(fi)} == {"A", "B", "C", "E", "I", "AB", "ABC", "ABD"}


def test_trivial_cases(sample_db):
    assert apriori_all(sample_db, 8) == {}
    dense = TransactionDatabase.from_iterable([[0, 1, 2]])
    assert len(apriori_all(dense, 1)) == 7
    assert maximal_filter({(3,): 1}) == {(3,): 1}
    assert maximal_filter({}) == {} and closed_filter({}) == {}
    distinct = {(1,): 3, (2,): 2, (1, 2): 1}
    assert closed_filter(distinct) == distinct
    assert closed_filter({(1,): 2, (1, 2): 2, (2,): 2}) == {(1, 2): 2}


@settings(max_examples=80, deadline=None)
@given(small_databases)
def test_supports_match_direct_count(db):
    for items, s in apriori_all(db, 2).items():
        assert direct_support(db, items) == s


def test_fast_filters_match_pairwise_and_nest():
    for db, ms in random_cases(150, seed=41):
        fi = apriori_all(db, ms)
        mf, cf = maximal_filter(fi), closed_filter(fi)
        assert mf == maximal_filter_pairwise(fi)
        assert cf == closed_filter_pairwise(fi)
        assert set(mf) <= set(cf) <= set(fi)
        # downward closure of the oracle output
        for items in fi:
            for sub in combinations(items, len(items) - 1):
                assert not sub or sub in fi
