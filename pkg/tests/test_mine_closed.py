import pytest

from ramp_fim.dataset import TransactionDatabase, build_root_index, letters
from ramp_fim.mine_all import mine_all
from ramp_fim.mine_closed import ramp_closed
from ramp_fim.mine_max import ramp_max
from ramp_fim.oracle import apriori_all, closed_filter
from ramp_fim.search import MineOptions

from conftest import random_cases

SAMPLE_CFI = {"A": 5, "B": 5, "AB": 4, "C": 3, "E": 2, "I": 2, "ABC": 2, "ABD": 2}


@pytest.mark.parametrize("width", [1, 32, 64])
@pytest.mark.parametrize("pep", [True, False])
def test_sample_cfi(sample_db, width, pep):
    root = build_root_index(sample_db, 2, width)
    got = ramp_closed(root, options=MineOptions(pep=pep, check_invariants=True))
    assert {letters(k): v for k, v in got} == SAMPLE_CFI


def test_sample_cfi_min_sup_4(sample_db):
    got = ramp_closed(build_root_index(sample_db, 4))
    assert {letters(k): v for k, v in got} == {"A": 5, "B": 5, "AB": 4}


def test_identical_transactions():
    db = TransactionDatabase.from_iterable([[1, 2]] * 3)
    assert ramp_closed(build_root_index(db, 1)) == [((1, 2), 3)]


@pytest.mark.parametrize(
    "opts",
    [
        MineOptions(),
        MineOptions(pep=False),
        MineOptions(subsumption="scan"),
        MineOptions(pep=False, subsumption="scan", order="lexicographic"),
        MineOptions(projection="full", erfco=False, pair_prune=False),
    ],
)
def test_random_against_oracle(opts):
    opts = opts.with_(check_invariants=True)
    for db, ms in random_cases(80, seed=31):
        root = build_root_index(db, ms)
        assert dict(ramp_closed(root, options=opts)) == closed_filter(apriori_all(db, ms))


def test_sandwich_and_mfi_supports():
    for db, ms in random_cases(100, seed=32):
        root = build_root_index(db, ms)
        mfi = dict(ramp_max(root))
        cfi = dict(ramp_closed(root))
        fi = mine_all(root)
        assert set(mfi) <= set(cfi) <= set(fi)
        assert len(mfi) <= len(cfi) <= len(fi)
        for k, s in mfi.items():
            assert cfi[k] == s
