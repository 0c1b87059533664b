"""Brute-force reference miners used as ground truth in the tests.

These are deliberately simple: level-wise Apriori with full database scans and
quadratic pairwise filters. Keep inputs tiny.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from .dataset import TransactionDatabase

Itemset = tuple[int, ...]


def apriori_all(db: TransactionDatabase | Iterable[Iterable[int]], min_sup: int) -> dict[Itemset, int]:
    """All frequent itemsets with exact supports.

    Generates (k+1)-candidates by joining k-itemsets with a common prefix,
    drops candidates with an infrequent k-subset, then counts the survivors
    with one scan over every transaction.
    """
    min_sup = max(1, int(min_sup))
    rows = [frozenset(t) for t in db]
    counts: dict[Itemset, int] = {}
    for t in rows:
        for i in t:
            counts[(i,)] = counts.get((i,), 0) + 1
    level = {k: v for k, v in counts.items() if v >= min_sup}
    result = dict(level)
    while level:
        prev = sorted(level)
        prev_set = set(prev)
        candidates = []
        for a, b in combinations(prev, 2):
            if a[:-1] != b[:-1]:
                continue
            cand = a + (b[-1],) if a[-1] < b[-1] else b + (a[-1],)
            if all(sub in prev_set for sub in combinations(cand, len(cand) - 1)):
                candidates.append(cand)
        counted = dict.fromkeys(candidates, 0)
        for t in rows:
            for cand in candidates:
                if t.issuperset(cand):
                    counted[cand] += 1
        level = {k: v for k, v in counted.items() if v >= min_sup}
        result.update(level)
    return result


def direct_support(db: TransactionDatabase | Iterable[Iterable[int]], itemset: Iterable[int]) -> int:
    want = set(itemset)
    return sum(1 for t in db if want.issubset(t))


def _extensions(fi: Mapping[Itemset, int]):
    """Yield (itemset, support, supports of its one-item extensions in fi)."""
    universe = sorted({i for k in fi for i in k})
    for k, sup in fi.items():
        members = set(k)
        ext = []
        for i in universe:
            if i in members:
                continue
            grown = tuple(sorted(k + (i,)))
            if grown in fi:
                ext.append(fi[grown])
        yield k, sup, ext


def maximal_filter(fi: Mapping[Itemset, int]) -> dict[Itemset, int]:
    """Members of ``fi`` with no proper superset in ``fi``.

    ``fi`` is downward closed, so any proper superset implies a one-item
    extension in ``fi``; only those are checked.
    """
    return {k: sup for k, sup, ext in _extensions(fi) if not ext}


def closed_filter(fi: Mapping[Itemset, int]) -> dict[Itemset, int]:
    """Members of ``fi`` with no proper superset of equal support.

    Supports shrink along supersets, so an equal-support superset forces an
    equal-support one-item extension.
    """
    return {k: sup for k, sup, ext in _extensions(fi) if sup not in ext}


def maximal_filter_pairwise(fi: Mapping[Itemset, int]) -> dict[Itemset, int]:
    """Quadratic definition-level check, for cross-validating the fast filter."""
    sets = [(k, frozenset(k)) for k in fi]
    return {k: fi[k] for k, s in sets if not any(s < o for _, o in sets)}


def closed_filter_pairwise(fi: Mapping[Itemset, int]) -> dict[Itemset, int]:
    sets = [(k, frozenset(k), fi[k]) for k in fi]
    return {k: sup for k, s, sup in sets if not any(osup == sup and s < o for _, o, osup in sets)}
