"""Maximal frequent itemsets with PEP, FHUT, HUTMFI and LIND subsumption checks."""
from __future__ import annotations

import numpy as np

from .dataset import RootIndex
from .search import MineOptions, NodeHook, SearchEngine, pep_trim  # noqa: F401
from .store import (
    LindStack,
    PatternStore,
    hutmfi_check,
    lind_propagate,
    lind_refresh_new,
    root_lind,
    scan_superset,
)


class MaxMiner(SearchEngine):
    store_cls = PatternStore

    def __init__(self, root: RootIndex, min_sup: int, options=None, on_node=None):
        super().__init__(root, min_sup, options, on_node)
        self.store = self.store_cls(root.n_items, root.width)
        self.linds = LindStack(self.store)
        self.use_lind = self.opts.subsumption == "lind"

    # subsumption ----------------------------------------------------------

    def _push_items(self, depth: int, items) -> None:
        """Extend the head in place, narrowing this depth's LIND to match."""
        for a in items:
            a = int(a)
            self.head.append(a)
            if self.use_lind:
                self.linds.set(depth, lind_propagate(self.store, self.linds.get(depth), a, self.counters))

    def _enter_child(self, depth: int, x: int) -> int:
        if self.use_lind:
            self.linds.set(depth + 1, lind_propagate(self.store, self.linds.get(depth), x, self.counters))
        self.head.append(x)
        return self.store.count

    def _leave_child(self, depth: int, watermark: int) -> None:
        self.head.pop()
        self._refresh(depth, watermark)

    def _refresh(self, depth: int, watermark: int) -> None:
        if self.use_lind and self.store.count > watermark:
            fresh = lind_refresh_new(self.store, self.linds.get(depth), watermark, self.head, self.counters)
            self.linds.set(depth, fresh)

    def _check_lind(self, depth: int) -> None:
        if not (self.use_lind and self.opts.check_invariants):
            return
        got = set(self.linds.get(depth).patterns(self.store.width))
        want = {j for j, p in enumerate(self.store.patterns) if set(self.head) <= set(p)}
        assert got == want, f"LIND mismatch at head {self.head}: {sorted(got)} != {sorted(want)}"

    def _hut_subsumed(self, depth: int, tail: np.ndarray) -> bool:
        if self.use_lind:
            return hutmfi_check(self.store, self.linds.get(depth), tail.tolist(), self.counters)
        return bool(scan_superset(self.store, self.head + tail.tolist(), self.counters).any())

    def _head_subsumed(self, depth: int) -> bool:
        if self.use_lind:
            return len(self.linds.get(depth)) > 0
        return bool(scan_superset(self.store, self.head, self.counters).any())

    # search ---------------------------------------------------------------

    def run(self) -> list[tuple[tuple, int]]:
        self.found: list[tuple[tuple, int]] = []
        if self.use_lind:
            self.linds.set(0, root_lind(self.store))
        if self.root.n_items:
            self._node(0, self.root.root_pbr, self.root.row_count, self.root_tail())
        if self.opts.check_invariants:
            self._check_store()
        return self.found

    def _check_store(self) -> None:
        assert self.store.is_antichain(), "a stored maximal pattern subsumes another"

    def _node(self, depth: int, pbr, support: int, tail: np.ndarray) -> bool:
        """Mine the subtree; return True if head plus entry tail is frequent."""
        self._check_lind(depth)
        if self.opts.hutmfi and self._hut_subsumed(depth, tail):
            return True
        cand = self.prune_pairs(tail)
        sup, anded = self.count(depth, pbr, cand)
        frequent = sup >= self.min_sup
        hut_frequent = len(cand) == len(tail) and bool(frequent.all())

        n_promoted = 0
        if self.opts.pep:
            promoted = cand[sup == support]
            n_promoted = len(promoted)
            self._push_items(depth, promoted)
            frequent &= sup != support
        rows = np.flatnonzero(frequent)
        items, sups, rows = self.reorder(cand[rows], sup[rows], rows)

        if not len(items):
            self._check_lind(depth)
            if self.head and not self._head_subsumed(depth):
                self.store.add(self.head)
                self.found.append((self.original(self.head), support))
            result = hut_frequent
        else:
            result = False
            for j in range(len(items)):
                x = int(items[j])
                child_tail = items[j + 1 :]
                child_pbr = None
                if self.needs_bitmap(child_tail):
                    child_pbr = self.project(depth, pbr, x, None if anded is None else anded[rows[j]])
                mark = self._enter_child(depth, x)
                self.visit(child_pbr)
                child_hut = self._node(depth + 1, child_pbr, int(sups[j]), child_tail)
                self._leave_child(depth, mark)
                if j == 0:
                    result = hut_frequent and child_hut
                    if result and self.opts.fhut:
                        break
        for _ in range(n_promoted):
            self.head.pop()
        return result


def ramp_max(
    root: RootIndex,
    min_sup: int | None = None,
    options: MineOptions | None = None,
    on_node: NodeHook | None = None,
    miner_out: list | None = None,
) -> list[tuple[tuple, int]]:
    """Maximal frequent itemsets as ``(original ids ascending, support)`` pairs."""
    if min_sup is None:
        min_sup = root.min_sup
    miner = MaxMiner(root, min_sup, options, on_node)
    if miner_out is not None:
        miner_out.append(miner)
    return miner.run()
