"""Closed frequent itemsets, reusing the pattern store and LIND propagation."""
from __future__ import annotations

import numpy as np

from .dataset import RootIndex
from .mine_max import MaxMiner
from .search import MineOptions, NodeHook
from .store import ClosedStore, Lind, closed_check, scan_superset


class ClosedMiner(MaxMiner):
    """Depth-first closed miner.

    With PEP on, a node's head (after absorbing equal-support tail items) is
    closed unless a stored superset has the same support; such a superset can
    only come from an earlier branch, and then nothing in this subtree is
    closed either, so the subtree is skipped. With PEP off the check is made
    again after the subtree returns, as in the plain formulation.
    """

    store_cls = ClosedStore

    def _closed(self, depth: int, support: int) -> bool:
        if self.use_lind:
            return closed_check(self.store, self.linds.get(depth), support, self.counters)
        masks = scan_superset(self.store, self.head, self.counters)
        idx = Lind(np.arange(len(masks), dtype=np.int64), masks).patterns(self.store.width)
        return not bool((self.store.supports[idx] == support).any())

    def _emit(self, depth: int, support: int) -> None:
        mark = self.store.add(self.head, support)
        self.found.append((self.original(self.head), support))
        self._refresh(depth, mark)

    def _check_store(self) -> None:
        assert self.store.is_closed_store(), "a stored pattern has an equal-support superset"

    def _node(self, depth: int, pbr, support: int, tail: np.ndarray) -> bool:
        self._check_lind(depth)
        cand = self.prune_pairs(tail)
        sup, anded = self.count(depth, pbr, cand)
        frequent = sup >= self.min_sup

        n_promoted = 0
        if self.opts.pep:
            promoted = cand[sup == support]
            n_promoted = len(promoted)
            self._push_items(depth, promoted)
            frequent &= sup != support
        try:
            if self.head and not self._closed(depth, support):
                return False
            if self.opts.pep and self.head:
                self._emit(depth, support)

            rows = np.flatnonzero(frequent)
            items, sups, rows = self.reorder(cand[rows], sup[rows], rows)
            for j in range(len(items)):
                x = int(items[j])
                child_tail = items[j + 1 :]
                child_pbr = None
                if self.needs_bitmap(child_tail):
                    child_pbr = self.project(depth, pbr, x, None if anded is None else anded[rows[j]])
                mark = self._enter_child(depth, x)
                self.visit(child_pbr)
                self._node(depth + 1, child_pbr, int(sups[j]), child_tail)
                self._leave_child(depth, mark)

            if not self.opts.pep and self.head:
                self._check_lind(depth)
                if self._closed(depth, support):
                    self._emit(depth, support)
            return False
        finally:
            for _ in range(n_promoted):
                self.head.pop()


def ramp_closed(
    root: RootIndex,
    min_sup: int | None = None,
    options: MineOptions | None = None,
    on_node: NodeHook | None = None,
    miner_out: list | None = None,
) -> list[tuple[tuple, int]]:
    """Closed frequent itemsets as ``(original ids ascending, support)`` pairs."""
    if min_sup is None:
        min_sup = root.min_sup
    miner = ClosedMiner(root, min_sup, options, on_node)
    if miner_out is not None:
        miner_out.append(miner)
    return miner.run()
