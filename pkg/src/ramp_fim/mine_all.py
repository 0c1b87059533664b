"""All frequent itemsets by depth-first PBR projection."""
from __future__ import annotations

from typing import Callable

import numpy as np

from .dataset import RootIndex
from .search import (  # noqa: F401  (re-exported)
    MineOptions,
    NodeHook,
    PairMatrix,
    SearchEngine,
    dynamic_reorder,
    pair_prune_check,
)

Sink = Callable[[tuple, int], None]


class AllMiner(SearchEngine):
    def run(self, sink: Sink) -> int:
        self.sink = sink
        self.emitted = 0
        if self.root.n_items:
            self._node(0, self.root.root_pbr, self.root_tail())
        return self.emitted

    def _node(self, depth: int, pbr: np.ndarray, tail: np.ndarray) -> None:
        cand = self.prune_pairs(tail)
        sup, anded = self.count(depth, pbr, cand)
        rows = np.flatnonzero(sup >= self.min_sup)
        items, sups, rows = self.reorder(cand[rows], sup[rows], rows)
        head = self.head
        for j in range(len(items)):
            x = int(items[j])
            child_tail = items[j + 1 :]
            child_pbr = None
            if self.needs_bitmap(child_tail):
                child_pbr = self.project(depth, pbr, x, None if anded is None else anded[rows[j]])
            head.append(x)
            self.sink(self.original(head), int(sups[j]))
            self.emitted += 1
            self.visit(child_pbr)
            self._node(depth + 1, child_pbr, child_tail)
            head.pop()


def ramp_all(
    root: RootIndex,
    min_sup: int | None = None,
    sink: Sink | None = None,
    options: MineOptions | None = None,
    on_node: NodeHook | None = None,
    miner_out: list | None = None,
) -> int:
    """Emit every frequent itemset once, in depth-first pre-order.

    ``sink(items, support)`` receives original item ids in ascending order.
    Returns the number of itemsets emitted. An exception raised by ``sink``
    aborts the walk.
    """
    if min_sup is None:
        min_sup = root.min_sup
    miner = AllMiner(root, min_sup, options, on_node)
    if miner_out is not None:
        miner_out.append(miner)
    return miner.run(sink or (lambda items, support: None))


def mine_all(root: RootIndex, min_sup: int | None = None, **kw) -> dict[tuple, int]:
    """Convenience wrapper collecting :func:`ramp_all` output into a dict."""
    out: dict[tuple, int] = {}
    ramp_all(root, min_sup, out.__setitem__, **kw)
    return out
