"""Node-level machinery shared by the all / maximal / closed miners.

A search node has a head itemset, the head's bitmap in the projection arena,
the head's PBR, and an ordered tail of candidate items. Counting ANDs the head
words with every tail item at once over the PBR columns; the AND results are
kept so child bitmaps can be carved out without counting again.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .bitvec import OpCounters, ProjectionArena
from .dataset import RootIndex

UNKNOWN, FREQUENT, INFREQUENT = 0, 1, 2

NodeHook = Callable[[tuple, np.ndarray], None]


@dataclass(frozen=True)
class MineOptions:
    """Optimisation switches. None of them changes what is mined."""

    pair_prune: bool = True
    pep: bool = True
    fhut: bool = True
    hutmfi: bool = True
    erfco: bool = True
    projection: str = "pbr"
    order: str = "support"
    subsumption: str = "lind"
    check_invariants: bool = False

    def __post_init__(self):
        if self.projection not in ("pbr", "full"):
            raise ValueError(f"projection must be 'pbr' or 'full', not {self.projection!r}")
        if self.order not in ("support", "lexicographic"):
            raise ValueError(f"order must be 'support' or 'lexicographic', not {self.order!r}")
        if self.subsumption not in ("lind", "scan"):
            raise ValueError(f"subsumption must be 'lind' or 'scan', not {self.subsumption!r}")

    def with_(self, **kw) -> "MineOptions":
        return replace(self, **kw)


class PairMatrix:
    """Tri-state table of 2-itemset frequency between internal items.

    Entries are UNKNOWN until recorded. The table is kept symmetric so a row
    lookup answers "is (h, x) infrequent" for many x at once.
    """

    def __init__(self, n_items: int):
        self.state = np.zeros((n_items, n_items), dtype=np.int8)

    @classmethod
    def from_supports(cls, pair_supports: np.ndarray, min_sup: int) -> "PairMatrix":
        pm = cls(len(pair_supports))
        pm.state[:] = np.where(pair_supports >= min_sup, FREQUENT, INFREQUENT)
        np.fill_diagonal(pm.state, UNKNOWN)
        return pm

    @classmethod
    def from_root(cls, root: RootIndex, min_sup: int) -> "PairMatrix":
        return cls.from_supports(root.pair_supports(), min_sup)

    def record(self, i: int, others: np.ndarray, supports: np.ndarray, min_sup: int) -> None:
        marks = np.where(supports >= min_sup, FREQUENT, INFREQUENT).astype(np.int8)
        self.state[i, others] = marks
        self.state[others, i] = marks

    def prunable_many(self, head: Sequence[int], candidates: np.ndarray) -> np.ndarray:
        if not len(head) or not len(candidates):
            return np.zeros(len(candidates), dtype=bool)
        return (self.state[np.ix_(list(head), candidates)] == INFREQUENT).any(axis=0)


def pair_prune_check(matrix: PairMatrix, head: Sequence[int], x: int) -> bool:
    """True if some pair (h, x) with h in ``head`` is known to be infrequent."""
    return bool(matrix.prunable_many(head, np.array([x], dtype=np.int64))[0])


def dynamic_reorder(
    items: np.ndarray,
    supports: np.ndarray,
    min_sup: int,
    key: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Drop infrequent items and sort the rest by ascending support, then item id.

    With ``key`` the survivors are ordered by ``key[item]`` instead.
    """
    items = np.asarray(items, dtype=np.int64)
    supports = np.asarray(supports, dtype=np.int64)
    keep = supports >= min_sup
    items, supports = items[keep], supports[keep]
    if key is None:
        order = np.lexsort((items, supports))
    else:
        order = np.argsort(key[items], kind="stable")
    return items[order], supports[order]


def pep_trim(
    items: np.ndarray, supports: np.ndarray, head_support: int, min_sup: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split counted tail items into (promoted, remaining items, remaining supports).

    Items whose support equals the head's occur in every head row and move into
    the head. Infrequent items are dropped. Order of the remainder is kept.
    """
    items = np.asarray(items, dtype=np.int64)
    supports = np.asarray(supports, dtype=np.int64)
    promoted = supports == head_support
    keep = ~promoted & (supports >= min_sup)
    return items[promoted], items[keep], supports[keep]


class SearchEngine:
    """Depth-first walk state: arena, current head, counters, option switches."""

    def __init__(
        self,
        root: RootIndex,
        min_sup: int,
        options: MineOptions | None = None,
        on_node: NodeHook | None = None,
    ):
        self.root = root
        self.min_sup = max(1, int(min_sup))
        self.opts = options or MineOptions()
        self.on_node = on_node
        self.bitmaps = root.bitmaps
        self.item_supports = root.supports
        self.item_ids = root.item_ids.tolist()
        self.counters = OpCounters()
        self.arena = ProjectionArena(root.n_words, root.width)
        self.all_regions = np.arange(root.n_words, dtype=np.int64)
        self.lex_key = np.argsort(np.argsort(root.item_ids, kind="stable"), kind="stable")
        self.pairs = PairMatrix.from_root(root, self.min_sup) if self.opts.pair_prune else None
        self.head: list[int] = []
        need = root.n_items + 100
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need)

    # ordering -----------------------------------------------------------

    def root_tail(self) -> np.ndarray:
        items = np.arange(self.root.n_items, dtype=np.int64)
        if self.opts.order == "lexicographic":
            items = items[np.argsort(self.lex_key, kind="stable")]
        return items

    def reorder(self, items: np.ndarray, supports: np.ndarray, rows: np.ndarray):
        """Order already-filtered tail items; ``rows`` follows the permutation."""
        if self.opts.order == "support":
            perm = np.lexsort((items, supports))
        else:
            perm = np.argsort(self.lex_key[items], kind="stable")
        return items[perm], supports[perm], rows[perm]

    # counting and projection --------------------------------------------

    def prune_pairs(self, cand: np.ndarray) -> np.ndarray:
        if self.pairs is None or not self.head or not len(cand):
            return cand
        return cand[~self.pairs.prunable_many(self.head, cand)]

    def count(self, depth: int, pbr: np.ndarray, cand: np.ndarray):
        """Supports of head + x for every candidate; also the AND rows if ERFCO is on."""
        if depth == 0:
            return self.item_supports[cand], None
        if not len(cand):
            return np.zeros(0, dtype=np.int64), None
        cols = pbr if self.opts.projection == "pbr" else self.all_regions
        head = self.arena.words(depth)[cols]
        anded = self.bitmaps[np.ix_(cand, cols)] & head
        self.counters.and_words += anded.size
        sup = np.bitwise_count(anded).sum(axis=1, dtype=np.int64)
        if depth == 1 and self.pairs is not None:
            self.pairs.record(self.head[0], cand, sup, self.min_sup)
        return sup, (anded if self.opts.erfco else None)

    def project(self, depth: int, pbr: np.ndarray, item: int, row: np.ndarray | None) -> np.ndarray:
        """Write head + item's bitmap into depth + 1 and return its PBR."""
        out = self.arena.words(depth + 1)
        if depth == 0:
            words = self.bitmaps[item]
            child_pbr = np.flatnonzero(words)
            if self.opts.projection == "pbr":
                out[child_pbr] = words[child_pbr]
            else:
                out[:] = words
            return child_pbr
        cols = pbr if self.opts.projection == "pbr" else self.all_regions
        if row is None:
            row = self.bitmaps[item, cols] & self.arena.words(depth)[cols]
            self.counters.and_words += len(cols)
        nz = np.flatnonzero(row)
        if self.opts.projection == "pbr":
            out[cols[nz]] = row[nz]
        else:
            out[:] = row
        return cols[nz]

    def needs_bitmap(self, child_tail: np.ndarray) -> bool:
        return len(child_tail) > 0 or self.on_node is not None

    # output helpers -----------------------------------------------------

    def original(self, items: Sequence[int]) -> tuple[int, ...]:
        ids = self.item_ids
        return tuple(sorted(ids[i] for i in items))

    def visit(self, pbr: np.ndarray) -> None:
        self.counters.nodes += 1
        if self.on_node is not None:
            self.on_node(self.original(self.head), pbr)
