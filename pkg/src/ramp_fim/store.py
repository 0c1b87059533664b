"""Grow-only pattern store with vertical item bitmaps, and LIND index lists.

Patterns are numbered in insertion order. For every item the store keeps a
bitmap over pattern numbers: bit ``j`` of item ``i`` is set iff item ``i``
occurs in pattern ``j``. Pattern bits are grouped into blocks of ``width``
patterns; a LIND is a list of ``(block, mask)`` pairs selecting the stored
patterns that contain a search node's head.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bitvec import DEFAULT_WIDTH, OpCounters, word_dtype, words_for


class PatternStore:
    """Append-only list of itemsets over internal item ids ``0..n_items-1``."""

    def __init__(self, n_items: int, width: int = DEFAULT_WIDTH, initial_blocks: int = 4):
        self.width = width
        self.dtype = word_dtype(width)
        self.n_items = n_items
        self.patterns: list[tuple[int, ...]] = []
        self._bits = np.zeros((n_items, max(1, initial_blocks)), dtype=self.dtype)
        self._one = self.dtype.type(1)

    def __len__(self) -> int:
        return len(self.patterns)

    @property
    def count(self) -> int:
        return len(self.patterns)

    @property
    def n_blocks(self) -> int:
        return words_for(len(self.patterns), self.width)

    @property
    def item_bitmaps(self) -> np.ndarray:
        return self._bits[:, : self.n_blocks]

    def add(self, itemset: Iterable[int]) -> int:
        index = len(self.patterns)
        items = tuple(sorted(set(int(i) for i in itemset)))
        block, bit = divmod(index, self.width)
        if block >= self._bits.shape[1]:
            grown = np.zeros((self.n_items, 2 * self._bits.shape[1]), dtype=self.dtype)
            grown[:, : self._bits.shape[1]] = self._bits
            self._bits = grown
        if items:
            self._bits[list(items), block] |= self._one << self.dtype.type(bit)
        self.patterns.append(items)
        return index

    def valid_mask(self, blocks: np.ndarray) -> np.ndarray:
        """Masks with one bit per existing pattern in each block."""
        blocks = np.asarray(blocks, dtype=np.int64)
        out = np.full(len(blocks), np.iinfo(self.dtype).max, dtype=self.dtype)
        remaining = len(self.patterns) - blocks * self.width
        out[remaining <= 0] = 0
        partial = (remaining > 0) & (remaining < self.width)
        if partial.any():
            out[partial] = (self._one << remaining[partial].astype(self.dtype)) - self._one
        return out

    def containing(self, items: Sequence[int], blocks: np.ndarray) -> np.ndarray:
        """Per block, the patterns that contain every item in ``items``."""
        acc = self.valid_mask(blocks)
        if len(items) and len(blocks):
            acc &= np.bitwise_and.reduce(self._bits[np.ix_(list(items), blocks)], axis=0)
        return acc

    def is_antichain(self) -> bool:
        sets = [frozenset(p) for p in self.patterns]
        return not any(a < b for a in sets for b in sets)


class ClosedStore(PatternStore):
    """Pattern store that also records each pattern's support."""

    def __init__(self, n_items: int, width: int = DEFAULT_WIDTH, initial_blocks: int = 4):
        super().__init__(n_items, width, initial_blocks)
        self._supports = np.zeros(width * self._bits.shape[1], dtype=np.int64)

    @property
    def supports(self) -> np.ndarray:
        return self._supports[: len(self.patterns)]

    def add(self, itemset: Iterable[int], support: int = 0) -> int:
        index = super().add(itemset)
        if index >= len(self._supports):
            self._supports = np.concatenate([self._supports, np.zeros_like(self._supports)])
        self._supports[index] = support
        return index

    def is_closed_store(self) -> bool:
        sets = [(frozenset(p), s) for p, s in zip(self.patterns, self.supports)]
        return not any(a < b and sa == sb for a, sa in sets for b, sb in sets)


# kept as separate names for readability at call sites
MFIStore = PatternStore
CFIStore = ClosedStore


@dataclass(frozen=True)
class Lind:
    """Ascending block numbers with nonzero pattern masks."""

    blocks: np.ndarray
    masks: np.ndarray

    def __len__(self) -> int:
        return len(self.blocks)

    def patterns(self, width: int) -> list[int]:
        out = []
        for b, m in zip(self.blocks.tolist(), self.masks.tolist()):
            while m:
                low = m & -m
                out.append(b * width + low.bit_length() - 1)
                m ^= low
        return out

    @classmethod
    def empty(cls, dtype) -> "Lind":
        return cls(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=dtype))


def root_lind(store: PatternStore) -> Lind:
    blocks = np.arange(store.n_blocks, dtype=np.int64)
    masks = store.valid_mask(blocks)
    keep = masks != 0
    return Lind(blocks[keep], masks[keep])


def mfi_add(store: PatternStore, itemset: Iterable[int]) -> int:
    return store.add(itemset)


def lind_propagate(
    store: PatternStore, parent: Lind, item: int, counters: OpCounters | None = None
) -> Lind:
    """Narrow ``parent`` to the patterns that also contain ``item``: one AND per block."""
    if counters is not None:
        counters.containment_words += len(parent)
    if not len(parent):
        return parent
    masks = parent.masks & store._bits[item, parent.blocks]
    keep = masks != 0
    return Lind(parent.blocks[keep], masks[keep])


def lind_refresh_new(
    store: PatternStore,
    lind: Lind,
    watermark: int,
    head: Sequence[int],
    counters: OpCounters | None = None,
) -> Lind:
    """Append patterns numbered ``>= watermark`` that contain all of ``head``."""
    if watermark >= store.count:
        return lind
    first = watermark // store.width
    blocks = np.arange(first, store.n_blocks, dtype=np.int64)
    if counters is not None:
        counters.containment_words += len(blocks) * max(1, len(head))
    masks = store.containing(head, blocks)
    skip = watermark - first * store.width
    if skip:
        masks[0] &= ~((store._one << store.dtype.type(skip)) - store._one)
    keep = masks != 0
    blocks, masks = blocks[keep], masks[keep]
    if not len(blocks):
        return lind
    old_blocks, old_masks = lind.blocks, lind.masks
    if len(old_blocks) and old_blocks[-1] == blocks[0]:
        old_masks = old_masks.copy()
        old_masks[-1] |= masks[0]
        blocks, masks = blocks[1:], masks[1:]
    return Lind(np.concatenate([old_blocks, blocks]), np.concatenate([old_masks, masks]))


def hutmfi_check(
    store: PatternStore, lind: Lind, tail: Sequence[int], counters: OpCounters | None = None
) -> bool:
    """True if some LIND-selected pattern contains every tail item."""
    if not len(lind):
        return False
    if not len(tail):
        return True
    if counters is not None:
        counters.containment_words += len(lind) * len(tail)
    acc = lind.masks & np.bitwise_and.reduce(store._bits[np.ix_(list(tail), lind.blocks)], axis=0)
    return bool(acc.any())


def closed_check(store: ClosedStore, lind: Lind, support: int, counters: OpCounters | None = None) -> bool:
    """True unless a LIND-selected pattern has exactly ``support``.

    Every selected pattern is a superset of the node's itemset, so its support
    can only be lower or equal.
    """
    if not len(lind):
        return True
    if counters is not None:
        counters.containment_words += len(lind)
    idx = np.asarray(lind.patterns(store.width), dtype=np.int64)
    return not bool((store.supports[idx] == support).any())


def scan_superset(
    store: PatternStore, items: Sequence[int], counters: OpCounters | None = None
) -> np.ndarray:
    """Linear scan: per block, the stored patterns containing all ``items``."""
    blocks = np.arange(store.n_blocks, dtype=np.int64)
    if counters is not None:
        counters.containment_words += len(blocks) * max(1, len(items))
    return store.containing(items, blocks)


class LindStack:
    """Per-depth LIND buffers reused along the depth-first path.

    Level ``d`` holds the index list of the node currently active at depth
    ``d``. Buffers grow geometrically with the store.
    """

    def __init__(self, store: PatternStore):
        self.store = store
        self._blocks: list[np.ndarray] = []
        self._masks: list[np.ndarray] = []
        self._len: list[int] = []

    def _level(self, depth: int, need: int) -> None:
        while len(self._blocks) <= depth:
            cap = max(4, self.store.n_blocks)
            self._blocks.append(np.zeros(cap, dtype=np.int64))
            self._masks.append(np.zeros(cap, dtype=self.store.dtype))
            self._len.append(0)
        if need > len(self._blocks[depth]):
            cap = max(need, 2 * len(self._blocks[depth]))
            nb = np.zeros(cap, dtype=np.int64)
            nm = np.zeros(cap, dtype=self.store.dtype)
            n = self._len[depth]
            nb[:n] = self._blocks[depth][:n]
            nm[:n] = self._masks[depth][:n]
            self._blocks[depth], self._masks[depth] = nb, nm

    def get(self, depth: int) -> Lind:
        n = self._len[depth]
        return Lind(self._blocks[depth][:n], self._masks[depth][:n])

    def set(self, depth: int, lind: Lind) -> Lind:
        n = len(lind)
        self._level(depth, n)
        # the source may be a view of this very level
        blocks, masks = lind.blocks.copy(), lind.masks.copy()
        self._blocks[depth][:n] = blocks
        self._masks[depth][:n] = masks
        self._len[depth] = n
        return self.get(depth)
