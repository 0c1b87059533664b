"""Transaction datasets: FIMI parsing, item supports and the root bitmap index."""
from __future__ import annotations

import io
import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

import numpy as np
import scipy.sparse as sp

from .bitvec import DEFAULT_WIDTH, nonzero_regions, word_dtype, words_for

# Item ids are stored as int64 internally.
MAX_ITEM_ID = 2**63 - 1


class ParseError(ValueError):
    """Raised for malformed FIMI input. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class TransactionDatabase:
    """Horizontal transaction list.

    Every transaction is a strictly ascending tuple of non-negative item ids.
    Empty transactions are kept as they were read.
    """

    transactions: tuple[tuple[int, ...], ...]

    @classmethod
    def from_iterable(cls, rows: Iterable[Iterable[int]]) -> "TransactionDatabase":
        out = []
        for row in rows:
            items = sorted(set(int(i) for i in row))
            if items and items[0] < 0:
                raise ValueError(f"negative item id {items[0]}")
            out.append(tuple(items))
        return cls(tuple(out))

    @property
    def item_universe(self) -> int:
        top = -1
        for t in self.transactions:
            if t and t[-1] > top:
                top = t[-1]
        return top + 1

    def __len__(self) -> int:
        return len(self.transactions)

    def __iter__(self):
        return iter(self.transactions)

    def to_fimi(self) -> str:
        return "".join(" ".join(map(str, t)) + "\n" for t in self.transactions)


def parse_transactions(stream: TextIO | str) -> TransactionDatabase:
    """Read FIMI text, one transaction per non-blank line.

    Items within a line are deduplicated and sorted. Any token that is not a
    non-negative decimal integer raises :class:`ParseError`.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    rows = []
    for lineno, line in enumerate(stream, start=1):
        tokens = line.split()
        if not tokens:
            continue
        items = set()
        for tok in tokens:
            if not tok.isdigit() or not tok.isascii():
                raise ParseError(f"invalid item token {tok!r}", lineno)
            value = int(tok)
            if value > MAX_ITEM_ID:
                raise ParseError(f"item id {tok} overflows 64-bit range", lineno)
            items.add(value)
        rows.append(tuple(sorted(items)))
    return TransactionDatabase(tuple(rows))


def read_transactions(path: str | os.PathLike) -> TransactionDatabase:
    with open(path, "r", encoding="ascii") as fh:
        return parse_transactions(fh)


def item_supports(db: TransactionDatabase) -> dict[int, int]:
    counts: Counter[int] = Counter()
    for t in db.transactions:
        counts.update(t)
    return dict(counts)


@dataclass(frozen=True)
class RootIndex:
    """Vertical bitmaps of the frequent items over compacted rows.

    Row ``r`` lives in word ``r // width`` at bit ``r % width``. Internal item
    ``k`` is the k-th entry of ``frequent_items`` (ascending support, then
    ascending original id); ``bitmaps[k]`` is its bit-vector.
    """

    frequent_items: tuple[tuple[int, int], ...]
    bitmaps: np.ndarray
    row_count: int
    root_pbr: np.ndarray
    min_sup: int
    width: int
    transaction_count: int
    # row -> original transaction position
    row_origin: np.ndarray
    # row x item incidence of the compacted rows, used for pair supports
    _incidence: sp.csr_matrix | None = None

    @property
    def item_ids(self) -> np.ndarray:
        return np.array([i for i, _ in self.frequent_items], dtype=np.int64)

    @property
    def supports(self) -> np.ndarray:
        return np.array([s for _, s in self.frequent_items], dtype=np.int64)

    @property
    def n_items(self) -> int:
        return len(self.frequent_items)

    @property
    def n_words(self) -> int:
        return int(self.bitmaps.shape[1])

    def pair_supports(self) -> np.ndarray:
        """Dense matrix of 2-itemset supports between internal items."""
        k = self.n_items
        if self._incidence is None or k == 0:
            return np.zeros((k, k), dtype=np.int64)
        x = self._incidence
        return np.asarray((x.T @ x).todense(), dtype=np.int64)


ROW_ORDERS = ("clustered", "original")


def build_root_index(
    db: TransactionDatabase,
    min_sup: int,
    width: int = DEFAULT_WIDTH,
    row_order: str = "clustered",
) -> RootIndex:
    """Drop infrequent items and empty rows, then pack per-item bitmaps.

    ``row_order="original"`` numbers the surviving rows in input order.
    ``"clustered"`` sorts them by their frequent items, most frequent first,
    so rows sharing items land in the same words and projections stay short.
    Supports do not depend on the choice.
    """
    if min_sup < 1:
        raise ValueError("min_sup must be >= 1")
    if row_order not in ROW_ORDERS:
        raise ValueError(f"row_order must be one of {ROW_ORDERS}, not {row_order!r}")
    supports = item_supports(db)
    frequent = sorted(
        ((i, s) for i, s in supports.items() if s >= min_sup),
        key=lambda p: (p[1], p[0]),
    )
    internal = {item: k for k, (item, _) in enumerate(frequent)}
    dtype = word_dtype(width)

    kept_rows = []
    for pos, t in enumerate(db.transactions):
        kept = sorted((internal[i] for i in t if i in internal), reverse=True)
        if kept:
            kept_rows.append((kept, pos))
    if row_order == "clustered":
        kept_rows.sort(key=lambda r: r[0])

    row_items: list[int] = []
    row_ptr = [0]
    origin = []
    for kept, pos in kept_rows:
        row_items.extend(kept)
        row_ptr.append(len(row_items))
        origin.append(pos)
    rows = len(origin)
    n_words = words_for(rows, width)
    bitmaps = np.zeros((len(frequent), n_words), dtype=dtype)

    incidence = None
    if rows:
        cols = np.asarray(row_items, dtype=np.int64)
        ptr = np.asarray(row_ptr, dtype=np.int64)
        row_of = np.repeat(np.arange(rows, dtype=np.int64), np.diff(ptr))
        flat = cols * n_words + row_of // width
        bits = np.left_shift(np.ones(1, dtype=dtype), (row_of % width).astype(dtype))
        np.bitwise_or.at(bitmaps.reshape(-1), flat, bits)
        incidence = sp.csr_matrix(
            (np.ones(len(cols), dtype=np.int64), cols, ptr), shape=(rows, len(frequent))
        )
        incidence.sort_indices()

    any_set = np.bitwise_or.reduce(bitmaps, axis=0) if len(frequent) else np.zeros(n_words, dtype)
    return RootIndex(
        frequent_items=tuple(frequent),
        bitmaps=bitmaps,
        row_count=rows,
        root_pbr=nonzero_regions(any_set),
        min_sup=min_sup,
        width=width,
        transaction_count=len(db),
        row_origin=np.asarray(origin, dtype=np.int64),
        _incidence=incidence,
    )


def absolute_min_sup(value: int | float | str, n_transactions: int) -> int:
    """Convert a fractional threshold in (0, 1] to an absolute count.

    Integers pass through unchanged. Fractions are rounded up, with a floor of 1.
    """
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE"):
            frac = Fraction(text)
        else:
            return int(text)
    elif isinstance(value, float):
        frac = Fraction(repr(value))
    else:
        return int(value)
    if not 0 < frac <= 1:
        raise ValueError(f"fractional min_sup must lie in (0, 1], got {value}")
    return max(1, math.ceil(frac * n_transactions))


def sample_database() -> TransactionDatabase:
    """Seven-customer store example, items A..Q mapped to 0..16."""
    rows = ["ABCFGL", "ABHI", "BEJO", "CEMIQ", "ABDN", "ABCDK", "AP"]
    return TransactionDatabase.from_iterable([[ord(c) - ord("A") for c in r] for r in rows])


def letters(items: Sequence[int]) -> str:
    return "".join(chr(ord("A") + i) for i in items)
