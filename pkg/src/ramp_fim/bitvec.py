"""Fixed-width word bit-vectors and region-projected AND counting.

A bit-vector is a 1-D numpy array of unsigned words. A projection (PBR) is a
sorted ``int64`` array of the word indices that are nonzero in a head bitmap;
counting loops only touch those words.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

DEFAULT_WIDTH = 64

# width 1 stores one row per uint8 word; it exists for hand-traceable examples
_DTYPES = {1: np.uint8, 8: np.uint8, 16: np.uint16, 32: np.uint32, 64: np.uint64}


class ArenaError(RuntimeError):
    pass


def word_dtype(width: int) -> np.dtype:
    try:
        return np.dtype(_DTYPES[width])
    except KeyError:
        raise ValueError(f"unsupported word width {width}; use one of {sorted(_DTYPES)}") from None


def width_from_env(default: int = DEFAULT_WIDTH) -> int:
    raw = os.environ.get("RAMP_WORD_WIDTH")
    if not raw:
        return default
    width = int(raw)
    word_dtype(width)
    return width


def words_for(rows: int, width: int) -> int:
    return -(-rows // width)


def nonzero_regions(words: np.ndarray) -> np.ndarray:
    return np.flatnonzero(words).astype(np.int64)


def count_set_bits(word: int, width: int = DEFAULT_WIDTH) -> int:
    if word < 0 or word >> width:
        raise ValueError(f"{word:#x} does not fit in {width} bits")
    return int(word).bit_count()


@dataclass(frozen=True)
class BitVectorView:
    """A bitmap with its row count; bits at or past ``len_rows`` are zero."""

    words: np.ndarray
    len_rows: int
    width: int = DEFAULT_WIDTH

    @classmethod
    def from_rows(cls, rows: Iterable[int], len_rows: int, width: int = DEFAULT_WIDTH) -> "BitVectorView":
        dtype = word_dtype(width)
        words = np.zeros(words_for(len_rows, width), dtype=dtype)
        for r in rows:
            if not 0 <= r < len_rows:
                raise IndexError(r)
            words[r // width] |= dtype.type(1) << dtype.type(r % width)
        return cls(words, len_rows, width)

    def rows(self) -> list[int]:
        return bitmap_rows(self.words, self.width)

    def pbr(self) -> np.ndarray:
        return nonzero_regions(self.words)


def bitmap_rows(words: np.ndarray, width: int) -> list[int]:
    out = []
    for idx in np.flatnonzero(words):
        w = int(words[idx])
        while w:
            low = w & -w
            out.append(int(idx) * width + low.bit_length() - 1)
            w ^= low
    return out


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())


@dataclass
class OpCounters:
    """Instrumentation for word-level work done by a miner."""

    and_words: int = 0
    containment_words: int = 0
    nodes: int = 0
    extra: dict = field(default_factory=dict)


def _words(x) -> np.ndarray:
    return x.words if isinstance(x, BitVectorView) else x


def support_over_pbr(head, item, pbr: np.ndarray, counters: OpCounters | None = None) -> int:
    """Support of ``head AND item`` summed over the regions in ``pbr`` only."""
    h, x = _words(head), _words(item)
    if counters is not None:
        counters.and_words += len(pbr)
    if len(pbr) == 0:
        return 0
    return int(np.bitwise_count(h[pbr] & x[pbr]).sum())


def full_scan_support(head, item, counters: OpCounters | None = None) -> int:
    h, x = _words(head), _words(item)
    if counters is not None:
        counters.and_words += len(h)
    return int(np.bitwise_count(h & x).sum())


def intersect_and_project(
    head,
    item,
    pbr: np.ndarray,
    out: np.ndarray | None = None,
    counters: OpCounters | None = None,
) -> tuple[int, np.ndarray, np.ndarray]:
    """Count ``head AND item`` over ``pbr`` and build the child projection in one pass.

    The child keeps the parent's region numbering. When ``out`` is given the
    child words are written into it at the child regions and ``out`` is
    returned; words of ``out`` outside the child PBR are left untouched.
    """
    h, x = _words(head), _words(item)
    if out is None:
        out = np.zeros_like(h)
    elif len(out) < len(h) or len(pbr) > len(out):
        raise ArenaError(f"arena slot of {len(out)} words cannot hold {len(pbr)} regions")
    if counters is not None:
        counters.and_words += len(pbr)
    anded = h[pbr] & x[pbr]
    nz = np.flatnonzero(anded)
    child_pbr = pbr[nz]
    out[child_pbr] = anded[nz]
    return int(np.bitwise_count(anded[nz]).sum()), out, child_pbr


class ProjectionArena:
    """Per-depth head bitmaps, reused along the depth-first path.

    Each depth owns one buffer as long as the root bitmaps; a node at depth d
    writes its children's words into depth d + 1. Because children keep the
    parent's region numbering, one root-length buffer always suffices.
    """

    def __init__(self, n_words: int, width: int = DEFAULT_WIDTH):
        self.n_words = n_words
        self.dtype = word_dtype(width)
        self._levels: list[np.ndarray] = []

    def words(self, depth: int) -> np.ndarray:
        while len(self._levels) <= depth:
            self._levels.append(np.zeros(self.n_words, dtype=self.dtype))
        return self._levels[depth]

    @property
    def depth_capacity(self) -> int:
        return len(self._levels)
