"""Quest-style synthetic basket data.

Transactions are built by overlaying source patterns drawn with skewed
weights. Distribution, for reproducibility:

* source pattern lengths ~ Poisson(0.4 * avg_len), at least 1;
* each pattern after the first reuses an Exponential(0.5)-distributed
  fraction of the previous pattern's items, the rest drawn uniformly;
* pattern weights ~ Exponential(1), normalised; each pattern gets a
  corruption level ~ Normal(0.5, 0.1) clipped to [0, 1] and every item of a
  picked pattern is dropped independently with that probability (one item
  always survives);
* transaction lengths ~ Poisson(avg_len) clipped to [1, n_items];
* after each pattern, with probability ``noise`` one uniform random item is
  added.

The same arguments always give the same database.
"""
from __future__ import annotations

import numpy as np

from .dataset import TransactionDatabase


def gen_synthetic(
    n_transactions: int,
    n_items: int,
    avg_len: float,
    n_source_patterns: int,
    seed: int = 0,
    noise: float = 0.1,
) -> TransactionDatabase:
    if min(n_transactions, n_items, n_source_patterns) < 1 or avg_len < 1:
        raise ValueError("all generator parameters must be >= 1")
    if avg_len > n_items:
        raise ValueError("avg_len cannot exceed n_items")
    rng = np.random.default_rng(seed)

    patterns: list[np.ndarray] = []
    prev = np.zeros(0, dtype=np.int64)
    for _ in range(n_source_patterns):
        size = int(min(n_items, max(1, rng.poisson(0.4 * avg_len))))
        reuse = int(min(size, len(prev), round(rng.exponential(0.5) * size)))
        keep = rng.choice(prev, reuse, replace=False) if reuse else np.zeros(0, dtype=np.int64)
        pool = np.setdiff1d(np.arange(n_items), keep)
        fresh = rng.choice(pool, size - reuse, replace=False)
        prev = np.sort(np.concatenate([keep, fresh]).astype(np.int64))
        patterns.append(prev)
    weights = rng.exponential(1.0, n_source_patterns)
    weights /= weights.sum()
    corruption = np.clip(rng.normal(0.5, 0.1, n_source_patterns), 0.0, 1.0)
    lengths = np.clip(rng.poisson(avg_len, n_transactions), 1, n_items)

    rows = []
    batch = 4096
    picks = rng.choice(n_source_patterns, batch, p=weights)
    cursor = 0
    for length in lengths.tolist():
        basket: set[int] = set()
        for _attempt in range(4 * length + 4):
            if len(basket) >= length:
                break
            if cursor == batch:
                picks = rng.choice(n_source_patterns, batch, p=weights)
                cursor = 0
            p = picks[cursor]
            cursor += 1
            pat = patterns[p]
            kept = pat[rng.random(len(pat)) >= corruption[p]]
            if not len(kept):
                kept = pat[[rng.integers(len(pat))]]
            basket.update(kept.tolist())
            if rng.random() < noise:
                basket.add(int(rng.integers(n_items)))
        rows.append(tuple(sorted(basket)))
    return TransactionDatabase(tuple(rows))
