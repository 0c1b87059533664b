"""Frequent, maximal and closed itemset mining over projected bit-vectors."""
from .bitvec import BitVectorView, ProjectionArena, count_set_bits, intersect_and_project, support_over_pbr
from .dataset import (
    ParseError,
    RootIndex,
    TransactionDatabase,
    absolute_min_sup,
    build_root_index,
    item_supports,
    parse_transactions,
    read_transactions,
    sample_database,
)
from .mine_all import mine_all, ramp_all
from .mine_closed import ramp_closed
from .mine_max import ramp_max
from .oracle import apriori_all, closed_filter, maximal_filter
from .search import MineOptions
from .synthetic import gen_synthetic

__version__ = "0.1.0"

__all__ = [
    "BitVectorView",
    "MineOptions",
    "ParseError",
    "ProjectionArena",
    "RootIndex",
    "TransactionDatabase",
    "absolute_min_sup",
    "apriori_all",
    "build_root_index",
    "closed_filter",
    "count_set_bits",
    "gen_synthetic",
    "intersect_and_project",
    "item_supports",
    "maximal_filter",
    "mine_all",
    "parse_transactions",
    "ramp_all",
    "ramp_closed",
    "ramp_max",
    "read_transactions",
    "sample_database",
    "support_over_pbr",
]
