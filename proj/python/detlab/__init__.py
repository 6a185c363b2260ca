"""Exact determinant-distribution laboratory over finite fields."""

import json as _json

from ._core import (
    BudgetError,
    FiniteField,
    count_distribution,
    entry_set,
    find_3ap,
    pair_statistic,
)
from ._core import recursion_report as _recursion_report
from ._core import verify_all as _verify_all

__all__ = [
    "BudgetError",
    "FiniteField",
    "count_distribution",
    "entry_set",
    "find_3ap",
    "pair_statistic",
    "recursion_report",
    "verify_all",
]


def recursion_report(field, entries, d, seed=1, budget=10**9):
    """Recursion-suite reports as a list of dicts."""
    return _json.loads(_recursion_report(field, entries, d, seed, budget))


def verify_all(field, entries, d, seed=1, budget=10**9, workers=1):
    """Full verification battery; returns (passed, report dict)."""
    passed, data = _verify_all(field, entries, d, seed, budget, workers)
    return passed, _json.loads(data)
