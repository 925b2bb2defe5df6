"""Bruhat order: the sorted-prefix test against the subword interval of a reduced word."""

from __future__ import annotations

from math import factorial
from typing import Optional

from ..config import ORACLE_MAX_N, log
from ..errors import OracleDisagreement
from ..weyl import Permutation, all_perms, bruhat_interval_by_subwords, bruhat_leq, reduced_word
from .base import OracleResult, bounded, parallel_map


def _check_top(w: Permutation) -> tuple[int, Optional[str]]:
    interval = bruhat_interval_by_subwords(reduced_word(w))
    count = 0
    for u in all_perms(w.n):
        count += 1
        by_prefix = bruhat_leq(u, w)
        if by_prefix != (u in interval):
            return count, f"u={u} w={w}: prefix test says {by_prefix}, subwords say {not by_prefix}"
    return count, None


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    n = bounded(n, 6, 1, ORACLE_MAX_N, "n")
    total = 0
    for k in range(1, n + 1):
        for count, problem in parallel_map(_check_top, list(all_perms(k)), workers):
            total += count
            if problem:
                raise OracleDisagreement("bruhat", problem)
        log("oracle", f"bruhat S_{k}: {factorial(k) ** 2} pairs agree")
    return OracleResult("bruhat", total, f"prefix test agrees with subwords on {total} pairs, n <= {n}")
