"""Bruhat order on Grassmannian permutations against containment of their partitions."""

from __future__ import annotations

from typing import Optional

from ..config import ORACLE_MAX_N, log
from ..errors import OracleDisagreement
from ..partition import lambda_of, leq
from ..weyl import bruhat_leq, grassmannian_perms
from .base import OracleResult, bounded, parallel_map


def _check_grassmannian(params: tuple[int, int]) -> tuple[int, Optional[str]]:
    k, d = params
    perms = grassmannian_perms(d, k)
    shapes = {w: lambda_of(w, d) for w in perms}
    count = 0
    for w in perms:
        for v in perms:
            count += 1
            if bruhat_leq(v, w) != leq(shapes[v], shapes[w]):
                return count, f"Gr({d},{k}) v={v} w={w}: Bruhat {bruhat_leq(v, w)}, partitions {not bruhat_leq(v, w)}"
    return count, None


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    n = bounded(n, 7, 2, ORACLE_MAX_N, "n")
    params = [(k, dd) for k in range(2, n + 1) for dd in range(1, k)]
    total = 0
    for count, problem in parallel_map(_check_grassmannian, params, workers):
        total += count
        if problem:
            raise OracleDisagreement("duality", problem)
    log("oracle", f"duality: {total} Grassmannian pairs agree for n <= {n}")
    return OracleResult("duality", total, f"Bruhat order matches partition containment on {total} pairs")
