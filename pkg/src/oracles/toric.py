"""Toric, smooth and Gorenstein verdicts swept over every Grassmannian permutation."""

from __future__ import annotations

from typing import Optional

from ..classify import is_gorenstein, is_smooth, is_toric
from ..config import SWEEP_MAX_N, log
from ..errors import ClassifierBug, OracleDisagreement
from ..partition import is_hook, lambda_of
from ..weyl import grassmannian_perms
from .base import OracleResult, bounded, parallel_map


def _check_grassmannian(params: tuple[int, int]) -> tuple[int, Optional[str]]:
    k, d = params
    toric_count = 0
    perms = grassmannian_perms(d, k)
    for w in perms:
        try:
            toric = is_toric(w, d, k)
            smooth = is_smooth(w, d, k)
            gorenstein = is_gorenstein(w, d, k)
        except ClassifierBug as exc:
            return len(perms), str(exc)
        if not toric:
            continue
        toric_count += 1
        hook = is_hook(lambda_of(w, d))
        if hook is None:
            continue
        x, y = hook
        if smooth != (y == 0 or x == 1):
            return len(perms), f"Gr({d},{k}) w={w}: smooth={smooth} on hook ({x},1^{y})"
        if gorenstein != (smooth or x - 1 == y):
            return len(perms), f"Gr({d},{k}) w={w}: gorenstein={gorenstein} on hook ({x},1^{y})"
    if toric_count != d * (k - d) + 1:
        return len(perms), f"Gr({d},{k}): {toric_count} toric Schubert varieties, expected {d * (k - d) + 1}"
    return len(perms), None


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    n = bounded(n, SWEEP_MAX_N, 2, SWEEP_MAX_N, "n")
    params = [(k, dd) for k in range(2, n + 1) for dd in range(1, k)]
    total = 0
    for count, problem in parallel_map(_check_grassmannian, params, workers):
        total += count
        if problem:
            raise OracleDisagreement("toric", problem)
    log("oracle", f"toric: {total} Grassmannian permutations checked for n <= {n}")
    return OracleResult("toric", total, f"toric criteria agree on {total} Grassmannian permutations, n <= {n}")
