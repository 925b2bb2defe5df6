"""Smooth toric Schubert varieties in Grassmannians have the fan of a projective space."""

from __future__ import annotations

from typing import Optional

from ..classify import smooth_toric_words
from ..config import SWEEP_MAX_N, log
from ..errors import OracleDisagreement
from ..fan import grassmannian_fan, is_projective_space_fan
from ..weyl import ReducedWord, length
from .base import OracleResult, bounded, parallel_map


def _check_word(item: tuple[int, int, ReducedWord]) -> Optional[str]:
    k, d, word = item
    w = word.perm()
    got = is_projective_space_fan(grassmannian_fan(w, d, k))
    if got != length(w):
        return f"Gr({d},{k}) w={w}: fan is P^{got}, expected P^{length(w)}"
    return None


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    n = bounded(n, SWEEP_MAX_N, 2, SWEEP_MAX_N, "n")
    items = [(k, dd, word) for k in range(2, n + 1) for dd in range(1, k) for word in smooth_toric_words(dd, k)]
    for problem in parallel_map(_check_word, items, workers):
        if problem:
            raise OracleDisagreement("projective", problem)
    log("oracle", f"projective: {len(items)} smooth toric fans are projective spaces")
    return OracleResult("projective", len(items), f"{len(items)} smooth toric fans are projective spaces, n <= {n}")
