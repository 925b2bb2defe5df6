"""Subword classes of w_d grouped by coset, against their closed form."""

from __future__ import annotations

from typing import Optional

from ..classify import wd_fixed_point, wd_word
from ..config import ORACLE_MAX_D, log
from ..errors import OracleDisagreement
from ..fan import wd_fixed_points
from ..weyl import coset_classes, grassmannian_below, lifts_of_v_closed_form
from .base import OracleResult, bounded


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    d = bounded(d, 3, 1, ORACLE_MAX_D, "d")
    word = wd_word(d)
    classes = {c.representative: c for c in coset_classes(word, d)}
    params = {wd_fixed_point(d, a, b).perm(): (a, b) for a, b in wd_fixed_points(d)}
    below = set(grassmannian_below(word.perm(), d))
    if set(classes) != set(params) or set(params) != below:
        missing = sorted(str(v) for v in (set(params) | below) ^ set(classes))
        raise OracleDisagreement("lifts", f"d={d}: coset representatives differ at {missing}")

    for v, cls in classes.items():
        a, b = params[v]
        got = set(cls.members)
        want = lifts_of_v_closed_form(d, a, b)
        if got != want:
            first = min(got ^ want, key=lambda s: (len(s), s))
            raise OracleDisagreement("lifts", f"d={d} v={v} (a={a}, b={b}): subword {list(first)} differs")

    total = sum(len(c) for c in classes.values())
    if total != 2 ** (2 * d - 1):
        raise OracleDisagreement("lifts", f"d={d}: class sizes sum to {total}, not {2 ** (2 * d - 1)}")
    log("oracle", f"lifts d={d}: {len(classes)} classes match the closed form")
    return OracleResult("lifts", len(classes), f"{len(classes)} classes match, sizes sum {total}")
