"""
Merged Grassmannian cones of w_d against the flag cones they come from: the algorithmic
merge, the closed-form cone families and a volume certificate for every merged cone.
"""

from __future__ import annotations

from typing import Optional

from ..classify import wd_fixed_point, wd_word
from ..config import ORACLE_MAX_D, log
from ..errors import OracleDisagreement
from ..fan import (
    cone_union_equals,
    flag_fan,
    grassmannian_fan,
    reduced_wd_cone,
    wd_cone_union_generators,
    wd_fan,
    wd_fixed_points,
)
from ..weyl import coset_classes, subwords
from .base import OracleResult, bounded


def run(n: Optional[int] = None, d: Optional[int] = None, workers: int = 1) -> OracleResult:
    d = bounded(d, 2, 1, ORACLE_MAX_D, "d")
    word = wd_word(d)
    flag = flag_fan(word)
    closed = wd_fan(d)
    merged = grassmannian_fan(word.perm(), d, 2 * d)
    if (merged.rays, merged.max_cones, merged.labels) != (closed.rays, closed.max_cones, closed.labels):
        raise OracleDisagreement("cones", f"d={d}: merging flag cones does not reproduce the closed-form fan")

    position = {subset: k for k, (subset, _) in enumerate(subwords(word))}
    classes = {c.representative: c for c in coset_classes(word, d)}
    params = {wd_fixed_point(d, a, b).perm(): (a, b) for a, b in wd_fixed_points(d)}
    pieces_total = 0
    for k, v in enumerate(closed.labels):
        cls = classes[v]
        a, b = params[v]
        union = {flag.ray_names[i] for s in cls.members for i in flag.max_cones[position[s]]}
        if union != set(wd_cone_union_generators(d, a, b)):
            raise OracleDisagreement("cones", f"d={d} v={v}: generator union {sorted(union)} differs from closed form")
        if set(reduced_wd_cone(d, a, b)) != {closed.ray_names[i] for i in closed.max_cones[k]}:
            raise OracleDisagreement("cones", f"d={d} v={v}: reduced generators differ from the cone family")
        pieces = [flag.cones[position[s]] for s in cls.members]
        if not cone_union_equals(closed.cones[k], pieces):
            raise OracleDisagreement("cones", f"d={d}: C_{v} is not the union of its {len(pieces)} flag cones")
        pieces_total += len(pieces)

    identity = wd_fixed_point(d, 0, d).perm()
    tiles = len(classes[identity])
    log("oracle", f"cones d={d}: {len(closed.max_cones)} merged cones certified")
    return OracleResult(
        "cones",
        len(closed.max_cones),
        f"C_e tiling verified by {tiles} unimodular pieces; "
        f"{len(closed.max_cones)} merged cones from {pieces_total} pieces",
    )
