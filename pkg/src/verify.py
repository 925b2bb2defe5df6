from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional

from .classify import is_gorenstein, smooth_toric_words, toric_perms, wd_word
from .config import DEFAULT_SAMPLES, DEFAULT_SEED, MAX_D, ORACLE_MAX_D, SWEEP_MAX_N, WORKERS, log
from .errors import DeskScaleExceeded, InvalidParam, SchubertError
from .fan import (
    CartierData,
    fano_violations,
    grassmannian_fan,
    is_complete_sampled,
    is_projective_space_fan,
    solve_cartier,
    verify_negative_sums,
    verify_ray_relations,
    wd_fan,
    with_fano_verdict,
)
from .schema import cartier_record, format_perm
from .weyl import length


@dataclass
class CheckResult:
    d: int
    rays: int = 0
    cones: int = 0
    relations: Optional[bool] = None
    negative_sums: Optional[bool] = None
    merge: Optional[bool] = None
    gorenstein: bool = False
    fano: bool = False
    complete: bool = False
    smooth_projective: bool = False
    cartier: Optional[CartierData] = None
    status: str = "pending"
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class SweepRow:
    perm: str
    d: int
    n: int
    gorenstein: bool
    cartier_integral: bool
    fano: Optional[bool]

    @property
    def ok(self) -> bool:
        return self.gorenstein == self.cartier_integral and self.fano is not False


def expected_ray_count(d: int) -> int:
    # v_1 and v_d coincide for d = 1
    return 2 * d + 1 if d > 1 else 2


def _smooth_cases_projective(d: int) -> bool:
    for word in smooth_toric_words(d, 2 * d):
        w = word.perm()
        if is_projective_space_fan(grassmannian_fan(w, d, 2 * d)) != length(w):
            return False
    return True


def run_one_d(d: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CheckResult:
    """Every check on wd_fan(d); failures are collected, never raised."""
    result = CheckResult(d)
    started = time.perf_counter()
    try:
        log("verify", f"Starting d={d} samples={samples} seed={seed}")
        f = wd_fan(d)
        result.rays = len(f.rays)
        result.cones = len(f.max_cones)
        if result.rays != expected_ray_count(d):
            result.failures.append(f"rays: {result.rays}, expected {expected_ray_count(d)}")
        if result.cones != d * d + 1:
            result.failures.append(f"cones: {result.cones}, expected {d * d + 1}")
        if d >= 2:
            result.relations = verify_ray_relations(d)
            result.negative_sums = verify_negative_sums(d)
            if not result.relations:
                result.failures.append("ray relations do not hold")
            if not result.negative_sums:
                result.failures.append("negative-sum expressions do not hold")
        if d <= ORACLE_MAX_D:
            merged = grassmannian_fan(wd_word(d).perm(), d, 2 * d)
            result.merge = (merged.rays, merged.max_cones, merged.labels) == (f.rays, f.max_cones, f.labels)
            if not result.merge:
                result.failures.append("merged flag fan differs from the closed-form fan")

        data = with_fano_verdict(f, solve_cartier(f))
        result.gorenstein = data.is_integral
        if data.is_integral:
            result.fano = data.is_fano
            for k, i, value in fano_violations(f, data)[:3]:
                result.failures.append(f"fano: <m_{k}, {f.ray_names[i]}> = {value} <= -1")
        else:
            result.failures.append(f"gorenstein: cone {data.failing_cone} is {data.reason}")
        result.cartier = data

        result.complete = is_complete_sampled(f, samples, seed)
        if not result.complete:
            result.failures.append(f"completeness: a sample escaped every cone (seed={seed})")
        result.smooth_projective = _smooth_cases_projective(d)
        if not result.smooth_projective:
            result.failures.append("a smooth toric case is not a projective space fan")
        result.status = "fail" if result.failures else "pass"
    except SchubertError as e:
        result.status = "error"
        result.failures.append(f"{type(e).__name__}: {e}")
    finally:
        result.elapsed = time.perf_counter() - started
        log("verify", f"Finished d={d} status={result.status} elapsed={result.elapsed:.2f}s")
    return result


def run_checks(
    dmax: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    workers: int = WORKERS,
) -> list[CheckResult]:
    if dmax < 1:
        raise InvalidParam(f"--dmax must be at least 1, got {dmax}")
    if dmax > MAX_D:
        raise DeskScaleExceeded(f"--dmax {dmax} is above the cap {MAX_D}")
    if samples < 1:
        raise InvalidParam(f"--samples must be at least 1, got {samples}")
    if seed < 0:
        raise InvalidParam(f"--seed must be non-negative, got {seed}")
    ds = list(range(1, dmax + 1))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(lambda d: run_one_d(d, samples, seed), ds))


def _sweep_one(item: tuple[int, int]) -> list[SweepRow]:
    n, d = item
    rows = []
    for w in toric_perms(d, n):
        f = grassmannian_fan(w, d, n)
        data = with_fano_verdict(f, solve_cartier(f))
        rows.append(SweepRow(format_perm(w), d, n, is_gorenstein(w, d, n), data.is_integral, data.is_fano))
    return rows


def sweep_toric(n_max: int, workers: int = WORKERS) -> list[SweepRow]:
    """
    Every toric w in every Gr(d, n), n <= n_max: the Cartier solve succeeds exactly on the
    Gorenstein ones, and those are Fano.
    """
    if not 2 <= n_max <= SWEEP_MAX_N:
        raise DeskScaleExceeded(f"--sweep must lie in [2, {SWEEP_MAX_N}], got {n_max}")
    items = [(n, d) for n in range(2, n_max + 1) for d in range(1, n)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        chunks = list(pool.map(_sweep_one, items))
    rows = [row for chunk in chunks for row in chunk]
    log("verify", f"Sweep n<={n_max}: {len(rows)} toric Schubert varieties, {sum(not r.ok for r in rows)} disagreements")
    return rows


def result_record(r: CheckResult) -> dict[str, Any]:
    return {
        "d": r.d,
        "status": r.status,
        "rays": r.rays,
        "cones": r.cones,
        "relations": r.relations,
        "negative_sums": r.negative_sums,
        "merge": r.merge,
        "gorenstein": r.gorenstein,
        "fano": r.fano,
        "complete": r.complete,
        "smooth_projective": r.smooth_projective,
        "cartier": cartier_record(r.cartier) if r.cartier else None,
        "failures": list(r.failures),
    }


def sweep_record(row: SweepRow) -> dict[str, Any]:
    return {
        "perm": row.perm,
        "d": row.d,
        "n": row.n,
        "gorenstein": row.gorenstein,
        "cartier_integral": row.cartier_integral,
        "fano": row.fano,
        "ok": row.ok,
    }


RESULT_COLUMNS = ["d", "status", "rays", "cones", "relations", "negative_sums", "merge", "gorenstein", "fano", "complete", "smooth_projective"]


__all__ = [
    "CheckResult",
    "SweepRow",
    "expected_ray_count",
    "run_one_d",
    "run_checks",
    "sweep_toric",
    "result_record",
    "sweep_record",
    "RESULT_COLUMNS",
]
