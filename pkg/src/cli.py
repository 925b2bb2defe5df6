from __future__ import annotations

import argparse
import io
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .classify import classify_report
from .config import DEFAULT_SAMPLES, DEFAULT_SEED, MAX_N, WORKERS, log, use_color
from .errors import DeskScaleExceeded, InvalidParam, NotToric, SchubertError
from .fan import canonical_toric_word, flag_fan, grassmannian_fan
from .oracles import ORACLES
from .partition import partitions_in_rectangle, perm_of
from .schema import (
    REPORT_COLUMNS,
    dump_json,
    fan_record,
    format_table,
    parse_partition,
    parse_perm,
    parse_word,
    report_record,
    write_csv,
)
from .verify import RESULT_COLUMNS, result_record, run_checks, sweep_record, sweep_toric
from .weyl import Permutation

FILTERS = ("all", "toric", "smooth-toric", "gorenstein-toric")


@dataclass
class RunConfig:
    command: str
    d: Optional[int] = None
    n: Optional[int] = None
    perm: Optional[str] = None
    partition: Optional[str] = None
    word: Optional[str] = None
    space: str = "grassmannian"
    format: str = "table"
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    out: Optional[str] = None
    dmax: int = 5
    filter: str = "all"
    sweep: Optional[int] = None
    workers: int = WORKERS
    oracle: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(args).items() if k in fields and v is not None})


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        log("cli", f"Output written: {path}")
    else:
        sys.stdout.write(text)


def _render(records: list[dict[str, Any]], columns: list[str], cfg: RunConfig, payload: Any = None) -> str:
    if cfg.format == "json":
        return dump_json(payload if payload is not None else records)
    if cfg.format == "csv":
        buf = io.StringIO()
        write_csv(records, columns, buf)
        return buf.getvalue()
    return format_table(records, columns, color=not cfg.out and use_color(sys.stdout))


def _require_n(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise InvalidParam("--n is required")
    if not 1 <= cfg.n <= MAX_N:
        raise DeskScaleExceeded(f"--n must lie in [1, {MAX_N}], got {cfg.n}")
    return cfg.n


def _require_d(cfg: RunConfig) -> int:
    if cfg.d is None:
        raise InvalidParam("--d is required")
    return cfg.d


def resolve_variety(cfg: RunConfig) -> Permutation:
    """Normalize --perm / --partition / --word to a permutation in S_n."""
    n = _require_n(cfg)
    given = [x for x in (cfg.perm, cfg.partition, cfg.word) if x is not None]
    if len(given) != 1:
        raise InvalidParam("give exactly one of --perm, --partition, --word")
    if cfg.perm is not None:
        return parse_perm(cfg.perm, n)
    if cfg.partition is not None:
        return perm_of(parse_partition(cfg.partition), _require_d(cfg), n)
    return parse_word(cfg.word, n).perm()


def cmd_classify(cfg: RunConfig) -> int:
    w = resolve_variety(cfg)
    record = report_record(classify_report(w, _require_d(cfg), cfg.n))
    _emit(_render([record], REPORT_COLUMNS, cfg, payload=record), cfg)
    return 0


def cmd_fan(cfg: RunConfig) -> int:
    n = _require_n(cfg)
    if cfg.space == "flag":
        if cfg.word is not None:
            word = parse_word(cfg.word, n)
        else:
            word = canonical_toric_word(resolve_variety(cfg), _require_d(cfg), n)
        if not word.is_distinct:
            raise NotToric(f"word {word} repeats a simple reflection; X_w^B is not toric")
        fan = flag_fan(word)
    else:
        fan = grassmannian_fan(resolve_variety(cfg), _require_d(cfg), n)
    _emit(dump_json(fan_record(fan)), cfg)
    return 0


def cmd_verify_fano(cfg: RunConfig) -> int:
    results = run_checks(cfg.dmax, cfg.samples, cfg.seed, cfg.workers)
    sweep = sweep_toric(cfg.sweep, cfg.workers) if cfg.sweep is not None else []
    records = [result_record(r) for r in results]
    payload: dict[str, Any] = {"dmax": cfg.dmax, "seed": cfg.seed, "samples": cfg.samples, "results": records}
    if cfg.sweep is not None:
        payload["sweep"] = [sweep_record(row) for row in sweep]
    _emit(_render(records, RESULT_COLUMNS, cfg, payload=payload), cfg)

    failed = [r for r in results if not r.passed]
    bad_rows = [row for row in sweep if not row.ok]
    for r in failed:
        print(f"error: d={r.d} status={r.status}: " + "; ".join(r.failures), file=sys.stderr)
    for row in bad_rows:
        print(
            f"error: Gr({row.d},{row.n}) w={row.perm}: gorenstein={row.gorenstein} "
            f"cartier_integral={row.cartier_integral} fano={row.fano}",
            file=sys.stderr,
        )
    return 4 if failed or bad_rows else 0


def _classify_rows(item: tuple[int, int]) -> list[dict[str, Any]]:
    d, n = item
    return [report_record(classify_report(perm_of(lam, d, n), d, n)) for lam in partitions_in_rectangle(d, n)]


def _keep(record: dict[str, Any], how: str) -> bool:
    if how == "all":
        return True
    if not record["toric"]:
        return False
    if how == "smooth-toric":
        return record["smooth"]
    if how == "gorenstein-toric":
        return record["gorenstein"]
    return True


def cmd_enumerate(cfg: RunConfig) -> int:
    n = _require_n(cfg)
    if cfg.filter not in FILTERS:
        raise InvalidParam(f"--filter must be one of {', '.join(FILTERS)}")
    ds = [cfg.d] if cfg.d is not None else list(range(1, n))
    for d in ds:
        if not 1 <= d <= n - 1:
            raise InvalidParam(f"need 1 <= d <= n-1, got d={d}, n={n}")
    with ThreadPoolExecutor(max_workers=max(1, cfg.workers)) as pool:
        chunks = list(pool.map(_classify_rows, [(d, n) for d in ds]))
    records = [r for chunk in chunks for r in chunk if _keep(r, cfg.filter)]
    log("enumerate", f"n={n} filter={cfg.filter}: {len(records)} rows")
    _emit(_render(records, REPORT_COLUMNS, cfg), cfg)
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    if cfg.oracle not in ORACLES:
        raise InvalidParam(f"unknown oracle {cfg.oracle!r}; choose from {', '.join(ORACLES)}")
    result = ORACLES[cfg.oracle](n=cfg.n, d=cfg.d, workers=cfg.workers)
    _emit(f"{result.name}: {result.comparisons} comparisons; {result.summary}\n", cfg)
    return 0


def _add_variety_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="Ambient S_n / Gr(d,n) parameter")
    p.add_argument("--d", type=int, help="Descent position, Gr(d,n)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--perm", help="One-line notation, e.g. 2413 or 2,4,1,3")
    group.add_argument("--partition", help="Partition parts, e.g. 2,1")
    group.add_argument("--word", help="Reduced word, e.g. 1,3,2")


def _add_out_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="Write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubert-toric", description="Toric Schubert varieties in Grassmannians")
    sub = p.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="Classify one Schubert variety")
    _add_variety_flags(p_cls)
    p_cls.add_argument("--format", choices=["table", "json", "csv"], default="table")
    _add_out_flag(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_fan = sub.add_parser("fan", help="Export the fan of a toric Schubert variety as JSON")
    _add_variety_flags(p_fan)
    p_fan.add_argument("--space", choices=["flag", "grassmannian"], default="grassmannian")
    _add_out_flag(p_fan)
    p_fan.set_defaults(func=cmd_fan)

    p_ver = sub.add_parser("verify-fano", help="Verify that Gorenstein toric Schubert varieties are Fano")
    p_ver.add_argument("--dmax", type=int, default=5, help="Check w_d for d = 1..DMAX (default: 5)")
    p_ver.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Sampling seed (default: {DEFAULT_SEED})")
    p_ver.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help=f"Completeness samples (default: {DEFAULT_SAMPLES})")
    p_ver.add_argument("--sweep", type=int, help="Also check every toric w in Gr(d,n) for n <= SWEEP")
    p_ver.add_argument("--workers", type=int, default=WORKERS)
    p_ver.add_argument("--format", choices=["json", "table", "csv"], default="json")
    _add_out_flag(p_ver)
    p_ver.set_defaults(func=cmd_verify_fano)

    p_enum = sub.add_parser("enumerate", help="List Grassmannian permutations with their classification")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--d", type=int, help="Restrict to one Gr(d,n) (default: every d)")
    p_enum.add_argument("--filter", choices=FILTERS, default="all")
    p_enum.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_enum.add_argument("--workers", type=int, default=WORKERS)
    _add_out_flag(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_orc = sub.add_parser("oracle", help="Run a brute-force cross-check")
    p_orc.add_argument("oracle", choices=sorted(ORACLES))
    p_orc.add_argument("--n", type=int)
    p_orc.add_argument("--d", type=int)
    p_orc.add_argument("--workers", type=int, default=WORKERS)
    _add_out_flag(p_orc)
    p_orc.set_defaults(func=cmd_oracle)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return args.func(cfg)
    except SchubertError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
