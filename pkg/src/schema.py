from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, TextIO

from .errors import InvalidParam
from .partition import Partition
from .weyl import Permutation, ReducedWord


def normalize_text(value: Optional[str]) -> Optional[str]:
    if value is None:
        return None
    text = str(value).strip()
    if not text:
        return None
    return text


def _split_ints(text: str, what: str) -> list[int]:
    pieces = [p for p in text.replace(" ", ",").split(",") if p]
    try:
        return [int(p) for p in pieces]
    except ValueError:
        raise InvalidParam(f"cannot read {what} from {text!r}") from None


def format_perm(w: Permutation) -> str:
    return str(w)


def parse_perm(text: str, n: Optional[int] = None) -> Permutation:
    """
    One-line notation, either compact ("2413", only for n <= 9) or comma separated
    ("2,4,1,3").
    """
    text = normalize_text(text) or ""
    if "," in text or " " in text:
        values = _split_ints(text, "permutation")
    elif text.isdigit():
        values = [int(c) for c in text]
    else:
        raise InvalidParam(f"cannot read a permutation from {text!r}")
    w = Permutation(tuple(values))
    if n is not None and w.n != n:
        raise InvalidParam(f"{w} has {w.n} entries, expected n={n}")
    return w


def format_word(word: ReducedWord) -> str:
    return str(word)


def parse_word(text: str, n: int) -> ReducedWord:
    """Comma separated simple reflection indices; "" is the empty word."""
    return ReducedWord(tuple(_split_ints(normalize_text(text) or "", "word")), n)


def format_partition(lam: Partition) -> str:
    return str(lam)


def parse_partition(text: str) -> Partition:
    """Comma separated parts; "" and "0" both read as the empty partition."""
    return Partition(tuple(_split_ints(normalize_text(text) or "", "partition")))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_record(report) -> dict[str, Any]:
    hook = report.hook or (None, None)
    return {
        "perm": format_perm(report.w),
        "d": report.d,
        "n": report.n,
        "lambda": list(report.lam.parts),
        "toric": report.is_toric,
        "smooth": report.is_smooth,
        "gorenstein": report.is_gorenstein,
        "hook_x": hook[0],
        "hook_y": hook[1],
        "dim": report.dimension,
        "iso_canonical": list(report.iso_canonical.parts),
    }


def fan_record(fan) -> dict[str, Any]:
    return {
        "ambient_dim": fan.ambient_dim,
        "space": fan.space,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [sorted(c) for c in fan.max_cones],
        "labels": [format_perm(v) for v in fan.labels],
    }


def cartier_record(data) -> dict[str, Any]:
    return {
        "gorenstein": data.is_integral,
        "fano": data.is_fano,
        "m": [None if m is None else [format_rational(x) for x in m] for m in data.per_cone_m],
    }


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


REPORT_COLUMNS = ["perm", "d", "n", "lambda", "toric", "smooth", "gorenstein", "hook_x", "hook_y", "dim", "iso_canonical"]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(value)


def write_csv(records: Iterable[dict[str, Any]], columns: Sequence[str], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([_cell(r.get(c)) for c in columns])


def format_table(records: Sequence[dict[str, Any]], columns: Sequence[str], color: bool = False) -> str:
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(columns)]
    header = "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()
    if color:
        header = f"\033[1m{header}\033[0m"
    lines = [header]
    for row in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


__all__ = [
    "normalize_text",
    "format_perm",
    "parse_perm",
    "format_word",
    "parse_word",
    "format_partition",
    "parse_partition",
    "format_rational",
    "report_record",
    "fan_record",
    "cartier_record",
    "dump_json",
    "REPORT_COLUMNS",
    "write_csv",
    "format_table",
]
