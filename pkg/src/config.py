from __future__ import annotations

import os
import sys


WORKERS = int(os.environ.get("SCHUBERT_WORKERS", "4"))
QUIET = os.environ.get("SCHUBERT_QUIET", "").strip().lower() not in ("", "0", "false", "no")
DEFAULT_SEED = int(os.environ.get("SCHUBERT_SEED", "42"))
DEFAULT_SAMPLES = int(os.environ.get("SCHUBERT_SAMPLES", "10000"))

# Desk-scale caps
MAX_N = 12
MAX_D = 6
MAX_DD_DIM = 12
ORACLE_MAX_N = 7
ORACLE_MAX_D = 4
SWEEP_MAX_N = 8


def use_color(stream=None) -> bool:
    """ANSI colour only on a terminal, and never when NO_COLOR is set."""
    stream = stream or sys.stdout
    if "NO_COLOR" in os.environ:
        return False
    return bool(getattr(stream, "isatty", lambda: False)())


def log(tag: str, message: str) -> None:
    if QUIET:
        return
    print(f"[{tag}] {message}", file=sys.stderr)


__all__ = [
    "WORKERS",
    "QUIET",
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
    "MAX_N",
    "MAX_D",
    "MAX_DD_DIM",
    "ORACLE_MAX_N",
    "ORACLE_MAX_D",
    "SWEEP_MAX_N",
    "use_color",
    "log",
]
