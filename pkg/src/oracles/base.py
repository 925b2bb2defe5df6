from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

from ..errors import DeskScaleExceeded, InvalidParam

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class OracleResult:
    name: str
    comparisons: int
    summary: str


def bounded(value: Optional[int], default: int, low: int, cap: int, flag: str) -> int:
    value = default if value is None else value
    if value < low:
        raise InvalidParam(f"--{flag} must be at least {low}, got {value}")
    if value > cap:
        raise DeskScaleExceeded(f"--{flag} {value} is above the oracle cap {cap}")
    return value


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Ordered map; threads only when more than one worker is asked for."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
