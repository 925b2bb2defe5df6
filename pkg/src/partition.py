from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Optional, Sequence

from .errors import DoesNotFit, InvalidParam, NotGrassmannian
from .weyl import Permutation, is_grassmannian


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are dropped on construction."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = [int(p) for p in self.parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParam(f"not a partition: {list(self.parts)}")
        object.__setattr__(self, "parts", tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def fits(self, d: int, n: int) -> bool:
        return len(self.parts) <= d and self.width <= n - d

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class CornerSet:
    """
    Corners of the lower border path of a partition in the d x (n-d) rectangle.

    Rows run 1..d top-down and columns 1..n-d left to right; the path runs from (d, 0)
    to (0, n-d). A corner is a path vertex (r, c) with (r-1, c) and (r, c-1) on the path.
    """

    corners: tuple[tuple[int, int], ...]
    d: int
    n: int

    def __len__(self) -> int:
        return len(self.corners)

    def __iter__(self):
        return iter(self.corners)


def _check_fits(lam: Partition, d: int, n: int) -> None:
    if not 1 <= d <= n - 1:
        raise InvalidParam(f"need 1 <= d <= n-1, got d={d}, n={n}")
    if not lam.fits(d, n):
        raise DoesNotFit(f"partition ({lam}) does not fit in the {d} x {n - d} rectangle")


def lambda_of(w: Permutation, d: int) -> Partition:
    """lambda_i = w(d-i+1) - (d-i+1)."""
    if not is_grassmannian(w, d):
        raise NotGrassmannian(f"{w} has a descent outside position {d}")
    return Partition(tuple(w(d - i + 1) - (d - i + 1) for i in range(1, d + 1)))


def perm_of(lam: Partition, d: int, n: int) -> Permutation:
    """Inverse of `lambda_of`: the Grassmannian permutation at d with partition lam."""
    _check_fits(lam, d, n)
    padded = list(lam.parts) + [0] * (d - len(lam))
    first = [padded[i - 1] + (d - i + 1) for i in range(d, 0, -1)]
    rest = [v for v in range(1, n + 1) if v not in first]
    return Permutation(tuple(first + rest))


def is_hook(lam: Partition) -> Optional[tuple[int, int]]:
    """(x, y) when lam = (x, 1^y); arm-length is x-1 and leg-length is y."""
    if not lam.parts or any(p != 1 for p in lam.parts[1:]):
        return None
    return lam.parts[0], len(lam.parts) - 1


def border_path(lam: Partition, d: int, n: int) -> list[tuple[int, int]]:
    _check_fits(lam, d, n)
    padded = list(lam.parts) + [0] * (d - len(lam))
    r, c = d, 0
    path = [(r, c)]
    for row in range(d, 0, -1):
        while c < padded[row - 1]:
            c += 1
            path.append((r, c))
        r -= 1
        path.append((r, c))
    while c < n - d:
        c += 1
        path.append((r, c))
    return path


def corners(lam: Partition, d: int, n: int) -> CornerSet:
    path = border_path(lam, d, n)
    on_path = set(path)
    found = tuple(
        (r, c) for r, c in path if (r - 1, c) in on_path and (r, c - 1) in on_path
    )
    return CornerSet(found, d, n)


def corners_same_antidiagonal(lam: Partition, d: int, n: int) -> bool:
    return len({r + c for r, c in corners(lam, d, n)}) <= 1


def is_single_rectangle(lam: Partition) -> bool:
    return len(set(lam.parts)) <= 1


def transpose(lam: Partition) -> Partition:
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.width)))


def leq(lam: Partition, mu: Partition) -> bool:
    """Componentwise comparison, missing parts read as 0."""
    return all(a <= b for a, b in zip_longest(lam.parts, mu.parts, fillvalue=0))


def partitions_in_rectangle(d: int, n: int) -> list[Partition]:
    """All partitions fitting in d x (n-d), in lexicographic order of their parts."""

    def grow(prefix: list[int], cap: int) -> list[tuple[int, ...]]:
        out = [tuple(prefix)]
        if len(prefix) == d:
            return out
        for p in range(1, cap + 1):
            out.extend(grow(prefix + [p], p))
        return out

    return [Partition(p) for p in sorted(grow([], n - d))]


def as_partition(parts: Sequence[int]) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(tuple(parts))


__all__ = [
    "Partition",
    "CornerSet",
    "lambda_of",
    "perm_of",
    "is_hook",
    "border_path",
    "corners",
    "corners_same_antidiagonal",
    "is_single_rectangle",
    "transpose",
    "leq",
    "partitions_in_rectangle",
    "as_partition",
]
