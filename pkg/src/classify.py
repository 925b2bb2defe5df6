"""
Decision procedures for Grassmannian Schubert varieties X_w in Gr(d, n): toric, smooth,
Gorenstein, and isomorphism type, plus the canonical words of the toric families.

Every toric verdict is computed from more than one characterization (partition shape,
reduced-word form, one-line pattern) and the characterizations are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ClassifierBug, InvalidHookParams, InvalidParam
from .partition import (
    Partition,
    corners_same_antidiagonal,
    is_hook,
    is_single_rectangle,
    lambda_of,
    perm_of,
    transpose,
)
from .weyl import Permutation, ReducedWord, grassmannian_perms, length, perm_from_word


@dataclass(frozen=True)
class ClassificationReport:
    w: Permutation
    d: int
    n: int
    lam: Partition
    is_toric: bool
    is_smooth: bool
    is_gorenstein: bool
    hook: Optional[tuple[int, int]]
    dimension: int
    iso_canonical: Partition


def _check_ambient(w: Permutation, d: int, n: int) -> None:
    if w.n != n:
        raise InvalidParam(f"{w} is not an element of S_{n}")
    if not 1 <= d <= n - 1:
        raise InvalidParam(f"need 1 <= d <= n-1, got d={d}, n={n}")


def toric_word(x: int, y: int, d: int, n: Optional[int] = None) -> ReducedWord:
    """s_{d+x-1} ... s_{d+1} s_{d-y} s_{d-y+1} ... s_d, the word of the hook (x, 1^y)."""
    ambient = n if n is not None else d + x
    if x < 1 or not 0 <= y <= d - 1 or x > ambient - d:
        raise InvalidHookParams(f"hook (x={x}, y={y}) does not fit in Gr({d},{ambient})")
    letters = list(range(d + x - 1, d, -1)) + list(range(d - y, d + 1))
    return ReducedWord(tuple(letters), ambient)


def wd_word(d: int) -> ReducedWord:
    """w_d = s_{2d-1} s_{2d-2} ... s_{d+1} s_1 ... s_d in S_{2d}."""
    if d < 1:
        raise InvalidParam(f"w_d needs d >= 1, got d={d}")
    letters = list(range(2 * d - 1, d, -1)) + list(range(1, d + 1))
    return ReducedWord(tuple(letters), 2 * d)


def wd_fixed_point(d: int, a: int, b: int) -> ReducedWord:
    """
    The Grassmannian v <= w_d with parameters (a, b):
    s_{2d-a-1} ... s_{d+1} s_{b+1} ... s_d, and b = d for v = e.
    """
    if d < 1 or not 0 <= a <= d - 1 or not 0 <= b <= d:
        raise InvalidHookParams(f"need 0 <= a <= d-1 and 0 <= b <= d; got d={d}, a={a}, b={b}")
    if b == d:
        return ReducedWord((), 2 * d)
    letters = list(range(2 * d - a - 1, d, -1)) + list(range(b + 1, d + 1))
    return ReducedWord(tuple(letters), 2 * d)


def gorenstein_word(k: int, d: int, n: Optional[int] = None) -> ReducedWord:
    """s_{d+k-1} ... s_{d+1} s_{d-k+1} ... s_d: the hook with equal arm and leg k-1."""
    if not 0 < k <= d:
        raise InvalidHookParams(f"need 0 < k <= d, got k={k}, d={d}")
    return toric_word(k, k - 1, d, n)


def smooth_toric_words(d: int, n: int) -> list[ReducedWord]:
    """Row words s_{d+x-1}..s_d (1 < x <= n-d) and column words s_{d-y}..s_d (0 <= y <= d-1)."""
    rows = [toric_word(x, 0, d, n) for x in range(2, n - d + 1)]
    columns = [toric_word(1, y, d, n) for y in range(0, d)]
    return rows + columns


def toric_one_line(w: Permutation, d: int) -> Optional[tuple[int, int]]:
    """
    Match w against the one-line forms 1..p p+2..d f | p+1 d+1..f-1 f+1..n with
    0 <= p <= d-1 and d < f <= n (p = d-1 is the form 1..d-1 f | d..f-1 f+1..n).
    Returns (p, f), or None when w has neither form.
    """
    n = w.n
    for p in range(0, d):
        for f in range(d + 1, n + 1):
            candidate = (
                list(range(1, p + 1))
                + list(range(p + 2, d + 1))
                + [f, p + 1]
                + list(range(d + 1, f))
                + list(range(f + 1, n + 1))
            )
            if tuple(candidate) == w.one_line:
                return p, f
    return None


def _matches_toric_word(w: Permutation, d: int, n: int) -> bool:
    for x in range(1, n - d + 1):
        for y in range(0, d):
            if perm_from_word(toric_word(x, y, d, n)) == w:
                return True
    return False


def is_toric(w: Permutation, d: int, n: int) -> bool:
    _check_ambient(w, d, n)
    lam = lambda_of(w, d)
    by_partition = not lam.parts or is_hook(lam) is not None
    by_word = w.is_identity() or _matches_toric_word(w, d, n)
    by_one_line = w.is_identity() or toric_one_line(w, d) is not None
    if not by_partition == by_word == by_one_line:
        raise ClassifierBug(
            f"toric criteria disagree for {w} in Gr({d},{n}): "
            f"partition={by_partition} word={by_word} one-line={by_one_line}"
        )
    return by_partition


def is_smooth(w: Permutation, d: int, n: int) -> bool:
    _check_ambient(w, d, n)
    verdict = is_single_rectangle(lambda_of(w, d))
    if is_toric(w, d, n):
        by_word = w.is_identity() or any(perm_from_word(word) == w for word in smooth_toric_words(d, n))
        if by_word != verdict:
            raise ClassifierBug(f"smoothness criteria disagree for toric {w} in Gr({d},{n})")
    return verdict


def is_gorenstein(w: Permutation, d: int, n: int) -> bool:
    _check_ambient(w, d, n)
    verdict = corners_same_antidiagonal(lambda_of(w, d), d, n)
    if is_toric(w, d, n):
        by_word = is_smooth(w, d, n) or any(
            perm_from_word(gorenstein_word(k, d, n)) == w for k in range(1, min(d, n - d) + 1)
        )
        if by_word != verdict:
            raise ClassifierBug(f"Gorenstein criteria disagree for toric {w} in Gr({d},{n})")
    return verdict


def iso_canonical(lam: Partition) -> Partition:
    """Smaller of lam and its transpose under (size, parts); transposition keeps the size."""
    return min(lam, transpose(lam), key=lambda p: (p.size, p.parts))


def is_isomorphic(w: Permutation, d: int, n: int, v: Permutation, d2: int, n2: int) -> bool:
    _check_ambient(w, d, n)
    _check_ambient(v, d2, n2)
    return iso_canonical(lambda_of(w, d)) == iso_canonical(lambda_of(v, d2))


def classify_report(w: Permutation, d: int, n: int) -> ClassificationReport:
    _check_ambient(w, d, n)
    lam = lambda_of(w, d)
    toric = is_toric(w, d, n)
    report = ClassificationReport(
        w=w,
        d=d,
        n=n,
        lam=lam,
        is_toric=toric,
        is_smooth=is_smooth(w, d, n),
        is_gorenstein=is_gorenstein(w, d, n),
        hook=is_hook(lam),
        dimension=length(w),
        iso_canonical=iso_canonical(lam),
    )
    if report.is_smooth and not report.is_gorenstein:
        raise ClassifierBug(f"{w} in Gr({d},{n}) is smooth but not Gorenstein")
    return report


def toric_perms(d: int, n: int) -> list[Permutation]:
    """The identity and one permutation per hook in the d x (n-d) rectangle."""
    hooks = [Partition((x,) + (1,) * y) for x in range(1, n - d + 1) for y in range(0, d)]
    return [Permutation.identity(n)] + [perm_of(lam, d, n) for lam in hooks]


def cell_dimensions(d: int, n: int) -> list[int]:
    """Dimensions of the Bruhat cells of Gr(d, n), ascending."""
    return sorted(length(w) for w in grassmannian_perms(d, n))


__all__ = [
    "ClassificationReport",
    "toric_word",
    "wd_word",
    "wd_fixed_point",
    "gorenstein_word",
    "smooth_toric_words",
    "toric_one_line",
    "is_toric",
    "is_smooth",
    "is_gorenstein",
    "iso_canonical",
    "is_isomorphic",
    "classify_report",
    "toric_perms",
    "cell_dimensions",
]
