"""
Type A Weyl group combinatorics: permutations in one-line notation, words in the
simple reflections s_1..s_{n-1}, Bruhat order, Grassmannian (minimal length) coset
representatives and the subword classes that get merged when projecting G/B -> G/P.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import (
    InvalidDescent,
    InvalidHookParams,
    InvalidLetter,
    InvalidParam,
    NotDistinctWord,
    NotReduced,
)


@dataclass(frozen=True)
class Permutation:
    """Element of S_n; `one_line[i-1]` is w(i)."""

    one_line: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "one_line", tuple(int(x) for x in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise InvalidParam(f"not a permutation of 1..{len(self.one_line)}: {list(self.one_line)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.one_line, start=1))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word s_{i_1} ... s_{i_m} in S_n; reducedness is checked on construction."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        _check_letters(self.letters, self.n)
        if length(perm_from_word(self.letters, self.n)) != len(self.letters):
            raise NotReduced(f"word {list(self.letters)} is not reduced in S_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    @property
    def is_distinct(self) -> bool:
        return len(set(self.letters)) == len(self.letters)

    def perm(self) -> Permutation:
        return perm_from_word(self.letters, self.n)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.letters)


@dataclass(frozen=True)
class CosetClass:
    """Subwords whose permutations share the coset `representative`·W_P."""

    representative: Permutation
    members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.members)


Word = Union[ReducedWord, Sequence[int]]


def _check_letters(letters: Sequence[int], n: int) -> None:
    if n < 1:
        raise InvalidParam(f"rank parameter must be positive, got n={n}")
    for i in letters:
        if not 1 <= i <= n - 1:
            raise InvalidLetter(f"letter s_{i} is out of range for S_{n}")


def _letters_of(word: Word) -> tuple[int, ...]:
    if isinstance(word, ReducedWord):
        return word.letters
    return tuple(int(i) for i in word)


def perm_from_word(word: Word, n: Optional[int] = None) -> Permutation:
    """
    Product s_{i_1} s_{i_2} ... s_{i_m}, rightmost factor applied first.

    Right multiplication by s_i swaps positions i and i+1 of the one-line notation, so
    s_1 s_2 in S_4 is 2314.
    """
    if n is None:
        n = word.n if isinstance(word, ReducedWord) else max(_letters_of(word), default=0) + 1
    letters = _letters_of(word)
    _check_letters(letters, n)
    one_line = list(range(1, n + 1))
    for i in letters:
        one_line[i - 1], one_line[i] = one_line[i], one_line[i - 1]
    return Permutation(tuple(one_line))


def length(w: Permutation) -> int:
    """Inversion count."""
    vals = w.one_line
    return sum(1 for i in range(len(vals)) for j in range(i + 1, len(vals)) if vals[i] > vals[j])


def is_reduced(word: Word, n: Optional[int] = None) -> bool:
    letters = _letters_of(word)
    return length(perm_from_word(letters, n if n is not None else getattr(word, "n", None))) == len(letters)


def reduced_word(w: Permutation) -> ReducedWord:
    """Some reduced word for w, found by sorting away descents left to right."""
    vals = list(w.one_line)
    letters: list[int] = []
    i = 0
    while i < len(vals) - 1:
        if vals[i] > vals[i + 1]:
            vals[i], vals[i + 1] = vals[i + 1], vals[i]
            letters.append(i + 1)
            i = max(i - 1, 0)
        else:
            i += 1
    # w s_{j_1} ... s_{j_k} = e, hence w = s_{j_k} ... s_{j_1}
    return ReducedWord(tuple(reversed(letters)), w.n)


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n
    for i, v in enumerate(w.one_line, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def multiply(u: Permutation, w: Permutation) -> Permutation:
    """Composition u∘w (w applied first)."""
    if u.n != w.n:
        raise InvalidParam(f"cannot multiply elements of S_{u.n} and S_{w.n}")
    return Permutation(tuple(u(w(i)) for i in range(1, w.n + 1)))


def descents(w: Permutation) -> list[int]:
    return [i for i in range(1, w.n) if w(i) > w(i + 1)]


def _check_descent(d: int, n: int) -> None:
    if not 1 <= d <= n - 1:
        raise InvalidDescent(f"descent position d={d} must lie in [1, {n - 1}]")


def is_grassmannian(w: Permutation, d: int) -> bool:
    _check_descent(d, w.n)
    return set(descents(w)) <= {d}


def min_coset_rep(u: Permutation, d: int) -> Permutation:
    """Minimal length representative of u·W_P: sort both blocks of the one-line notation."""
    _check_descent(d, u.n)
    return Permutation(tuple(sorted(u.one_line[:d])) + tuple(sorted(u.one_line[d:])))


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Sorted-prefix (tableau) criterion."""
    if u.n != w.n:
        raise InvalidParam(f"Bruhat comparison across S_{u.n} and S_{w.n}")
    for k in range(1, u.n):
        uk = sorted(u.one_line[:k])
        wk = sorted(w.one_line[:k])
        if any(a > b for a, b in zip(uk, wk)):
            return False
    return True


def bruhat_interval_by_subwords(word: Word, n: Optional[int] = None) -> set[Permutation]:
    """
    Every permutation obtained from a subword of a reduced word of w, i.e. the interval
    [e, w]. Grown letter by letter so repeated products are only stored once.
    """
    letters = _letters_of(word)
    if n is None:
        n = word.n if isinstance(word, ReducedWord) else max(letters, default=0) + 1
    _check_letters(letters, n)
    seen = {tuple(range(1, n + 1))}
    for i in letters:
        grown = set(seen)
        for vals in seen:
            swapped = list(vals)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            grown.add(tuple(swapped))
        seen = grown
    return {Permutation(vals) for vals in seen}


def _shortlex_subsets(indices: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for k in range(len(indices) + 1):
        yield from combinations(indices, k)


def subwords(word: Word, n: Optional[int] = None) -> Iterator[tuple[tuple[int, ...], Permutation]]:
    """
    All 2^m subsets J of positions 1..m (shortlex order) with the permutation w(J).

    >>> [(J, str(u)) for J, u in subwords(ReducedWord((1, 2), 4))]
    [((), '1234'), ((1,), '2134'), ((2,), '1324'), ((1, 2), '2314')]
    """
    letters = _letters_of(word)
    if n is None:
        n = word.n if isinstance(word, ReducedWord) else max(letters, default=0) + 1
    for subset in _shortlex_subsets(range(1, len(letters) + 1)):
        yield subset, perm_from_word([letters[j - 1] for j in subset], n)


def coset_classes(word: ReducedWord, d: int) -> list[CosetClass]:
    """
    Group the subwords of a distinct-letter word by their W^P representative.

    Classes are ordered by (length, one-line) of the representative; members keep the
    shortlex order of `subwords`.
    """
    if not word.is_distinct:
        raise NotDistinctWord(f"word {word} repeats a simple reflection")
    _check_descent(d, word.n)
    grouped: dict[Permutation, list[tuple[int, ...]]] = {}
    for subset, u in subwords(word):
        grouped.setdefault(min_coset_rep(u, d), []).append(subset)
    reps = sorted(grouped, key=lambda v: (length(v), v.one_line))
    return [CosetClass(v, tuple(grouped[v])) for v in reps]


def _interval(lo: int, hi: int) -> list[int]:
    # [lo, hi] = ∅ when hi < lo; [a] = [1, a] = ∅ when a <= 0
    return list(range(lo, hi + 1)) if hi >= lo else []


def lifts_of_v_closed_form(d: int, a: int, b: int) -> frozenset[tuple[int, ...]]:
    """
    Closed form of the lift class [v] inside the subwords of w_d, for the Grassmannian
    v <= w_d with parameters (a, b); b = d stands for v = e.
    """
    if d < 1 or not 0 <= a <= d - 1 or not 0 <= b <= d:
        raise InvalidHookParams(f"need d >= 1, 0 <= a <= d-1, 0 <= b <= d; got d={d}, a={a}, b={b}")
    if b == d:
        return frozenset(_shortlex_subsets(_interval(1, 2 * d - 2)))
    fixed = _interval(a + 1, d - 1) + _interval(d + b, 2 * d - 1)
    free = _interval(1, a - 1) + _interval(d, d + b - 2)
    return frozenset(tuple(sorted(fixed + list(extra))) for extra in _shortlex_subsets(free))


def grassmannian_perms(d: int, n: int) -> list[Permutation]:
    """W^P for P = P_d, one permutation per d-subset of values in the first block."""
    _check_descent(d, n)
    out = []
    for first in combinations(range(1, n + 1), d):
        rest = tuple(v for v in range(1, n + 1) if v not in first)
        out.append(Permutation(first + rest))
    return out


def grassmannian_below(w: Permutation, d: int) -> list[Permutation]:
    return [v for v in grassmannian_perms(d, w.n) if bruhat_leq(v, w)]


def all_perms(n: int) -> Iterable[Permutation]:
    return (Permutation(p) for p in permutations(range(1, n + 1)))


__all__ = [
    "Permutation",
    "ReducedWord",
    "CosetClass",
    "perm_from_word",
    "length",
    "is_reduced",
    "reduced_word",
    "inverse",
    "multiply",
    "descents",
    "is_grassmannian",
    "min_coset_rep",
    "bruhat_leq",
    "bruhat_interval_by_subwords",
    "subwords",
    "coset_classes",
    "lifts_of_v_closed_form",
    "grassmannian_perms",
    "grassmannian_below",
    "all_perms",
]
