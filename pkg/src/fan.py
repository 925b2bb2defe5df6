"""
Fans of toric Schubert varieties and the anticanonical Cartier checks run on them.

`flag_fan` builds the fan of X_w^B in G/B from a distinct-letter reduced word. The
Grassmannian fan of X_w in Gr(d, n) is obtained from it by merging the flag cones whose
labels project to the same coset (`grassmannian_fan`); `wd_fan` writes the same fan down
directly for w_d from its five families of maximal cones.

All fans of one w live in Z^m, m = l(w), with the v-block of the flag rays as basis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .classify import is_toric, toric_word, wd_fixed_point, wd_word
from .config import DEFAULT_SAMPLES, DEFAULT_SEED, log
from .errors import (
    DegenerateCone,
    InvalidParam,
    MismatchedData,
    NotDistinctWord,
    NotGorenstein,
    NotToric,
    NotUnimodularPiece,
)
from .lattice import (
    Cone,
    LatticeVector,
    RationalVector,
    cone_contains,
    cone_volume,
    determinant,
    dot,
    extremal_generators,
    grading,
    is_unimodular,
    negate,
    primitive,
    rank,
    simplex_volume,
    solve_exact,
    vector_sum,
)
from .partition import is_hook, lambda_of
from .weyl import Permutation, ReducedWord, coset_classes, length, subwords

SPACES = ("flag", "grassmannian", "custom")


@dataclass(frozen=True)
class Fan:
    ambient_dim: int
    rays: tuple[LatticeVector, ...]
    max_cones: tuple[tuple[int, ...], ...]
    labels: tuple[Permutation, ...] = ()
    space: str = "custom"
    ray_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.space not in SPACES:
            raise InvalidParam(f"unknown fan space {self.space!r}")
        if any(len(r) != self.ambient_dim for r in self.rays):
            raise InvalidParam(f"every ray must live in dimension {self.ambient_dim}")
        if len(set(self.rays)) != len(self.rays):
            raise InvalidParam("fan rays must be pairwise distinct")
        for r in self.rays:
            if primitive(r) != r:
                raise InvalidParam(f"ray {list(r)} is not primitive")
        used = {i for cone in self.max_cones for i in cone}
        if not used <= set(range(len(self.rays))):
            raise InvalidParam("maximal cone refers to a missing ray")
        if used != set(range(len(self.rays))):
            raise InvalidParam("every ray must lie in some maximal cone")
        index_sets = [set(cone) for cone in self.max_cones]
        for a, b in combinations(index_sets, 2):
            if a <= b or b <= a:
                raise InvalidParam("a maximal cone contains another")
        if self.labels and len(self.labels) != len(self.max_cones):
            raise InvalidParam("one label per maximal cone")
        for k in range(len(self.max_cones)):
            rows = self.cone_rays(k)
            # independent rays span a pointed cone; anything else goes through cdd
            if rank(rows, self.ambient_dim) != len(rows):
                Cone.of(rows, self.ambient_dim)

    def cone_rays(self, k: int) -> list[LatticeVector]:
        return [self.rays[i] for i in self.max_cones[k]]

    @cached_property
    def cones(self) -> tuple[Cone, ...]:
        return tuple(Cone.of(self.cone_rays(k), self.ambient_dim) for k in range(len(self.max_cones)))

    def named(self) -> dict[str, LatticeVector]:
        return dict(zip(self.ray_names, self.rays))


@dataclass(frozen=True)
class CartierData:
    """m_sigma per maximal cone solving <m_sigma, u_rho> = -1 on the rays of sigma."""

    per_cone_m: tuple[Optional[RationalVector], ...]
    is_integral: bool
    is_fano: Optional[bool] = None
    failing_cone: Optional[int] = None
    reason: Optional[str] = None


def _as_reduced_word(word, n: Optional[int] = None) -> ReducedWord:
    if isinstance(word, ReducedWord):
        return word
    letters = tuple(int(i) for i in word)
    return ReducedWord(letters, n if n is not None else max(letters, default=0) + 1)


def _cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def flag_fan(word, n: Optional[int] = None) -> Fan:
    """
    Rays v_1..v_m (standard basis) and w_1..w_m, where w_k has -1 in row k and
    -c_{i_j, i_k} in row j > k. One maximal cone per subset J of positions:
    {v_i : i not in J} with {w_i : i in J}, labelled by the subword permutation.
    """
    word = _as_reduced_word(word, n)
    if not word.is_distinct:
        raise NotDistinctWord(f"word {word} repeats a simple reflection; X_w is not toric")
    letters = word.letters
    m = len(letters)
    v_block = [tuple(int(r == k) for r in range(m)) for k in range(m)]
    w_block = []
    for k in range(m):
        column = [0] * m
        column[k] = -1
        for j in range(k + 1, m):
            column[j] = -_cartan(letters[j], letters[k])
        w_block.append(tuple(column))

    cones, labels = [], []
    for subset, u in subwords(word):
        chosen = set(subset)
        cone = [i - 1 for i in range(1, m + 1) if i not in chosen] + [m + i - 1 for i in subset]
        cones.append(tuple(sorted(cone)))
        labels.append(u)
    names = tuple(f"v{i}" for i in range(1, m + 1)) + tuple(f"w{i}" for i in range(1, m + 1))
    return Fan(m, tuple(v_block + w_block), tuple(cones), tuple(labels), "flag", names)


def canonical_toric_word(w: Permutation, d: int, n: int) -> ReducedWord:
    """The word of the hook of w (the empty word for w = e) whose flag fan gets merged."""
    if w.n != n:
        raise InvalidParam(f"{w} is not an element of S_{n}")
    if not is_toric(w, d, n):
        raise NotToric(f"X_{w} in Gr({d},{n}) is not toric: partition ({lambda_of(w, d)}) is not a hook")
    if w.is_identity():
        return ReducedWord((), n)
    x, y = is_hook(lambda_of(w, d))
    word = toric_word(x, y, d, n)
    if word.perm() != w:
        raise MismatchedData(f"canonical toric word {word} does not multiply to {w}")
    return word


def grassmannian_fan(w: Permutation, d: int, n: int) -> Fan:
    """
    Merge the flag cones of the canonical toric word of w along the coset classes; each
    merged cone keeps only the extremal rays of the union of its pieces' rays.
    """
    word = canonical_toric_word(w, d, n)
    if w.is_identity():
        return Fan(0, (), ((),), (w,), "grassmannian")

    flag = flag_fan(word)
    position = {subset: k for k, (subset, _) in enumerate(subwords(word))}
    merged: list[set[int]] = []
    labels = []
    for cls in coset_classes(word, d):
        union = sorted({i for subset in cls.members for i in flag.max_cones[position[subset]]})
        keep = set(extremal_generators([flag.rays[i] for i in union], flag.ambient_dim))
        merged.append({i for i in union if flag.rays[i] in keep})
        labels.append(cls.representative)

    used = sorted(set().union(*merged))
    renumber = {old: new for new, old in enumerate(used)}
    log("fan", f"Gr({d},{n}) w={w}: merged {len(flag.max_cones)} flag cones into {len(merged)}, {len(used)} rays")
    return Fan(
        flag.ambient_dim,
        tuple(flag.rays[i] for i in used),
        tuple(tuple(sorted(renumber[i] for i in cone)) for cone in merged),
        tuple(labels),
        "grassmannian",
        tuple(flag.ray_names[i] for i in used),
    )


def _wd_cone_names(d: int, a: int, b: int) -> list[str]:
    if b == d:
        return sorted({"v1", f"v{d}"}) + [f"w{i}" for i in range(1, 2 * d - 1)]
    skipped = set()
    names = []
    if a >= 1:
        names.append("v1")
        skipped.add(a)
    if b >= 1:
        names.append(f"v{d}")
        skipped.add(d + b - 1)
    return names + [f"w{i}" for i in range(1, 2 * d) if i not in skipped]


def wd_fixed_points(d: int) -> list[tuple[int, int]]:
    """Parameters (a, b) of the Grassmannian v <= w_d; (0, d) stands for v = e."""
    return [(a, b) for a in range(d) for b in range(d)] + [(0, d)]


def wd_fan(d: int) -> Fan:
    """
    The fan of X_{w_d} in Gr(d, 2d), written down family by family: rays v_1, v_d and
    w_1..w_{2d-1} of the flag fan, and one maximal cone per Grassmannian v <= w_d.
    """
    if d < 1:
        raise InvalidParam(f"w_d needs d >= 1, got d={d}")
    named = flag_fan(wd_word(d)).named()
    ray_names = ["v1"] + ([f"v{d}"] if d > 1 else []) + [f"w{i}" for i in range(1, 2 * d)]
    index = {name: k for k, name in enumerate(ray_names)}

    entries = []
    for a, b in wd_fixed_points(d):
        v = wd_fixed_point(d, a, b).perm()
        cone = tuple(sorted({index[name] for name in _wd_cone_names(d, a, b)}))
        entries.append((length(v), v.one_line, v, cone))
    entries.sort(key=lambda e: (e[0], e[1]))
    return Fan(
        2 * d - 1,
        tuple(named[name] for name in ray_names),
        tuple(e[3] for e in entries),
        tuple(e[2] for e in entries),
        "grassmannian",
        tuple(ray_names),
    )


def wd_cone_union_generators(d: int, a: int, b: int) -> list[str]:
    """
    Ray names of the union of the flag cones over the lift class of v(a, b), before
    reducing to extremal rays.
    """
    if b == d:
        return [f"v{i}" for i in range(1, 2 * d)] + [f"w{i}" for i in range(1, 2 * d - 1)]
    v_part = list(range(1, a + 1)) + list(range(d, d + b))
    w_part = (
        list(range(1, a))
        + list(range(a + 1, d))
        + list(range(d, d + b - 1))
        + list(range(d + b, 2 * d))
    )
    return [f"v{i}" for i in v_part] + [f"w{i}" for i in w_part]


def reduced_wd_cone(d: int, a: int, b: int) -> list[str]:
    """Names of the extremal rays among `wd_cone_union_generators`, in the same order."""
    named = flag_fan(wd_word(d)).named()
    names = wd_cone_union_generators(d, a, b)
    keep = set(extremal_generators([named[x] for x in names], 2 * d - 1))
    return [x for x in names if named[x] in keep]


def verify_ray_relations(d: int) -> bool:
    """
    v_i + w_i = v_{i+1} for i != d-1, 2d-1; v_{d-1} + w_{d-1} = v_{2d-1};
    v_{2d-1} + w_{2d-1} = 0.
    """
    if d < 2:
        raise InvalidParam(f"ray relations need d >= 2, got d={d}")
    m = 2 * d - 1
    named = flag_fan(wd_word(d)).named()
    v = {i: named[f"v{i}"] for i in range(1, m + 1)}
    w = {i: named[f"w{i}"] for i in range(1, m + 1)}
    for i in range(1, m):
        if i == d - 1:
            continue
        if vector_sum([v[i], w[i]], m) != v[i + 1]:
            return False
    if vector_sum([v[d - 1], w[d - 1]], m) != v[m]:
        return False
    return vector_sum([v[m], w[m]], m) == (0,) * m


def negative_sum_identities(d: int) -> list[tuple[str, list[str]]]:
    """
    (ray, summands) with ray = -(sum of summands): each ray outside a maximal cone of
    wd_fan(d), written through rays of that cone.
    """
    if d < 2:
        raise InvalidParam(f"negative sums need d >= 2, got d={d}")
    top = f"w{2 * d - 1}"
    out = [
        (f"v{d}", [f"w{i}" for i in range(d, 2 * d)]),
        ("v1", [f"w{i}" for i in range(1, d)] + [top]),
        (top, ["v1"] + [f"w{i}" for i in range(1, d)]),
    ]
    for a in range(1, d):
        out.append((f"w{a}", ["v1"] + [f"w{i}" for i in range(1, d) if i != a] + [top]))
    for b in range(1, d):
        k = d + b - 1
        out.append((f"w{k}", [f"v{d}"] + [f"w{i}" for i in range(d, 2 * d) if i != k]))
    return out


def verify_negative_sums(d: int) -> bool:
    f = wd_fan(d)
    named = f.named()
    for ray, summands in negative_sum_identities(d):
        if named[ray] != negate(vector_sum((named[x] for x in summands), f.ambient_dim)):
            return False
    return True


def solve_cartier(f: Fan) -> CartierData:
    """
    Solve <m, u> = -1 over the rays of every maximal cone. Never raises on a bad system:
    the first inconsistent or non-integral cone is recorded in `failing_cone`.
    """
    per_cone = []
    failing, reason = None, None
    for k in range(len(f.max_cones)):
        rows = f.cone_rays(k)
        if rank(rows, f.ambient_dim) != f.ambient_dim:
            raise DegenerateCone(f"maximal cone {k} is not full-dimensional in dimension {f.ambient_dim}")
        m = solve_exact(rows, [-1] * len(rows))
        if m is None:
            per_cone.append(None)
            if failing is None:
                failing, reason = k, "inconsistent"
            continue
        if any(x.denominator != 1 for x in m) and failing is None:
            failing, reason = k, "non-integral"
        per_cone.append(m)
    return CartierData(tuple(per_cone), failing is None, None, failing, reason)


def anticanonical_cartier(f: Fan) -> CartierData:
    data = solve_cartier(f)
    if not data.is_integral:
        raise NotGorenstein(data.failing_cone, data.reason)
    return data


def fano_violations(f: Fan, c: CartierData) -> list[tuple[int, int, Fraction]]:
    """(cone, ray, <m_sigma, u_rho>) for every ray outside a cone with pairing <= -1."""
    if len(c.per_cone_m) != len(f.max_cones) or not c.is_integral:
        raise MismatchedData("Cartier data does not belong to this fan or is not integral")
    out = []
    for k, cone in enumerate(f.max_cones):
        m = c.per_cone_m[k]
        if m is None or len(m) != f.ambient_dim:
            raise MismatchedData(f"no Cartier functional for maximal cone {k}")
        members = set(cone)
        for i, u in enumerate(f.rays):
            value = dot(m, u)
            if i in members:
                if value != -1:
                    raise MismatchedData(f"<m_{k}, u_{i}> = {value}, expected -1")
            elif value <= -1:
                out.append((k, i, Fraction(value)))
    return out


def is_fano(f: Fan, c: CartierData) -> bool:
    return not fano_violations(f, c)


def with_fano_verdict(f: Fan, c: CartierData) -> CartierData:
    """c with `is_fano` filled in; non-integral data comes back unchanged."""
    if not c.is_integral:
        return c
    return replace(c, is_fano=is_fano(f, c))


def is_complete_sampled(f: Fan, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> bool:
    """Every one of `samples` seeded integer points of [-1000, 1000]^m lies in a maximal cone."""
    if samples < 1:
        raise InvalidParam(f"samples must be at least 1, got {samples}")
    if seed < 0:
        raise InvalidParam(f"seed must be non-negative, got {seed}")
    if f.ambient_dim == 0:
        return True
    rng = np.random.default_rng(seed)
    points = rng.integers(-1000, 1001, size=(samples, f.ambient_dim), dtype=np.int64)
    covered = np.zeros(samples, dtype=bool)
    for cone in f.cones:
        normals = np.array(cone.hrep, dtype=np.int64).reshape(-1, f.ambient_dim)
        covered |= np.all(points @ normals.T >= 0, axis=1)
    return bool(covered.all())


def is_projective_space_fan(f: Fan) -> Optional[int]:
    """l when f is the fan of P^l: l+1 rays summing to 0, l of them a basis, all l-subsets as cones."""
    ell = f.ambient_dim
    if ell < 1 or len(f.rays) != ell + 1:
        return None
    expected = {tuple(c) for c in combinations(range(ell + 1), ell)}
    if {tuple(c) for c in f.max_cones} != expected or len(f.max_cones) != len(expected):
        return None
    for i in range(ell + 1):
        others = [r for k, r in enumerate(f.rays) if k != i]
        if abs(determinant(others)) == 1 and f.rays[i] == negate(vector_sum(others, ell)):
            return ell
    return None


def cone_union_equals(merged: Cone, pieces: Sequence[Cone]) -> bool:
    """
    Certify merged = union of pieces for interior-disjoint unimodular pieces: mutual
    containment of generators plus equal volume of the slice cut by one grading.
    """
    for piece in pieces:
        if not is_unimodular(piece):
            raise NotUnimodularPiece(f"piece on {[list(g) for g in piece.generators]} is not unimodular")
    if not merged.is_full_dimensional():
        return False
    if not all(cone_contains(merged, g) for piece in pieces for g in piece.generators):
        return False
    if not all(any(cone_contains(piece, g) for piece in pieces) for g in merged.generators):
        return False
    g = grading(merged)
    return sum((simplex_volume(p.generators, g) for p in pieces), Fraction(0)) == cone_volume(merged, g)


__all__ = [
    "SPACES",
    "Fan",
    "CartierData",
    "flag_fan",
    "canonical_toric_word",
    "grassmannian_fan",
    "wd_fixed_points",
    "wd_fan",
    "wd_cone_union_generators",
    "reduced_wd_cone",
    "verify_ray_relations",
    "negative_sum_identities",
    "verify_negative_sums",
    "solve_cartier",
    "anticanonical_cartier",
    "fano_violations",
    "is_fano",
    "with_fano_verdict",
    "is_complete_sampled",
    "is_projective_space_fan",
    "cone_union_equals",
]
