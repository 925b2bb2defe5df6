"""
Exact lattice and polyhedral cone primitives over Z^m.

Vectors are plain tuples: `LatticeVector` holds ints, `RationalVector` holds Fractions.
Cones are stored with both descriptions; the inequality description is computed once by
cdd (pycddlib, double description in exact rational arithmetic) and cached on the frozen
`Cone`. Linear algebra around it is sympy.

Nothing in here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm, prod
from typing import Iterable, Optional, Sequence, Union

import cdd
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .config import MAX_DD_DIM
from .errors import DeskScaleExceeded, DimensionMismatch, NotPointed, ZeroVector

LatticeVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]
Number = Union[int, Fraction]

NUMBER_TYPE = "fraction"


def primitive(v: Iterable[int]) -> LatticeVector:
    coords = tuple(int(x) for x in v)
    g = reduce(gcd, coords, 0)
    if g == 0:
        raise ZeroVector(f"zero vector {list(coords)} has no primitive generator")
    return tuple(x // g for x in coords)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    if len(u) != len(v):
        raise DimensionMismatch(f"pairing vectors of dimension {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def negate(v: Sequence[int]) -> LatticeVector:
    return tuple(-x for x in v)


def vector_sum(vectors: Iterable[Sequence[int]], dim: int) -> LatticeVector:
    total = [0] * dim
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatch(f"adding a vector of dimension {len(v)} in dimension {dim}")
        for i, x in enumerate(v):
            total[i] += x
    return tuple(total)


def _exact(x: Number) -> sympy.Rational:
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Integer(int(x))


def _matrix(rows: Sequence[Sequence[Number]], dim: int) -> sympy.Matrix:
    return sympy.Matrix(len(rows), dim, [_exact(x) for row in rows for x in row])


def _to_fraction(x: sympy.Rational) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def rank(rows: Sequence[Sequence[int]], dim: Optional[int] = None) -> int:
    if not rows:
        return 0
    dim = dim if dim is not None else len(rows[0])
    if any(len(r) != dim for r in rows):
        raise DimensionMismatch(f"rank of rows that are not all of dimension {dim}")
    return DomainMatrix.from_list([[int(x) for x in r] for r in rows], ZZ).to_field().rank()


def determinant(rows: Sequence[Sequence[int]]) -> int:
    if len(rows) != (len(rows[0]) if rows else 0):
        raise DimensionMismatch(f"determinant of a non-square {len(rows)}-row matrix")
    if not rows:
        return 1
    return int(_matrix(rows, len(rows)).det())


def _integral(row: Iterable[Number]) -> LatticeVector:
    """Primitive integer multiple of a rational row."""
    fracs = [Fraction(x) for x in row]
    scale = lcm(*(x.denominator for x in fracs))
    return primitive(int(x * scale) for x in fracs)


def solve_exact(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[RationalVector]:
    """
    A solution of A·m = b over Q, or None when the system is inconsistent.

    Row reduction is sympy's exact rref; free variables are set to 0.
    """
    if len(A) != len(b):
        raise DimensionMismatch(f"{len(A)} equations but {len(b)} right-hand sides")
    dim = len(A[0]) if A else 0
    if dim == 0:
        return () if all(x == 0 for x in b) else None
    augmented = _matrix(A, dim).row_join(_matrix([[x] for x in b], 1))
    reduced, pivots = augmented.rref()
    if dim in pivots:
        return None
    solution = [Fraction(0)] * dim
    for row, col in enumerate(pivots):
        solution[col] = _to_fraction(reduced[row, dim])
    return tuple(solution)


def _check_dd_dim(dim: int) -> None:
    if dim > MAX_DD_DIM:
        raise DeskScaleExceeded(f"double description is capped at dimension {MAX_DD_DIM}, got {dim}")


def _cdd_generators(gens: Sequence[LatticeVector], dim: int) -> cdd.Matrix:
    # row 0 is the apex; rays follow in the order of `gens`
    rows = [[1] + [0] * dim] + [[0] + list(g) for g in gens]
    mat = cdd.Matrix(rows, number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.GENERATOR
    return mat


def _cdd_inequalities(rows: Sequence[LatticeVector]) -> cdd.Matrix:
    mat = cdd.Matrix([[0] + list(a) for a in rows], number_type=NUMBER_TYPE)
    mat.rep_type = cdd.RepType.INEQUALITY
    return mat


def extreme_rays(inequalities: Sequence[Sequence[int]], dim: int) -> list[LatticeVector]:
    """
    Extreme rays of the cone {x : <a, x> >= 0 for every row a}, computed by cdd.

    Raises NotPointed when the cone has a lineality space.
    """
    _check_dd_dim(dim)
    if dim == 0:
        return []
    rows = [tuple(int(x) for x in a) for a in inequalities]
    if any(len(a) != dim for a in rows):
        raise DimensionMismatch(f"inequality rows must have dimension {dim}")
    r = rank(rows, dim)
    if r < dim:
        raise NotPointed(f"inequalities of rank {r} cut out a cone with lineality in dimension {dim}")
    out = cdd.Polyhedron(_cdd_inequalities(rows)).get_generators()
    if out.lin_set:
        raise NotPointed(f"cone in dimension {dim} has {len(out.lin_set)} lineality generators")
    rays = {_integral(out[i][1:]) for i in range(out.row_size) if out[i][0] == 0 and any(out[i][1:])}
    return sorted(rays)


def _infer_dim(generators: Sequence[Sequence[int]], dim: Optional[int]) -> int:
    if dim is not None:
        if any(len(g) != dim for g in generators):
            raise DimensionMismatch(f"generators must have dimension {dim}")
        return dim
    if not generators:
        raise DimensionMismatch("ambient dimension of an empty generator list is unknown")
    dims = {len(g) for g in generators}
    if len(dims) != 1:
        raise DimensionMismatch(f"generators of mixed dimensions {sorted(dims)}")
    return dims.pop()


def _canonical_generators(generators: Iterable[Sequence[int]]) -> list[LatticeVector]:
    return sorted({primitive(g) for g in generators})


def _row_space_basis(rows: Sequence[Sequence[Number]], dim: int) -> list[LatticeVector]:
    # the reduced row echelon form is unique, so the basis does not depend on cdd's row order
    if not rows:
        return []
    reduced, pivots = _matrix(rows, dim).rref()
    return sorted(_integral(_to_fraction(reduced[i, j]) for j in range(dim)) for i in range(len(pivots)))


def _project(h: LatticeVector, equations: Sequence[LatticeVector], dim: int) -> LatticeVector:
    """Primitive normal of h after removing its component along the equations."""
    if not equations:
        return h
    E = _matrix(equations, dim)
    v = _matrix([h], dim).T
    projected = v - E.T * (E * E.T).inv() * (E * v)
    return _integral(_to_fraction(x) for x in projected)


def _facets_and_equations(
    gens: list[LatticeVector], dim: int
) -> tuple[list[LatticeVector], list[LatticeVector], list[frozenset[int]]]:
    """
    Facet normals inside the span of gens, the span's equations, and for every facet the
    indices into gens of the generators lying on it.
    """
    _check_dd_dim(dim)
    if not gens:
        return [], [tuple(int(i == j) for j in range(dim)) for i in range(dim)], []
    poly = cdd.Polyhedron(_cdd_generators(gens, dim))
    hrep = poly.get_inequalities()
    incidence = poly.get_incidence()
    linear = set(hrep.lin_set)
    equations = _row_space_basis([hrep[i][1:] for i in sorted(linear)], dim)
    on_facet: dict[LatticeVector, frozenset[int]] = {}
    for i in range(hrep.row_size):
        a = hrep[i][1:]
        if i in linear or not any(a):
            continue
        h = _project(_integral(a), equations, dim)
        on_facet[h] = frozenset(j - 1 for j in incidence[i] if j > 0)
    facets = sorted(on_facet)
    if rank(facets + equations, dim) < dim:
        raise NotPointed(f"cone on {[list(g) for g in gens]} contains a line")
    return facets, equations, [on_facet[h] for h in facets]


def _reduce(generators: Sequence[Sequence[int]], dim: Optional[int]):
    dim = _infer_dim(generators, dim)
    gens = _canonical_generators(generators)
    facets, equations, incidence = _facets_and_equations(gens, dim)
    keep = []
    for i in range(len(gens)):
        tight = [h for h, on in zip(facets, incidence) if i in on] + equations
        if rank(tight, dim) == dim - 1:
            keep.append(i)
    renumber = {old: new for new, old in enumerate(keep)}
    incidence = [frozenset(renumber[i] for i in on if i in renumber) for on in incidence]
    return [gens[i] for i in keep], facets, equations, incidence, dim


def dd_hrep(generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> list[LatticeVector]:
    """
    Inward normals describing cone(generators): the facets inside the linear span, then the
    span's defining equations, each stored as a pair of opposite inequalities.

    >>> dd_hrep([(1, 0)])
    [(1, 0), (0, 1), (0, -1)]
    """
    dim = _infer_dim(generators, dim)
    facets, equations, _ = _facets_and_equations(_canonical_generators(generators), dim)
    return facets + [e for eq in equations for e in (eq, negate(eq))]


def vrep(hrep: Sequence[Sequence[int]], dim: int) -> list[LatticeVector]:
    """Extreme rays of {x : <h, x> >= 0}; inverts `dd_hrep` on pointed cones."""
    return extreme_rays(hrep, dim)


def extremal_generators(generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> list[LatticeVector]:
    """Primitive, deduplicated generators that span an extreme ray of their cone."""
    keep, _, _, _, _ = _reduce(generators, dim)
    return keep


@dataclass(frozen=True)
class Cone:
    generators: tuple[LatticeVector, ...]
    dim_ambient: int
    facets: tuple[LatticeVector, ...] = ()
    equations: tuple[LatticeVector, ...] = ()
    # per facet, the indices of the generators on it
    incidence: tuple[frozenset[int], ...] = ()

    @classmethod
    def of(cls, generators: Sequence[Sequence[int]], dim: Optional[int] = None) -> "Cone":
        keep, facets, equations, incidence, dim = _reduce(generators, dim)
        return cls(tuple(keep), dim, tuple(facets), tuple(equations), tuple(incidence))

    @property
    def hrep(self) -> tuple[LatticeVector, ...]:
        return self.facets + tuple(e for eq in self.equations for e in (eq, negate(eq)))

    @property
    def dim(self) -> int:
        return self.dim_ambient - len(self.equations)

    def is_full_dimensional(self) -> bool:
        return not self.equations


def cone_contains(c: Cone, p: Sequence[Number]) -> bool:
    if len(p) != c.dim_ambient:
        raise DimensionMismatch(f"point of dimension {len(p)} tested against a cone in dimension {c.dim_ambient}")
    return all(dot(h, p) >= 0 for h in c.hrep)


def is_simplicial(c: Cone) -> bool:
    return len(c.generators) == rank(c.generators, c.dim_ambient)


def is_unimodular(c: Cone) -> bool:
    return (
        is_simplicial(c)
        and len(c.generators) == c.dim_ambient
        and abs(determinant(c.generators)) == 1
    )


def triangulate(c: Cone) -> list[tuple[LatticeVector, ...]]:
    """
    Pulling triangulation from the first generator: cone over each facet missing it, with
    the facet's generators read from cdd's incidence. Uses only generators of c.
    """
    if is_simplicial(c):
        return [c.generators]
    apex = c.generators[0]
    simplices = []
    for on in c.incidence:
        if 0 in on:
            continue
        face = Cone.of([c.generators[i] for i in sorted(on)], c.dim_ambient)
        simplices.extend(simplex + (apex,) for simplex in triangulate(face))
    return simplices


def grading(c: Cone) -> LatticeVector:
    """Sum of the facet normals; strictly positive on a full-dimensional pointed cone minus 0."""
    return vector_sum(c.facets, c.dim_ambient)


def simplex_volume(simplex: Sequence[LatticeVector], g: Sequence[int]) -> Fraction:
    """Volume of {x in cone(simplex) : <g, x> <= 1}, times m!."""
    return Fraction(abs(determinant(list(simplex))), prod(dot(g, u) for u in simplex))


def cone_volume(c: Cone, g: Optional[Sequence[int]] = None) -> Fraction:
    if not c.is_full_dimensional():
        return Fraction(0)
    g = g if g is not None else grading(c)
    return sum((simplex_volume(s, g) for s in triangulate(c)), Fraction(0))


__all__ = [
    "LatticeVector",
    "RationalVector",
    "primitive",
    "dot",
    "negate",
    "vector_sum",
    "rank",
    "determinant",
    "solve_exact",
    "extreme_rays",
    "dd_hrep",
    "vrep",
    "extremal_generators",
    "Cone",
    "cone_contains",
    "is_simplicial",
    "is_unimodular",
    "triangulate",
    "grading",
    "simplex_volume",
    "cone_volume",
]
