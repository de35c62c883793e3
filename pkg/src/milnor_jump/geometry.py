"""Exact lattice geometry for Newton polyhedra.

Everything here is computed over the integers or `fractions.Fraction`;
there is no floating point anywhere in the package.  The objects of
interest are finite sets of exponent vectors in the non-negative orthant,
the unbounded polyhedron obtained by translating the orthant to each point
(the Newton polyhedron), the compact facets of its lower boundary (the
Newton diagram), and the volume of the staircase region between the
origin and the diagram.

Facet enumeration is brute force on purpose: every subset of `dim` support
points spanning a hyperplane is tested against the whole support with
exact integer determinants.  Inputs are desk scale (dimension <= 6, tens
of points), so auditability wins over asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

from .errors import InvalidInput

LatticePoint = tuple[int, ...]

#: Facet enumeration is combinatorial in the ambient dimension, so the
#: public entry points refuse to work above this bound unless overridden.
DEFAULT_MAX_DIM = 6


def _validate_point(point: LatticePoint, dim: Optional[int] = None) -> LatticePoint:
    if not isinstance(point, tuple) or not point:
        raise InvalidInput(f"lattice point must be a non-empty tuple, got {point!r}")
    for c in point:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise InvalidInput(
                f"lattice point coordinates must be non-negative integers, got {point!r}"
            )
    if dim is not None and len(point) != dim:
        raise InvalidInput(f"dimension mismatch: expected {dim}, got {point!r}")
    return point


def _check_dim_guard(dim: int, max_dim: Optional[int]) -> None:
    if max_dim is not None and dim > max_dim:
        raise InvalidInput(
            f"ambient dimension {dim} exceeds the guard ({max_dim}); "
            "pass a larger max_dim to override"
        )


@dataclass(frozen=True)
class SupportSet:
    """Finite set of exponent vectors sharing one ambient dimension.

    `points` is kept sorted and duplicate free so support sets compare and
    hash by value.  An empty support (with an explicit dimension) is legal
    because coordinate-subspace restrictions can be empty; operations that
    need points check for themselves.
    """

    points: tuple[LatticePoint, ...]
    dim: int

    @classmethod
    def from_points(cls, points: Iterable[Iterable[int]], dim: Optional[int] = None) -> "SupportSet":
        pts = sorted(set(tuple(p) for p in points))
        if not pts and dim is None:
            raise InvalidInput("an empty support needs an explicit dimension")
        if dim is None:
            dim = len(pts[0])
        if not isinstance(dim, int) or dim < 1:
            raise InvalidInput(f"dimension must be a positive integer, got {dim!r}")
        for p in pts:
            _validate_point(p, dim)
        return cls(tuple(pts), dim)

    def with_point(self, point: Iterable[int]) -> "SupportSet":
        return SupportSet.from_points(self.points + (tuple(point),), self.dim)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class DiagramFacet:
    """A compact top-dimensional face of the Newton diagram.

    `normal` is the primitive integer inner normal, strictly positive in
    every coordinate; `vertices` lists every support point lying on the
    facet hyperplane `<normal, x> == offset`, not only the extreme ones.
    """

    vertices: tuple[LatticePoint, ...]
    normal: tuple[int, ...]
    offset: int


def _det(rows: list[list[int]]) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _dot(a: Iterable[int], b: Iterable[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _normal_through(points: tuple[LatticePoint, ...], dim: int) -> Optional[tuple[int, ...]]:
    """Integer normal of the hyperplane spanned by `dim` points, or None.

    Computed as the generalized cross product of the edge vectors; the
    result is zero exactly when the points are affinely dependent.
    """
    base = points[0]
    rows = [[p[j] - base[j] for j in range(dim)] for p in points[1:]]
    normal = []
    sign = 1
    for k in range(dim):
        minor = [[row[j] for j in range(dim) if j != k] for row in rows]
        normal.append(sign * _det(minor))
        sign = -sign
    if all(c == 0 for c in normal):
        return None
    g = 0
    for c in normal:
        g = gcd(g, c)
    return tuple(c // g for c in normal)


def _enumerate_facets(points, dim, lower_only):
    """All facet hyperplanes of conv(points), deduplicated.

    Each entry is (normal, offset, on_points) with every input point
    satisfying <normal, p> >= offset.  With `lower_only` the normal must
    be strictly positive (facets of the Newton diagram); otherwise any
    orientation is accepted but hyperplanes containing the whole input are
    skipped (they witness a degenerate, lower-dimensional hull).
    """
    pts = sorted(set(points))
    found = {}
    if len(pts) < dim:
        return []
    for subset in itertools.combinations(pts, dim):
        normal = _normal_through(subset, dim)
        if normal is None:
            continue
        offset = _dot(normal, subset[0])
        above = below = False
        for q in pts:
            v = _dot(normal, q) - offset
            if v > 0:
                above = True
            elif v < 0:
                below = True
        if above and below:
            continue
        if below:
            normal = tuple(-c for c in normal)
            offset = -offset
        elif not above:
            # every point on the hyperplane; orientation is free
            if lower_only:
                if all(c < 0 for c in normal):
                    normal = tuple(-c for c in normal)
                    offset = -offset
            else:
                continue
        if lower_only and not all(c > 0 for c in normal):
            continue
        key = (normal, offset)
        if key not in found:
            found[key] = tuple(q for q in pts if _dot(normal, q) == offset)
    return [(n, b, on) for (n, b), on in sorted(found.items())]


def simplex_normalized_volume(vertices: Iterable[Iterable[int]]) -> int:
    """d! times the Euclidean volume of the simplex on d+1 lattice points.

    Returns 0 exactly when the points are affinely dependent.
    """
    pts = [_validate_point(tuple(p)) for p in vertices]
    if not pts:
        raise InvalidInput("a simplex needs vertices")
    dim = len(pts[0])
    for p in pts:
        _validate_point(p, dim)
    if len(pts) != dim + 1:
        raise InvalidInput(
            f"a {dim}-dimensional simplex needs {dim + 1} vertices, got {len(pts)}"
        )
    base = pts[0]
    rows = [[p[j] - base[j] for j in range(dim)] for p in pts[1:]]
    return abs(_det(rows))


def lower_hull_facets(support: SupportSet, max_dim: Optional[int] = DEFAULT_MAX_DIM) -> list[DiagramFacet]:
    """The compact (dim-1)-dimensional faces of the Newton polyhedron.

    A facet is a hyperplane with strictly positive primitive normal that
    supports the whole point set from below and touches it in a set of
    affine dimension dim-1.  The list may be empty, e.g. for a single
    point in dimension >= 2.
    """
    _check_dim_guard(support.dim, max_dim)
    return [
        DiagramFacet(vertices=on, normal=normal, offset=offset)
        for normal, offset, on in _enumerate_facets(support.points, support.dim, lower_only=True)
    ]


def _solve_square(matrix, rhs):
    """Exact solution of a square Fraction system, or None when singular."""
    n = len(matrix)
    a = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _convex_domination_feasible(points, q, dim):
    """Is there a convex combination of `points` dominated coordinatewise by q?

    Feasibility of {c >= 0, sum c = 1, sum c_j p_j + t = q, t >= 0} is
    decided exactly by enumerating basic solutions of the standard form,
    which is complete because the feasible set is pointed.
    """
    pts = list(points)
    m = len(pts)
    nrows = dim + 1
    cols = []
    for j in range(m):
        cols.append([Fraction(pts[j][i]) for i in range(dim)] + [Fraction(1)])
    for i in range(dim):
        col = [Fraction(0)] * nrows
        col[i] = Fraction(1)
        cols.append(col)
    rhs = [Fraction(q[i]) for i in range(dim)] + [Fraction(1)]
    for basis in itertools.combinations(range(m + dim), nrows):
        sol = _solve_square([[cols[b][r] for b in basis] for r in range(nrows)], rhs)
        if sol is not None and all(x >= 0 for x in sol):
            return True
    return False


def _axis_simplex_exponents(points, dim):
    """Exponent tuple when the support is exactly one pure power per axis."""
    if len(points) != dim:
        return None
    exps = [0] * dim
    for p in points:
        nz = [j for j, c in enumerate(p) if c != 0]
        if len(nz) != 1:
            return None
        j = nz[0]
        if exps[j]:
            return None
        exps[j] = p[j]
    return tuple(exps)


def gamma_plus_contains(support: SupportSet, point: Iterable[int]) -> bool:
    """Exact membership of a lattice point in the Newton polyhedron.

    For a one-pure-power-per-axis support the closed form
    sum(q_k / p_k) >= 1 is used; otherwise membership is decided by exact
    rational feasibility of the convex-combination system.
    """
    if not support.points:
        raise InvalidInput("membership query needs a non-empty support")
    q = _validate_point(tuple(point), support.dim)
    exps = _axis_simplex_exponents(support.points, support.dim)
    if exps is not None:
        return sum(Fraction(qk, pk) for qk, pk in zip(q, exps)) >= 1
    return _convex_domination_feasible(support.points, q, support.dim)


@lru_cache(maxsize=None)
def _hull_volume(points: tuple[LatticePoint, ...], dim: int) -> Fraction:
    """Volume of the convex hull of integer points (0 when degenerate).

    Pyramid decomposition from the first point: for every facet not
    containing it, the pyramid volume is height * base / dim, where the
    base volume is obtained by projecting the facet along a coordinate
    with nonzero normal entry (an affine bijection on the hyperplane with
    rational scaling factor |normal| / |normal_k|, so no radicals appear).
    """
    if dim == 1:
        xs = [p[0] for p in points]
        return Fraction(max(xs) - min(xs))
    apex = points[0]
    total = Fraction(0)
    for normal, offset, on in _enumerate_facets(points, dim, lower_only=False):
        height = _dot(normal, apex) - offset
        if height == 0:
            continue
        k = max(range(dim), key=lambda j: abs(normal[j]))
        projected = tuple(sorted(p[:k] + p[k + 1 :] for p in on))
        total += Fraction(height, dim * abs(normal[k])) * _hull_volume(projected, dim - 1)
    return total


def is_convenient_points(points, dim) -> bool:
    """True when every coordinate axis carries a pure power point."""
    seen = [False] * dim
    for p in points:
        nz = [j for j, c in enumerate(p) if c != 0]
        if len(nz) == 1:
            seen[nz[0]] = True
    return all(seen)


@lru_cache(maxsize=None)
def _volume_under(points: tuple[LatticePoint, ...], dim: int) -> Fraction:
    origin = (0,) * dim
    total = Fraction(0)
    for normal, offset, on in _enumerate_facets(points, dim, lower_only=True):
        pyramid = tuple(sorted(set((origin,) + on)))
        total += _hull_volume(pyramid, dim)
    return total


def volume_under_diagram(support: SupportSet, max_dim: Optional[int] = DEFAULT_MAX_DIM) -> Fraction:
    """Volume of the orthant region cut off below the Newton diagram.

    The region is star shaped from the origin (the polyhedron absorbs the
    positive orthant), so it decomposes into cones over the diagram facets
    with pairwise disjoint interiors; the result is the exact sum of their
    volumes.  Requires a convenient support, otherwise the region would be
    unbounded.
    """
    _check_dim_guard(support.dim, max_dim)
    if not is_convenient_points(support.points, support.dim):
        raise InvalidInput("volume under the diagram needs a convenient support")
    return _volume_under(support.points, support.dim)
