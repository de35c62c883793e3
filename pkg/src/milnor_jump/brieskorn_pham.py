"""Brieskorn-Pham singularities and their lattice combinatorics.

A Brieskorn-Pham singularity is a sum of pure powers, one per variable,
every exponent at least 2.  Its Newton diagram is the single simplex face
through the axis points, which makes all the geometry of this package
available in closed form and is why the jump algorithm takes exponent
tuples as input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable

from .errors import InvalidInput
from .geometry import LatticePoint, SupportSet


@dataclass(frozen=True)
class BrieskornPham:
    """Exponent tuple (p_1, ..., p_n) with n >= 1 and every p_k >= 2."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if not self.exponents:
            raise InvalidInput("need at least one exponent")
        for p in self.exponents:
            if not isinstance(p, int) or isinstance(p, bool) or p < 2:
                raise InvalidInput(f"exponents must be integers >= 2, got {self.exponents!r}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    def milnor_number(self) -> int:
        """Product of (p_k - 1) over all variables."""
        return prod(p - 1 for p in self.exponents)

    def support(self) -> SupportSet:
        """The axis points p_k * e_k."""
        pts = []
        for k, p in enumerate(self.exponents):
            point = [0] * self.n
            point[k] = p
            pts.append(tuple(point))
        return SupportSet.from_points(pts, self.n)

    def truncate(self, k: int) -> "BrieskornPham":
        """Drop variable k (1-based); needs at least two variables."""
        if self.n < 2:
            raise InvalidInput("cannot truncate a one-variable singularity")
        if not 1 <= k <= self.n:
            raise InvalidInput(f"axis {k} out of range 1..{self.n}")
        return BrieskornPham(self.exponents[: k - 1] + self.exponents[k:])

    def complement_products(self) -> tuple[int, ...]:
        """For each k, the product of all exponents except p_k."""
        total = prod(self.exponents)
        return tuple(total // p for p in self.exponents)

    def lies_below_diagram(self, point: Iterable[int]) -> bool:
        """Exact test for sum(i_k / p_k) < 1, done in integers."""
        pt = tuple(point)
        if len(pt) != self.n:
            raise InvalidInput(f"point {pt!r} does not match dimension {self.n}")
        comp = self.complement_products()
        return sum(c * q for q, c in zip(pt, comp)) < prod(self.exponents)

    def points_below_diagram(self) -> list[LatticePoint]:
        """All nonzero lattice points strictly below the diagram, lex order.

        Strict inequality: a monomial sitting on the diagram leaves the
        Newton polyhedron unchanged and so produces a zero jump, which is
        excluded from the minimization by definition.
        """
        comp = self.complement_products()
        total = prod(self.exponents)
        out = []
        for point in itertools.product(*(range(p) for p in self.exponents)):
            if any(point) and sum(c * q for q, c in zip(point, comp)) < total:
                out.append(point)
        return out


def is_interior(point: Iterable[int]) -> bool:
    """True when every coordinate is strictly positive."""
    return all(c > 0 for c in point)
