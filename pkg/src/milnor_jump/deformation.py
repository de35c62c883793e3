"""Jumps of single-monomial deformations, computed three independent ways.

Adding one monomial strictly below the Newton diagram drops the Newton
number by a positive amount, the jump of that deformation.  The routines
here compute it as

* a difference of Newton numbers (the geometric reference computation),
* a closed product formula when the monomial has no zero coordinate,
* a recursion that strips zero coordinates one axis at a time, scaling by
  (p_k - 1) per stripped axis, until the interior formula applies.

The dispatcher must always agree with the Newton-number difference; the
test suite enforces that exhaustively at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional

from .brieskorn_pham import BrieskornPham, is_interior
from .errors import IntegralityError, InvalidInput
from .geometry import LatticePoint
from .newton import newton_number


@dataclass(frozen=True)
class MonomialDeformation:
    """A Brieskorn-Pham base plus one exponent vector strictly below its diagram."""

    base: BrieskornPham
    index: LatticePoint

    def __post_init__(self):
        object.__setattr__(self, "index", tuple(self.index))
        for c in self.index:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InvalidInput(f"monomial exponents must be non-negative integers, got {self.index!r}")
        if not any(self.index):
            raise InvalidInput("the zero monomial is not a deformation")
        if not self.base.lies_below_diagram(self.index):
            raise InvalidInput(
                f"monomial {self.index!r} does not lie strictly below the diagram of {self.base.exponents!r}"
            )


def jump_by_newton_numbers(defm: MonomialDeformation) -> int:
    """Jump as the drop of the Newton number when the monomial is added.

    This is the reference computation that the closed formula and the
    truncation recursion are checked against.
    """
    support = defm.base.support()
    jump = newton_number(support) - newton_number(support.with_point(defm.index))
    if jump <= 0:
        raise IntegralityError(
            f"adding {defm.index!r} below the diagram of {defm.base.exponents!r} "
            f"did not decrease the Newton number (drop {jump})"
        )
    return jump


def interior_jump(defm: MonomialDeformation) -> int:
    """Closed formula for a monomial with all coordinates positive.

    Equals prod(p) - sum_k i_k * prod_{j != k} p_j, the normalized volume
    of the simplex spanned by the monomial and the axis points.
    """
    if not is_interior(defm.index):
        raise InvalidInput(f"monomial {defm.index!r} has a zero coordinate")
    comp = defm.base.complement_products()
    return prod(defm.base.exponents) - sum(i * c for i, c in zip(defm.index, comp))


def boundary_jump(defm: MonomialDeformation, axis: Optional[int] = None) -> int:
    """Jump of a monomial with a zero coordinate, via truncation.

    Dropping an axis k with i_k == 0 multiplies the jump by (p_k - 1).
    By default the smallest such axis is eliminated; any admissible axis
    can be forced through `axis`, and the result does not depend on the
    choice (checked exhaustively in the tests rather than assumed).
    """
    zeros = [k + 1 for k, c in enumerate(defm.index) if c == 0]
    if not zeros:
        raise InvalidInput(f"monomial {defm.index!r} has no zero coordinate")
    if axis is None:
        axis = zeros[0]
    elif axis not in zeros:
        raise InvalidInput(f"axis {axis} does not carry a zero coordinate of {defm.index!r}")
    sub = MonomialDeformation(
        defm.base.truncate(axis),
        defm.index[: axis - 1] + defm.index[axis:],
    )
    return monomial_jump(sub) * (defm.base.exponents[axis - 1] - 1)


def monomial_jump(defm: MonomialDeformation) -> int:
    """Jump of a single-monomial deformation (closed formula or recursion)."""
    if is_interior(defm.index):
        return interior_jump(defm)
    return boundary_jump(defm)
