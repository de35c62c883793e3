"""Newton numbers of convenient support sets.

The Newton number is the alternating inclusion-exclusion sum of
factorially weighted volumes under the diagram over all coordinate
subspaces, with the empty subspace contributing (-1)^n.  It equals the
Milnor number for non-degenerate convenient singularities, which is what
makes it usable as an exact combinatorial stand-in for mu.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterable, Optional

from .errors import IntegralityError, InvalidInput
from .geometry import (
    DEFAULT_MAX_DIM,
    SupportSet,
    _check_dim_guard,
    _volume_under,
    is_convenient_points,
)

__all__ = ["SupportSet", "is_convenient", "restrict_to_subspace", "newton_number"]


def is_convenient(support: SupportSet) -> bool:
    """True when the support carries a pure power on every axis."""
    return is_convenient_points(support.points, support.dim)


def restrict_to_subspace(support: SupportSet, axes: Iterable[int]) -> SupportSet:
    """Support points living on the coordinate subspace of the given axes.

    Axes are 1-based.  Keeps the points whose coordinates vanish outside
    `axes` and re-indexes them into dimension len(axes); the result may be
    empty.
    """
    idx = sorted(set(axes))
    if not idx:
        raise InvalidInput("restriction needs at least one axis")
    if idx[0] < 1 or idx[-1] > support.dim:
        raise InvalidInput(f"axes {idx} out of range 1..{support.dim}")
    keep = [i - 1 for i in idx]
    drop = [i for i in range(support.dim) if i + 1 not in idx]
    restricted = [
        tuple(p[i] for i in keep)
        for p in support.points
        if all(p[i] == 0 for i in drop)
    ]
    return SupportSet.from_points(restricted, dim=len(keep))


def newton_number(support: SupportSet, max_dim: Optional[int] = DEFAULT_MAX_DIM) -> int:
    """Exact Newton number of a convenient support.

    Sums (-1)^(n-r) * r! * V_I over all subsets I of the axes (r = |I|),
    where V_I is the volume under the diagram restricted to the subspace
    spanned by I and the empty subset contributes (-1)^n.  The result is
    checked to be a non-negative integer; failure of that check means a
    bug in the volume engine, not bad input.
    """
    _check_dim_guard(support.dim, max_dim)
    if not is_convenient(support):
        raise InvalidInput("the Newton number is only defined for convenient supports")
    n = support.dim
    total = 0
    for r in range(n + 1):
        sign = (-1) ** (n - r)
        if r == 0:
            total += sign
            continue
        weight = factorial(r)
        for axes in itertools.combinations(range(1, n + 1), r):
            sub = restrict_to_subspace(support, axes)
            total += sign * weight * _volume_under(sub.points, sub.dim)
    if total.denominator != 1 or total < 0:
        raise IntegralityError(f"Newton number must be a non-negative integer, got {total}")
    return int(total)
