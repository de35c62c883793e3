"""The inductive algorithm for the non-degenerate jump, plus its oracle.

For one variable the jump is 1, realized by the exponent p - 1.  For more
variables the candidates split along the coordinate hyperplanes: each axis
k contributes (jump of the truncated singularity) * (p_k - 1), whose
minimum over k is the hyperplane bound.  Interior candidates are swept by
target value l = 1, 2, ...: the first l below the hyperplane bound whose
box-constrained diophantine equation admits a solution is the jump, with
realizer read off the solution; if the sweep is empty or fails, the
hyperplane bound wins and the realizer embeds the truncation's realizer
with a zero at the minimizing axis.

`nondegenerate_jump_bruteforce` minimizes the Newton-number drop over
every lattice point below the diagram.  It shares no code with the fast
path beyond the Newton-number engine and exists to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Optional

from .brieskorn_pham import BrieskornPham
from .diophantine import (
    DiophantineSolution,
    canonical_box_solution,
    is_pairwise_coprime,
    search_box_solution,
)
from .errors import IntegralityError, InvalidInput
from .geometry import LatticePoint
from .newton import newton_number

DEFAULT_ENUMERATION_LIMIT = 200_000


@dataclass(frozen=True)
class TraceEntry:
    """Outcome of the interior search at one target value."""

    l: int
    solution: Optional[DiophantineSolution]

    @property
    def admissible(self) -> bool:
        return self.solution is not None and self.solution.admissible


@dataclass(frozen=True)
class HyperplaneJump:
    """Minimum over axes of (truncation jump) * (p_k - 1)."""

    value: int
    axis: int
    realizer: LatticePoint
    per_axis: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class JumpReport:
    """Value, realizer and full audit trail of one jump computation.

    `lambda_hyp` is None for one variable, where no coordinate hyperplane
    exists; in that case the trace and the per-axis table are empty.
    """

    lambda_nd: int
    realizer: LatticePoint
    lambda_hyp: Optional[int]
    hyperplane_jumps: tuple[tuple[int, int], ...]
    interior_trace: tuple[TraceEntry, ...]
    source: str


def hyperplane_jump(base: BrieskornPham) -> HyperplaneJump:
    """Best jump among monomials lying in a coordinate hyperplane.

    Ties are broken towards the smallest axis index.  The realizer embeds
    the truncation's realizer with a zero inserted at the chosen axis.
    """
    if base.n < 2:
        raise InvalidInput("the hyperplane bound needs at least two variables")
    per_axis = []
    best = None
    for k in range(1, base.n + 1):
        sub = nondegenerate_jump(base.truncate(k))
        contribution = sub.lambda_nd * (base.exponents[k - 1] - 1)
        per_axis.append((sub.lambda_nd, contribution))
        if best is None or contribution < best[0]:
            embedded = sub.realizer[: k - 1] + (0,) + sub.realizer[k - 1 :]
            best = (contribution, k, embedded)
    value, axis, realizer = best
    return HyperplaneJump(value, axis, realizer, tuple(per_axis))


@lru_cache(maxsize=None)
def _jump_report(exponents: tuple[int, ...]) -> JumpReport:
    base = BrieskornPham(exponents)
    if base.n == 1:
        return JumpReport(
            lambda_nd=1,
            realizer=(exponents[0] - 1,),
            lambda_hyp=None,
            hyperplane_jumps=(),
            interior_trace=(),
            source="interior",
        )
    hyp = hyperplane_jump(base)
    coprime = is_pairwise_coprime(exponents)
    solver = canonical_box_solution if coprime else search_box_solution
    trace = []
    for l in range(1, hyp.value):
        solution = solver(base, l)
        trace.append(TraceEntry(l, solution))
        if solution is not None and solution.admissible:
            return JumpReport(
                lambda_nd=l,
                realizer=solution.realizing_monomial(base),
                lambda_hyp=hyp.value,
                hyperplane_jumps=hyp.per_axis,
                interior_trace=tuple(trace),
                source="interior",
            )
    return JumpReport(
        lambda_nd=hyp.value,
        realizer=hyp.realizer,
        lambda_hyp=hyp.value,
        hyperplane_jumps=hyp.per_axis,
        interior_trace=tuple(trace),
        source="hyperplane",
    )


def nondegenerate_jump(base: BrieskornPham) -> JumpReport:
    """Smallest positive jump over monomial deformations below the diagram.

    Memoized over exponent tuples, since the hyperplane recursion visits
    the truncations of the truncations many times over.
    """
    return _jump_report(base.exponents)


def nondegenerate_jump_bruteforce(
    base: BrieskornPham, max_product: Optional[int] = DEFAULT_ENUMERATION_LIMIT
) -> tuple[int, LatticePoint]:
    """Minimum Newton-number drop over all points below the diagram.

    Returns (value, realizer) with the lexicographically smallest realizer
    among the minimizers.  Guarded by the product of the exponents, which
    bounds the number of points to sweep.
    """
    total = prod(base.exponents)
    if max_product is not None and total > max_product:
        raise InvalidInput(
            f"exponent product {total} exceeds the enumeration guard ({max_product})"
        )
    support = base.support()
    reference = newton_number(support)
    best = None
    for point in base.points_below_diagram():
        drop = reference - newton_number(support.with_point(point))
        if drop <= 0:
            raise IntegralityError(
                f"Newton number did not strictly decrease at {point!r} below {base.exponents!r}"
            )
        if best is None or drop < best[0]:
            best = (drop, point)
    return best


def two_variable_closed_form(p1: int, p2: int) -> int:
    """Closed form of the jump for two variables in terms of d = gcd(p1, p2).

    d when d < min(p1, p2), and d - 1 when d = min(p1, p2).  Used as an
    independent oracle for the two-variable fast path.
    """
    if p1 < 2 or p2 < 2:
        raise InvalidInput("exponents must be at least 2")
    d = gcd(p1, p2)
    return d if d < min(p1, p2) else d - 1
