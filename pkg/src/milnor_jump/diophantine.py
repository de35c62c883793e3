"""Box-constrained linear diophantine equations for the interior search.

For exponents (p_1, ..., p_n) write p'_k for the product of all exponents
except p_k.  The interior jump candidates for a target value l are the
solutions of

    -i_1 p'_1 - ... - i_{n-1} p'_{n-1} + t p'_n = l

with 0 < i_k < p_k for k < n and 0 < t < p_n.  Two solvers are provided:
an exhaustive search over the box (always applicable, and the normative
one), and a closed-form path for pairwise coprime exponents that needs
nothing beyond the extended Euclidean algorithm.  When both apply they
must agree, because the box solution is unique: reducing the identity
modulo each p_k pins every i_k, and then t is forced by exact division.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .brieskorn_pham import BrieskornPham
from .errors import IntegralityError, InvalidInput
from .geometry import LatticePoint


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) and a*x + b*y = g, for a, b >= 1."""
    if a < 1 or b < 1:
        raise InvalidInput(f"extended_gcd needs positive integers, got {a}, {b}")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def gcd_combination(values: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """gcd of the values together with an integer combination attaining it."""
    vals = list(values)
    if not vals:
        raise InvalidInput("gcd_combination needs at least one value")
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidInput(f"gcd_combination needs positive integers, got {vals!r}")
    g = vals[0]
    coeffs = [1]
    for v in vals[1:]:
        g, x, y = extended_gcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
    return g, tuple(coeffs)


@dataclass(frozen=True)
class DiophantineSolution:
    """One box solution; `admissible` records whether i_tilde < p_n."""

    i_low: tuple[int, ...]
    i_tilde: int
    admissible: bool

    def realizing_monomial(self, base: BrieskornPham) -> LatticePoint:
        """The lattice point (i_1, ..., i_{n-1}, p_n - i_tilde)."""
        return self.i_low + (base.exponents[-1] - self.i_tilde,)


def _check_target(l: int) -> None:
    if not isinstance(l, int) or isinstance(l, bool) or l < 1:
        raise InvalidInput(f"the target must be a positive integer, got {l!r}")


def is_pairwise_coprime(exponents: tuple[int, ...]) -> bool:
    return all(gcd(a, b) == 1 for a, b in itertools.combinations(exponents, 2))


def canonical_box_solution(base: BrieskornPham, l: int) -> Optional[DiophantineSolution]:
    """The unique box solution for pairwise coprime exponents, or None.

    A combination sum(j_k p'_k) = 1 from the Euclidean algorithm is scaled
    by l; reducing coefficient k modulo p_k (legal because p_k p'_k is the
    full product, absorbable into the last slot) forces i_k into [0, p_k).
    A zero residue means the strict box is unsatisfiable for that slot, so
    no solution exists for this l at all.  Otherwise the last coefficient
    is recovered by exact division and only its upper bound can still fail,
    which the `admissible` flag records.
    """
    p = base.exponents
    _check_target(l)
    if not is_pairwise_coprime(p):
        raise InvalidInput(f"exponents {p!r} are not pairwise coprime")
    comp = base.complement_products()
    g, coeffs = gcd_combination(comp)
    if g != 1:
        raise IntegralityError(f"complement products of coprime {p!r} have gcd {g}")
    i_low = []
    for k in range(base.n - 1):
        residue = (-l * coeffs[k]) % p[k]
        if residue == 0:
            return None
        i_low.append(residue)
    numerator = l + sum(i * c for i, c in zip(i_low, comp))
    i_tilde, remainder = divmod(numerator, comp[-1])
    if remainder:
        raise IntegralityError(
            f"residue reduction for {p!r}, l={l} left a non-divisible remainder"
        )
    return DiophantineSolution(tuple(i_low), i_tilde, admissible=i_tilde < p[-1])


def search_box_solution(base: BrieskornPham, l: int) -> Optional[DiophantineSolution]:
    """Exhaustive box search; the lexicographically smallest admissible solution.

    Works for arbitrary exponents at a cost of prod(p_k - 1) over the
    leading slots per query, which is fine at desk scale.  Returns None
    when no admissible solution exists.
    """
    p = base.exponents
    _check_target(l)
    comp = base.complement_products()
    last = comp[-1]
    for combo in itertools.product(*(range(1, pk) for pk in p[:-1])):
        i_tilde, remainder = divmod(l + sum(i * c for i, c in zip(combo, comp)), last)
        if remainder == 0 and 0 < i_tilde < p[-1]:
            return DiophantineSolution(combo, i_tilde, admissible=True)
    return None
