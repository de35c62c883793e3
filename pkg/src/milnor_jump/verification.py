"""Self-check suites behind the `verify` CLI command.

Each suite sweeps one invariant of the computation (exhaustively where
cheap, with seeded sampling where not) and reports how many cases passed.
They are deliberately redundant with the pytest suite: the CLI command
lets a user re-run the cross-checks on an installed copy without a test
harness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .brieskorn_pham import BrieskornPham
from .deformation import MonomialDeformation, boundary_jump, jump_by_newton_numbers, monomial_jump
from .diophantine import canonical_box_solution, is_pairwise_coprime, search_box_solution
from .jump import nondegenerate_jump, nondegenerate_jump_bruteforce, two_variable_closed_form
from .newton import newton_number


@dataclass
class SuiteResult:
    name: str
    passed: int
    failed: int
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, message: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(message)


def _exponent_tuples(n_max, p_max):
    for n in range(1, n_max + 1):
        yield from itertools.product(range(2, p_max + 1), repeat=n)


def check_kouchnirenko(n_max: int, p_max: int) -> SuiteResult:
    """Newton number of a pure-power support equals the Milnor product."""
    result = SuiteResult("kouchnirenko-product", 0, 0)
    for exps in _exponent_tuples(n_max, p_max):
        bp = BrieskornPham(exps)
        result.record(
            newton_number(bp.support()) == bp.milnor_number(),
            f"newton_number != milnor product for {exps}",
        )
    return result


def check_monotonicity(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """Adding points to a convenient support never raises the Newton number."""
    result = SuiteResult("newton-monotonicity", 0, 0)
    for _ in range(samples):
        n = rng.randint(1, n_max)
        exps = tuple(rng.randint(2, p_max) for _ in range(n))
        support = BrieskornPham(exps).support()
        before = newton_number(support)
        for _ in range(2):
            extra = tuple(rng.randint(0, p_max) for _ in range(n))
            if not any(extra):
                continue
            support = support.with_point(extra)
            after = newton_number(support)
            result.record(after <= before, f"nu increased adding {extra} to {exps}")
            before = after
    return result


def check_strict_monotonicity(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """Points strictly below the diagram strictly decrease the Newton number."""
    result = SuiteResult("strict-monotonicity", 0, 0)
    for _ in range(samples):
        n = rng.randint(1, n_max)
        bp = BrieskornPham(tuple(rng.randint(2, p_max) for _ in range(n)))
        point = rng.choice(bp.points_below_diagram())
        support = bp.support()
        result.record(
            newton_number(support.with_point(point)) < newton_number(support),
            f"no strict decrease at {point} below {bp.exponents}",
        )
    return result


def check_jump_methods(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """Formula/recursion dispatch agrees with the Newton-number difference."""
    result = SuiteResult("jump-methods-agree", 0, 0)
    for _ in range(samples):
        n = rng.randint(1, n_max)
        bp = BrieskornPham(tuple(rng.randint(2, p_max) for _ in range(n)))
        defm = MonomialDeformation(bp, rng.choice(bp.points_below_diagram()))
        result.record(
            monomial_jump(defm) == jump_by_newton_numbers(defm),
            f"method mismatch for {bp.exponents}, {defm.index}",
        )
    return result


def check_elimination_order(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """Boundary recursion result is independent of the axis eliminated first."""
    result = SuiteResult("elimination-order", 0, 0)
    for _ in range(samples):
        n = rng.randint(2, max(2, n_max))
        bp = BrieskornPham(tuple(rng.randint(2, p_max) for _ in range(n)))
        boundary = [p for p in bp.points_below_diagram() if not all(p)]
        point = rng.choice(boundary)
        defm = MonomialDeformation(bp, point)
        axes = [k + 1 for k, c in enumerate(point) if c == 0]
        values = {boundary_jump(defm, axis=k) for k in axes}
        result.record(len(values) == 1, f"axis choice changed the jump for {bp.exponents}, {point}")
    return result


def check_fast_vs_bruteforce(p_max: int, triples: int, rng: random.Random) -> SuiteResult:
    """The inductive algorithm matches the brute-force minimum over the lattice."""
    result = SuiteResult("fast-vs-bruteforce", 0, 0)
    for exps in itertools.product(range(2, p_max + 1), repeat=2):
        bp = BrieskornPham(exps)
        result.record(
            nondegenerate_jump(bp).lambda_nd == nondegenerate_jump_bruteforce(bp)[0],
            f"fast path disagrees with brute force for {exps}",
        )
    for _ in range(triples):
        exps = tuple(rng.randint(2, min(p_max, 9)) for _ in range(3))
        bp = BrieskornPham(exps)
        result.record(
            nondegenerate_jump(bp).lambda_nd == nondegenerate_jump_bruteforce(bp)[0],
            f"fast path disagrees with brute force for {exps}",
        )
    return result


def check_two_variable_formula(p_max: int) -> SuiteResult:
    """Two-variable jumps follow the gcd closed form."""
    result = SuiteResult("two-variable-closed-form", 0, 0)
    for p1, p2 in itertools.combinations_with_replacement(range(2, p_max + 1), 2):
        bp = BrieskornPham((p1, p2))
        result.record(
            nondegenerate_jump(bp).lambda_nd == two_variable_closed_form(p1, p2),
            f"closed form mismatch for {(p1, p2)}",
        )
    return result


def check_permutation_invariance(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """The jump does not depend on the order of the exponents."""
    result = SuiteResult("permutation-invariance", 0, 0)
    for _ in range(samples):
        n = rng.randint(2, max(2, n_max))
        exps = tuple(rng.randint(2, p_max) for _ in range(n))
        values = {
            nondegenerate_jump(BrieskornPham(perm)).lambda_nd
            for perm in set(itertools.permutations(exps))
        }
        result.record(len(values) == 1, f"permutations of {exps} disagree")
    return result


def check_diophantine_agreement(p_max: int) -> SuiteResult:
    """Euclid path and exhaustive search agree for pairwise coprime exponents."""
    result = SuiteResult("diophantine-euclid-vs-search", 0, 0)
    for exps in _exponent_tuples(3, p_max):
        if len(exps) < 2 or not is_pairwise_coprime(exps):
            continue
        bp = BrieskornPham(exps)
        for l in range(1, 13):
            canonical = canonical_box_solution(bp, l)
            searched = search_box_solution(bp, l)
            if canonical is not None and canonical.admissible:
                ok = searched == canonical
            else:
                ok = searched is None
            result.record(ok, f"solver mismatch for {exps}, l={l}")
    return result


def check_realizer_validity(n_max: int, p_max: int, samples: int, rng: random.Random) -> SuiteResult:
    """Every reported realizer lies below the diagram and attains the jump."""
    result = SuiteResult("realizer-validity", 0, 0)
    for _ in range(samples):
        n = rng.randint(1, n_max)
        bp = BrieskornPham(tuple(rng.randint(2, p_max) for _ in range(n)))
        report = nondegenerate_jump(bp)
        ok = (
            bp.lies_below_diagram(report.realizer)
            and monomial_jump(MonomialDeformation(bp, report.realizer)) == report.lambda_nd
            and (report.lambda_hyp is None or report.lambda_nd <= report.lambda_hyp)
            and report.lambda_nd <= bp.milnor_number()
        )
        result.record(ok, f"invalid report for {bp.exponents}: {report}")
    return result


def run_all(n_max: int = 3, p_max: int = 6, seed: int = 0) -> list[SuiteResult]:
    """Run every suite with one seeded generator; order is deterministic."""
    rng = random.Random(seed)
    return [
        check_kouchnirenko(n_max, p_max),
        check_monotonicity(n_max, p_max, 60, rng),
        check_strict_monotonicity(n_max, p_max, 60, rng),
        check_jump_methods(n_max, p_max, 120, rng),
        check_elimination_order(n_max, p_max, 60, rng),
        check_fast_vs_bruteforce(p_max, 15, rng),
        check_two_variable_formula(max(p_max, 12)),
        check_permutation_invariance(n_max, p_max, 15, rng),
        check_diophantine_agreement(p_max),
        check_realizer_validity(n_max, p_max, 40, rng),
    ]
