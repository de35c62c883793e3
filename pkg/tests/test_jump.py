"""Tests for the inductive jump algorithm and its brute-force cross-check."""

import itertools
import random
from math import gcd

import pytest

from milnor_jump.brieskorn_pham import BrieskornPham
from milnor_jump.deformation import MonomialDeformation, monomial_jump
from milnor_jump.errors import InvalidInput
from milnor_jump.jump import (
    hyperplane_jump,
    nondegenerate_jump,
    nondegenerate_jump_bruteforce,
    two_variable_closed_form,
)


class TestHyperplaneJump:
    def test_paper_example(self):
        hyp = hyperplane_jump(BrieskornPham((11, 6, 5)))
        assert hyp.value == 4
        assert hyp.axis == 3
        assert hyp.per_axis == ((1, 10), (1, 5), (1, 4))

    def test_two_cubes(self):
        hyp = hyperplane_jump(BrieskornPham((3, 3)))
        assert hyp.value == 2
        assert hyp.axis == 1
        assert hyp.realizer == (0, 2)

    def test_two_squares(self):
        assert hyperplane_jump(BrieskornPham((2, 2))).value == 1

    def test_single_variable_rejected(self):
        with pytest.raises(InvalidInput):
            hyperplane_jump(BrieskornPham((5,)))


class TestNondegenerateJump:
    def test_paper_example(self):
        report = nondegenerate_jump(BrieskornPham((11, 6, 5)))
        assert report.lambda_nd == 3
        assert report.realizer == (1, 3, 2)
        assert report.lambda_hyp == 4
        assert report.source == "interior"
        attempts = [(t.l, t.solution.i_tilde, t.admissible) for t in report.interior_trace]
        assert attempts == [(1, 6, False), (2, 7, False), (3, 3, True)]

    def test_two_cubes_fall_back_to_the_hyperplane(self):
        # every interior combination is divisible by 3, so l = 1 fails
        report = nondegenerate_jump(BrieskornPham((3, 3)))
        assert report.lambda_nd == 2
        assert report.source == "hyperplane"
        assert report.realizer == (0, 2)
        assert [t.solution for t in report.interior_trace] == [None]

    def test_one_variable(self):
        report = nondegenerate_jump(BrieskornPham((7,)))
        assert report.lambda_nd == 1
        assert report.realizer == (6,)
        assert report.lambda_hyp is None
        assert report.interior_trace == ()

    def test_empty_sweep_uses_the_hyperplane_realizer(self):
        # lambda_hyp is 1, so there is no interior sweep at all
        report = nondegenerate_jump(BrieskornPham((2, 3)))
        assert report.lambda_nd == 1
        assert report.source == "hyperplane"
        assert report.realizer == (0, 2)
        assert report.interior_trace == ()

    def test_non_coprime_interior_win(self):
        report = nondegenerate_jump(BrieskornPham((4, 6)))
        assert report.lambda_nd == 2
        assert report.source == "interior"
        # -1*6 + 2*4 = 2, so the realizer is (1, 6 - 2)
        assert report.realizer == (1, 4)


class TestBruteforce:
    def test_paper_example(self):
        assert nondegenerate_jump_bruteforce(BrieskornPham((11, 6, 5))) == (3, (1, 3, 2))

    def test_non_coprime_pair(self):
        assert nondegenerate_jump_bruteforce(BrieskornPham((4, 6)))[0] == 2

    def test_equal_pair(self):
        assert nondegenerate_jump_bruteforce(BrieskornPham((4, 4)))[0] == 3

    def test_enumeration_guard(self):
        with pytest.raises(InvalidInput):
            nondegenerate_jump_bruteforce(BrieskornPham((11, 6, 5)), max_product=100)


class TestTwoVariableClosedForm:
    def test_gcd_below_the_minimum(self):
        assert two_variable_closed_form(4, 6) == 2

    def test_coprime_pair(self):
        assert two_variable_closed_form(5, 7) == 1

    def test_gcd_at_the_minimum(self):
        assert two_variable_closed_form(4, 4) == 3

    def test_matches_the_algorithm_exhaustively(self):
        for p1, p2 in itertools.combinations_with_replacement(range(2, 13), 2):
            expected = two_variable_closed_form(p1, p2)
            assert nondegenerate_jump(BrieskornPham((p1, p2))).lambda_nd == expected
            d = gcd(p1, p2)
            assert expected == (d if d < p1 else d - 1)


class TestAlgorithmProperties:
    def test_agreement_with_bruteforce_two_variables(self):
        for exps in itertools.product(range(2, 10), repeat=2):
            bp = BrieskornPham(exps)
            assert nondegenerate_jump(bp).lambda_nd == nondegenerate_jump_bruteforce(bp)[0]

    def test_agreement_with_bruteforce_three_variables(self):
        rng = random.Random(11)
        triples = {tuple(rng.randint(2, 9) for _ in range(3)) for _ in range(25)}
        triples |= {(2, 3, 5), (4, 6, 8), (3, 3, 3), (2, 4, 6), (5, 7, 9), (11, 6, 5)}
        for exps in sorted(triples):
            bp = BrieskornPham(exps)
            assert nondegenerate_jump(bp).lambda_nd == nondegenerate_jump_bruteforce(bp)[0]

    def test_permutation_invariance(self):
        rng = random.Random(23)
        for _ in range(20):
            n = rng.randint(2, 3)
            exps = tuple(rng.randint(2, 9) for _ in range(n))
            values = {
                nondegenerate_jump(BrieskornPham(perm)).lambda_nd
                for perm in set(itertools.permutations(exps))
            }
            assert len(values) == 1, exps

    def test_reported_realizer_attains_the_jump(self):
        rng = random.Random(5)
        seen = {tuple(rng.randint(2, 12) for _ in range(rng.randint(1, 3))) for _ in range(40)}
        for exps in sorted(seen):
            bp = BrieskornPham(exps)
            report = nondegenerate_jump(bp)
            assert bp.lies_below_diagram(report.realizer)
            assert monomial_jump(MonomialDeformation(bp, report.realizer)) == report.lambda_nd
            if report.lambda_hyp is not None:
                assert report.lambda_nd <= report.lambda_hyp
            assert 1 <= report.lambda_nd <= bp.milnor_number()

    def test_trace_covers_the_whole_sweep_on_fallback(self):
        report = nondegenerate_jump(BrieskornPham((4, 4)))
        assert report.source == "hyperplane"
        assert report.lambda_nd == report.lambda_hyp == 3
        assert [t.l for t in report.interior_trace] == list(range(1, report.lambda_hyp))
        assert not any(t.admissible for t in report.interior_trace)
