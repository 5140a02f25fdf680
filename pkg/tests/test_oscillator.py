"""
Tests for the oscillator construction: approximants, the exact limit, Cauchy
certificates, variation growth, witness families and axis cuts
"""
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cantor_oscillator.models.oscillator import OrientationPolicy, WitnessInterval
from cantor_oscillator.services.cantor_service import CantorService
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.services.pl_service import PLService, sample_sorted
from cantor_oscillator.utils.errors import DomainError, PreconditionError, ValidationError

LITERAL = OrientationPolicy.LITERAL
ALTERNATING = OrientationPolicy.ALTERNATING

unit_points = st.fractions(min_value=0, max_value=1, max_denominator=300)


def h(level):
    return OscillatorService.triangle_params(level)[0]


# triangle parameters

def test_triangle_params_examples():
    assert OscillatorService.triangle_params(1) == (F(7, 6), F(7))
    assert OscillatorService.triangle_params(2) == (F(5, 9), F(10))
    assert OscillatorService.triangle_params(3) == (F(19, 54), F(19))


def test_triangle_params_formula_up_to_thirty():
    for k in range(1, 31):
        height, slope = OscillatorService.triangle_params(k)
        assert height == F(1, k) + F(1, 2 * 3 ** k)
        assert slope == F(2 * 3 ** k + k, k)
        # apex at the midpoint of a base of length 3^-k
        assert height == slope * F(1, 2 * 3 ** k)


def test_triangle_params_rejects_level_zero():
    with pytest.raises(PreconditionError):
        OscillatorService.triangle_params(0)


def test_triangle_spec_gap_and_transient():
    gap = OscillatorService.triangle_spec(2, 1, ALTERNATING)
    assert (gap.base.left, gap.base.right, gap.apex) == (F(7, 9), F(8, 9), F(5, 9))
    lower = OscillatorService.triangle_spec(1, 0, LITERAL)
    assert lower.apex == F(-7, 6)
    transient = OscillatorService.triangle_spec(2, 1, LITERAL, transient=True)
    assert (transient.base.left, transient.base.right, transient.apex) == (F(2, 9), F(1, 3), F(5, 9))


# approximants

def test_approximant_level_one():
    f = OscillatorService.approximant(1, LITERAL)
    assert list(f.breakpoints) == [
        (0, 0), (F(1, 6), F(7, 6)), (F(1, 3), 0), (F(1, 2), F(-7, 6)),
        (F(2, 3), 0), (F(5, 6), F(7, 6)), (1, 0),
    ]


def test_approximant_golden_values():
    f = OscillatorService.approximant(1, LITERAL)
    values = [PLService.pl_eval(f, F(i, 6)) for i in range(7)]
    assert values == [0, F(7, 6), 0, F(-7, 6), 0, F(7, 6), 0]


def test_approximant_level_two():
    f = OscillatorService.approximant(2, LITERAL)
    assert len(f.breakpoints) == 15
    assert PLService.pl_eval(f, F(1, 18)) == F(5, 9)
    assert PLService.pl_eval(f, F(1, 6)) == F(-5, 9)
    assert PLService.pl_eval(f, F(1, 2)) == F(-7, 6)
    g = OscillatorService.approximant(2, ALTERNATING)
    assert PLService.pl_eval(g, F(1, 6)) == F(5, 9)


def test_approximant_built_from_its_triangles():
    triangles = OscillatorService.triangles(3, ALTERNATING)
    assert len(triangles) == 2 ** 4 - 1
    f = OscillatorService.approximant(3, ALTERNATING)
    for triangle in triangles:
        assert PLService.pl_eval(f, triangle.base.left) == 0
        assert PLService.pl_eval(f, triangle.base.midpoint) == triangle.apex
        assert PLService.pl_eval(f, triangle.base.right) == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_structural_census(n):
    f = OscillatorService.approximant(n, LITERAL)
    assert len(f.breakpoints) == 2 ** (n + 2) - 1
    signs = [interval.sign for interval in PLService.pl_sign_changes(f)]
    assert signs.count(1) == 2 ** n
    assert signs.count(-1) == 2 ** n - 1
    census = OscillatorService.triangle_census(n, LITERAL)
    assert (census.upper, census.lower, census.lower_at_level_height) == (2 ** n, 2 ** n - 1, 2 ** (n - 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_refinement_keeps_fixed_triangles(n):
    for policy in (LITERAL, ALTERNATING):
        coarse = OscillatorService.approximant(n, policy)
        fine = OscillatorService.approximant(n + 1, policy)
        for _, interval in CantorService.enumerate_gaps(n):
            for x in (interval.midpoint, interval.left + interval.length / 3, interval.right - interval.length / 7):
                expected = OscillatorService.eval_limit(x, policy)
                assert PLService.pl_eval(coarse, x) == expected
                assert PLService.pl_eval(fine, x) == expected


# exact limit

def test_eval_limit_examples():
    assert OscillatorService.eval_limit(F(1, 4), LITERAL) == 0
    assert OscillatorService.eval_limit(F(1, 2), LITERAL) == F(-7, 6)
    assert OscillatorService.eval_limit(F(1, 6), LITERAL) == F(-5, 9)
    assert OscillatorService.eval_limit(F(1, 6), ALTERNATING) == F(5, 9)


def test_eval_limit_outside_domain():
    with pytest.raises(DomainError):
        OscillatorService.eval_limit(F(-1, 2), LITERAL)


def test_zero_set_on_level_ten_endpoints():
    points = [F(1, 4), F(3, 4), F(3, 10), F(1, 10)]
    for interval in CantorService.level_intervals(10):
        points += [interval.left, interval.right]
    assert len(points) == 2 ** 11 + 4
    assert all(OscillatorService.eval_limit(x, LITERAL) == 0 for x in points)


def test_random_gap_points_are_bounded_by_height():
    rng = random.Random(20240101)
    for _ in range(1000):
        level = rng.randint(1, 10)
        index = rng.randrange(2 ** (level - 1))
        gap = CantorService.gap_interval(CantorService.address(level, index))
        t = F(rng.randint(1, 49), 50)
        x = gap.left + t * gap.length
        value = OscillatorService.eval_limit(x, LITERAL)
        assert value != 0
        assert abs(value) <= h(level)
        assert (abs(value) == h(level)) == (t == F(1, 2))


@given(unit_points)
def test_zero_exactly_on_cantor_set(x):
    in_cantor = CantorService.cantor_membership(x).in_cantor
    assert (OscillatorService.eval_limit(x, LITERAL) == 0) == in_cantor
    assert (OscillatorService.eval_limit(x, ALTERNATING) == 0) == in_cantor


@given(unit_points)
def test_policy_and_mirror_symmetry(x):
    literal = OscillatorService.eval_limit(x, LITERAL)
    alternating = OscillatorService.eval_limit(x, ALTERNATING)
    assert abs(literal) == abs(alternating)
    assert literal <= 0
    assert literal == OscillatorService.eval_limit(1 - x, LITERAL)
    assert alternating == OscillatorService.eval_limit(1 - x, ALTERNATING)


# Cauchy certificates

def test_cauchy_gap_examples():
    same = OscillatorService.cauchy_gap(1, 1, LITERAL)
    assert (same.exact, same.bound, same.holds) == (0, F(7, 3), True)
    first = OscillatorService.cauchy_gap(1, 2, LITERAL)
    assert first.exact == first.bound == F(31, 18)
    assert first.holds and first.sharp_holds


def test_cauchy_bound_of_the_construction_is_exceeded_two_levels_apart():
    gap = OscillatorService.cauchy_gap(1, 3, LITERAL)
    assert gap.exact == F(31, 18)
    assert gap.bound == F(41, 27)
    assert not gap.holds
    assert gap.sharp_holds


def test_cauchy_sharp_bound_up_to_level_ten():
    for n in range(1, 11):
        for m in range(n + 1, 11):
            gap = OscillatorService.cauchy_gap(n, m, LITERAL)
            assert gap.sharp_holds
            assert gap.sharp_bound == h(n) + h(n + 1)
            if m == n + 1:
                assert gap.holds


def test_cauchy_sharp_bound_alternating():
    for n in range(1, 7):
        for m in range(n + 1, 7):
            assert OscillatorService.cauchy_gap(n, m, ALTERNATING).sharp_holds


def test_sup_norm_agrees_with_dense_sampling():
    grid = [F(i, 4096) for i in range(4097)]
    for n in range(1, 9):
        for m in range(n + 1, 9):
            f = OscillatorService.approximant(n, LITERAL)
            g = OscillatorService.approximant(m, LITERAL)
            exact = PLService.pl_sup_norm_diff(f, g)
            sampled = max(abs(a - b) for a, b in zip(sample_sorted(f, grid), sample_sorted(g, grid)))
            difference = PLService.pl_add(f, PLService.pl_make((x, -y) for x, y in g.breakpoints))
            points = difference.breakpoints
            steepest = max(abs((y1 - y0) / (x1 - x0)) for (x0, y0), (x1, y1) in zip(points, points[1:]))
            assert sampled <= exact
            assert exact - sampled <= steepest / 8192


# variation

def test_variation_closed_form_examples():
    assert OscillatorService.variation_closed_form(1) == 7
    assert OscillatorService.variation_closed_form(2) == 9


def test_variation_closed_form_matches_breakpoint_sum():
    previous = F(0)
    for n in range(1, 11):
        closed = OscillatorService.variation_closed_form(n)
        assert closed == PLService.pl_total_variation(OscillatorService.approximant(n, LITERAL))
        assert closed == PLService.pl_total_variation(OscillatorService.approximant(n, ALTERNATING))
        assert closed > previous
        assert closed > sum(F(2 ** k, k) for k in range(1, n + 1))
        previous = closed


def test_variation_diverges():
    assert OscillatorService.variation_closed_form(15) > 4000


# witness families

def test_witness_worked_example():
    family = OscillatorService.witness_family(F(1, 2), F(11, 6), LITERAL)
    assert (family.k, family.m) == (1, 3)
    assert family.delta_bar == F(1, 6)
    assert [(i.a, i.b) for i in family.intervals] == [
        (F(1, 3), F(1, 2)), (F(1, 9), F(1, 6)), (F(1, 27), F(1, 18)),
    ]
    assert family.length_sum == F(13, 54)
    assert family.variation_sum == F(56, 27)
    assert family.harmonic_sum == F(11, 6)
    assert OscillatorService.verify_witness(family, LITERAL)


def test_witness_start_level_uses_exact_comparison():
    family = OscillatorService.witness_family(F(1, 100), F(1), LITERAL)
    assert family.k == 4
    assert family.length_sum < F(1, 100)
    assert family.variation_sum > 1
    assert OscillatorService.verify_witness(family, LITERAL)


@pytest.mark.parametrize("delta", [F(1, 10), F(1, 100), F(1, 1000)])
def test_witness_breaks_absolute_continuity(delta):
    for policy in (LITERAL, ALTERNATING):
        family = OscillatorService.witness_family(delta, F(2), policy)
        assert family.length_sum < delta
        assert family.variation_sum > 2
        assert family.variation_sum > family.harmonic_sum
        assert OscillatorService.verify_witness(family, policy)


def test_witness_rejects_nonpositive_parameters():
    with pytest.raises(PreconditionError):
        OscillatorService.witness_family(F(-1, 2), F(1), LITERAL)
    with pytest.raises(PreconditionError):
        OscillatorService.witness_family(F(1, 2), F(0), LITERAL)


def test_verify_witness_rejects_overlapping_intervals():
    family = OscillatorService.witness_family(F(1, 2), F(11, 6), LITERAL)
    overlapping = family.model_copy(update={
        "m": 2,
        "intervals": [
            WitnessInterval(level=1, a=F(1, 3), b=F(1, 2)),
            WitnessInterval(level=2, a=F(2, 5), b=F(1, 2)),
        ],
    })
    with pytest.raises(ValidationError):
        OscillatorService.verify_witness(overlapping, LITERAL)


def test_verify_witness_fails_when_variation_does_not_exceed_epsilon():
    family = OscillatorService.witness_family(F(1, 2), F(11, 6), LITERAL)
    weak = family.model_copy(update={"epsilon": family.variation_sum})
    assert not OscillatorService.verify_witness(weak, LITERAL)


def test_verify_witness_fails_on_wrong_length_sum():
    family = OscillatorService.witness_family(F(1, 10), F(2), LITERAL)
    tampered = family.model_copy(update={"length_sum": family.length_sum / 2})
    assert not OscillatorService.verify_witness(tampered, LITERAL)


# axis cuts

def test_cut_at_zero_alternating():
    report = OscillatorService.verify_cut(F(0), 4, ALTERNATING)
    assert report.cuts
    for finding in report.findings:
        assert -finding.radius < finding.negative_point < finding.radius
        assert -finding.radius < finding.positive_point < finding.radius
        assert finding.negative_value < 0 < finding.positive_value
        assert OscillatorService.eval_limit(finding.positive_point, ALTERNATING) == finding.positive_value


def test_cut_at_quarter_alternating():
    report = OscillatorService.verify_cut(F(1, 4), 4, ALTERNATING)
    assert report.cuts
    assert all(finding.both_signs for finding in report.findings)


def test_cut_under_literal_policy_is_one_sided():
    report = OscillatorService.verify_cut(F(0), 4, LITERAL)
    assert not report.cuts
    assert report.no_positive_anywhere
    assert report.note is not None
    for finding in report.findings:
        assert finding.negative_point is not None
        assert finding.positive_point is None


def test_deep_literal_cut_is_certified_without_a_census():
    report = OscillatorService.verify_cut(F(1, 4), 30, LITERAL)
    assert len(report.findings) == 30
    assert not report.cuts
    assert report.no_positive_anywhere
    assert all(finding.negative_point is not None for finding in report.findings)


@pytest.mark.parametrize("depth", [1, 2, 5])
def test_one_sided_flag_agrees_with_sign_census(depth):
    for policy in (LITERAL, ALTERNATING):
        census = OscillatorService.sign_census(depth + 2, policy)
        report = OscillatorService.verify_cut(F(0), depth, policy)
        if not report.cuts:
            assert report.no_positive_anywhere == (census.positive_total == 0)
        else:
            assert census.positive_total > 0


def test_cut_requires_cantor_point():
    with pytest.raises(PreconditionError):
        OscillatorService.verify_cut(F(1, 2), 3, ALTERNATING)


def test_cut_sweep_over_sampled_cantor_points():
    endpoints = sorted({end for i in CantorService.level_intervals(8) for end in (i.left, i.right)})
    points = endpoints[:: len(endpoints) // 48][:48] + [F(1, 4), F(3, 10)]
    assert len(set(points)) == 50
    for x in points:
        report = OscillatorService.verify_cut(x, 8, ALTERNATING)
        assert report.cuts
        for finding in report.findings:
            assert x - finding.radius < finding.negative_point < x + finding.radius
            assert x - finding.radius < finding.positive_point < x + finding.radius
        literal = OscillatorService.verify_cut(x, 8, LITERAL)
        assert all(finding.negative_point is not None for finding in literal.findings)
        assert all(finding.positive_point is None for finding in literal.findings)


def test_no_positive_gap_midpoint_under_literal_policy():
    census = OscillatorService.sign_census(12, LITERAL)
    assert census.positive_total == 0
    assert census.negative_total == 2 ** 12 - 1
    alternating = OscillatorService.sign_census(4, ALTERNATING)
    assert alternating.negative == {1: 1, 2: 0, 3: 4, 4: 0}
    assert alternating.positive == {1: 0, 2: 2, 3: 0, 4: 8}


def test_formula_audit_reports_displayed_constants():
    topics = {finding.topic for finding in OscillatorService.formula_audit()}
    assert {"slope", "height", "witness_length"} <= topics
