from fractions import Fraction
from typing import List
import logging

from cantor_oscillator.models.oscillator import Finding, OrientationPolicy
from cantor_oscillator.models.verification import SuiteResult, SuiteSummary, VerificationSummary
from cantor_oscillator.services.cantor_service import CantorService
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.services.pl_service import PLService
from cantor_oscillator.utils.exact import rat_to_text

logger = logging.getLogger(__name__)

LITERAL = OrientationPolicy.LITERAL
ALTERNATING = OrientationPolicy.ALTERNATING

SAMPLE_CANTOR_POINTS = [Fraction(1, 4), Fraction(3, 4), Fraction(3, 10), Fraction(1, 10)]

# heavier sweeps stop here whatever max_level asks for
PL_SUITE_CAP = 10
REFINEMENT_CAP = 6
CUT_DEPTH_CAP = 8


def _cut_sample_points(level: int) -> List[Fraction]:
    points = {Fraction(1, 4), Fraction(3, 10)}
    for interval in CantorService.level_intervals(level):
        points.update((interval.left, interval.right))
    return sorted(points)


class VerificationService:

    @staticmethod
    def cantor_geometry_suite(max_level: int) -> SuiteResult:
        suite = SuiteResult(name="cantor_geometry")
        for level in range(1, max_level + 1):
            gaps = CantorService.enumerate_gaps(level)
            suite.check(f"gap count at level {level}", len(gaps) == 2 ** level - 1)
            suite.check(
                f"gaps sorted and disjoint at level {level}",
                all(a.right <= b.left for (_, a), (_, b) in zip(gaps, gaps[1:])),
            )
            total = sum((interval.length for _, interval in gaps), Fraction(0))
            suite.check(f"gap measure at level {level}", total == 1 - Fraction(2, 3) ** level)

        for address, interval in CantorService.enumerate_gaps(max_level):
            suite.check(f"gap {address} length", interval.length == Fraction(1, 3 ** address.level))
            location = CantorService.cantor_membership(interval.midpoint)
            suite.check(f"gap {address} midpoint located", location.address == address)

        intervals = CantorService.level_intervals(max_level)
        suite.check("surviving interval count", len(intervals) == 2 ** max_level)
        suite.check(
            "surviving measure",
            sum((interval.length for interval in intervals), Fraction(0)) == Fraction(2, 3) ** max_level,
        )
        for interval in intervals:
            for end in (interval.left, interval.right):
                suite.check(f"endpoint {rat_to_text(end)} in Cantor set", CantorService.cantor_membership(end).in_cantor)

        for x in SAMPLE_CANTOR_POINTS:
            suite.check(f"{rat_to_text(x)} in Cantor set", CantorService.cantor_membership(x).in_cantor)
        middle = CantorService.cantor_membership(Fraction(1, 2))
        suite.check("1/2 in gap 1:0", str(middle.address) == "1:0" and middle.offset == Fraction(1, 6))
        return suite

    @staticmethod
    def pl_function_suite(max_level: int) -> SuiteResult:
        suite = SuiteResult(name="pl_function")
        top = min(max_level, PL_SUITE_CAP)
        for n in range(1, top + 1):
            f = OscillatorService.approximant(n, LITERAL)
            g = OscillatorService.approximant(n, ALTERNATING)
            suite.check(
                f"f_{n} evaluates to stored breakpoint values",
                all(PLService.pl_eval(f, x) == y for x, y in f.breakpoints),
            )
            suite.check(f"f_{n} survives pl_make", PLService.pl_make(f.breakpoints).breakpoints == f.breakpoints)

            sup = PLService.pl_sup_norm_diff(f, g)
            suite.check(f"sup-norm symmetric at level {n}", sup == PLService.pl_sup_norm_diff(g, f) and sup >= 0)
            grid = [Fraction(i, 256) for i in range(257)]
            sampled = max(abs(PLService.pl_eval(f, x) - PLService.pl_eval(g, x)) for x in grid)
            suite.check(f"grid maximum below sup-norm at level {n}", sampled <= sup)

            variation = PLService.pl_total_variation(f)
            suite.check(
                f"variation triangle inequality at level {n}",
                PLService.pl_total_variation(PLService.pl_add(f, g)) <= variation + PLService.pl_total_variation(g),
            )
            third = Fraction(1, 3)
            suite.check(
                f"variation additive at 1/3, level {n}",
                variation == PLService.pl_restrict_variation(f, Fraction(0), third)
                + PLService.pl_restrict_variation(f, third, Fraction(1)),
            )
        return suite

    @staticmethod
    def oscillator_suite(max_level: int, findings: List[Finding]) -> SuiteResult:
        suite = SuiteResult(name="oscillator")

        f_1 = OscillatorService.approximant(1, LITERAL)
        golden = [0, Fraction(7, 6), 0, Fraction(-7, 6), 0, Fraction(7, 6), 0]
        grid = [Fraction(i, 6) for i in range(7)]
        suite.check("f_1 golden values", [PLService.pl_eval(f_1, x) for x in grid] == golden)

        for level in range(1, 31):
            height, slope = OscillatorService.triangle_params(level)
            suite.check(
                f"triangle parameters at level {level}",
                height == Fraction(1, level) + Fraction(1, 2 * 3 ** level) and slope == 2 * 3 ** level * height,
            )
        suite.check("slopes 7 and 10", [OscillatorService.triangle_params(k)[1] for k in (1, 2)] == [7, 10])

        previous = Fraction(0)
        for n in range(1, max_level + 1):
            f = OscillatorService.approximant(n, LITERAL)
            suite.check(f"breakpoint census at level {n}", len(f.breakpoints) == 2 ** (n + 2) - 1)
            signs = [interval.sign for interval in PLService.pl_sign_changes(f)]
            suite.check(
                f"sign census at level {n}",
                signs.count(1) == 2 ** n and signs.count(-1) == 2 ** n - 1,
            )
            census = OscillatorService.triangle_census(n, LITERAL)
            suite.check(
                f"triangle census at level {n}",
                (census.upper, census.lower, census.lower_at_level_height) == (2 ** n, 2 ** n - 1, 2 ** (n - 1)),
            )
            closed = OscillatorService.variation_closed_form(n)
            if n <= PL_SUITE_CAP:
                suite.check(f"variation oracle at level {n}", closed == PLService.pl_total_variation(f))
            suite.check(f"variation increasing at level {n}", closed > previous)
            suite.check(
                f"variation above harmonic-type sum at level {n}",
                closed > sum((Fraction(2 ** k, k) for k in range(1, n + 1)), Fraction(0)),
            )
            previous = closed

        exceeded = []
        for n in range(1, max_level + 1):
            for m in range(n + 1, max_level + 1):
                gap = OscillatorService.cauchy_gap(n, m, LITERAL)
                suite.check(f"sharp Cauchy bound ({n}, {m})", gap.sharp_holds)
                if not gap.holds:
                    exceeded.append(gap)
        if max_level >= 2:
            first = OscillatorService.cauchy_gap(1, 2, LITERAL)
            suite.check("Cauchy equality at (1, 2)", first.exact == first.bound == Fraction(31, 18))
        if exceeded:
            sample = exceeded[0]
            findings.append(Finding(
                topic="cauchy_bound",
                detail=f"{len(exceeded)} pairs exceed h_n + h_m, first ({sample.n}, {sample.m})",
                stated=rat_to_text(sample.bound),
                computed=rat_to_text(sample.exact),
            ))

        for n in range(1, min(max_level, REFINEMENT_CAP) + 1):
            coarse = OscillatorService.approximant(n, ALTERNATING)
            fine = OscillatorService.approximant(n + 1, ALTERNATING)
            for address, interval in CantorService.enumerate_gaps(n):
                for x in (interval.midpoint, interval.left + interval.length / 4):
                    limit = OscillatorService.eval_limit(x, ALTERNATING)
                    suite.check(
                        f"refinement stable at {rat_to_text(x)}, level {n}",
                        PLService.pl_eval(coarse, x) == PLService.pl_eval(fine, x) == limit,
                    )

        for interval in CantorService.level_intervals(max_level):
            for end in (interval.left, interval.right):
                suite.check(f"zero at {rat_to_text(end)}", OscillatorService.eval_limit(end, LITERAL) == 0)
        for x in SAMPLE_CANTOR_POINTS:
            suite.check(f"zero at {rat_to_text(x)}", OscillatorService.eval_limit(x, LITERAL) == 0)
        for address, interval in CantorService.enumerate_gaps(min(max_level, PL_SUITE_CAP)):
            height, _ = OscillatorService.triangle_params(address.level)
            for x in (interval.midpoint, interval.left + interval.length / 5):
                literal = OscillatorService.eval_limit(x, LITERAL)
                alternating = OscillatorService.eval_limit(x, ALTERNATING)
                suite.check(f"nonzero in gap {address}", literal != 0)
                suite.check(
                    f"apex bound in gap {address}",
                    abs(literal) <= height and (abs(literal) == height) == (x == interval.midpoint),
                )
                suite.check(f"policies agree in modulus at {rat_to_text(x)}", abs(literal) == abs(alternating))
                suite.check(f"literal policy nonpositive at {rat_to_text(x)}", literal <= 0)
                suite.check(
                    f"mirror symmetry at {rat_to_text(x)}",
                    literal == OscillatorService.eval_limit(1 - x, LITERAL)
                    and alternating == OscillatorService.eval_limit(1 - x, ALTERNATING),
                )

        for delta in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000)):
            family = OscillatorService.witness_family(delta, Fraction(2), LITERAL)
            suite.check(
                f"witness for delta {rat_to_text(delta)}",
                family.length_sum < delta
                and family.variation_sum > 2
                and OscillatorService.verify_witness(family, LITERAL),
            )
        worked = OscillatorService.witness_family(Fraction(1, 2), Fraction(11, 6), LITERAL)
        suite.check(
            "witness for (1/2, 11/6)",
            (worked.length_sum, worked.variation_sum) == (Fraction(13, 54), Fraction(56, 27)),
        )

        depth = min(max_level, CUT_DEPTH_CAP)
        one_sided = 0
        for x in _cut_sample_points(min(max_level, 4)):
            suite.check(f"alternating cut at {rat_to_text(x)}", OscillatorService.verify_cut(x, depth, ALTERNATING).cuts)
            literal_report = OscillatorService.verify_cut(x, depth, LITERAL)
            suite.check(
                f"literal report consistent at {rat_to_text(x)}",
                not literal_report.cuts and literal_report.no_positive_anywhere,
            )
            one_sided += 1
        census = OscillatorService.sign_census(depth + 2, LITERAL)
        findings.append(Finding(
            topic="orientation",
            detail=(
                f"literal orientation never cuts the axis: {census.negative_total} negative and "
                f"{census.positive_total} positive gap midpoints up to level {depth + 2}; "
                f"{one_sided} Cantor points checked"
            ),
        ))
        return suite

    @staticmethod
    def run_all(max_level: int) -> VerificationSummary:
        """Run every invariant suite up to max_level and collect findings against the construction's text"""
        findings: List[Finding] = list(OscillatorService.formula_audit())
        suites = [
            VerificationService.cantor_geometry_suite(max_level),
            VerificationService.pl_function_suite(max_level),
            VerificationService.oscillator_suite(max_level, findings),
        ]
        for suite in suites:
            if suite.passed:
                logger.info(f"Suite {suite.name}: {suite.checks} checks passed")
            else:
                logger.warning(f"Suite {suite.name}: {len(suite.failures)} of {suite.checks} checks failed")
        return VerificationSummary(
            max_level=max_level,
            passed=all(suite.passed for suite in suites),
            suites={
                suite.name: SuiteSummary(passed=suite.passed, checks=suite.checks, failures=suite.failures)
                for suite in suites
            },
            findings=findings,
        )
