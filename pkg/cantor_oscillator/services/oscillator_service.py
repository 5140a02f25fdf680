from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, NamedTuple, Tuple
import logging

from cantor_oscillator.models.geometry import Interval
from cantor_oscillator.models.oscillator import (
    CauchyGap,
    CutFinding,
    CutReport,
    Finding,
    GapSignCensus,
    OrientationPolicy,
    TriangleCensus,
    TriangleSpec,
    WitnessFamily,
    WitnessInterval,
)
from cantor_oscillator.models.pl import PLFunction
from cantor_oscillator.services.cantor_service import CantorService, gap_bounds, iter_gaps, surviving_bounds
from cantor_oscillator.services.pl_service import PLService
from cantor_oscillator.utils import config
from cantor_oscillator.utils.errors import PreconditionError, ValidationError
from cantor_oscillator.utils.exact import rat_to_text

logger = logging.getLogger(__name__)


class _Piece(NamedTuple):
    level: int
    index: int
    left: Fraction
    right: Fraction
    sign: int
    transient: bool


def _pieces(n: int, policy: OrientationPolicy) -> Iterator[_Piece]:
    """Triangles of approximant(n) from left to right: gap triangles of level <= n
    interleaved with the transient upper triangles on the level-n surviving intervals"""

    def visit(level: int, index: int) -> Iterator[_Piece]:
        if level == n:
            left, right = surviving_bounds(n, index)
            yield _Piece(n, index, left, right, 1, True)
            return
        yield from visit(level + 1, 2 * index)
        left, right = gap_bounds(level + 1, index)
        yield _Piece(level + 1, index, left, right, policy.gap_sign(level + 1), False)
        yield from visit(level + 1, 2 * index + 1)

    yield from visit(0, 0)


def _height(level: int) -> Fraction:
    return Fraction(1, level) + Fraction(1, 2 * 3 ** level)


@lru_cache(maxsize=32)
def _approximant(n: int, policy: OrientationPolicy) -> PLFunction:
    heights = {k: _height(k) for k in range(1, n + 1)}
    points: List[Tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(0))]
    for piece in _pieces(n, policy):
        points.append(((piece.left + piece.right) / 2, piece.sign * heights[piece.level]))
        points.append((piece.right, Fraction(0)))
    # breakpoints come out sorted and contiguous, so skip re-validating 2^(n+2) - 1 points
    return PLFunction.model_construct(breakpoints=tuple(points))


class OscillatorService:

    @staticmethod
    def triangle_params(level: int) -> Tuple[Fraction, Fraction]:
        """(h_k, m_k) with h_k = 1/k + 1/(2*3^k) and m_k = 2*3^k*h_k = (2*3^k + k)/k"""
        if level < 1:
            raise PreconditionError(f"Triangle level must be positive, got {level}")
        return _height(level), Fraction(2 * 3 ** level + level, level)

    @staticmethod
    def triangle_spec(level: int, index: int, policy: OrientationPolicy, transient: bool = False) -> TriangleSpec:
        """Fixed triangle on gap level:index, or the transient one on surviving interval level:index"""
        height, slope = OscillatorService.triangle_params(level)
        if transient:
            base = CantorService.surviving_interval(level, index)
            sign = 1
        else:
            base = CantorService.gap_interval(CantorService.address(level, index))
            sign = policy.gap_sign(level)
        return TriangleSpec(level=level, base=base, height=height, slope=slope, sign=sign, transient=transient)

    @staticmethod
    def triangles(n: int, policy: OrientationPolicy) -> List[TriangleSpec]:
        """The 2^(n+1) - 1 triangles of approximant(n), sorted by base"""
        if n < 1:
            raise PreconditionError(f"Approximant level must be positive, got {n}")
        params = {k: OscillatorService.triangle_params(k) for k in range(1, n + 1)}
        return [
            TriangleSpec(
                level=piece.level,
                base=Interval(left=piece.left, right=piece.right),
                height=params[piece.level][0],
                slope=params[piece.level][1],
                sign=piece.sign,
                transient=piece.transient,
            )
            for piece in _pieces(n, policy)
        ]

    @staticmethod
    def triangle_census(n: int, policy: OrientationPolicy) -> TriangleCensus:
        """Count upper and lower triangles of approximant(n), and the lower ones of height h_n"""
        upper = lower = lower_at_level = 0
        for piece in _pieces(n, policy):
            if piece.sign > 0:
                upper += 1
            else:
                lower += 1
                if piece.level == n:
                    lower_at_level += 1
        return TriangleCensus(level=n, upper=upper, lower=lower, lower_at_level_height=lower_at_level)

    @staticmethod
    def approximant(n: int, policy: OrientationPolicy) -> PLFunction:
        """Step-n function f_n with exactly 2^(n+2) - 1 breakpoints"""
        if n < 1:
            raise PreconditionError(f"Approximant level must be positive, got {n}")
        f = _approximant(n, policy)
        logger.info(f"Built approximant f_{n} ({policy.value}) with {len(f.breakpoints)} breakpoints")
        return f

    @staticmethod
    def eval_limit(x: Fraction, policy: OrientationPolicy) -> Fraction:
        """Exact value of the limit function: 0 on the Cantor set, the fixed gap triangle elsewhere"""
        location = CantorService.cantor_membership(x)
        if location.in_cantor:
            return Fraction(0)
        level = location.address.level
        _, slope = OscillatorService.triangle_params(level)
        offset = location.offset
        return policy.gap_sign(level) * slope * min(offset, Fraction(1, 3 ** level) - offset)

    @staticmethod
    def cauchy_gap(n: int, m: int, policy: OrientationPolicy) -> CauchyGap:
        """Exact sup distance of f_n and f_m against the bound h_n + h_m.

        For |n - m| >= 2 that bound is exceeded: the transient apex of the coarser
        function sits over a level-(lo + 1) gap triangle of the finer one. The sharp
        bound h_lo + h_(lo + 1) always holds.
        """
        if n < 1 or m < 1:
            raise PreconditionError(f"Levels must be positive, got ({n}, {m})")
        exact = PLService.pl_sup_norm_diff(_approximant(n, policy), _approximant(m, policy))
        bound = _height(n) + _height(m)
        low = min(n, m)
        sharp_bound = Fraction(0) if n == m else _height(low) + _height(low + 1)
        result = CauchyGap(
            n=n,
            m=m,
            exact=exact,
            bound=bound,
            holds=exact <= bound,
            sharp_bound=sharp_bound,
            sharp_holds=exact <= sharp_bound,
        )
        if not result.holds:
            logger.warning(
                f"||f_{n} - f_{m}|| = {rat_to_text(exact)} exceeds h_{n} + h_{m} = {rat_to_text(bound)}"
            )
        return result

    @staticmethod
    def variation_closed_form(n: int) -> Fraction:
        """V(f_n) = sum_k 2^k h_k + 2^(n+1) h_n"""
        if n < 1:
            raise PreconditionError(f"Level must be positive, got {n}")
        return sum((2 ** k * _height(k) for k in range(1, n + 1)), Fraction(0)) + 2 ** (n + 1) * _height(n)

    @staticmethod
    def witness_family(delta: Fraction, epsilon: Fraction, policy: OrientationPolicy) -> WitnessFamily:
        """Disjoint half-gaps of total length < delta with variation > epsilon.

        k is the least level whose half-gap tail (3/4)*3^(-k) is below delta; the
        left half of the leftmost gap of each level k..m is taken, m being the first
        level at which the summed heights exceed epsilon.
        """
        if delta <= 0 or epsilon <= 0:
            raise PreconditionError(
                f"delta and epsilon must be positive, got {rat_to_text(delta)} and {rat_to_text(epsilon)}"
            )

        k = 1
        while Fraction(3, 4 * 3 ** k) >= delta:
            k += 1

        intervals: List[WitnessInterval] = []
        length_sum = variation_sum = harmonic_sum = Fraction(0)
        level = k
        while variation_sum <= epsilon:
            if level - k >= config.MAX_WITNESS_LEVELS:
                raise PreconditionError(
                    f"epsilon {rat_to_text(epsilon)} needs more than {config.MAX_WITNESS_LEVELS} witness levels; "
                    "raise the resource limit CANTOR_MAX_WITNESS_LEVELS to build it"
                )
            a, right = gap_bounds(level, 0)
            b = (a + right) / 2
            intervals.append(WitnessInterval(level=level, a=a, b=b))
            length_sum += b - a
            # f(a) = 0 at the gap end, |f(b)| = h_level at the apex
            variation_sum += _height(level)
            harmonic_sum += Fraction(1, level)
            level += 1

        family = WitnessFamily(
            delta=delta,
            epsilon=epsilon,
            delta_bar=Fraction(1, 2 * 3 ** k),
            k=k,
            m=level - 1,
            intervals=intervals,
            length_sum=length_sum,
            variation_sum=variation_sum,
            harmonic_sum=harmonic_sum,
        )
        logger.info(
            f"Witness for delta={rat_to_text(delta)}, epsilon={rat_to_text(epsilon)} ({policy.value}): "
            f"levels {family.k}..{family.m}"
        )
        return family

    @staticmethod
    def verify_witness(family: WitnessFamily, policy: OrientationPolicy) -> bool:
        """Re-check a witness family using only eval_limit.

        Malformed structure raises ValidationError; failed numeric checks return False.
        """
        intervals = family.intervals
        if not intervals:
            raise ValidationError("Witness family has no intervals")
        if family.delta <= 0 or family.epsilon <= 0:
            raise ValidationError("Witness delta and epsilon must be positive")
        expected_levels = list(range(family.k, family.m + 1))
        if [interval.level for interval in intervals] != expected_levels:
            raise ValidationError(f"Witness levels must run {family.k}..{family.m} in order")
        for interval in intervals:
            if not 0 <= interval.a < interval.b <= 1:
                raise ValidationError(
                    f"Witness interval ({rat_to_text(interval.a)}, {rat_to_text(interval.b)}) is malformed"
                )
        ordered = sorted(intervals, key=lambda interval: interval.a)
        for first, second in zip(ordered, ordered[1:]):
            if first.b > second.a:
                raise ValidationError(
                    f"Witness intervals at levels {first.level} and {second.level} overlap"
                )

        length_sum = sum((interval.b - interval.a for interval in intervals), Fraction(0))
        variation_sum = Fraction(0)
        endpoints_ok = True
        for interval in intervals:
            value_a = OscillatorService.eval_limit(interval.a, policy)
            value_b = OscillatorService.eval_limit(interval.b, policy)
            variation_sum += abs(value_b - value_a)
            if value_a != 0 or abs(value_b) != _height(interval.level):
                endpoints_ok = False

        checks = {
            "length_sum": length_sum == family.length_sum,
            "length_below_delta": length_sum < family.delta,
            "endpoints": endpoints_ok,
            "variation_sum": variation_sum == family.variation_sum,
            "variation_above_epsilon": variation_sum > family.epsilon,
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            logger.warning(f"Witness verification failed: {', '.join(failed)}")
        return not failed

    @staticmethod
    def verify_cut(x: Fraction, depth: int, policy: OrientationPolicy) -> CutReport:
        """Look for f < 0 and f > 0 points in (x - 3^-j, x + 3^-j), j = 1..depth"""
        if depth < 1:
            raise PreconditionError(f"Depth must be positive, got {depth}")
        if not CantorService.cantor_membership(x).in_cantor:
            raise PreconditionError(f"{rat_to_text(x)} is not in the Cantor set, so f(x) != 0")

        findings = []
        for j in range(1, depth + 1):
            radius = Fraction(1, 3 ** j)
            search_level = j + 2
            finding = CutFinding(radius=radius, search_level=search_level)
            # shallowest gaps first: their apexes are the largest values in the window
            for level, mid in sorted(_midpoints_in_window(x - radius, x + radius, search_level)):
                value = OscillatorService.eval_limit(mid, policy)
                if value < 0 and finding.negative_point is None:
                    finding.negative_point, finding.negative_value = mid, value
                elif value > 0 and finding.positive_point is None:
                    finding.positive_point, finding.positive_value = mid, value
                if finding.both_signs:
                    break
            findings.append(finding)

        cuts = all(finding.both_signs for finding in findings)
        report = CutReport(x=x, policy=policy, depth=depth, findings=findings, cuts=cuts)
        if not cuts:
            # every gap midpoint of level k carries the sign gap_sign(k), so this
            # matches sign_census(depth + 2, policy).positive_total == 0
            report.no_positive_anywhere = all(policy.gap_sign(level) < 0 for level in range(1, depth + 3))
            report.note = (
                f"one-sided: no gap midpoint up to level {depth + 2} has a positive value"
                if report.no_positive_anywhere
                else "some radius lacks a point of one sign"
            )
            logger.warning(f"Cut at {rat_to_text(x)} ({policy.value}) is {report.note}")
        return report

    @staticmethod
    def sign_census(max_level: int, policy: OrientationPolicy) -> GapSignCensus:
        """Sign of the limit at every gap midpoint of level <= max_level"""
        negative: Dict[int, int] = {level: 0 for level in range(1, max_level + 1)}
        positive: Dict[int, int] = {level: 0 for level in range(1, max_level + 1)}
        for level, _, left, right in iter_gaps(max_level):
            value = OscillatorService.eval_limit((left + right) / 2, policy)
            if value < 0:
                negative[level] += 1
            elif value > 0:
                positive[level] += 1
        return GapSignCensus(policy=policy, max_level=max_level, negative=negative, positive=positive)

    @staticmethod
    def formula_audit() -> List[Finding]:
        """Compare the construction's displayed constants with the height-consistent ones"""
        findings = []
        for n in range(1, 6):
            height, slope = OscillatorService.triangle_params(n)
            displayed = Fraction(2 * 3 ** n + n, 2 * n * 3 ** n)
            if displayed != slope:
                findings.append(Finding(
                    topic="slope",
                    detail=f"displayed coefficient of x in f_bar_{n} equals the height, not the slope",
                    stated=rat_to_text(displayed),
                    computed=rat_to_text(slope),
                ))
        height_2, slope_2 = OscillatorService.triangle_params(2)
        if Fraction(19, 18) != height_2:
            findings.append(Finding(
                topic="height",
                detail="stated apex of f_bar_2 (10x on [0, 1/18]) versus 10 * 1/18",
                stated="19/18",
                computed=rat_to_text(slope_2 * Fraction(1, 18)),
            ))
        for k in range(1, 6):
            delta_bar = Fraction(1, 2 * 3 ** k)
            tail = Fraction(3, 4 * 3 ** k)
            findings.append(Finding(
                topic="witness_length",
                detail=f"half-gap lengths from level {k} on sum to (3/2) * delta_bar, not delta_bar / 2",
                stated=rat_to_text(delta_bar / 2),
                computed=rat_to_text(tail),
            ))
        return findings


def _midpoints_in_window(lo: Fraction, hi: Fraction, max_level: int) -> Iterator[Tuple[int, Fraction]]:
    """(level, midpoint) of gaps up to max_level whose midpoint lies in (lo, hi)"""

    def visit(level: int, index: int) -> Iterator[Tuple[int, Fraction]]:
        left, right = surviving_bounds(level, index)
        if right <= lo or left >= hi or level == max_level:
            return
        gap_left, gap_right = gap_bounds(level + 1, index)
        mid = (gap_left + gap_right) / 2
        if lo < mid < hi:
            yield level + 1, mid
        yield from visit(level + 1, 2 * index)
        yield from visit(level + 1, 2 * index + 1)

    yield from visit(0, 0)
