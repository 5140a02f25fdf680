from bisect import bisect_right
from fractions import Fraction
from pydantic import ValidationError as PydanticValidationError
from typing import Iterable, List, Sequence, Tuple
import logging

from cantor_oscillator.models.pl import PLFunction, SignInterval
from cantor_oscillator.utils.errors import DomainError, ValidationError
from cantor_oscillator.utils.exact import rat_to_text

logger = logging.getLogger(__name__)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def sample_sorted(f: PLFunction, xs: Sequence[Fraction]) -> List[Fraction]:
    """Evaluate f at ascending points in one sweep over its segments"""
    points = f.breakpoints
    values = []
    segment = 0
    last = len(points) - 1
    for x in xs:
        while segment < last - 1 and points[segment + 1][0] <= x:
            segment += 1
        (x0, y0), (x1, y1) = points[segment], points[segment + 1]
        if x == x1:
            values.append(y1)
        elif x == x0:
            values.append(y0)
        else:
            values.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    return values


def merged_xs(f: PLFunction, g: PLFunction) -> List[Fraction]:
    return sorted(set(f.xs) | set(g.xs))


class PLService:

    @staticmethod
    def pl_make(points: Iterable[Tuple[Fraction, Fraction]]) -> PLFunction:
        """Sort and deduplicate breakpoints into a PL function on [0, 1]"""
        ordered = sorted(((Fraction(x), Fraction(y)) for x, y in points), key=lambda p: p[0])
        if not ordered:
            raise ValidationError("A PL function needs at least one breakpoint")

        deduplicated = [ordered[0]]
        for x, y in ordered[1:]:
            prev_x, prev_y = deduplicated[-1]
            if x == prev_x:
                if y != prev_y:
                    raise ValidationError(
                        f"Conflicting values at x = {rat_to_text(x)}: {rat_to_text(prev_y)} and {rat_to_text(y)}"
                    )
                continue
            deduplicated.append((x, y))

        if deduplicated[0][0] != 0 or deduplicated[-1][0] != 1:
            raise ValidationError(
                f"Domain [{rat_to_text(deduplicated[0][0])}, {rat_to_text(deduplicated[-1][0])}] does not span [0, 1]"
            )
        try:
            return PLFunction(breakpoints=tuple(deduplicated))
        except PydanticValidationError as e:
            raise ValidationError(f"Invalid breakpoints: {e.errors()[0]['msg']}")

    @staticmethod
    def pl_eval(f: PLFunction, x: Fraction) -> Fraction:
        """Exact linear interpolation on the segment containing x"""
        if not 0 <= x <= 1:
            raise DomainError(f"Point {rat_to_text(x)} outside [0, 1]")
        points = f.breakpoints
        position = bisect_right(f.xs, x)
        x0, y0 = points[position - 1]
        if x == x0:
            return y0
        x1, y1 = points[position]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    @staticmethod
    def pl_sup_norm_diff(f: PLFunction, g: PLFunction) -> Fraction:
        """max |f - g| over [0, 1]; f - g is PL on the merged breakpoints, so the max sits on one"""
        xs = merged_xs(f, g)
        return max(abs(a - b) for a, b in zip(sample_sorted(f, xs), sample_sorted(g, xs)))

    @staticmethod
    def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
        """Pointwise sum on the merged breakpoints"""
        xs = merged_xs(f, g)
        values = [a + b for a, b in zip(sample_sorted(f, xs), sample_sorted(g, xs))]
        return PLFunction.model_construct(breakpoints=tuple(zip(xs, values)))

    @staticmethod
    def pl_total_variation(f: PLFunction) -> Fraction:
        """Sum of |y_{i+1} - y_i| over consecutive breakpoints"""
        points = f.breakpoints
        return sum((abs(y1 - y0) for (_, y0), (_, y1) in zip(points, points[1:])), Fraction(0))

    @staticmethod
    def pl_restrict_variation(f: PLFunction, lo: Fraction, hi: Fraction) -> Fraction:
        """Variation over [lo, hi]; both ends must be breakpoints"""
        xs = f.xs
        start = bisect_right(xs, lo) - 1
        stop = bisect_right(xs, hi) - 1
        if start < 0 or xs[start] != lo or xs[stop] != hi or lo > hi:
            raise ValidationError(f"[{rat_to_text(lo)}, {rat_to_text(hi)}] is not bounded by breakpoints")
        points = f.breakpoints[start:stop + 1]
        return sum((abs(y1 - y0) for (_, y0), (_, y1) in zip(points, points[1:])), Fraction(0))

    @staticmethod
    def pl_sign_changes(f: PLFunction) -> List[SignInterval]:
        """Maximal open intervals where f > 0 or f < 0, in order"""
        points = f.breakpoints
        runs: List[SignInterval] = []
        start, sign = points[0][0], _sign(points[0][1])
        # `sign` is always the sign of f at the left end of the current segment
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            next_sign = _sign(y1)
            if sign == 0:
                if next_sign != 0:
                    start, sign = x0, next_sign
            elif next_sign == 0:
                runs.append(SignInterval(left=start, right=x1, sign=sign))
                sign = 0
            elif next_sign != sign:
                root = x0 + y0 * (x1 - x0) / (y0 - y1)
                runs.append(SignInterval(left=start, right=root, sign=sign))
                start, sign = root, next_sign
        if sign != 0:
            runs.append(SignInterval(left=start, right=points[-1][0], sign=sign))
        return runs
