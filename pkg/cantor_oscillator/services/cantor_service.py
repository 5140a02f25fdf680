from fractions import Fraction
from pydantic import ValidationError as PydanticValidationError
from typing import Iterator, List, Tuple
import logging

from cantor_oscillator.models.geometry import CantorLocation, GapAddress, Interval
from cantor_oscillator.utils.errors import AddressError, DomainError, InternalError
from cantor_oscillator.utils.exact import rat_to_text

logger = logging.getLogger(__name__)

ONE_THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def _triadic_numerator(bits: int, width: int) -> int:
    """Numerator over 3^width of the left end reached by `width` branch bits (0 left, 1 right)"""
    numerator = 0
    for shift in range(width - 1, -1, -1):
        numerator = numerator * 3 + 2 * ((bits >> shift) & 1)
    return numerator


def gap_bounds(level: int, index: int) -> Tuple[Fraction, Fraction]:
    """Exact (left, right) of gap level:index without building models"""
    scale = 3 ** level
    left = _triadic_numerator(index, level - 1) * 3 + 1
    return Fraction(left, scale), Fraction(left + 1, scale)


def surviving_bounds(level: int, index: int) -> Tuple[Fraction, Fraction]:
    scale = 3 ** level
    left = _triadic_numerator(index, level)
    return Fraction(left, scale), Fraction(left + 1, scale)


def iter_gaps(max_level: int) -> Iterator[Tuple[int, int, Fraction, Fraction]]:
    """Yield (level, index, left, right) for every gap up to max_level, left to right"""

    def visit(level: int, index: int) -> Iterator[Tuple[int, int, Fraction, Fraction]]:
        # surviving interval level:index holds gap (level + 1):index between its children
        if level == max_level:
            return
        yield from visit(level + 1, 2 * index)
        left, right = gap_bounds(level + 1, index)
        yield level + 1, index, left, right
        yield from visit(level + 1, 2 * index + 1)

    yield from visit(0, 0)


class CantorService:

    @staticmethod
    def address(level: int, index: int) -> GapAddress:
        """Validated gap address"""
        try:
            return GapAddress(level=level, index=index)
        except PydanticValidationError as e:
            raise AddressError(f"Invalid gap address {level}:{index}: {e.errors()[0]['msg']}")

    @staticmethod
    def gap_address_text(address: GapAddress) -> str:
        """Text form level:index of a gap address"""
        return str(address)

    @staticmethod
    def gap_address_parse(text: str) -> GapAddress:
        """Parse "level:index" back into a validated address"""
        try:
            return GapAddress.model_validate(text)
        except (PydanticValidationError, ValueError) as e:
            raise AddressError(f"Invalid gap address '{text}': {e}")

    @staticmethod
    def cantor_membership(x: Fraction) -> CantorLocation:
        """Certify x is in the middle-thirds Cantor set, or return the gap containing it.

        Iterates x -> 3x on [0, 1/3] and x -> 3x - 2 on [2/3, 1]. Every state keeps a
        denominator dividing that of x, so the orbit either enters the open middle
        third or revisits a state within denominator + 1 steps.
        """
        if not 0 <= x <= 1:
            raise DomainError(f"Point {rat_to_text(x)} outside [0, 1]")

        state = x
        branches = 0
        depth = 0
        seen = set()
        for _ in range(x.denominator + 2):
            if ONE_THIRD < state < TWO_THIRDS:
                level = depth + 1
                left, _ = gap_bounds(level, branches)
                return CantorLocation.inside_gap(GapAddress(level=level, index=branches), x - left)
            if state in seen:
                return CantorLocation.inside_cantor()
            seen.add(state)
            # 1/3 maps to 1 and 2/3 to 0, so gap endpoints stay in the set
            if state <= ONE_THIRD:
                state = 3 * state
                branches <<= 1
            else:
                state = 3 * state - 2
                branches = (branches << 1) | 1
            depth += 1

        logger.error(f"Orbit of {rat_to_text(x)} exhausted its state bound")
        raise InternalError(f"Cantor orbit of {rat_to_text(x)} did not terminate")

    @staticmethod
    def gap_interval(address: GapAddress) -> Interval:
        """Open middle third of the address.index-th surviving interval of level address.level - 1"""
        if not 0 <= address.index < 2 ** (address.level - 1):
            raise AddressError(f"Gap index out of range: {address}")
        left, right = gap_bounds(address.level, address.index)
        return Interval(left=left, right=right)

    @staticmethod
    def surviving_interval(level: int, index: int) -> Interval:
        """The index-th closed interval left after `level` removal steps"""
        if level < 0 or not 0 <= index < 2 ** level:
            raise AddressError(f"Surviving interval {level}:{index} does not exist")
        left, right = surviving_bounds(level, index)
        return Interval(left=left, right=right)

    @staticmethod
    def enumerate_gaps(max_level: int) -> List[Tuple[GapAddress, Interval]]:
        """All 2^max_level - 1 gaps of level <= max_level, sorted by left endpoint"""
        if max_level < 1:
            raise AddressError(f"max_level must be positive, got {max_level}")
        return [
            (GapAddress(level=level, index=index), Interval(left=left, right=right))
            for level, index, left, right in iter_gaps(max_level)
        ]

    @staticmethod
    def level_intervals(n: int) -> List[Interval]:
        """The 2^n closed surviving intervals of level n, sorted"""
        if n < 1:
            raise AddressError(f"Level must be positive, got {n}")
        result = []
        for index in range(2 ** n):
            left, right = surviving_bounds(n, index)
            result.append(Interval(left=left, right=right))
        return result
