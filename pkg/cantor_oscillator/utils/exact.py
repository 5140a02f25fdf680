"""Exact rational scalars shared by every other module.

`Rational` is `fractions.Fraction`: canonical form (positive denominator, gcd 1,
zero as 0/1) is maintained by the standard library after every operation.
"""
import operator
import re
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Annotated, Callable, Dict, Literal

from pydantic import PlainSerializer, PlainValidator

from cantor_oscillator.utils.errors import (
    ArithmeticDomainError,
    ConstructionError,
    RationalParseError,
    ValidationError,
)

Rational = Fraction

ArithOp = Literal["add", "sub", "mul", "div"]

# "p" or "p/q", optional leading minus, no whitespace, no decimals
_RATIONAL_TEXT = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")

_OPERATIONS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_make(p: int, q: int) -> Fraction:
    """Build the canonical rational p/q"""
    if q == 0:
        raise ConstructionError(f"Zero denominator in {p}/{q}")
    return Fraction(p, q)


def rat_arith(a: Fraction, b: Fraction, op: ArithOp) -> Fraction:
    """Exact add/sub/mul/div of two rationals"""
    try:
        func = _OPERATIONS[op]
    except KeyError:
        raise ValidationError(f"Unknown arithmetic operation: {op}")
    if op == "div" and b == 0:
        raise ArithmeticDomainError(f"Division of {rat_to_text(a)} by zero")
    return func(a, b)


def rat_parse(text: str) -> Fraction:
    """Parse `[-]digits` or `[-]digits/digits`; decimal notation is rejected"""
    match = _RATIONAL_TEXT.fullmatch(text.strip()) if isinstance(text, str) else None
    if match is None:
        raise RationalParseError(f"Malformed rational '{text}', expected p or p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(f"Zero denominator in '{text}'")
    return Fraction(numerator, denominator)


def rat_to_text(a: Fraction) -> str:
    """Exact "p/q" rendering, denominator always present"""
    return f"{a.numerator}/{a.denominator}"


def rat_to_display(a: Fraction) -> str:
    """Shortest exact rendering ("-7/6", "0", "9")"""
    return str(a)


def rat_to_decimal(a: Fraction, digits: int) -> str:
    """Round-half-even decimal with exactly `digits` significant digits.

    Display only: nothing reads these strings back.
    """
    if digits < 1:
        raise ValidationError(f"digits must be positive, got {digits}")
    if a == 0:
        return "0." + "0" * digits
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        value = Decimal(a.numerator) / Decimal(a.denominator)
        # pad exact quotients such as 9/1 out to the requested digit count
        value = value.quantize(Decimal(1).scaleb(value.adjusted() - digits + 1))
    return format(value, "f")


def _coerce_rational(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return rat_parse(value)
        except RationalParseError as e:
            raise ValueError(e.detail)
    raise ValueError(f"Expected an exact rational, got {type(value).__name__}")


# Rational field type for pydantic models: "p/q" text in JSON, Fraction in Python
ExactRational = Annotated[
    Fraction,
    PlainValidator(_coerce_rational),
    PlainSerializer(rat_to_text, return_type=str, when_used="json"),
]
