from functools import cached_property
from pydantic import BaseModel, ConfigDict, model_validator
from typing import List, Literal, Tuple

from cantor_oscillator.utils.exact import ExactRational

Breakpoint = Tuple[ExactRational, ExactRational]


class PLFunction(BaseModel):
    """Continuous piecewise-linear function on [0, 1], stored as its breakpoints.

    Built through PLService.pl_make; collinear interior breakpoints are kept.
    """
    model_config = ConfigDict(frozen=True)

    breakpoints: Tuple[Breakpoint, ...]

    @model_validator(mode="after")
    def check_breakpoints(self) -> "PLFunction":
        points = self.breakpoints
        if len(points) < 2:
            raise ValueError("A PL function needs at least 2 breakpoints")
        if points[0][0] != 0 or points[-1][0] != 1:
            raise ValueError("Breakpoints must span exactly [0, 1]")
        for (x0, _), (x1, _) in zip(points, points[1:]):
            if not x0 < x1:
                raise ValueError("Breakpoint x values must be strictly increasing")
        return self

    @cached_property
    def xs(self) -> List:
        return [x for x, _ in self.breakpoints]

    def __len__(self) -> int:
        return len(self.breakpoints)


class SignInterval(BaseModel):
    """Maximal open interval on which a function keeps one strict sign"""
    model_config = ConfigDict(frozen=True)

    left: ExactRational
    right: ExactRational
    sign: Literal[-1, 1]
