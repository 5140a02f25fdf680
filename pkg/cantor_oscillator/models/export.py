from pydantic import BaseModel
from typing import List, Optional

from cantor_oscillator.models.geometry import GapAddress, Interval
from cantor_oscillator.models.oscillator import OrientationPolicy
from cantor_oscillator.utils.exact import ExactRational


class BreakpointRow(BaseModel):
    x: ExactRational
    y: ExactRational
    x_float: str
    y_float: str


class ApproximantExport(BaseModel):
    level: int
    policy: OrientationPolicy
    breakpoint_count: int
    breakpoints: List[BreakpointRow]


class PointValue(BaseModel):
    x: ExactRational
    policy: OrientationPolicy
    value: ExactRational
    value_float: str


class LocateResult(BaseModel):
    x: ExactRational
    in_cantor: bool
    address: Optional[GapAddress] = None
    gap: Optional[Interval] = None
    offset: Optional[ExactRational] = None
