from enum import Enum
from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, List, Literal, Optional

from cantor_oscillator.models.geometry import Interval
from cantor_oscillator.utils.exact import ExactRational


class OrientationPolicy(str, Enum):
    """Sign of the fixed gap triangles.

    literal: every gap triangle is lower (the construction's text as written).
    alternating: odd-level gap triangles are lower, even-level ones upper.
    """
    LITERAL = "literal"
    ALTERNATING = "alternating"

    def gap_sign(self, level: int) -> int:
        if self is OrientationPolicy.LITERAL:
            return -1
        return -1 if level % 2 == 1 else 1


class TriangleSpec(BaseModel):
    """Isosceles triangle over `base`: zero at both ends, sign * height at the midpoint"""
    model_config = ConfigDict(frozen=True)

    level: int = Field(ge=1)
    base: Interval
    height: ExactRational
    slope: ExactRational
    sign: Literal[-1, 1]
    transient: bool = False

    @property
    def apex(self):
        return self.sign * self.height


class TriangleCensus(BaseModel):
    level: int
    upper: int
    lower: int
    lower_at_level_height: int


class GapSignCensus(BaseModel):
    """Signs of the limit at every gap midpoint up to max_level"""
    policy: OrientationPolicy
    max_level: int
    negative: Dict[int, int]
    positive: Dict[int, int]

    @property
    def positive_total(self) -> int:
        return sum(self.positive.values())

    @property
    def negative_total(self) -> int:
        return sum(self.negative.values())


class CauchyGap(BaseModel):
    n: int
    m: int
    exact: ExactRational
    bound: ExactRational
    holds: bool
    sharp_bound: ExactRational
    sharp_holds: bool


class WitnessInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int = Field(ge=1)
    a: ExactRational
    b: ExactRational
    a_float: Optional[str] = None
    b_float: Optional[str] = None


class WitnessFamily(BaseModel):
    """Disjoint intervals of total length < delta whose variation exceeds epsilon"""
    delta: ExactRational
    epsilon: ExactRational
    delta_bar: ExactRational
    k: int
    m: int
    intervals: List[WitnessInterval]
    length_sum: ExactRational
    variation_sum: ExactRational
    harmonic_sum: ExactRational


class WitnessCertificate(BaseModel):
    """WitnessFamily as emitted by the CLI, with float companions"""
    policy: OrientationPolicy
    family: WitnessFamily
    verified: bool
    floats: Dict[str, str]


class CutFinding(BaseModel):
    radius: ExactRational
    search_level: int
    negative_point: Optional[ExactRational] = None
    negative_value: Optional[ExactRational] = None
    positive_point: Optional[ExactRational] = None
    positive_value: Optional[ExactRational] = None
    radius_float: Optional[str] = None
    negative_point_float: Optional[str] = None
    negative_value_float: Optional[str] = None
    positive_point_float: Optional[str] = None
    positive_value_float: Optional[str] = None

    @property
    def both_signs(self) -> bool:
        return self.negative_point is not None and self.positive_point is not None


class CutReport(BaseModel):
    x: ExactRational
    x_float: Optional[str] = None
    policy: OrientationPolicy
    depth: int
    findings: List[CutFinding]
    cuts: bool
    no_positive_anywhere: bool = False
    note: Optional[str] = None


class VariationRow(BaseModel):
    n: int
    exact: ExactRational
    float_value: str
    oracle: ExactRational
    agrees: bool


class Finding(BaseModel):
    """A reproducible disagreement between the construction's text and exact computation"""
    topic: str
    detail: str
    stated: Optional[str] = None
    computed: Optional[str] = None
