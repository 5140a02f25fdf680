from enum import Enum
from pydantic import BaseModel, Field
from typing import Optional

from cantor_oscillator.models.oscillator import OrientationPolicy
from cantor_oscillator.utils.exact import ExactRational


class Command(str, Enum):
    EVAL = "eval"
    APPROXIMANT = "approximant"
    VARIATION = "variation"
    WITNESS = "witness"
    CUT = "cut"
    LOCATE = "locate"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class RunConfig(BaseModel):
    """One CLI invocation: a single command plus its parsed options"""
    command: Command
    level: Optional[int] = None
    max_level: Optional[int] = None
    depth: Optional[int] = None
    policy: OrientationPolicy = OrientationPolicy.LITERAL
    x: Optional[ExactRational] = None
    delta: Optional[ExactRational] = None
    epsilon: Optional[ExactRational] = None
    format: Optional[OutputFormat] = None
    out: Optional[str] = None
    float_digits: int = Field(default=12, ge=1)


class CommandResult(BaseModel):
    output: str
    exit_code: int = 0
