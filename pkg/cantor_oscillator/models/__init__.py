# Models package
from .geometry import Interval, GapAddress, CantorLocation
from .pl import PLFunction, SignInterval
from .oscillator import (
    OrientationPolicy,
    TriangleSpec,
    WitnessFamily,
    WitnessInterval,
    CutReport,
    CutFinding,
    CauchyGap,
)
from .run import RunConfig

__all__ = [
    "Interval",
    "GapAddress",
    "CantorLocation",
    "PLFunction",
    "SignInterval",
    "OrientationPolicy",
    "TriangleSpec",
    "WitnessFamily",
    "WitnessInterval",
    "CutReport",
    "CutFinding",
    "CauchyGap",
    "RunConfig",
]
