from pydantic import BaseModel, ConfigDict, model_serializer, model_validator
from typing import Any, Optional

from cantor_oscillator.utils.exact import ExactRational, rat_to_text


class Interval(BaseModel):
    """Closed or open subinterval [left, right] of [0, 1] with left < right"""
    model_config = ConfigDict(frozen=True)

    left: ExactRational
    right: ExactRational

    @model_validator(mode="after")
    def check_bounds(self) -> "Interval":
        if not (0 <= self.left < self.right <= 1):
            raise ValueError(
                f"Interval needs 0 <= left < right <= 1, got [{rat_to_text(self.left)}, {rat_to_text(self.right)}]"
            )
        return self

    @property
    def length(self):
        return self.right - self.left

    @property
    def midpoint(self):
        return (self.left + self.right) / 2

    def contains_open(self, x) -> bool:
        return self.left < x < self.right


class GapAddress(BaseModel):
    """Removed middle third of level `level`, `index`-th from the left"""
    model_config = ConfigDict(frozen=True)

    level: int
    index: int

    @model_validator(mode="before")
    @classmethod
    def parse_text(cls, data: Any) -> Any:
        # JSON reports carry addresses as "level:index"
        if isinstance(data, str):
            level, sep, index = data.partition(":")
            if not sep:
                raise ValueError(f"Gap address must look like 'level:index', got '{data}'")
            return {"level": int(level), "index": int(index)}
        return data

    @model_validator(mode="after")
    def check_range(self) -> "GapAddress":
        if self.level < 1:
            raise ValueError(f"Gap level must be positive, got {self.level}")
        if not (0 <= self.index < 2 ** (self.level - 1)):
            raise ValueError(f"Gap index {self.index} out of range for level {self.level}")
        return self

    @model_serializer(when_used="json")
    def to_text(self) -> str:
        return str(self)

    def __str__(self) -> str:
        return f"{self.level}:{self.index}"


class CantorLocation(BaseModel):
    """Either InCantor or InGap(address, offset = x - gap.left)"""
    model_config = ConfigDict(frozen=True)

    in_cantor: bool
    address: Optional[GapAddress] = None
    offset: Optional[ExactRational] = None

    @model_validator(mode="after")
    def check_variant(self) -> "CantorLocation":
        if self.in_cantor:
            if self.address is not None or self.offset is not None:
                raise ValueError("InCantor carries no gap address")
            return self
        if self.address is None or self.offset is None:
            raise ValueError("InGap needs both address and offset")
        if not (0 < self.offset * 3 ** self.address.level < 1):
            raise ValueError(f"Offset {rat_to_text(self.offset)} outside gap {self.address}")
        return self

    @classmethod
    def inside_cantor(cls) -> "CantorLocation":
        return cls(in_cantor=True)

    @classmethod
    def inside_gap(cls, address: GapAddress, offset) -> "CantorLocation":
        return cls(in_cantor=False, address=address, offset=offset)
