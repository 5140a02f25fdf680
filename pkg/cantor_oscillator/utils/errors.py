from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    OK = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2


class ToolkitError(Exception):
    """Base error carrying a detail message and the exit code the CLI reports"""

    exit_code: ExitCode = ExitCode.USAGE_ERROR

    def __init__(self, detail: str, exit_code: Optional[ExitCode] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class ConstructionError(ToolkitError):
    pass


class ArithmeticDomainError(ToolkitError):
    pass


class RationalParseError(ToolkitError):
    pass


class DomainError(ToolkitError):
    pass


class AddressError(ToolkitError):
    pass


class ValidationError(ToolkitError):
    pass


class PreconditionError(ToolkitError):
    pass


class InternalError(ToolkitError):
    exit_code = ExitCode.VERIFICATION_FAILED
