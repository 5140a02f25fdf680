import argparse

from cantor_oscillator.models.run import CommandResult, RunConfig
from cantor_oscillator.services.verification_service import VerificationService
from cantor_oscillator.utils import config as settings
from cantor_oscillator.utils.errors import ExitCode, PreconditionError


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "verify", parents=[common], help="Run every invariant suite and print a JSON summary"
    )
    parser.add_argument("--max-level", type=int, default=8, help="Deepest construction step to check")
    parser.set_defaults(handler=handle)


def handle(config: RunConfig) -> CommandResult:
    if not 1 <= config.max_level <= settings.MAX_VERIFY_LEVEL:
        raise PreconditionError(f"max level must be in [1, {settings.MAX_VERIFY_LEVEL}], got {config.max_level}")
    summary = VerificationService.run_all(config.max_level)
    return CommandResult(
        output=summary.model_dump_json(indent=2) + "\n",
        exit_code=ExitCode.OK if summary.passed else ExitCode.VERIFICATION_FAILED,
    )
