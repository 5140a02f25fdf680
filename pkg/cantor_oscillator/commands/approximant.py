import argparse

from cantor_oscillator.models.run import CommandResult, OutputFormat, RunConfig
from cantor_oscillator.services.export_service import ExportService
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.utils import config as settings
from cantor_oscillator.utils.errors import PreconditionError


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "approximant", parents=[common], help="Export the step-n approximant as CSV, JSON or SVG"
    )
    parser.add_argument("--level", type=int, required=True, help="Construction step n")
    parser.set_defaults(handler=handle)


def handle(config: RunConfig) -> CommandResult:
    """
    Build f_n and render it.

    CSV: `x_exact,y_exact,x_float,y_float`, one row per breakpoint.
    JSON: breakpoint array with exact and float values.
    SVG: one polyline over [0,1] x [-1.3, 1.3] on a 1000 x 600 canvas.
    """
    level = config.level
    if not 1 <= level <= settings.MAX_APPROXIMANT_LEVEL:
        raise PreconditionError(f"Level must be in [1, {settings.MAX_APPROXIMANT_LEVEL}], got {level}")

    f = OscillatorService.approximant(level, config.policy)
    output_format = config.format or OutputFormat.CSV
    if output_format == OutputFormat.JSON:
        return CommandResult(output=ExportService.to_json(f, level, config.policy, config.float_digits) + "\n")
    if output_format == OutputFormat.SVG:
        return CommandResult(output=ExportService.to_svg(f, level, config.policy))
    return CommandResult(output=ExportService.to_csv(f, config.float_digits))
