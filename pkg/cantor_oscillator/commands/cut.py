import argparse

from cantor_oscillator.models.run import CommandResult, RunConfig
from cantor_oscillator.services.export_service import ExportService
from cantor_oscillator.services.oscillator_service import OscillatorService


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "cut", parents=[common], help="Search both signs of f around a Cantor point"
    )
    parser.add_argument("x", type=rational, help="Cantor point as p/q")
    parser.add_argument("--depth", type=int, default=4, help="Radii 3^-1 .. 3^-depth")
    parser.set_defaults(handler=handle)


def handle(config: RunConfig) -> CommandResult:
    # a one-sided report is a finding about the orientation, not a failure
    report = OscillatorService.verify_cut(config.x, config.depth, config.policy)
    report = ExportService.cut_report_with_floats(report, config.float_digits)
    return CommandResult(output=report.model_dump_json(indent=2) + "\n")
