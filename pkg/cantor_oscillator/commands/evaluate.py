import argparse

from cantor_oscillator.models.export import LocateResult, PointValue
from cantor_oscillator.models.run import CommandResult, OutputFormat, RunConfig
from cantor_oscillator.services.cantor_service import CantorService
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.utils.exact import rat_to_decimal, rat_to_display


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "eval", parents=[common], help="Exact value of the limit function at a rational point"
    )
    parser.add_argument("x", type=rational, help="Point in [0, 1] as p/q")
    parser.set_defaults(handler=handle_eval)

    parser = subparsers.add_parser(
        "locate", parents=[common], help="Cantor membership, or the removed gap containing a point"
    )
    parser.add_argument("x", type=rational, help="Point in [0, 1] as p/q")
    parser.set_defaults(handler=handle_locate)


def handle_eval(config: RunConfig) -> CommandResult:
    """
    Evaluate f(x) exactly without any limiting process.

    Prints the shortest exact text (`-7/6`, `0`); with `--format json` prints the
    value with its float companion.
    """
    value = OscillatorService.eval_limit(config.x, config.policy)
    if config.format == OutputFormat.JSON:
        point = PointValue(
            x=config.x,
            policy=config.policy,
            value=value,
            value_float=rat_to_decimal(value, config.float_digits),
        )
        return CommandResult(output=point.model_dump_json(indent=2) + "\n")
    return CommandResult(output=rat_to_display(value) + "\n")


def handle_locate(config: RunConfig) -> CommandResult:
    location = CantorService.cantor_membership(config.x)
    if location.in_cantor:
        result = LocateResult(x=config.x, in_cantor=True)
    else:
        result = LocateResult(
            x=config.x,
            in_cantor=False,
            address=location.address,
            gap=CantorService.gap_interval(location.address),
            offset=location.offset,
        )
    return CommandResult(output=result.model_dump_json(indent=2) + "\n")
