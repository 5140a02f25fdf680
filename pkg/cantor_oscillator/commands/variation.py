import argparse
import logging

from cantor_oscillator.models.oscillator import VariationRow
from cantor_oscillator.models.run import CommandResult, OutputFormat, RunConfig
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.services.pl_service import PLService
from cantor_oscillator.utils import config as settings
from cantor_oscillator.utils.errors import ExitCode, PreconditionError
from cantor_oscillator.utils.exact import rat_to_decimal, rat_to_text

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "variation", parents=[common], help="Tabulate V(f_n) with the closed form checked against the breakpoint sum"
    )
    parser.add_argument("--max-level", type=int, required=True, help="Largest n to tabulate")
    parser.set_defaults(handler=handle)


def handle(config: RunConfig) -> CommandResult:
    max_level = config.max_level
    if not 1 <= max_level <= settings.MAX_VARIATION_LEVEL:
        raise PreconditionError(f"max level must be in [1, {settings.MAX_VARIATION_LEVEL}], got {max_level}")

    rows = []
    for n in range(1, max_level + 1):
        exact = OscillatorService.variation_closed_form(n)
        oracle = PLService.pl_total_variation(OscillatorService.approximant(n, config.policy))
        rows.append(VariationRow(
            n=n,
            exact=exact,
            float_value=rat_to_decimal(exact, config.float_digits),
            oracle=oracle,
            agrees=exact == oracle,
        ))

    increasing = all(a.exact < b.exact for a, b in zip(rows, rows[1:]))
    failed = not increasing or not all(row.agrees for row in rows)
    if failed:
        logger.error("Variation closed form disagrees with the breakpoint sum")

    if config.format == OutputFormat.JSON:
        output = "[\n" + ",\n".join(row.model_dump_json() for row in rows) + "\n]\n"
    else:
        lines = ["n,variation_exact,variation_float,agrees"]
        lines += [
            f"{row.n},{rat_to_text(row.exact)},{row.float_value},{str(row.agrees).lower()}"
            for row in rows
        ]
        output = "\n".join(lines) + "\n"
    return CommandResult(output=output, exit_code=ExitCode.VERIFICATION_FAILED if failed else ExitCode.OK)
