import argparse

from cantor_oscillator.models.oscillator import WitnessCertificate
from cantor_oscillator.models.run import CommandResult, RunConfig
from cantor_oscillator.services.export_service import ExportService
from cantor_oscillator.services.oscillator_service import OscillatorService
from cantor_oscillator.utils.errors import ExitCode
from cantor_oscillator.utils.exact import rat_to_decimal


def register(subparsers, common: argparse.ArgumentParser, rational) -> None:
    parser = subparsers.add_parser(
        "witness", parents=[common], help="Certificate that absolute continuity fails for one (epsilon, delta)"
    )
    parser.add_argument("--delta", type=rational, required=True, help="Challenged delta as p/q")
    parser.add_argument("--epsilon", type=rational, required=True, help="Epsilon as p/q")
    parser.set_defaults(handler=handle)


def handle(config: RunConfig) -> CommandResult:
    """
    Emit the witness family as JSON with every rational as exact "p/q" text.

    Exit code 0 only when the independent re-check passes.
    """
    family = OscillatorService.witness_family(config.delta, config.epsilon, config.policy)
    verified = OscillatorService.verify_witness(family, config.policy)
    floats = {
        name: rat_to_decimal(getattr(family, name), config.float_digits)
        for name in ("delta", "epsilon", "delta_bar", "length_sum", "variation_sum", "harmonic_sum")
    }
    certificate = WitnessCertificate(
        policy=config.policy,
        family=ExportService.witness_with_floats(family, config.float_digits),
        verified=verified,
        floats=floats,
    )
    return CommandResult(
        output=certificate.model_dump_json(indent=2) + "\n",
        exit_code=ExitCode.OK if verified else ExitCode.VERIFICATION_FAILED,
    )
