import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError as PydanticValidationError

from cantor_oscillator.commands import approximant, cut, evaluate, variation, verify, witness
from cantor_oscillator.models.oscillator import OrientationPolicy
from cantor_oscillator.models.run import CommandResult, OutputFormat, RunConfig
from cantor_oscillator.utils import config
from cantor_oscillator.utils.errors import ExitCode, RationalParseError, ToolkitError
from cantor_oscillator.utils.exact import rat_parse

# Configure logging
logging.basicConfig(level=config.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")
logger = logging.getLogger(__name__)

COMMAND_MODULES = [evaluate, approximant, variation, witness, cut, verify]


def rational_arg(text: str):
    """argparse type for exact "p/q" arguments"""
    try:
        return rat_parse(text)
    except RationalParseError as e:
        raise argparse.ArgumentTypeError(e.detail)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--policy",
        choices=[policy.value for policy in OrientationPolicy],
        default=config.DEFAULT_POLICY,
        help="Orientation of the fixed gap triangles (default: %(default)s)",
    )
    common.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], default=None)
    common.add_argument("--out", default=None, help="Write to this file instead of standard output")
    common.add_argument("--float-digits", type=int, default=config.FLOAT_DIGITS,
                        help="Significant digits of float companions (default: %(default)s)")

    parser = argparse.ArgumentParser(
        prog="cantor-oscillator",
        description="Exact construction and certificates for a continuous, non-absolutely-continuous "
                    "function vanishing on the Cantor set",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers, common, rational_arg)
    return parser


def write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as e:
        raise ToolkitError(f"Cannot write {out}: {e.strerror}", ExitCode.USAGE_ERROR)
    logger.info(f"Wrote {len(text)} characters to {out}")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand, return 0 (pass), 1 (verification failure) or 2 (usage error)"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage and 0 on --help
        return e.code if isinstance(e.code, int) else ExitCode.USAGE_ERROR

    options = {name: value for name, value in vars(args).items() if name in RunConfig.model_fields}
    try:
        run_config = RunConfig(**options)
    except PydanticValidationError as e:
        error = e.errors()[0]
        print(f"error: {'.'.join(str(part) for part in error['loc'])}: {error['msg']}", file=sys.stderr)
        return ExitCode.USAGE_ERROR

    try:
        result: CommandResult = args.handler(run_config)
        write_output(result.output, run_config.out)
    except ToolkitError as e:
        logger.error(f"{run_config.command.value} failed: {e.detail}")
        print(f"error: {e.detail}", file=sys.stderr)
        return int(e.exit_code)

    return int(result.exit_code)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
