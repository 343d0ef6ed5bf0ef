import argparse
import json
import logging
import sys
from typing import List, Optional

from agnostic_hexagon import __version__
from agnostic_hexagon.cli.config import load_config
from agnostic_hexagon.cli.render import HexagonState, render_hexagon
from agnostic_hexagon.cli.runner import (
    check,
    demo_consonance_failure,
    hexagon_states,
    render_report,
    render_states,
    run,
    witness_to_text,
)
from agnostic_hexagon.config import ConfigurationError, RegistrableError
from agnostic_hexagon.decisions.loss import CutoffPair, LossSpec
from agnostic_hexagon.errors import AgnosticError
from agnostic_hexagon.lattice.expressions import ExpressionError
from agnostic_hexagon.modality.verdict import ModalVerdict

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INCONSISTENT = 2
EXIT_CONFIG = 3
EXIT_EVALUATION = 4


def _add_config_arguments(subparser: argparse.ArgumentParser) -> None:
    subparser.add_argument(
        "config",
        nargs="?",
        default=None,
        help="Run configuration (json or jsonnet), read from standard input when omitted or '-'.",
    )
    subparser.add_argument("--output", choices=["text", "json", "svg"], default=None)
    subparser.add_argument("--seed", type=int, default=None)
    cutoffs = subparser.add_mutually_exclusive_group()
    cutoffs.add_argument("--loss-a", type=float, default=None, help="Loss of rejecting a true hypothesis.")
    cutoffs.add_argument("--c1", type=float, default=None, help="Posterior acceptance cutoff.")
    subparser.add_argument("--loss-b", type=float, default=None, help="Loss of remaining agnostic.")
    subparser.add_argument("--c2", type=float, default=None, help="Posterior rejection cutoff.")
    subparser.add_argument("--cutoff-c", type=float, default=None, help="e-value cutoff c.")
    subparser.add_argument("--tie-tolerance", type=float, default=None)
    subparser.add_argument("--reference", choices=["uniform", "from-grid"], default=None)


parser = argparse.ArgumentParser(
    prog="agnostic-hexagon",
    description="Agnostic hypothesis tests over finite parameter grids.",
)
parser.add_argument("-v", "--verbose", action="store_true", help="Log progress information.")
parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors.")
subparsers = parser.add_subparsers(dest="command", required=True)

run_parser = subparsers.add_parser("run", help="Evaluate the configured hypotheses.")
_add_config_arguments(run_parser)

check_parser = subparsers.add_parser("check", help="Check the logical consistency of a test.")
_add_config_arguments(check_parser)

demo_parser = subparsers.add_parser("demo", help="Demonstrations.")
demo_subparsers = demo_parser.add_subparsers(dest="demo", required=True)
witness_parser = demo_subparsers.add_parser(
    "consonance-failure", help="Partition witnessing that posterior cutoff tests are not consonant."
)
witness_parser.add_argument("--c1", type=float, default=None)
witness_parser.add_argument("--c2", type=float, default=None)
witness_parser.add_argument("--loss-a", type=float, default=None)
witness_parser.add_argument("--loss-b", type=float, default=None)
witness_parser.add_argument("-n", type=int, default=None, help="Number of parts.")
witness_parser.add_argument("--output", choices=["text", "json"], default="text")

hexagon_parser = subparsers.add_parser("hexagon", help="Draw hexagons of oppositions.")
hexagon_parser.add_argument(
    "config", nargs="?", default=None, help="Run configuration whose hypotheses are drawn."
)
hexagon_parser.add_argument("--verdict", default=None, help="Draw the hexagon of a bare verdict.")
hexagon_parser.add_argument("--label", default="H")
hexagon_parser.add_argument(
    "--nested", action="store_true", help="Nest the posterior probability hexagon inside."
)
hexagon_parser.add_argument("--output", choices=["text", "svg"], default="text")

subparsers.add_parser("version", help="Print the version.")


def _overrides(args: argparse.Namespace) -> dict:
    return {
        "output": args.output,
        "seed": args.seed,
        "a": args.loss_a,
        "b": args.loss_b,
        "c1": args.c1,
        "c2": args.c2,
        "c": args.cutoff_c,
        "tie_tolerance": args.tie_tolerance,
        "reference": args.reference,
    }


def _write(document: str) -> None:
    sys.stdout.write(document)


def run_command(args: argparse.Namespace) -> int:
    config = load_config(args.config, _overrides(args))
    _write(render_report(run(config), config.output))
    return EXIT_OK


def check_command(args: argparse.Namespace) -> int:
    config = load_config(args.config, _overrides(args))
    if config.output == "svg":
        raise ConfigurationError("Consistency reports are written as text or json.")
    report, grid = check(config)
    _write(report.to_json(grid) + "\n" if config.output == "json" else report.to_text(grid) + "\n")
    return EXIT_OK if report.overall else EXIT_INCONSISTENT


def demo_command(args: argparse.Namespace) -> int:
    has_loss = args.loss_a is not None or args.loss_b is not None
    has_cuts = args.c1 is not None or args.c2 is not None
    if has_loss == has_cuts:
        raise ConfigurationError("Give either --loss-a and --loss-b, or --c1 and --c2.")
    try:
        if has_loss:
            if args.loss_a is None or args.loss_b is None:
                raise ConfigurationError("A loss needs both --loss-a and --loss-b.")
            loss, cuts = LossSpec(args.loss_a, args.loss_b), None
        else:
            if args.c2 is None:
                raise ConfigurationError("The demonstration needs a rejection cutoff --c2.")
            c1 = args.c1 if args.c1 is not None else max(args.c2, 1.0 - args.c2)
            loss, cuts = None, CutoffPair(c1, args.c2)
    except AgnosticError as e:
        raise ConfigurationError(str(e)) from e
    _, summary = demo_consonance_failure(cuts=cuts, loss=loss, n=args.n)
    if args.output == "json":
        _write(json.dumps(summary, indent=2, ensure_ascii=False) + "\n")
    else:
        _write(witness_to_text(summary))
    return EXIT_OK


def hexagon_command(args: argparse.Namespace) -> int:
    format = "ascii" if args.output == "text" else "svg"
    if (args.verdict is None) == (args.config is None):
        raise ConfigurationError("Draw either a --verdict or the hypotheses of a configuration.")
    if args.verdict is not None:
        if args.nested:
            raise ConfigurationError("Nested hexagons are drawn from a configuration.")
        try:
            verdict = ModalVerdict.from_value(args.verdict)
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
        _write(render_hexagon(HexagonState.from_verdict(verdict, label=args.label), format))
        return EXIT_OK
    config = load_config(args.config)
    _write(render_states(hexagon_states(config, nested=args.nested), format))
    return EXIT_OK


def version_command(args: argparse.Namespace) -> int:
    _write(f"agnostic_hexagon {__version__}\n")
    return EXIT_OK


COMMANDS = {
    "run": run_command,
    "check": check_command,
    "demo": demo_command,
    "hexagon": hexagon_command,
    "version": version_command,
}


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.WARNING
    if verbose:
        level = logging.INFO
    if quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    try:
        return COMMANDS[args.command](args)
    except (ConfigurationError, RegistrableError, ExpressionError) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except AgnosticError as e:
        logger.error(f"Evaluation error: {e}")
        return EXIT_EVALUATION


if __name__ == "__main__":
    sys.exit(main())
