"""
Command-line dispatch.

Exit codes depend on the verdict only: 0 when every check passes, 1 when a
check fails or an internal consistency check trips, 2 on caller errors.
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence, Tuple

import cli.commands  # noqa: F401  (registers the commands)
from chern.calculus import BASIS_TAG
from cli.registry import Command, command_registry
from cli.render import render_json, render_text, report_envelope
from cohomology.errors import InputError, InvariantViolationError, ThetaCalcError
from config.logging_setup import configure_logging
from storage.report_store import report_store

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

ENVELOPE_FIELDS = {"command", "input", "report", "digest"}


def _common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", metavar="FILE", help="read the input from a JSON file instead of flags")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--basis", choices=(BASIS_TAG,), default=BASIS_TAG,
                        help="coefficient basis of every class (only divided-power)")
    parser.add_argument("--output", metavar="FILE", help="also write the JSON report here")
    parser.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> Tuple[argparse.ArgumentParser, Dict[str, List[str]]]:
    """The parser, plus the inline-input flag destinations of every command"""
    parser = argparse.ArgumentParser(
        prog="theta-calc",
        description="Exact Chern class and Fourier-Mukai calculus on principally polarized abelian varieties",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    inline: Dict[str, List[str]] = {}
    for name in command_registry.names():
        command = command_registry.lookup(name)
        sub = subparsers.add_parser(name, help=command.help)
        first = len(sub._actions)
        command.add_arguments(sub)
        inline[name] = [action.dest for action in sub._actions[first:]]
        _common_arguments(sub)
    return parser, inline


def _uses_inline_flags(args: argparse.Namespace, dests: Sequence[str]) -> List[str]:
    return [dest for dest in dests if getattr(args, dest, None) not in (None, False, [])]


def _read_spec(command: Command, path: str, defaults: dict):
    doc = report_store.read(path)
    pointer = "$"
    if isinstance(doc, dict) and set(doc) == ENVELOPE_FIELDS:
        if doc["command"] != command.name:
            raise InputError(
                f"report was produced by {doc['command']!r}, not {command.name!r}", "$.command"
            )
        doc, pointer = doc["input"], "$.input"
    return command.input_type.from_document(doc, pointer, **defaults)


def execute(args: argparse.Namespace, inline: Dict[str, List[str]]) -> int:
    command = command_registry.lookup(args.command)
    defaults = command.defaults() if command.defaults else {}
    if args.spec:
        conflicting = _uses_inline_flags(args, inline[command.name])
        if conflicting:
            flag = "--" + conflicting[0].replace("_", "-")
            raise InputError("inline flags cannot be combined with --spec", flag)
        spec_input = _read_spec(command, args.spec, defaults)
    else:
        spec_input = command.input_type.from_flags(args, **defaults)

    logger.debug("running %s on %s", command.name, spec_input)
    report = command.handler(spec_input)
    envelope = report_envelope(command.name, spec_input.to_document(), report)
    if args.output:
        report_store.write(args.output, envelope)
    if args.format == "json":
        sys.stdout.write(render_json(envelope))
    else:
        sys.stdout.write(render_text(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser, inline = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT

    try:
        configure_logging(args.verbose)
        return execute(args, inline)
    except InvariantViolationError as exc:
        logger.error("internal consistency check failed: %s", exc)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ThetaCalcError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
