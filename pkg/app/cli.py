"""Command-line interface: ``msemigroups <command> <semigroup> [options]``.

Semigroups are given as generators (``5,7,9``), gaps
(``gaps:1,2,3,4,6,8,11,13``) or coordinates (``kunz:5:16,7,18,9``).
Results go to stdout, logs and diagnostics to stderr. Exit status is 0 on
success, 1 when the input is rejected by the library and 2 on usage errors.
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

import structlog
from pydantic import BaseModel

from app.api.services.semigroup_service import SemigroupService
from app.api.utils.logger import setup_logging
from app.semigroups.errors import SemigroupError

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the command from being reset by the
    # subparser's default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "json"],
        default=argparse.SUPPRESS,
        help="output format (default: text)",
    )
    common.add_argument(
        "--verify",
        action="store_true",
        default=argparse.SUPPRESS,
        help="re-run the brute-force oracle and report differences",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=argparse.SUPPRESS,
        help="worker threads for frontier expansion (default: 1)",
    )
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=argparse.SUPPRESS,
        help="log level on stderr (default: ERROR)",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="msemigroups",
        description="Numerical semigroups with fixed multiplicity",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def semigroup_command(name: str, help: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help, parents=[common])
        sub.add_argument("semigroup", help="generators, gaps:... or kunz:M:...")
        return sub

    def pair_command(name: str, help: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help, parents=[common])
        sub.add_argument("m", type=int, help="multiplicity")
        sub.add_argument("frobenius", type=int, help="Frobenius number")
        return sub

    semigroup_command("info", "multiplicity, Frobenius number, genus, gaps")
    semigroup_command("pf", "pseudo-Frobenius numbers")
    semigroup_command("special-gaps", "gaps x with S ∪ {x} a semigroup")
    over = semigroup_command("oversemigroups", "oversemigroups of multiplicity m")
    over.add_argument("--limit", type=int, default=None, help="fail above N results")
    semigroup_command("irreducible", "is S irreducible")
    semigroup_command("m-irreducible", "is S irreducible among multiplicity m")
    semigroup_command("classify", "m-symmetric, m-pseudosymmetric or neither")
    pair_command("min-genus", "least genus for multiplicity M and Frobenius F")
    pair_command("maximal", "maximal semigroups with multiplicity M, Frobenius F")
    decompose = semigroup_command("decompose", "minimal m-irreducible decomposition")
    decompose.add_argument(
        "--all-minimals",
        action="store_true",
        help="also list every minimal m-irreducible oversemigroup",
    )
    return parser


def _join(values) -> str:
    return " ".join(str(v) for v in values)


def _coords(values) -> str:
    return ",".join(str(v) for v in values)


def _verification_lines(result) -> List[str]:
    report = getattr(result, "verification", None)
    if report is None:
        return []
    if report.agrees:
        return ["verify: agrees"]
    return [
        f"verify: disagrees missing=[{_join(report.missing)}] "
        f"unexpected=[{_join(report.unexpected)}]"
    ]


def _render_info(result, args) -> List[str]:
    frob = result.semigroup.frobenius
    return [
        f"semigroup: {result.specifier}",
        f"multiplicity: {result.semigroup.m}",
        f"frobenius: {'none' if frob is None else frob}",
        f"genus: {result.semigroup.genus}",
        f"gaps: {_join(result.gaps)}".rstrip(),
        f"coordinates: {_coords(result.semigroup.coords)}".rstrip(),
        f"apery-set: {_join(result.apery_set)}",
        f"elements: {_join(result.small_elements)} ->",
    ]


def _render_decomposition(result, args) -> List[str]:
    lines = [f"target: {_join(result.target)}".rstrip()]
    if args.all_minimals:
        for coords, p in zip(result.minimals, result.minimal_p_sets):
            lines.append(f"minimal: {_coords(coords)} excludes: {_join(p)}".rstrip())
    for coords, p in zip(result.components, result.p_sets):
        lines.append(f"component: {_coords(coords)} excludes: {_join(p)}".rstrip())
    return lines


RENDERERS: Dict[str, Callable[[BaseModel, argparse.Namespace], List[str]]] = {
    "info": _render_info,
    "pf": lambda r, a: [_join(r.elements)],
    "special-gaps": lambda r, a: [_join(r.elements)],
    "oversemigroups": lambda r, a: [_coords(c) for c in r.oversemigroups],
    "irreducible": lambda r, a: ["true" if r.result else "false"],
    "m-irreducible": lambda r, a: ["true" if r.result else "false"],
    "classify": lambda r, a: [r.label],
    "min-genus": lambda r, a: [str(r.min_genus)],
    "maximal": lambda r, a: [_coords(c) for c in r.maximal],
    "decompose": _render_decomposition,
}


def _dispatch(service: SemigroupService, args: argparse.Namespace, verify: bool):
    command = args.command
    if command == "info":
        return service.info(args.semigroup, verify=verify)
    if command == "pf":
        return service.pseudo_frobenius(args.semigroup, verify=verify)
    if command == "special-gaps":
        return service.special_gaps(args.semigroup, verify=verify)
    if command == "oversemigroups":
        return service.oversemigroups(args.semigroup, limit=args.limit, verify=verify)
    if command == "irreducible":
        return service.irreducible(args.semigroup, verify=verify)
    if command == "m-irreducible":
        return service.m_irreducible(args.semigroup, verify=verify)
    if command == "classify":
        return service.classify(args.semigroup, verify=verify)
    if command == "min-genus":
        return service.min_genus(args.m, args.frobenius, verify=verify)
    if command == "maximal":
        return service.maximal(args.m, args.frobenius, verify=verify)
    if command == "decompose":
        return service.decompose(args.semigroup, verify=verify)
    raise AssertionError(f"unhandled command {command}")


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run one command and return the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code == 0 else EXIT_USAGE

    output_format = getattr(args, "format", "text")
    verify = getattr(args, "verify", False)
    threads = getattr(args, "threads", 1)
    setup_logging(stream=sys.stderr, level=getattr(args, "log_level", "ERROR"))

    if threads < 1:
        parser.print_usage(sys.stderr)
        print("msemigroups: error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "limit", None) is not None and args.limit < 1:
        parser.print_usage(sys.stderr)
        print("msemigroups: error: --limit must be positive", file=sys.stderr)
        return EXIT_USAGE

    service = SemigroupService(threads=threads)
    try:
        result = _dispatch(service, args, verify)
    except SemigroupError as e:
        print(f"{e.name}: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    if output_format == "json":
        payload = result.model_dump()
        if payload.get("verification", False) is None:
            del payload["verification"]
        print(json.dumps(payload, indent=2))
    else:
        lines = RENDERERS[args.command](result, args) + _verification_lines(result)
        for line in lines:
            print(line)
    logger.debug("Command finished", command=args.command)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
