"""
Reidemeister Toolkit - command-line entry point
Parses arguments, runs one command and prints its report
"""

import argparse
import json
import sys
from typing import List, Optional

from dotenv import load_dotenv

from reidemeister import __version__
from reidemeister.cli.commands import COMMANDS, CommandResult
from reidemeister.shared.config.paths import ENV_FILE
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import ReidemeisterError, VerificationError
from reidemeister.shared.logging import configure_logging, get_logger
from reidemeister.shared.utils.error_logger import log_full_error

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reidemeister",
        description="Twisted conjugacy classes, Reidemeister numbers, twisted Burnside-Frobenius checks, "
                    "separability certificates, Mobius congruences and dynamical zeta functions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="print the machine-readable report")
    parser.add_argument("--log-level", default=None, help="override REIDEMEISTER_LOG_LEVEL (default WARNING)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twisted", help="twisted conjugacy classes of a finite group automorphism")
    p.add_argument("group", help="group description file (JSON)")
    p.add_argument("automorphism", help="automorphism description file (JSON)")
    p.add_argument("--decide", nargs=2, type=int, metavar=("X", "Y"), help="decide whether X and Y are twisted conjugate")
    p.add_argument("--exhaustive", action="store_true", help="union every (g, x) pair instead of generator edges")

    p = sub.add_parser("tbft", help="check R(phi) = S_f(phi) on the dual")
    p.add_argument("group")
    p.add_argument("automorphism", nargs="?", default=None, help="defaults to the identity")
    p.add_argument("--all-automorphisms", action="store_true")
    p.add_argument("--prime", type=int, default=None, help="override the prime used for central characters")

    p = sub.add_parser("zeta", help="closed forms and expansions of dynamical zeta functions")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--lefschetz", metavar="FILE", help="homology maps file")
    source.add_argument("--floer", nargs=2, metavar=("M", "VALUES"), help="period m and N-values, e.g. 2 1,3")
    source.add_argument("--reidemeister", metavar="FILE", help="matrix file; expands the Reidemeister zeta series")
    source.add_argument("--nielsen", metavar="VALUES", help="comma-separated Nielsen numbers N(phi^n)")
    p.add_argument("--order", type=int, default=None, help="truncation order (default 30, at most 128)")

    p = sub.add_parser("congruence", help="audit sum_(d|n) mu(d) a_(n/d) = 0 mod n")
    p.add_argument("matrix", nargs="?", default=None, help="matrix file for R(M^n)")
    p.add_argument("--group", default=None)
    p.add_argument("--automorphism", default=None)
    p.add_argument("--lefschetz", metavar="FILE", default=None, help="audit Lefschetz numbers instead")
    p.add_argument("--max-n", type=int, default=None)

    p = sub.add_parser("separate", help="separate twisted classes of a lattice automorphism in a finite quotient")
    p.add_argument("matrix")
    p.add_argument("x", nargs="?", default=None, help="integer vector, e.g. 1,-2")
    p.add_argument("y", nargs="?", default=None)
    p.add_argument("--rp", action="store_true", help="build and verify an RP certificate")
    p.add_argument("--k-max", type=int, default=None, help="largest modulus to try")

    p = sub.add_parser("lemma-check", help="twisted classes of G against classes of G x| Z_m in the coset G t")
    p.add_argument("group")
    p.add_argument("automorphism")
    p.add_argument("--m", type=int, default=None, help="cyclic factor order (default: order of phi)")

    p = sub.add_parser("autlist", help="enumerate the automorphisms of a finite group")
    p.add_argument("group")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("sweep", help="run the acceptance sweeps over the standard groups")
    p.add_argument("--quick", action="store_true", help="groups of order at most 12 and 10 matrices")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-lattice", action="store_true")

    return parser


def render(result: CommandResult, as_json: bool) -> str:
    if as_json:
        payload = result.report.model_dump(mode="json", by_alias=True)
        return json.dumps(payload, sort_keys=True, indent=2)
    return result.text


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv(ENV_FILE)
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.log_level, settings.log_format)

    handler = COMMANDS[args.command]
    try:
        result = handler(args)
    except VerificationError as e:
        log_full_error(e, {"command": args.command}, log_level="debug")
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERDICT
    except ReidemeisterError as e:
        log_full_error(e, {"command": args.command}, log_level="debug")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(render(result, args.json))
    if result.exit_code:
        logger.warning("⚠️ verdict failed", command=args.command)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
