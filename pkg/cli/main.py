"""
Binrec Command Line

    binrec compute --x 1 --n 7
    binrec formats --n 6 --output json
    binrec verify --only shapes --x -1/2 --n 200
    binrec plotdata --x -1/2 --growth 150:300 --output csv

Exit codes: 0 success, 1 failed check or contract violation, 2 usage error.
Rationals cross the command line as "p/q" text; logs go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from config import settings
from exact_core import RationalParseError, parse_rational
from verification import ALL_CHECKS
from cli.commands import HANDLERS, Command, RunConfig
from cli.output import OutputFormat

logger = logging.getLogger("binrec.cli")


def _rational(text: str):
    try:
        return parse_rational(text)
    except RationalParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _index_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(lo), int(hi)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from e


def _attach_x(argv: Sequence[str]) -> List[str]:
    # "--x -1/2" would read as an option; glue the value on as "--x=-1/2"
    tokens = list(argv)
    out = []
    i = 0
    while i < len(tokens):
        if tokens[i] == "--x" and i + 1 < len(tokens):
            out.append(f"--x={tokens[i + 1]}")
            i += 2
        else:
            out.append(tokens[i])
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--x", type=_rational, default=None,
                        help='rational parameter as "p/q" text, e.g. "-1/2"')
    common.add_argument("--n", type=int, default=None, help="index (or upper index)")
    common.add_argument("--range", dest="n_range", type=_index_range, default=None,
                        metavar="LO:HI", help="inclusive index range")
    common.add_argument("--output", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.TABLE.value)
    common.add_argument("--float", dest="as_float", action="store_true",
                        help="print floats instead of exact rationals")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration cap (default BINREC_CAP or 12)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized sweeps (default BINREC_SEED)")
    common.add_argument("--log-level", default=None,
                        help="logging level (default BINREC_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="binrec",
        description="Exact evaluation, enumeration and spectral diagnostics "
                    "for the binomial recursion a_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="a_1..a_n exactly")
    sub.add_parser("formats", parents=[common], help="basic and binomial formats")
    sub.add_parser("enumerate", parents=[common], help="signature and array counts")
    verify = sub.add_parser("verify", parents=[common], help="run the invariant battery")
    verify.add_argument("--only", action="append", default=[], choices=list(ALL_CHECKS),
                        help="run only this check (repeatable)")
    sub.add_parser("shapes", parents=[common], help="shape events of S_n")
    sub.add_parser("spectral", parents=[common], help="projection angles and regimes")
    sub.add_parser("growth", parents=[common], help="growth slope of |a_n|/(n-1)!")
    plot = sub.add_parser("plotdata", parents=[common], help="CSV-ready plot data")
    plot.add_argument("--growth", type=_index_range, default=None, metavar="LO:HI",
                      help="emit theta_n, tan(theta_n), log r_n rows instead of s_n")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse argv into a RunConfig; usage errors exit with status 2."""
    parser = build_parser()
    args = parser.parse_args(_attach_x(sys.argv[1:] if argv is None else argv))
    cfg = RunConfig(
        command=Command(args.command),
        x=args.x,
        n=args.n,
        n_range=args.n_range,
        output=OutputFormat(args.output),
        as_float=args.as_float,
        cap=args.cap,
        seed=args.seed,
        only=list(getattr(args, "only", [])),
        growth=getattr(args, "growth", None),
        log_level=(args.log_level or settings.log_level).upper(),
    )
    errors: List[str] = cfg.validate() + settings.validate()
    if not isinstance(logging.getLevelName(cfg.log_level), int):
        errors.append(f"unknown log level '{cfg.log_level}'")
    if errors:
        parser.error("; ".join(errors))
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the binrec command."""
    cfg = parse_config(argv)
    logging.basicConfig(
        level=cfg.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    logger.debug(f"running {cfg.command.value} with {cfg.to_dict()}")

    handler = HANDLERS[cfg.command]
    try:
        return handler(cfg, sys.stdout)
    except ValueError as e:
        print(f"binrec {cfg.command.value}: {e}", file=sys.stderr)
        return 1
