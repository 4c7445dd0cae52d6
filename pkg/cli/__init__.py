"""
Binrec CLI

argparse surface over the pipelines: compute, formats, enumerate, verify,
shapes, spectral, growth and plotdata.
"""

from cli.commands import (
    HANDLERS,
    Command,
    RunConfig,
    cmd_compute,
    cmd_enumerate,
    cmd_formats,
    cmd_growth,
    cmd_plotdata,
    cmd_shapes,
    cmd_spectral,
    cmd_verify,
)
from cli.main import build_parser, main, parse_config
from cli.output import OutputFormat, Table, emit

__all__ = [
    # Entry point
    "main",
    "build_parser",
    "parse_config",
    # Commands
    "Command",
    "RunConfig",
    "HANDLERS",
    "cmd_compute",
    "cmd_formats",
    "cmd_enumerate",
    "cmd_verify",
    "cmd_shapes",
    "cmd_spectral",
    "cmd_growth",
    "cmd_plotdata",
    # Output
    "OutputFormat",
    "Table",
    "emit",
]
