from .parser import Command, SweepSpec, build_parser, parse_args
from .command_builder import COMMANDS, build_command
from .writers import Table, render, to_csv, to_json
from . import commands
from .runner import execute
