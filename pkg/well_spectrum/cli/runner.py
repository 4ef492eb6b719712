import os.path as osp
import sys

from cli.command_builder import build_command
from cli.writers import render
from utils import create_dir, get_logger
from utils.errors import NumericDegeneracy, WellSpectrumError


def execute(cmd, stdout=None):
    """Run one command; data goes to ``cmd.output`` or ``stdout``, messages to stderr.

    With ``--output`` the INFO messages are also kept in ``log.txt`` beside the
    output file. Returns the process exit code.
    """
    stdout = sys.stdout if stdout is None else stdout
    log_dir = None
    if cmd.output is not None:
        log_dir = osp.dirname(cmd.output) or "."
        create_dir(log_dir)
    logger = get_logger(output_path=log_dir, level=cmd.log_level)
    logger.debug(cmd)
    try:
        handler = build_command(cmd)
        text = render(handler(cmd, logger), cmd.fmt)
    except WellSpectrumError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ArithmeticError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return NumericDegeneracy.exit_code

    if cmd.output is None:
        stdout.write(text)
        return 0
    with open(cmd.output, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(text)
    logger.info(f"Output Path:{cmd.output}")
    return 0
