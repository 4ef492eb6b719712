__all__ = [
    'build_command'
]

from utils import Registry
from utils.errors import UsageError

COMMANDS = Registry()

def build_command(cmd):
    if cmd.verb not in COMMANDS:
        raise UsageError(f"no handler registered for {cmd.verb!r}")
    return COMMANDS[cmd.verb]
