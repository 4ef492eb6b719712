import sys

from cli import execute, parse_args
from utils import get_logger
from utils.errors import UsageError


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_args(argv)
    except UsageError as e:
        get_logger().error(f"usage: {e}")
        return e.exit_code
    return execute(cmd)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
