import logging
import os
import sys

LOGGER_NAME = "well_spectrum"


def get_logger(output_path=None, level="INFO"):
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    # handlers from a previous call (tests, repeated commands) are replaced
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    logger.addHandler(console_handler)
    if output_path is not None:
        log_file = os.path.join(output_path, "log.txt")
        fh = logging.FileHandler(log_file)
        fh.setLevel(logging.INFO)
        fh.setFormatter(logging.Formatter("%(asctime)s:%(message)s", "%Y-%m-%d %H:%M:%S"))
        logger.addHandler(fh)

    return logger


def get_module_logger(name):
    return logging.getLogger(f"{LOGGER_NAME}.{name}")
