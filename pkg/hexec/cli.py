# Copyright (c) 2026 The hexec Authors. All rights reserved.
import argparse
import logging
import sys

from hexec.common.config import READER_KINDS
from hexec.common.logger import (
    LOG_LEVELS,
    LOGGER_NAME,
    init_global_logging,
    reset_log,
    set_default_logging_levels,
)
from hexec.common.results import *
from hexec.convert import DATASETS
from hexec.convert import convert as hexec_convert
from hexec.execute import execute as hexec_exec
from hexec.load_config import ConfigGenerator, check_version
from hexec.parse import parse as hexec_parse
from hexec.score import score as hexec_eval
from hexec.serve import serve as hexec_serve
from hexec.version import (
    MAXIMUM_SUPPORTED_VERSION,
    MINIMUM_SUPPORTED_VERSION,
    NAME,
    VERSION,
)

# Known commands.
HEXEC_COMMANDS = ["parse", "exec", "convert", "eval", "serve"]


def run(cli_args: list):
    class SmartArgparserFormatter(
        argparse.RawTextHelpFormatter, argparse.ArgumentDefaultsHelpFormatter
    ):
        pass

    parser = argparse.ArgumentParser(
        prog="hexec",
        description=f"{NAME} {VERSION}\n\n"
        f"Supports run config hexec_version: {MINIMUM_SUPPORTED_VERSION} - {MAXIMUM_SUPPORTED_VERSION}",
        formatter_class=SmartArgparserFormatter,
    )

    parser.add_argument(
        "command",
        choices=HEXEC_COMMANDS,
        help="Which command to run.\n"
        "parse   - Parse and validate H-expressions (--expression or --input JSONL)\n"
        "exec    - Execute H-expressions against a reader (--input JSONL)\n"
        "convert - Build gold H-expressions from a dataset (--dataset, --input)\n"
        "eval    - Score predictions (--input predictions, optional --gold)\n"
        "serve   - Serve a local reader over HTTP with the reader wire protocol",
    )

    parser.add_argument(
        "-c",
        "--config",
        type=str,
        default=None,
        help="Run configuration (YAML). Command line flags take precedence.",
    )

    # Flags default to None so that values from --config are kept
    # unless the flag is given.
    general_opt = parser.add_argument_group("# General options")
    reader_opt = parser.add_argument_group("# Reader options")
    exec_opt = parser.add_argument_group("# Execution options")
    convert_opt = parser.add_argument_group("# Convert options")
    serve_opt = parser.add_argument_group("# Serve options")

    general_opt.add_argument(
        "-i", "--input", type=str, default=None, help="Input JSONL file ('-' for stdin)."
    )
    general_opt.add_argument(
        "-o", "--output", type=str, default=None, help="Output file (stdout when omitted)."
    )
    general_opt.add_argument(
        "-e",
        "--expression",
        type=str,
        default=None,
        help="A single H-expression to parse.",
    )
    general_opt.add_argument(
        "--gold", type=str, default=None, help="Gold answers JSONL for eval (joined on id)."
    )
    general_opt.add_argument(
        "--parallel",
        type=int,
        default=None,
        help="Items processed concurrently (default: number of processors).",
    )
    general_opt.add_argument(
        "--log-file", type=str, default=None, help="Log file (default: hexec.log)."
    )
    general_opt.add_argument(
        "--file-log-level",
        type=str,
        default="DEBUG",
        help="Set file log level.",
        choices=LOG_LEVELS,
    )
    general_opt.add_argument(
        "--stdout-log-level",
        type=str,
        default="INFO",
        help="Set console log level (logs go to stderr).",
        choices=LOG_LEVELS,
    )

    reader_opt.add_argument(
        "--reader", type=str, default=None, choices=READER_KINDS, help="Reader kind (default: oracle)."
    )
    reader_opt.add_argument(
        "--facts", type=str, default=None, help="Oracle fact store (JSONL of {question, answers})."
    )
    reader_opt.add_argument(
        "--script", type=str, default=None, help="Fixture script (JSONL of {pattern, candidates})."
    )
    reader_opt.add_argument(
        "--endpoint", type=str, default=None, help="Remote reader URL."
    )
    reader_opt.add_argument(
        "--timeout", type=float, default=None, help="Remote reader timeout in seconds (default: 30)."
    )
    reader_opt.add_argument(
        "--retries", type=int, default=None, help="Remote reader retries (default: 2)."
    )

    exec_opt.add_argument(
        "--top-k", type=int, default=None, help="Reader candidates per primitive (default: 5)."
    )
    exec_opt.add_argument(
        "--fallback",
        type=int,
        default=None,
        help="Maximum candidate expressions tried per item (default: 10).",
    )
    exec_opt.add_argument(
        "--trace-dir", type=str, default=None, help="Write one JSON trace per item here."
    )
    exec_opt.add_argument(
        "--placeholder-a",
        action="store_const",
        const=True,
        default=None,
        help="Also recognise 'A1' style placeholders.",
    )
    exec_opt.add_argument(
        "--max-depth", type=int, default=None, help="Maximum expression depth (default: 16)."
    )

    convert_opt.add_argument(
        "--dataset", type=str, default=None, choices=DATASETS, help="Dataset to convert."
    )
    convert_opt.add_argument(
        "--templates", type=str, default=None, help="Question templates (YAML)."
    )
    convert_opt.add_argument(
        "--facts-out",
        type=str,
        default=None,
        help="Also write the records' own answers as an oracle fact store.",
    )

    serve_opt.add_argument(
        "--host", type=str, default=None, help="Address to bind (default: 0.0.0.0)."
    )
    serve_opt.add_argument(
        "--port", type=int, default=None, help="Port to listen on (default: 8100)."
    )
    serve_opt.add_argument(
        "--prometheus-disabled",
        action="store_const",
        const=True,
        default=None,
        help="Don't expose /metrics.",
    )

    if len(cli_args) == 0:
        parser.print_help(sys.stderr)
        return RESULT_OK

    try:
        args = parser.parse_args(cli_args)
    except SystemExit as e:
        if "--help" in cli_args or "-h" in cli_args:
            return RESULT_OK
        raise HexecExceptionArgumentsError(f"Bad arguments {cli_args}") from e

    reset_log(args.log_file)
    set_default_logging_levels(args.file_log_level, args.stdout_log_level)
    init_global_logging(args.log_file)
    logger = logging.getLogger(LOGGER_NAME)
    logger.debug(f"Arguments {vars(args)}")

    if args.config:
        generator = ConfigGenerator(args.config, yaml=True)
    else:
        generator = ConfigGenerator({}, yaml=False)
    config = generator.load(args=args)
    config.command = args.command
    check_version(config.hexec_version)
    logger.debug(config)

    return globals()[f"hexec_{args.command}"](config)


def cli():
    logger = logging.getLogger(LOGGER_NAME)
    result = RESULT_INTERNAL_ERROR
    try:
        result = run(sys.argv[1:])
    except HexecException as e:
        result = e.result_code
        if e.log_with_level:
            logger.log(e.log_with_level, e)
        else:
            logger.exception(e)
    except SystemExit as e:
        if e.code:
            logger.exception(e)
            result = RESULT_CONFIG_ERROR
        else:
            result = RESULT_OK
    except Exception as e:
        result = RESULT_INTERNAL_ERROR
        logger.exception(e)
    finally:
        logger.info(f"Exit with {result}")
        return result


if __name__ == "__main__":
    exit(cli())
