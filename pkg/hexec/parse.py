# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from collections import OrderedDict

from hexec.common.config import RunConfig
from hexec.common.results import *
from hexec.hexpr import parse_hexpression, placeholder_regex, serialize, validate
from hexec.utils import read_jsonl, write_jsonl

logger = logging.getLogger("hexec")


def _parse_one(text, config: RunConfig) -> dict:
    execution = config.execution
    if not isinstance(text, str):
        return {
            "canonical": None,
            "executable": False,
            "diagnostics": [
                {
                    "code": "parse_error",
                    "message": "missing 'hexpression'",
                    "node_path": None,
                    "severity": "ERROR",
                }
            ],
        }
    try:
        expr = parse_hexpression(text)
    except HexecExceptionParseError as e:
        logger.debug(e)
        return {
            "canonical": None,
            "executable": False,
            "diagnostics": [
                {
                    "code": "parse_error",
                    "message": e.reason,
                    "position": e.position,
                    "node_path": None,
                    "severity": "ERROR",
                }
            ],
        }
    regex = placeholder_regex(execution.placeholder_pattern, execution.a_placeholders)
    report = validate(expr, execution.max_depth, regex)
    return {"canonical": serialize(expr), **report.to_dict()}


def parse(config: RunConfig):
    logger.info("> ==== Parse ====")

    if config.expression is not None:
        items = [{"hexpression": config.expression}]
    elif config.input:
        items = read_jsonl(config.input)
    else:
        raise HexecExceptionArgumentsError("parse needs --expression or --input")

    outputs = []
    executable = 0
    for item in items:
        out = OrderedDict()
        if "id" in item:
            out["id"] = item["id"]
        out.update(_parse_one(item.get("hexpression"), config))
        executable += int(out["executable"])
        outputs.append(out)

    write_jsonl(config.output, outputs)
    logger.info(f"{executable}/{len(items)} executable")

    return RESULT_OK if executable == len(items) else RESULT_ITEM_FAILURE
