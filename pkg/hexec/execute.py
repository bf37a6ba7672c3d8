# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
import os
from collections import OrderedDict
from typing import List, Tuple

from hexec.common.config import RunConfig
from hexec.common.results import *
from hexec.evaluation.report import gold_answers
from hexec.executor.engine import execute_with_fallback
from hexec.executor.trace import INVALID_ITEM, PARSE_ERROR, ExecStatus, ExecutionTrace
from hexec.readers.base import Passage, Reader
from hexec.readers.factory import create_reader
from hexec.utils import ordered_parallel_map, read_jsonl, safe_filename, write_jsonl

logger = logging.getLogger("hexec")


def _candidates(item: dict):
    if isinstance(item.get("candidates"), list) and item["candidates"]:
        return [str(c) for c in item["candidates"]]
    if isinstance(item.get("hexpression"), str):
        return [item["hexpression"]]
    return None


def _passages(item: dict) -> List[Passage]:
    raw = item.get("passages", [])
    if not isinstance(raw, list) or not all(isinstance(p, dict) for p in raw):
        raise HexecExceptionInputError("'passages' must be a list of {title, text} objects")
    return [Passage.from_dict(p) for p in raw]


def _failed_trace(code: str, message: str) -> ExecutionTrace:
    return ExecutionTrace(
        expression="",
        status=ExecStatus.HARD_FAIL,
        status_code=code,
        message=message,
    )


def _write_trace(config: RunConfig, number: int, item_id: str, trace: ExecutionTrace) -> str:
    # The line number keeps ids that clean up to the same name apart.
    path = os.path.join(config.trace_dir, f"{number:06d}_{safe_filename(item_id)}.json")
    with open(path, "w", encoding="utf-8") as f:
        f.write(trace.to_json() + "\n")
    return path


def _run_candidates(config: RunConfig, reader: Reader, item: dict, candidates: List[str]):
    try:
        passages = _passages(item)
    except HexecExceptionInputError as e:
        return _failed_trace(INVALID_ITEM, e.message), ""
    try:
        result = execute_with_fallback(
            candidates,
            passages,
            reader,
            config.execution,
            max_candidates=config.fallback,
        )
    except HexecExceptionAllCandidatesFailed as e:
        result = e.result
    return result.trace, result.answer.render()


def _execute_item(config: RunConfig, reader: Reader, number: int, item: dict) -> dict:
    item_id = str(item.get("id", item.get("_id", number)))
    candidates = _candidates(item)

    if candidates is None:
        trace = _failed_trace(PARSE_ERROR, "item has neither 'hexpression' nor 'candidates'")
        predicted = ""
        num_candidates = 0
    else:
        try:
            trace, predicted = _run_candidates(config, reader, item, candidates)
        except Exception as e:
            # Item failures never abort the batch.
            logger.exception(f"{item_id}: {e}")
            trace, predicted = _failed_trace(INVALID_ITEM, f"unexpected error: {e}"), ""
        num_candidates = min(len(candidates), config.fallback)

    if trace.status != ExecStatus.SUCCESS:
        logger.info(f"{item_id}: {trace.exec_status} {trace.message or ''}")
    else:
        logger.debug(f"{item_id}: {predicted!r}")

    out = OrderedDict()
    out["id"] = item_id
    out["predicted"] = predicted
    out["exec_status"] = trace.exec_status
    out["trace_path"] = _write_trace(config, number, item_id, trace) if config.trace_dir else None
    out["candidate_index"] = trace.candidate_index
    out["num_candidates"] = num_candidates
    gold = gold_answers(item)
    if gold:
        out["gold"] = gold
    if item.get("reasoning_type"):
        out["reasoning_type"] = item["reasoning_type"]
    return out


def execute(config: RunConfig):
    logger.info("> ==== Exec ====")

    if not config.input:
        raise HexecExceptionArgumentsError("exec needs --input")
    items = read_jsonl(config.input)

    reader = create_reader(config.reader, config.execution.normalization)
    if config.trace_dir:
        os.makedirs(config.trace_dir, exist_ok=True)

    workers = config.parallel if reader.shareable else 1
    logger.info(f"> Executing {len(items)} items with {workers} worker(s)")

    def run_item(numbered: Tuple[int, dict]) -> dict:
        return _execute_item(config, reader, *numbered)

    outputs = ordered_parallel_map(run_item, list(enumerate(items, start=1)), workers)
    write_jsonl(config.output, outputs)

    failed = sum(1 for out in outputs if out["exec_status"] != ExecStatus.SUCCESS.value)
    logger.info(f"{len(outputs) - failed}/{len(outputs)} items succeeded")
    return RESULT_OK if failed == 0 else RESULT_ITEM_FAILURE
