# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from collections import OrderedDict

from hexec.builder import build_record, closed_loop_facts
from hexec.builder.records import load_records, record_from_dict
from hexec.builder.templates import TemplateTable
from hexec.common.config import RunConfig
from hexec.common.results import *
from hexec.hexpr import serialize, validate
from hexec.readers.oracle import FactStore
from hexec.utils import write_jsonl

logger = logging.getLogger("hexec")

DATASETS = ["musique", "2wiki"]


def convert(config: RunConfig):
    logger.info("> ==== Convert ====")

    if config.dataset not in DATASETS:
        raise HexecExceptionArgumentsError(
            f"convert needs --dataset, one of {DATASETS} (got {config.dataset})"
        )
    if not config.input:
        raise HexecExceptionArgumentsError("convert needs --input")

    templates = TemplateTable.load(config.templates) if config.templates else TemplateTable()
    facts = (
        FactStore(normalization=config.execution.normalization)
        if config.facts_out
        else None
    )

    lines = load_records(config.input, config.dataset)
    outputs = []
    for line in lines:
        try:
            record = record_from_dict(line, config.dataset)
            expr = build_record(record, templates)
            report = validate(expr, config.execution.max_depth)
            if not report.executable:
                raise HexecExceptionUnsupportedShape(
                    record.id,
                    "built expression is not executable: "
                    + "; ".join(d.message for d in report.errors),
                )
        except HexecExceptionRecordError as e:
            logger.log(e.log_with_level, e)
            continue

        out = OrderedDict()
        out["id"] = record.id
        out["question"] = record.question
        out["hexpression"] = serialize(expr)
        out["answer"] = record.answer
        out["reasoning_type"] = record.reasoning_type
        if getattr(record, "answer_aliases", None):
            out["answer_aliases"] = record.answer_aliases
        out["passages"] = [p.to_dict() for p in record.passages]
        outputs.append(out)

        if facts is not None:
            for question, answer in closed_loop_facts(record, templates):
                facts.add(question, [answer])

    write_jsonl(config.output, outputs)
    if facts is not None:
        facts.dump(config.facts_out)
        logger.info(f"{len(facts)} closed-loop facts")

    logger.info(f"Converted {len(outputs)}/{len(lines)} records")
    return RESULT_OK if len(outputs) == len(lines) else RESULT_ITEM_FAILURE
