# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging

from hexec.common.config import RunConfig
from hexec.common.results import *
from hexec.evaluation.report import ScoredPrediction, aggregate, gold_answers
from hexec.utils import read_jsonl, write_json

logger = logging.getLogger("hexec")


def _load_gold(path: str) -> dict:
    gold = {}
    for line in read_jsonl(path):
        item_id = str(line.get("id", line.get("_id")))
        gold[item_id] = (
            gold_answers(line),
            line.get("reasoning_type") or line.get("type"),
        )
    logger.info(f"Loaded {len(gold)} gold answers from {path}")
    return gold


def score(config: RunConfig):
    logger.info("> ==== Eval ====")

    if not config.input:
        raise HexecExceptionArgumentsError("eval needs --input (predictions)")
    predictions = read_jsonl(config.input)
    gold_file = _load_gold(config.gold) if config.gold else {}

    scored = []
    skipped = 0
    for p in predictions:
        item_id = str(p.get("id"))
        file_gold, file_type = gold_file.get(item_id, ([], None))
        # Only the dedicated gold keys; "predicted" is never gold.
        gold = gold_answers({k: p[k] for k in ("gold", "answer_aliases") if k in p})
        gold = gold or file_gold
        if not gold:
            logger.warning(f"{item_id}: no gold answer, skipped")
            skipped += 1
            continue
        scored.append(
            ScoredPrediction(
                id=item_id,
                predicted=str(p.get("predicted", "")),
                gold=gold,
                reasoning_type=p.get("reasoning_type") or file_type,
                exec_status=p.get("exec_status") or "SUCCESS",
                candidate_index=p.get("candidate_index"),
                num_candidates=p.get("num_candidates"),
            )
        )

    report = aggregate(scored)
    report["skipped"] = skipped
    write_json(config.output, report)

    overall = report["overall"]
    logger.info(
        f"EM {overall['em']:.4f} F1 {overall['f1']:.4f} over {overall['count']} predictions"
    )
    return RESULT_OK if skipped == 0 else RESULT_ITEM_FAILURE
