# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
import re
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from hexec.evaluation.metrics import exact_match, executability_rate, token_f1
from hexec.executor.trace import PARSE_STAGE_CODES, ExecStatus

logger = logging.getLogger("hexec")

_STATUS = re.compile(r"^(SUCCESS|SOFT_FAIL|HARD_FAIL)(?:\((?P<code>[^)]*)\))?$")
_DICT_ENTRY = re.compile(r"(?:^\{|, )Ans#(\d+): ")


def parse_exec_status(text: str) -> Tuple[ExecStatus, Optional[str]]:
    """'SOFT_FAIL(no_answer)' -> (SOFT_FAIL, 'no_answer')."""
    m = _STATUS.match((text or "SUCCESS").strip())
    if not m:
        raise ValueError(f"Bad exec_status '{text}'")
    return ExecStatus(m.group(1)), m.group("code")


def failure_stage(code: Optional[str]) -> str:
    return "parse" if code in PARSE_STAGE_CODES else "execution"


def dict_values(predicted: str) -> Optional[List[str]]:
    """Values of a rendered answer dictionary in slot order, None for other answers."""
    if not (predicted.startswith("{Ans#") and predicted.endswith("}")):
        return None
    parts = _DICT_ENTRY.split(predicted[:-1])
    # ["", "1", "v1", "2", "v2", ...]
    if len(parts) < 3 or parts[0] != "":
        return None
    entries = sorted((int(k), v) for k, v in zip(parts[1::2], parts[2::2]))
    return [v for _, v in entries]


@dataclass
class ScoredPrediction:
    id: str
    predicted: str
    gold: List[str]
    reasoning_type: Optional[str] = None
    exec_status: str = "SUCCESS"
    candidate_index: Optional[int] = None
    num_candidates: Optional[int] = None
    em: int = field(init=False, default=0)
    f1: float = field(init=False, default=0.0)
    is_dict: bool = field(init=False, default=False)

    def __post_init__(self):
        if not self.gold:
            raise ValueError(f"Prediction {self.id} has no gold answer")
        values = dict_values(self.predicted)
        self.is_dict = values is not None
        text = " ".join(values) if self.is_dict else self.predicted
        self.em = exact_match(text, self.gold)
        self.f1 = token_f1(text, self.gold)

    @property
    def status(self) -> Tuple[ExecStatus, Optional[str]]:
        return parse_exec_status(self.exec_status)


def _scores(preds: Sequence[ScoredPrediction]) -> dict:
    count = len(preds)
    return {
        "count": count,
        "em": sum(p.em for p in preds) / count if count else 0.0,
        "f1": sum(p.f1 for p in preds) / count if count else 0.0,
    }


def aggregate(preds: Sequence[ScoredPrediction], group_by: Optional[str] = "reasoning_type") -> dict:
    """
    Overall and per-group EM/F1, failures split by status and stage, and
    top-1/top-k executability when the predictions carry candidate indices.
    """
    report: Dict[str, object] = OrderedDict()
    report["overall"] = _scores(preds)

    if group_by:
        groups: Dict[str, List[ScoredPrediction]] = OrderedDict()
        for p in sorted(preds, key=lambda p: str(getattr(p, group_by) or "")):
            groups.setdefault(str(getattr(p, group_by) or "unknown"), []).append(p)
        report["by_type"] = {name: _scores(group) for name, group in groups.items()}

    failures = {
        ExecStatus.SOFT_FAIL.value: {"parse": 0, "execution": 0},
        ExecStatus.HARD_FAIL.value: {"parse": 0, "execution": 0},
    }
    codes: Dict[str, int] = {}
    for p in preds:
        status, code = p.status
        if status == ExecStatus.SUCCESS:
            continue
        failures[status.value][failure_stage(code)] += 1
        codes[code or "unknown"] = codes.get(code or "unknown", 0) + 1
    parse_errors = sum(f["parse"] for f in failures.values())
    execution_errors = sum(f["execution"] for f in failures.values())
    failed = parse_errors + execution_errors

    report["failures"] = failures
    report["failure_codes"] = dict(sorted(codes.items()))
    report["parse_errors"] = parse_errors
    report["execution_errors"] = execution_errors
    report["parse_error_fraction"] = parse_errors / failed if failed else 0.0
    report["dict_predictions"] = sum(1 for p in preds if p.is_dict)

    with_candidates = [p for p in preds if p.candidate_index is not None]
    if with_candidates:
        attempts = []
        for p in with_candidates:
            status, _ = p.status
            first = None if status == ExecStatus.HARD_FAIL else p.candidate_index
            attempts.append(([None] * (p.num_candidates or 1), first))
        report["executability"] = executability_rate(attempts).to_dict()

    return report


def gold_answers(line: Mapping) -> List[str]:
    """Gold texts from a dataset or prediction line: answer/answers/gold plus answer_aliases."""
    gold: List[str] = []
    for key in ("gold", "answers", "answer", "answer_aliases"):
        value = line.get(key)
        if value is None:
            continue
        for g in value if isinstance(value, list) else [value]:
            g = str(g)
            if g not in gold:
                gold.append(g)
    return gold
