# Copyright (c) 2026 The hexec Authors. All rights reserved.
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from hexec.executor.normalize import answer_tokens, normalize_answer


def metric_max_over_ground_truths(
    metric_fn: Callable[[str, str], float], prediction: str, ground_truths: Sequence[str]
) -> float:
    if not ground_truths:
        return 0.0
    return max(metric_fn(prediction, g) for g in ground_truths)


def exact_match_score(prediction: str, ground_truth: str) -> float:
    return float(normalize_answer(prediction) == normalize_answer(ground_truth))


def f1_score(prediction: str, ground_truth: str) -> float:
    prediction_tokens = answer_tokens(prediction)
    ground_truth_tokens = answer_tokens(ground_truth)
    # Both normalize to nothing (e.g. "The" against "a"): a match.
    if not prediction_tokens and not ground_truth_tokens:
        return 1.0

    common = Counter(prediction_tokens) & Counter(ground_truth_tokens)
    num_same = sum(common.values())
    if num_same == 0:
        return 0.0

    precision = num_same / len(prediction_tokens)
    recall = num_same / len(ground_truth_tokens)
    return (2 * precision * recall) / (precision + recall)


def exact_match(predicted: str, gold: Sequence[str]) -> int:
    return int(metric_max_over_ground_truths(exact_match_score, predicted, gold))


def token_f1(predicted: str, gold: Sequence[str]) -> float:
    return metric_max_over_ground_truths(f1_score, predicted, gold)


@dataclass(frozen=True)
class ExecutabilityRate:
    top1_rate: float
    topk_rate: float
    count: int

    def to_dict(self) -> dict:
        return {"top1": self.top1_rate, "topk": self.topk_rate, "count": self.count}


def executability_rate(
    attempts: Sequence[Tuple[Sequence[str], Optional[int]]]
) -> ExecutabilityRate:
    """
    attempts: per item, the candidate list and the index of the first
    executable candidate (None when none executed).
    """
    if not attempts:
        return ExecutabilityRate(0.0, 0.0, 0)
    top1 = sum(1 for _, first in attempts if first == 0)
    topk = sum(1 for _, first in attempts if first is not None)
    return ExecutabilityRate(top1 / len(attempts), topk / len(attempts), len(attempts))
