# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
import re
from typing import List, Optional, Tuple

from hexec.builder.records import Evidence, TwoWikiRecord
from hexec.builder.shapes import Shape, ShapeLeaf, ShapeNode, realize
from hexec.builder.templates import TemplateTable, template_question
from hexec.common.results import (
    HexecExceptionUnsupportedReasoningType,
    HexecExceptionUnsupportedShape,
)
from hexec.executor.normalize import normalize_answer
from hexec.hexpr.nodes import ROOT_PATH, HExpr, OpKind
from hexec.hexpr.validate import Diagnostic, Severity

logger = logging.getLogger("hexec")

PLACEHOLDER_PREFIX = "#"
COMPARISON_KIND_DEFAULTED = "comparison-kind-defaulted"

_LT_WORDS = {"first", "earlier", "earliest"}
_GT_WORDS = {"later", "latest", "last", "longer", "more"}
_EQ_WORDS = {"same", "both"}


def choose_comparison_kind(
    question: str, diagnostics: Optional[List[Diagnostic]] = None
) -> OpKind:
    """First comparison keyword in the question decides; none means COMP_=."""
    for token in re.findall(r"\w+", question.lower()):
        if token in _LT_WORDS:
            return OpKind.COMP_LT
        if token in _GT_WORDS:
            return OpKind.COMP_GT
        if token in _EQ_WORDS:
            return OpKind.COMP_EQ

    message = f"No comparison keyword in {question!r}, using COMP_="
    logger.warning(message)
    if diagnostics is not None:
        diagnostics.append(
            Diagnostic(COMPARISON_KIND_DEFAULTED, message, ROOT_PATH, Severity.WARNING)
        )
    return OpKind.COMP_EQ


def _chains(record: TwoWikiRecord) -> List[List[Tuple[int, Evidence]]]:
    """
    Split the evidences into chains, each starting at a subject no other
    evidence produces and continuing through object == subject links.
    Evidences are keyed by their 1-based position.
    """
    keyed = list(enumerate(record.evidences, start=1))
    objects = {normalize_answer(e.object) for _, e in keyed}
    roots = [(i, e) for i, e in keyed if normalize_answer(e.subject) not in objects]
    if not roots:
        raise HexecExceptionUnsupportedShape(record.id, "evidences form a cycle")

    used = set()
    chains = []
    for i, e in roots:
        chain = [(i, e)]
        used.add(i)
        while True:
            link = normalize_answer(chain[-1][1].object)
            following = [
                (k, f) for k, f in keyed
                if k not in used and normalize_answer(f.subject) == link
            ]
            if not following:
                break
            chain.append(following[0])
            used.add(following[0][0])
        chains.append(chain)

    if len(used) != len(keyed):
        unused = [k for k, _ in keyed if k not in used]
        raise HexecExceptionUnsupportedShape(
            record.id, f"evidences {unused} are not linked to a chain"
        )
    return chains


def _chain_shape(chain: List[Tuple[int, Evidence]], templates: TemplateTable) -> Shape:
    # The first hop names its subject; later hops read the previous answer.
    first_key, first = chain[0]
    shape: Shape = ShapeLeaf(
        first_key, template_question(first.subject, first.relation, templates), first.subject
    )
    previous = first_key
    for key, evidence in chain[1:]:
        text = template_question(f"#{previous}", evidence.relation, templates)
        shape = ShapeNode(OpKind.JOIN, ShapeLeaf(key, text), shape)
        previous = key
    return shape


def build_from_2wiki(
    record: TwoWikiRecord,
    templates: TemplateTable = None,
    diagnostics: Optional[List[Diagnostic]] = None,
) -> HExpr:
    """
    Gold H-expression from 2WikiMultihopQA evidence triples.

    comparison           COMP[ t(first subject), t(second subject) ]
    compositional/bridge JOIN chain over the evidence path
    inference            JOIN chain, as compositional
    bridge_comparison    COMP[ chain of first entity, chain of second entity ]
    """
    kind = record.reasoning_type
    chains = _chains(record)

    if kind == "comparison":
        if len(chains) != 2 or any(len(c) != 1 for c in chains):
            raise HexecExceptionUnsupportedShape(
                record.id, f"comparison needs two unlinked evidences, got {len(record.evidences)}"
            )
        shape = ShapeNode(
            choose_comparison_kind(record.question, diagnostics),
            _chain_shape(chains[0], templates),
            _chain_shape(chains[1], templates),
        )
    elif kind in ("compositional", "bridge", "inference"):
        if len(chains) != 1:
            raise HexecExceptionUnsupportedShape(
                record.id, f"{kind} needs one evidence chain, got {len(chains)}"
            )
        shape = _chain_shape(chains[0], templates)
    elif kind == "bridge_comparison":
        if len(chains) != 2:
            raise HexecExceptionUnsupportedShape(
                record.id, f"bridge_comparison needs two evidence chains, got {len(chains)}"
            )
        shape = ShapeNode(
            choose_comparison_kind(record.question, diagnostics),
            _chain_shape(chains[0], templates),
            _chain_shape(chains[1], templates),
        )
    else:
        raise HexecExceptionUnsupportedReasoningType(record.id, f"unknown type '{kind}'")

    return realize(shape, PLACEHOLDER_PREFIX, record.id)


def twowiki_closed_loop_facts(
    record: TwoWikiRecord, templates: TemplateTable = None
) -> List[Tuple[str, str]]:
    return [
        (template_question(e.subject, e.relation, templates), e.object)
        for e in record.evidences
    ]
